//! Closed-form degrees and cut-piece volumes, evaluated exactly.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::Rat;
use crate::group::GroupId;

/// Largest `n` a degree table covers without an explicit override.
pub const TABLE_MAX_N: usize = 20;

pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `base^e` for any integer exponent.
pub fn rat_pow(base: i64, e: i64) -> Rat {
    let p = BigInt::from(base).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rat::from_integer(p)
    } else {
        Rat::new(BigInt::one(), p)
    }
}

fn int(x: impl Into<BigInt>) -> Rat {
    Rat::from_integer(x.into())
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidLeafCount {
            n,
            reason: "formulas need n >= 2",
        });
    }
    Ok(())
}

/// `Σ_{i=0}^n (-2)^i C(n,i) (3n)!/(2n+i)!`, the volume of one `Z2×Z2` cut
/// piece in `Z^{3n}`.
pub fn z22_one_facet(n: usize) -> Rat {
    let top = factorial(3 * n);
    let s: BigInt = (0..=n)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            BigInt::from(sign) * BigInt::from(2).pow(i as u32) * binomial(n, i) * (&top / factorial(2 * n + i))
        })
        .sum();
    int(s)
}

/// `C(2n,n) - n/2^{n-1}`.
pub fn z22_two_facet(n: usize) -> Rat {
    int(binomial(2 * n, n)) - int(n) * rat_pow(2, 1 - n as i64)
}

/// `4 - 3/2^{n-1}`, the nonzero case of the triple intersection.
pub fn z22_three_facet(n: usize) -> Rat {
    int(4) - int(3) * rat_pow(2, 1 - n as i64)
}

/// `2^n - n/2^{n-1}`.
pub fn z3_one_facet(n: usize) -> Rat {
    rat_pow(2, n as i64) - int(n) * rat_pow(2, 1 - n as i64)
}

/// `3 - 1/2^{n-2}`.
pub fn z3_two_facet(n: usize) -> Rat {
    int(3) - rat_pow(2, 2 - n as i64)
}

/// The degree as an exact rational, before the integrality check.
pub fn degree_rational(group: GroupId, n: usize) -> Result<Rat> {
    check_n(n)?;
    let ni = n as i64;
    Ok(match group {
        GroupId::Z2 => int(factorial(n)) / int(2) - rat_pow(2, ni - 2),
        GroupId::Z2xZ2 => {
            int(factorial(3 * n)) / (int(4) * rat_pow(6, ni)) - int(3) * rat_pow(2, ni - 3) * z22_one_facet(n)
                + int(3) * rat_pow(4, ni - 2) * int(binomial(2 * n, n))
                - int(n) * rat_pow(4, ni - 1)
        }
        GroupId::Z3 => {
            int(factorial(2 * n)) / (int(3) * rat_pow(2, ni)) - rat_pow(2, ni + 1) * rat_pow(3, ni - 2)
                + rat_pow(3, ni - 1) * int(n)
        }
    })
}

/// Normalized volume of `P(G, n)` in its vertex lattice, which is the
/// degree of the corresponding projective variety.
pub fn degree(group: GroupId, n: usize) -> Result<BigInt> {
    into_integer(degree_rational(group, n)?, "degree formula")
}

pub(crate) fn into_integer(x: Rat, what: &'static str) -> Result<BigInt> {
    if !x.is_integer() {
        return Err(Error::NonIntegral(what));
    }
    Ok(x.to_integer())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormulaId {
    DegZ2,
    DegZ2xZ2,
    DegZ3,
    Z2Cut,
    Z22OneFacet,
    Z22TwoFacet,
    Z22ThreeFacet,
    Z3OneFacet,
    Z3TwoFacet,
}

impl FormulaId {
    pub const ALL: [FormulaId; 9] = [
        FormulaId::DegZ2,
        FormulaId::DegZ2xZ2,
        FormulaId::DegZ3,
        FormulaId::Z2Cut,
        FormulaId::Z22OneFacet,
        FormulaId::Z22TwoFacet,
        FormulaId::Z22ThreeFacet,
        FormulaId::Z3OneFacet,
        FormulaId::Z3TwoFacet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::DegZ2 => "deg-z2",
            FormulaId::DegZ2xZ2 => "deg-z2xz2",
            FormulaId::DegZ3 => "deg-z3",
            FormulaId::Z2Cut => "z2-cut",
            FormulaId::Z22OneFacet => "z22-one-facet",
            FormulaId::Z22TwoFacet => "z22-two-facet",
            FormulaId::Z22ThreeFacet => "z22-three-facet",
            FormulaId::Z3OneFacet => "z3-one-facet",
            FormulaId::Z3TwoFacet => "z3-two-facet",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown formula {s:?}")))
    }
}

/// Evaluates one closed form. `Z22ThreeFacet` needs the subset masks
/// `(A, B, C)` with `|A| + |B| + |C|` odd and gives 0 unless
/// `|Δ(A, B, C)| = 1`; the other formulas ignore `extra`.
pub fn cut_formula(f: FormulaId, n: usize, extra: Option<[u64; 3]>) -> Result<Rat> {
    check_n(n)?;
    Ok(match f {
        FormulaId::DegZ2 => degree_rational(GroupId::Z2, n)?,
        FormulaId::DegZ2xZ2 => degree_rational(GroupId::Z2xZ2, n)?,
        FormulaId::DegZ3 => degree_rational(GroupId::Z3, n)?,
        FormulaId::Z2Cut => Rat::one(),
        FormulaId::Z22OneFacet => z22_one_facet(n),
        FormulaId::Z22TwoFacet => z22_two_facet(n),
        FormulaId::Z3OneFacet => z3_one_facet(n),
        FormulaId::Z3TwoFacet => z3_two_facet(n),
        FormulaId::Z22ThreeFacet => {
            let [a, b, c] = extra.ok_or_else(|| Error::InvalidInput("three subsets required".into()))?;
            if n < 64 && (a | b | c) >> n != 0 {
                return Err(Error::InvalidInput(format!("subsets exceed {n} leaves")));
            }
            if (a.count_ones() + b.count_ones() + c.count_ones()) % 2 == 0 {
                return Err(Error::Hypothesis("|A| + |B| + |C| must be odd".into()));
            }
            if delta_set(a, b, c).count_ones() == 1 {
                z22_three_facet(n)
            } else {
                Rat::zero()
            }
        }
    })
}

/// `(A∖(B∪C)) ∪ (B∖(A∪C)) ∪ (C∖(A∪B)) ∪ (A∩B∩C)` on bitmasks.
pub fn delta_set(a: u64, b: u64, c: u64) -> u64 {
    (a & !(b | c)) | (b & !(a | c)) | (c & !(a | b)) | (a & b & c)
}

pub fn degree_table(group: GroupId, n_min: usize, n_max: usize) -> Result<Vec<(usize, BigInt)>> {
    degree_table_with(group, n_min, n_max, false)
}

pub fn degree_table_with(
    group: GroupId,
    n_min: usize,
    n_max: usize,
    allow_large: bool,
) -> Result<Vec<(usize, BigInt)>> {
    check_n(n_min)?;
    if n_max < n_min {
        return Err(Error::InvalidInput(format!("empty range {n_min}..{n_max}")));
    }
    if n_max > TABLE_MAX_N && !allow_large {
        return Err(Error::GuardRail(format!("table up to n={n_max} exceeds {TABLE_MAX_N}")));
    }
    (n_min..=n_max).map(|n| Ok((n, degree(group, n)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn degs(g: GroupId, ns: core::ops::RangeInclusive<usize>) -> Vec<i64> {
        ns.map(|n| i64::try_from(degree(g, n).unwrap()).unwrap()).collect()
    }

    #[test]
    fn degrees() {
        assert_eq!(degs(GroupId::Z2, 2..=6), vec![0, 1, 8, 52, 344]);
        assert_eq!(degs(GroupId::Z3, 2..=4), vec![0, 9, 660]);
        assert_eq!(degs(GroupId::Z2xZ2, 2..=3), vec![0, 96]);
        assert!(degree(GroupId::Z2, 1).is_err());
    }

    #[test]
    fn z22_degree_terms_at_three() {
        // 420 - 516 + 240 - 48
        assert_eq!(z22_one_facet(3), int(172));
        assert_eq!(z22_one_facet(2), int(10));
    }

    #[test]
    fn cut_formulas() {
        assert_eq!(cut_formula(FormulaId::Z22TwoFacet, 2, None).unwrap(), int(5));
        assert_eq!(cut_formula(FormulaId::Z3OneFacet, 2, None).unwrap(), int(3));
        assert_eq!(
            cut_formula(FormulaId::Z22ThreeFacet, 2, Some([1, 1, 1])).unwrap(),
            Rat::new(5.into(), 2.into())
        );
        assert_eq!(cut_formula(FormulaId::Z22ThreeFacet, 3, Some([1, 2, 4])).unwrap(), int(0));
        assert!(cut_formula(FormulaId::Z22ThreeFacet, 2, Some([1, 1, 0])).is_err());
        assert!(cut_formula(FormulaId::Z22ThreeFacet, 2, None).is_err());
        for n in 2..6 {
            assert_eq!(cut_formula(FormulaId::Z2Cut, n, None).unwrap(), int(1));
        }
        assert_eq!(cut_formula(FormulaId::Z3TwoFacet, 2, None).unwrap(), int(2));
    }

    #[test]
    fn delta() {
        assert_eq!(delta_set(0b1, 0b1, 0b1), 0b1);
        assert_eq!(delta_set(0b001, 0b010, 0b100), 0b111);
        assert_eq!(delta_set(0b01, 0b01, 0b10), 0b10);
    }

    #[test]
    fn tables() {
        let t = degree_table(GroupId::Z2, 2, 5).unwrap();
        let t: Vec<(usize, i64)> = t.into_iter().map(|(n, d)| (n, i64::try_from(d).unwrap())).collect();
        assert_eq!(t, vec![(2, 0), (3, 1), (4, 8), (5, 52)]);
        assert!(matches!(degree_table(GroupId::Z3, 2, 21), Err(Error::GuardRail(_))));
        assert_eq!(degree_table_with(GroupId::Z3, 21, 21, true).unwrap().len(), 1);
        assert!(degree_table(GroupId::Z3, 4, 3).is_err());
    }

    #[test]
    fn names_round_trip() {
        for f in FormulaId::ALL {
            assert_eq!(f.name().parse::<FormulaId>().unwrap(), f);
        }
    }
}
