//! Cut pieces `ambient ∩ H^-_{A1,g1} ∩ …` and the inclusion–exclusion
//! assembly of `vol P(G, n)` from closed-form piece volumes.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::claw::{self, OddSubsetCut, Side};
use crate::error::{Error, Result};
use crate::formulas;
use crate::geometry::{HPolytope, Rat, VPolytope};
use crate::group::GroupId;
use crate::volume::{self, TriangulateOptions};

/// An intersection of the ambient polytope with minus-sides of cuts.
///
/// Index sets need not satisfy the facet parity rule; several lemmas are
/// stated for arbitrary `A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CutSpec {
    group: GroupId,
    n: usize,
    cuts: Vec<OddSubsetCut>,
}

impl CutSpec {
    pub fn new(group: GroupId, n: usize, cuts: Vec<OddSubsetCut>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidLeafCount {
                n,
                reason: "need at least one leaf",
            });
        }
        for c in &cuts {
            if c.group() != group {
                return Err(Error::GroupMismatch(group, c.group()));
            }
            if c.n() != n {
                return Err(Error::InvalidCut(format!("cut on {} leaves, expected {n}", c.n())));
            }
        }
        Ok(CutSpec { group, n, cuts })
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cuts(&self) -> &[OddSubsetCut] {
        &self.cuts
    }

    pub fn dim(&self) -> usize {
        self.group.ambient_dim(self.n)
    }
}

pub fn cut_piece(spec: &CutSpec) -> Result<HPolytope> {
    claw::ambient(spec.group, spec.n)?.with(spec.cuts.iter().map(|c| c.halfspace(Side::Minus)))
}

/// Vertices of the piece; empty when the piece is.
pub fn piece_vertices(spec: &CutSpec) -> Result<VPolytope> {
    cut_piece(spec)?.vertex_enumeration()
}

/// Lattice volume of the piece in `Z^d`.
pub fn piece_volume(spec: &CutSpec) -> Result<Rat> {
    piece_volume_with(spec, TriangulateOptions::default())
}

pub fn piece_volume_with(spec: &CutSpec, opts: TriangulateOptions) -> Result<Rat> {
    let v = piece_vertices(spec)?;
    if v.is_empty() {
        return Ok(Rat::zero());
    }
    volume::lattice_volume_with(&v, None, opts)
}

/// One line of the assembly: `sign · count · volume`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub label: String,
    pub sign: i8,
    pub count: BigInt,
    pub volume: Rat,
}

impl Term {
    fn new(label: &str, sign: i8, count: BigInt, volume: Rat) -> Self {
        Term {
            label: label.into(),
            sign,
            count,
            volume,
        }
    }

    pub fn value(&self) -> Rat {
        Rat::from_integer(BigInt::from(self.sign) * &self.count) * &self.volume
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assembly {
    pub group: GroupId,
    pub n: usize,
    pub terms: Vec<Term>,
    /// Lattice volume in `Z^d`.
    pub ambient_total: Rat,
    pub index: BigInt,
    /// `ambient_total / index`.
    pub result: Rat,
}

/// Inclusion–exclusion over the cut pieces with their closed-form volumes
/// and the counts of index sets contributing nonzero terms.
pub fn assemble_breakdown(group: GroupId, n: usize) -> Result<Assembly> {
    if n < 2 {
        return Err(Error::InvalidLeafCount {
            n,
            reason: "assembly needs n >= 2",
        });
    }
    let odd = BigInt::from(2).pow(n as u32 - 1);
    let p3 = BigInt::from(3).pow(n as u32 - 1);
    let four = BigInt::from(4).pow(n as u32 - 1);
    let mut terms = alloc::vec![Term::new(
        "ambient",
        1,
        BigInt::one(),
        claw::ambient_lattice_volume(group, n),
    )];
    let index = match group {
        GroupId::Z2 => {
            terms.push(Term::new("odd-subset pieces", -1, odd, Rat::one()));
            BigInt::from(2)
        }
        GroupId::Z2xZ2 => {
            terms.push(Term::new("single pieces", -1, &odd * 3, formulas::z22_one_facet(n)));
            terms.push(Term::new("pairs on distinct channels", 1, &four * 3, formulas::z22_two_facet(n)));
            terms.push(Term::new(
                "triples with |Δ| = 1",
                -1,
                &four * n,
                formulas::z22_three_facet(n),
            ));
            BigInt::from(4)
        }
        GroupId::Z3 => {
            terms.push(Term::new("single pieces", -1, &p3 * 2, formulas::z3_one_facet(n)));
            terms.push(Term::new("opposite-channel pairs", 1, &p3 * n, formulas::z3_two_facet(n)));
            BigInt::from(3)
        }
    };
    let ambient_total: Rat = terms.iter().map(Term::value).sum();
    let result = &ambient_total / Rat::from_integer(index.clone());
    Ok(Assembly {
        group,
        n,
        terms,
        ambient_total,
        index,
        result,
    })
}

pub fn assemble(group: GroupId, n: usize) -> Result<Rat> {
    Ok(assemble_breakdown(group, n)?.result)
}

/// Odd subsets of `[n]` as bitmasks, increasing.
pub fn odd_masks(n: usize) -> impl Iterator<Item = u64> {
    (0..1u64 << n).filter(|m| m.count_ones() % 2 == 1)
}

/// `#{(A, B, C) odd : |Δ(A, B, C)| = 1}`, by enumeration.
pub fn count_delta_admissible(n: usize) -> u64 {
    let odd: Vec<u64> = odd_masks(n).collect();
    let mut count = 0;
    for &a in &odd {
        for &b in &odd {
            count += odd
                .iter()
                .filter(|&&c| formulas::delta_set(a, b, c).count_ones() == 1)
                .count() as u64;
        }
    }
    count
}

/// Both sides of the `Z3` union identity, computed from geometry: the union
/// of all cut pieces has volume `vol C - vol P`, to be compared with the
/// single-piece sum minus the opposite-channel pair sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionCheck {
    pub union_volume: Rat,
    pub singles: Rat,
    pub pairs: Rat,
}

impl UnionCheck {
    pub fn holds(&self) -> bool {
        self.union_volume == &self.singles - &self.pairs
    }
}

pub fn z3_union_check(n: usize) -> Result<UnionCheck> {
    let g = GroupId::Z3;
    let p = claw::vertices(g, n)?;
    let union_volume = claw::ambient_lattice_volume(g, n) - volume::lattice_volume(&p, None)?;
    let cuts = claw::facet_cuts(g, n)?;
    let mut singles = Rat::zero();
    for c in &cuts {
        singles += piece_volume(&CutSpec::new(g, n, alloc::vec![c.clone()])?)?;
    }
    let mut pairs = Rat::zero();
    for a in cuts.iter().filter(|c| c.channel() == 1) {
        for b in cuts.iter().filter(|c| c.channel() == 2) {
            pairs += piece_volume(&CutSpec::new(g, n, alloc::vec![a.clone(), b.clone()])?)?;
        }
    }
    Ok(UnionCheck {
        union_volume,
        singles,
        pairs,
    })
}

/// Assembly total in `Z^d` minus `index · formula`; zero when they agree.
pub fn ambient_degree_gap(group: GroupId, n: usize) -> Result<Rat> {
    let a = assemble_breakdown(group, n)?;
    Ok(a.ambient_total - formulas::degree_rational(group, n)? * Rat::from_integer(a.index))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn int(k: i64) -> Rat {
        Rat::from_integer(k.into())
    }

    fn cut(g: GroupId, a: &[u8], ch: u8) -> OddSubsetCut {
        OddSubsetCut::general(g, a.to_vec(), ch).unwrap()
    }

    #[test]
    fn spec_pieces() {
        let s = CutSpec::new(GroupId::Z2, 3, vec![cut(GroupId::Z2, &[1, 0, 0], 1)]).unwrap();
        assert_eq!(cut_piece(&s).unwrap().len(), 7);
        assert_eq!(piece_volume(&s).unwrap(), int(1));
        let s = CutSpec::new(GroupId::Z2xZ2, 2, vec![cut(GroupId::Z2xZ2, &[0, 0], 1)]).unwrap();
        assert_eq!(piece_volume(&s).unwrap(), int(10));
        let s = CutSpec::new(
            GroupId::Z3,
            2,
            vec![cut(GroupId::Z3, &[2, 0], 1), cut(GroupId::Z3, &[2, 0], 2)],
        )
        .unwrap();
        assert_eq!(piece_volume(&s).unwrap(), int(2));
    }

    #[test]
    fn spec_mismatches() {
        assert!(CutSpec::new(GroupId::Z3, 2, vec![cut(GroupId::Z2, &[1, 0], 1)]).is_err());
        assert!(CutSpec::new(GroupId::Z2, 3, vec![cut(GroupId::Z2, &[1, 0], 1)]).is_err());
    }

    #[test]
    fn assembly_examples() {
        assert_eq!(assemble(GroupId::Z2, 4).unwrap(), int(8));
        assert_eq!(assemble(GroupId::Z3, 3).unwrap(), int(9));
        let a = assemble_breakdown(GroupId::Z2xZ2, 2).unwrap();
        let vals: Vec<Rat> = a.terms.iter().map(Term::value).collect();
        assert_eq!(vals, vec![int(20), int(-60), int(60), int(-20)]);
        assert_eq!(a.result, int(0));
    }

    #[test]
    fn assembly_matches_formula() {
        for g in GroupId::ALL {
            for n in 2..=8 {
                assert_eq!(assemble(g, n).unwrap(), formulas::degree_rational(g, n).unwrap(), "{g} {n}");
                assert_eq!(ambient_degree_gap(g, n).unwrap(), int(0));
            }
        }
    }

    #[test]
    fn delta_counts() {
        for n in 1..=5 {
            assert_eq!(count_delta_admissible(n), n as u64 * 4u64.pow(n as u32 - 1));
        }
    }

    #[test]
    fn union_identity_at_two() {
        let u = z3_union_check(2).unwrap();
        assert_eq!(u.union_volume, int(6));
        assert!(u.holds());
    }
}
