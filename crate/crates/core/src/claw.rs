//! The claw polytopes `P(G, n)` in projected coordinates.
//!
//! Coordinates come in `n` contiguous blocks, one per leaf; inside a block
//! the nonzero group elements appear in index order (`Z2`: `x1`; `Z2×Z2`:
//! `xα, xβ, xγ`; `Z3`: `x1, x2`). The identity coordinate of a block is
//! implicit, `x0 = 1 - Σ x_g`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{HPolytope, HalfSpace, Rat, RatPoint, VPolytope};
use crate::group::{zero_sum_tuples, GroupId};
use crate::lattice::LatticeBasis;
use crate::linalg;

/// Normal vectors of the `Z3` cut functionals: channel 1 pairs leaf `j`
/// with `U[a_j]`, channel 2 with `W[a_j]`.
pub const Z3_U: [[i64; 2]; 3] = [[1, 2], [1, -1], [-2, -1]];
pub const Z3_W: [[i64; 2]; 3] = [[2, 1], [-1, 1], [-1, -2]];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// `S_{A,g}(x) >= rhs`: the side kept by the polytope.
    Plus,
    /// `S_{A,g}(x) <= rhs`: the cut-off side.
    Minus,
}

/// The index data `(A, g)` of a cut functional `S_{A,g}`.
///
/// `a` holds one digit per leaf: membership `0/1` in the subset `A` for `Z2`
/// and `Z2×Z2`, the tuple entry in `{0, 1, 2}` for `Z3`. Facet cuts need
/// `|A|` odd (`Z2`, `Z2×Z2`) or `Σ a_i ≡ 2 (mod 3)` (`Z3`); the lemmas also
/// talk about `H^-_{A,g}` for other index sets, which [`OddSubsetCut::general`]
/// admits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddSubsetCut {
    group: GroupId,
    channel: u8,
    a: Vec<u8>,
}

impl OddSubsetCut {
    /// A facet cut; rejects index sets violating the parity/congruence rule.
    pub fn new(group: GroupId, a: Vec<u8>, channel: u8) -> Result<Self> {
        let cut = Self::general(group, a, channel)?;
        if !cut.is_facet_cut() {
            return Err(Error::InvalidCut(format!(
                "{:?} violates the parity condition for {group}",
                cut.a
            )));
        }
        Ok(cut)
    }

    pub fn general(group: GroupId, a: Vec<u8>, channel: u8) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidCut("empty index tuple".into()));
        }
        let max_digit = match group {
            GroupId::Z2 | GroupId::Z2xZ2 => 1,
            GroupId::Z3 => 2,
        };
        if a.iter().any(|&d| d > max_digit) {
            return Err(Error::InvalidCut(format!("digits of {a:?} out of range for {group}")));
        }
        let channels = match group {
            GroupId::Z2 => 1,
            GroupId::Z2xZ2 => 3,
            GroupId::Z3 => 2,
        };
        if channel == 0 || channel > channels {
            return Err(Error::InvalidCut(format!("channel {channel} invalid for {group}")));
        }
        Ok(OddSubsetCut { group, channel, a })
    }

    /// Subset cut from a bitmask, bit `j` standing for leaf `j + 1`.
    pub fn from_mask(group: GroupId, n: usize, mask: u64, channel: u8) -> Result<Self> {
        if group == GroupId::Z3 {
            return Err(Error::InvalidCut("Z3 cuts are indexed by tuples".into()));
        }
        if n < 64 && mask >> n != 0 {
            return Err(Error::InvalidCut(format!("mask {mask:#b} exceeds {n} leaves")));
        }
        Self::general(group, (0..n).map(|j| ((mask >> j) & 1) as u8).collect(), channel)
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn channel(&self) -> u8 {
        self.channel
    }

    pub fn a(&self) -> &[u8] {
        &self.a
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn mask(&self) -> u64 {
        self.a
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .fold(0, |m, (j, _)| m | (1 << j))
    }

    /// `|A|` for subsets, `Σ a_i` for `Z3` tuples.
    pub fn digit_sum(&self) -> i64 {
        self.a.iter().map(|&d| d as i64).sum()
    }

    pub fn is_facet_cut(&self) -> bool {
        match self.group {
            GroupId::Z2 | GroupId::Z2xZ2 => self.digit_sum() % 2 == 1,
            GroupId::Z3 => self.digit_sum() % 3 == 2,
        }
    }

    /// Right-hand side: `1 - |A|`, or `2 - Σ a_i` for `Z3`.
    pub fn rhs(&self) -> i64 {
        match self.group {
            GroupId::Z2 | GroupId::Z2xZ2 => 1 - self.digit_sum(),
            GroupId::Z3 => 2 - self.digit_sum(),
        }
    }

    /// The same index set on the opposite channel (`Z3`: `-g`).
    pub fn opposite_channel(&self) -> Option<OddSubsetCut> {
        (self.group == GroupId::Z3).then(|| OddSubsetCut {
            group: self.group,
            channel: 3 - self.channel,
            a: self.a.clone(),
        })
    }

    /// Coefficients of the linear functional `S_{A,g}`.
    pub fn functional(&self) -> Vec<i64> {
        let b = self.group.block_len();
        let mut coef = vec![0i64; b * self.n()];
        for (j, &d) in self.a.iter().enumerate() {
            let block = &mut coef[j * b..(j + 1) * b];
            match self.group {
                GroupId::Z2 => block[0] = if d == 1 { -1 } else { 1 },
                GroupId::Z2xZ2 => {
                    let s = if d == 1 { -1 } else { 1 };
                    for (k, c) in block.iter_mut().enumerate() {
                        if k + 1 != self.channel as usize {
                            *c = s;
                        }
                    }
                }
                GroupId::Z3 => {
                    let v = if self.channel == 1 { Z3_U } else { Z3_W }[d as usize];
                    block.copy_from_slice(&v);
                }
            }
        }
        coef
    }

    pub fn s_value(&self, x: &RatPoint) -> Result<Rat> {
        let dim = self.group.ambient_dim(self.n());
        if x.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: x.dim(),
            });
        }
        let coef: Vec<BigInt> = self.functional().into_iter().map(BigInt::from).collect();
        Ok(linalg::dot_rat(&coef, x.coords()))
    }

    pub fn halfspace(&self, side: Side) -> HalfSpace {
        let h = HalfSpace::from_ints(&self.functional(), self.rhs())
            .expect("cut functionals are nonzero");
        match side {
            Side::Minus => h,
            Side::Plus => h.flipped(),
        }
    }
}

pub fn s_value(cut: &OddSubsetCut, x: &RatPoint) -> Result<Rat> {
    cut.s_value(x)
}

pub fn cut_halfspace(cut: &OddSubsetCut, side: Side) -> HalfSpace {
    cut.halfspace(side)
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidLeafCount {
            n,
            reason: if min == 2 {
                "claw polytopes need n >= 2"
            } else {
                "need at least one leaf"
            },
        });
    }
    if n > 63 {
        return Err(Error::InvalidLeafCount {
            n,
            reason: "at most 63 leaves are supported",
        });
    }
    Ok(())
}

/// Every facet cut of `P(G, n)`, ordered by channel, then by index set
/// (bitmask order for subsets, lexicographic for `Z3` tuples).
pub fn facet_cuts(group: GroupId, n: usize) -> Result<Vec<OddSubsetCut>> {
    check_n(n, 1)?;
    Ok(all_cuts(group, n)?
        .into_iter()
        .filter(OddSubsetCut::is_facet_cut)
        .collect())
}

/// Every index set on every channel, facet cut or not, in the same order as
/// [`facet_cuts`].
pub fn all_cuts(group: GroupId, n: usize) -> Result<Vec<OddSubsetCut>> {
    check_n(n, 1)?;
    let channels: &[u8] = match group {
        GroupId::Z2 => &[1],
        GroupId::Z2xZ2 => &[1, 2, 3],
        GroupId::Z3 => &[1, 2],
    };
    let mut out = Vec::new();
    for &g in channels {
        match group {
            GroupId::Z3 => {
                for a in ternary_tuples(n) {
                    out.push(OddSubsetCut::general(group, a, g)?);
                }
            }
            _ => {
                for mask in 0..(1u64 << n) {
                    out.push(OddSubsetCut::from_mask(group, n, mask, g)?);
                }
            }
        }
    }
    Ok(out)
}

/// All of `{0,1,2}^n` in lexicographic order.
pub fn ternary_tuples(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(3usize.pow(n as u32));
    let mut cur = vec![0u8; n];
    loop {
        out.push(cur.clone());
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < 3 {
                break;
            }
            cur[pos] = 0;
        }
    }
}

/// Vertex set of `P(G, n)`: one 0/1 point per zero-sum tuple.
pub fn vertices(group: GroupId, n: usize) -> Result<VPolytope> {
    check_n(n, 2)?;
    let b = group.block_len();
    let points = zero_sum_tuples(group, n)?
        .iter()
        .map(|t| {
            let mut p = vec![0i64; b * n];
            for (j, &e) in t.entries().iter().enumerate() {
                if e != 0 {
                    p[j * b + e as usize - 1] = 1;
                }
            }
            RatPoint::from_ints(&p)
        })
        .collect();
    VPolytope::new(b * n, points)
}

/// The cube `[0,1]^n` for `Z2`, the product of unit simplices otherwise.
/// Nonnegativity comes first, then one upper bound per block.
pub fn ambient(group: GroupId, n: usize) -> Result<HPolytope> {
    check_n(n, 1)?;
    let b = group.block_len();
    let d = b * n;
    let mut hs = Vec::with_capacity(d + n);
    for c in 0..d {
        let mut a = vec![0i64; d];
        a[c] = -1;
        hs.push(HalfSpace::from_ints(&a, 0)?);
    }
    for j in 0..n {
        let mut a = vec![0i64; d];
        a[j * b..(j + 1) * b].fill(1);
        hs.push(HalfSpace::from_ints(&a, 1)?);
    }
    HPolytope::new(d, hs)
}

/// The facet description: the ambient inequalities followed by
/// `S_{A,g} >= rhs` for every facet cut.
pub fn facets(group: GroupId, n: usize) -> Result<HPolytope> {
    check_n(n, 2)?;
    ambient(group, n)?.with(facet_cuts(group, n)?.iter().map(|c| c.halfspace(Side::Plus)))
}

/// The lattice `L(G, n)` in projected coordinates,
/// `{y ∈ Z^d : Σ_{j,g} y_g^j · g = 0 in G}`.
///
/// Generators are the vertex vectors followed by a triangular basis of that
/// kernel; for `n >= 3` the vertices alone already generate it (see
/// [`vertex_lattice`]), while for `n = 2` they span a lower-rank lattice.
pub fn lattice(group: GroupId, n: usize) -> Result<LatticeBasis> {
    check_n(n, 2)?;
    let d = group.ambient_dim(n);
    let mut gens = vertex_vectors(group, n)?;
    gens.extend(kernel_basis(group, n));
    LatticeBasis::new(d, gens)
}

/// The lattice generated by the vertices alone; rank deficient for `n = 2`.
pub fn vertex_lattice(group: GroupId, n: usize) -> Result<LatticeBasis> {
    check_n(n, 2)?;
    LatticeBasis::new(group.ambient_dim(n), vertex_vectors(group, n)?)
}

fn vertex_vectors(group: GroupId, n: usize) -> Result<Vec<Vec<BigInt>>> {
    Ok(vertices(group, n)?
        .vertices()
        .iter()
        .filter(|p| !p.is_origin())
        .map(|p| p.coords().iter().map(|x| x.to_integer()).collect())
        .collect())
}

/// Group element of coordinate `c` as its index.
fn coord_elem(group: GroupId, c: usize) -> u8 {
    (c % group.block_len()) as u8 + 1
}

fn kernel_basis(group: GroupId, n: usize) -> Vec<Vec<BigInt>> {
    let d = group.ambient_dim(n);
    let unit = |c: usize, k: i64| {
        let mut v = vec![BigInt::zero(); d];
        v[c] = BigInt::from(k);
        v
    };
    let mut out = Vec::with_capacity(d);
    match group {
        GroupId::Z2 | GroupId::Z3 => {
            // coordinate 0 carries the generator 1
            out.push(unit(0, group.order() as i64));
            for c in 1..d {
                let mut v = unit(c, 1);
                v[0] = -BigInt::from(coord_elem(group, c));
                out.push(v);
            }
        }
        GroupId::Z2xZ2 => {
            // coordinates 0 and 1 carry α = (1,0) and β = (0,1)
            out.push(unit(0, 2));
            out.push(unit(1, 2));
            for c in 2..d {
                let g = coord_elem(group, c);
                let mut v = unit(c, 1);
                v[0] = -BigInt::from(g & 1);
                v[1] = -BigInt::from((g >> 1) & 1);
                out.push(v);
            }
        }
    }
    out
}

/// `d! · vol(ambient(G, n))` in `Z^d`: `n!` for the cube, `(3n)!/6^n` and
/// `(2n)!/2^n` for the simplex products.
pub fn ambient_lattice_volume(group: GroupId, n: usize) -> Rat {
    let fact = |k: usize| (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    let b = group.block_len();
    Rat::new(fact(b * n), fact(b).pow(n as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &VPolytope) -> Vec<Vec<i64>> {
        v.vertices()
            .iter()
            .map(|p| p.coords().iter().map(|x| i64::try_from(x.to_integer()).unwrap()).collect())
            .collect()
    }

    #[test]
    fn vertex_sets() {
        let v = vertices(GroupId::Z2, 3).unwrap();
        assert_eq!(pts(&v), vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let v = vertices(GroupId::Z3, 2).unwrap();
        assert_eq!(pts(&v), vec![vec![0, 0, 0, 0], vec![0, 1, 1, 0], vec![1, 0, 0, 1]]);
        let v = vertices(GroupId::Z2xZ2, 2).unwrap();
        assert_eq!(v.len(), 4);
        assert!(pts(&v).iter().all(|p| p[..3] == p[3..]));
        assert!(vertices(GroupId::Z2, 1).is_err());
    }

    #[test]
    fn facet_counts() {
        let h = facets(GroupId::Z2xZ2, 2).unwrap();
        assert_eq!(h.len(), 14);
        assert_eq!(facet_cuts(GroupId::Z3, 2).unwrap().len(), 6);
        let a: Vec<Vec<u8>> = facet_cuts(GroupId::Z3, 2)
            .unwrap()
            .iter()
            .filter(|c| c.channel() == 1)
            .map(|c| c.a().to_vec())
            .collect();
        assert_eq!(a, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn z2_cut_for_single_leaf() {
        // -x1 + x2 + x3 >= 0
        let c = OddSubsetCut::from_mask(GroupId::Z2, 3, 0b001, 1).unwrap();
        assert_eq!(c.functional(), vec![-1, 1, 1]);
        assert_eq!(c.rhs(), 0);
        assert_eq!(c.halfspace(Side::Plus), HalfSpace::from_ints(&[1, -1, -1], 0).unwrap());
        assert!(facets(GroupId::Z2, 3).unwrap().halfspaces().contains(&c.halfspace(Side::Plus)));
    }

    #[test]
    fn s_values() {
        let c = OddSubsetCut::from_mask(GroupId::Z2xZ2, 2, 0, 1).unwrap();
        assert_eq!(c.s_value(&RatPoint::from_ints(&[0, 1, 0, 0, 0, 0])).unwrap(), Rat::one());
        let c = OddSubsetCut::general(GroupId::Z3, vec![0, 0], 1).unwrap();
        assert_eq!(c.s_value(&RatPoint::from_ints(&[1, 0, 0, 0])).unwrap(), Rat::one());
        let c = OddSubsetCut::general(GroupId::Z3, vec![2, 0], 2).unwrap();
        assert_eq!(c.s_value(&RatPoint::zero(4)).unwrap(), Rat::zero());
        assert!(c.s_value(&RatPoint::zero(3)).is_err());
    }

    #[test]
    fn minus_halfspaces() {
        let c = OddSubsetCut::from_mask(GroupId::Z2, 3, 0b111, 1).unwrap();
        assert_eq!(c.halfspace(Side::Minus), HalfSpace::from_ints(&[-1, -1, -1], -2).unwrap());
        let c = OddSubsetCut::new(GroupId::Z3, vec![2, 0, 0], 1).unwrap();
        assert_eq!(c.rhs(), 0);
        let c = OddSubsetCut::from_mask(GroupId::Z2xZ2, 2, 0, 2).unwrap();
        assert_eq!(c.halfspace(Side::Minus), HalfSpace::from_ints(&[1, 0, 1, 1, 0, 1], 1).unwrap());
    }

    #[test]
    fn cut_validation() {
        assert!(OddSubsetCut::new(GroupId::Z2, vec![1, 1], 1).is_err());
        assert!(OddSubsetCut::new(GroupId::Z3, vec![1, 0], 1).is_err());
        assert!(OddSubsetCut::general(GroupId::Z3, vec![3, 0], 1).is_err());
        assert!(OddSubsetCut::general(GroupId::Z2xZ2, vec![1, 0], 4).is_err());
        assert!(OddSubsetCut::from_mask(GroupId::Z2, 2, 0b100, 1).is_err());
    }

    #[test]
    fn ambients() {
        let sq = ambient(GroupId::Z2, 2).unwrap().vertex_enumeration().unwrap();
        assert_eq!(sq.len(), 4);
        let d3 = ambient(GroupId::Z2xZ2, 1).unwrap().vertex_enumeration().unwrap();
        assert_eq!(pts(&d3), vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        let d2 = ambient(GroupId::Z3, 1).unwrap().vertex_enumeration().unwrap();
        assert_eq!(d2.len(), 3);
        assert_eq!(ambient_lattice_volume(GroupId::Z2xZ2, 2), Rat::from_integer(20.into()));
    }

    #[test]
    fn lattice_indices() {
        for (g, idx) in [(GroupId::Z2, 2), (GroupId::Z2xZ2, 4), (GroupId::Z3, 3)] {
            for n in 2..=4 {
                assert_eq!(lattice(g, n).unwrap().index(), &BigInt::from(idx), "{g} n={n}");
            }
            for n in 3..=4 {
                assert_eq!(vertex_lattice(g, n).unwrap().index(), &BigInt::from(idx), "{g} n={n}");
            }
            assert!(vertex_lattice(g, 2).is_err());
        }
    }

    #[test]
    fn vertices_satisfy_facets_with_support() {
        for g in GroupId::ALL {
            for n in 2..=4 {
                let v = vertices(g, n).unwrap();
                for c in facet_cuts(g, n).unwrap() {
                    let vals: Vec<Rat> = v.vertices().iter().map(|p| c.s_value(p).unwrap()).collect();
                    let rhs = Rat::from_integer(c.rhs().into());
                    assert!(vals.iter().all(|s| *s >= rhs));
                    assert!(vals.contains(&rhs), "{g} {c:?} not supporting");
                }
            }
        }
    }
}
