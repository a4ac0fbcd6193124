//! Exact volumes by deterministic placing triangulation.
//!
//! Lattice volume in `Z^d` means `d!` times Euclidean volume, so a unimodular
//! simplex has volume 1. Polytopes of lower affine dimension have volume 0.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{Rat, RatPoint, VPolytope};
use crate::lattice::LatticeBasis;
use crate::linalg;

pub const MAX_DIM: usize = 14;
pub const MAX_VERTICES: usize = 200;

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `d + 1` points in `R^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplex {
    dim: usize,
    points: Vec<RatPoint>,
}

impl Simplex {
    pub fn new(points: Vec<RatPoint>) -> Result<Self> {
        let dim = points.len().checked_sub(1).ok_or(Error::Empty)?;
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.dim(),
            });
        }
        Ok(Simplex { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[RatPoint] {
        &self.points
    }

    /// `|det(v_i - v_0)|`; zero for a degenerate simplex.
    pub fn lattice_volume(&self) -> Rat {
        let (ints, denom) = linalg::integer_points(&self.points);
        let m = ints[1..]
            .iter()
            .map(|p| p.iter().zip(&ints[0]).map(|(a, b)| a - b).collect())
            .collect();
        Rat::new(linalg::det(m).abs(), denom.pow(self.dim as u32))
    }

    pub fn euclidean_volume(&self) -> Rat {
        self.lattice_volume() / Rat::from_integer(factorial(self.dim))
    }

    pub fn is_degenerate(&self) -> bool {
        self.lattice_volume().is_zero()
    }
}

pub fn simplex_volume(s: &Simplex) -> Rat {
    s.lattice_volume()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TriangulateOptions {
    /// Skip the dimension and vertex-count guard rails.
    pub allow_large: bool,
}

/// Simplices given as index tuples into the vertex list of `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    base: VPolytope,
    simplices: Vec<Vec<usize>>,
}

impl Triangulation {
    pub fn base(&self) -> &VPolytope {
        &self.base
    }

    pub fn index_tuples(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplex(&self, i: usize) -> Simplex {
        let pts = self.simplices[i]
            .iter()
            .map(|&k| self.base.vertices()[k].clone())
            .collect();
        Simplex {
            dim: self.base.dim(),
            points: pts,
        }
    }

    pub fn simplices(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.len()).map(|i| self.simplex(i))
    }

    pub fn lattice_volume(&self) -> Rat {
        self.simplices().map(|s| s.lattice_volume()).sum()
    }

    pub fn euclidean_volume(&self) -> Rat {
        self.lattice_volume() / Rat::from_integer(factorial(self.base.dim()))
    }
}

pub fn check_guard_rails(p: &VPolytope, opts: TriangulateOptions) -> Result<()> {
    if opts.allow_large {
        return Ok(());
    }
    if p.dim() > MAX_DIM {
        return Err(Error::GuardRail(format!("dimension {} exceeds {MAX_DIM}", p.dim())));
    }
    if p.len() > MAX_VERTICES {
        return Err(Error::GuardRail(format!("{} vertices exceed {MAX_VERTICES}", p.len())));
    }
    Ok(())
}

pub fn triangulate(p: &VPolytope) -> Result<Triangulation> {
    triangulate_with(p, TriangulateOptions::default())
}

/// Placing triangulation: points are inserted in canonical (sorted) order and
/// each new point is coned over the boundary facets it sees strictly.
pub fn triangulate_with(p: &VPolytope, opts: TriangulateOptions) -> Result<Triangulation> {
    if p.is_empty() {
        return Err(Error::Empty);
    }
    check_guard_rails(p, opts)?;
    let d = p.dim();
    let (pts, _) = linalg::integer_points(p.vertices());
    let done = |simplices| {
        Ok(Triangulation {
            base: p.clone(),
            simplices,
        })
    };

    let mut initial = vec![0usize];
    let mut diffs: Vec<Vec<BigInt>> = Vec::new();
    for (i, q) in pts.iter().enumerate().skip(1) {
        if initial.len() == d + 1 {
            break;
        }
        let row: Vec<BigInt> = q.iter().zip(&pts[0]).map(|(a, b)| a - b).collect();
        diffs.push(row);
        if linalg::rank(diffs.clone()) == diffs.len() {
            initial.push(i);
        } else {
            diffs.pop();
        }
    }
    if initial.len() < d + 1 {
        return done(Vec::new());
    }

    let mut boundary: BTreeMap<Vec<usize>, (Vec<BigInt>, BigInt)> = BTreeMap::new();
    let mut simplices = vec![initial.clone()];
    for &opp in &initial {
        let facet: Vec<usize> = initial.iter().copied().filter(|&k| k != opp).collect();
        let plane = oriented_plane(&pts, &facet, opp);
        boundary.insert(facet, plane);
    }

    for i in 0..pts.len() {
        if initial.contains(&i) {
            continue;
        }
        let q = &pts[i];
        let visible: Vec<Vec<usize>> = boundary
            .iter()
            .filter(|(_, (a, b))| linalg::dot(a, q) > *b)
            .map(|(f, _)| f.clone())
            .collect();
        if visible.is_empty() {
            continue;
        }
        let mut created: BTreeMap<Vec<usize>, (Vec<BigInt>, BigInt)> = BTreeMap::new();
        for f in &visible {
            boundary.remove(f);
            let mut s = f.clone();
            s.push(i);
            s.sort_unstable();
            for &drop in f {
                let mut nf: Vec<usize> = s.iter().copied().filter(|&k| k != drop).collect();
                nf.sort_unstable();
                if created.remove(&nf).is_none() {
                    let plane = oriented_plane(&pts, &nf, drop);
                    created.insert(nf, plane);
                }
            }
            simplices.push(s);
        }
        boundary.extend(created);
    }
    done(simplices)
}

/// Hyperplane through the facet points, oriented so `opp` lies on the `<=` side.
fn oriented_plane(pts: &[Vec<BigInt>], facet: &[usize], opp: usize) -> (Vec<BigInt>, BigInt) {
    let refs: Vec<&[BigInt]> = facet.iter().map(|&k| pts[k].as_slice()).collect();
    let (a, b) = if refs.is_empty() {
        (Vec::new(), BigInt::zero())
    } else {
        linalg::hyperplane_through(&refs).expect("facet of a full-dimensional simplex")
    };
    if linalg::dot(&a, &pts[opp]) > b {
        (a.into_iter().map(|x| -x).collect(), -b)
    } else {
        (a, b)
    }
}

/// `d! · vol(P)` divided by the index of `lattice` (or of `Z^d` when `None`).
pub fn lattice_volume(p: &VPolytope, lattice: Option<&LatticeBasis>) -> Result<Rat> {
    lattice_volume_with(p, lattice, TriangulateOptions::default())
}

pub fn lattice_volume_with(
    p: &VPolytope,
    lattice: Option<&LatticeBasis>,
    opts: TriangulateOptions,
) -> Result<Rat> {
    if let Some(l) = lattice {
        if l.dim() != p.dim() {
            return Err(Error::DimensionMismatch {
                expected: p.dim(),
                got: l.dim(),
            });
        }
    }
    if p.is_empty() {
        return Ok(Rat::zero());
    }
    let v = triangulate_with(p, opts)?.lattice_volume();
    Ok(match lattice {
        Some(l) => v / Rat::from_integer(l.index().clone()),
        None => v,
    })
}

pub fn euclidean_volume(p: &VPolytope) -> Result<Rat> {
    Ok(lattice_volume(p, None)? / Rat::from_integer(factorial(p.dim())))
}

/// `conv(P1 × {0} ∪ {0} × P2)`.
pub fn join_product(p1: &VPolytope, p2: &VPolytope) -> Result<VPolytope> {
    for p in [p1, p2] {
        if !p.contains_vertex(&RatPoint::zero(p.dim())) {
            return Err(Error::InvalidInput("join factor must have the origin as a vertex".into()));
        }
        if !p.is_full_dimensional() {
            return Err(Error::InvalidInput("join factor must be full-dimensional".into()));
        }
    }
    let (d1, d2) = (p1.dim(), p2.dim());
    let pad = |p: &RatPoint, before: usize, after: usize| {
        let mut c = vec![Rat::zero(); before];
        c.extend(p.coords().iter().cloned());
        c.extend(core::iter::repeat_n(Rat::zero(), after));
        RatPoint::new(c)
    };
    let pts = p1
        .vertices()
        .iter()
        .map(|p| pad(p, 0, d2))
        .chain(p2.vertices().iter().map(|q| pad(q, d1, 0)))
        .collect();
    VPolytope::new(d1 + d2, pts)
}

/// Iterated join of one or more factors.
pub fn join_all(factors: &[VPolytope]) -> Result<VPolytope> {
    let (first, rest) = factors.split_first().ok_or(Error::Empty)?;
    rest.iter().try_fold(first.clone(), |acc, f| join_product(&acc, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claw;
    use crate::group::GroupId;

    fn vp(dim: usize, pts: &[&[i64]]) -> VPolytope {
        VPolytope::from_int_points(dim, &pts.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn simplex_volumes() {
        let s = Simplex::new(vec![
            RatPoint::from_ints(&[0, 0]),
            RatPoint::from_ints(&[1, 0]),
            RatPoint::from_ints(&[0, 1]),
        ])
        .unwrap();
        assert_eq!(s.euclidean_volume(), r(1, 2));
        assert_eq!(s.lattice_volume(), r(1, 1));
        let s = Simplex::new(vec![
            RatPoint::from_ints(&[0, 0]),
            RatPoint::from_ints(&[2, 0]),
            RatPoint::from_ints(&[0, 1]),
        ])
        .unwrap();
        assert_eq!(simplex_volume(&s), r(2, 1));
        let flat = Simplex::new(vec![
            RatPoint::from_ints(&[0, 0]),
            RatPoint::from_ints(&[1, 1]),
            RatPoint::from_ints(&[2, 2]),
        ])
        .unwrap();
        assert!(flat.is_degenerate());
    }

    #[test]
    fn half_integral_simplex() {
        let half = r(1, 2);
        let pts = vec![
            RatPoint::from_ints(&[1, 0, 0, 0]),
            RatPoint::from_ints(&[2, 0, 0, 0]),
            RatPoint::from_ints(&[0, 1, 0, 0]),
            RatPoint::from_ints(&[1, 0, 1, 0]),
            RatPoint::new(vec![r(1, 1), r(0, 1), r(0, 1), half]),
        ];
        assert_eq!(Simplex::new(pts.clone()).unwrap().lattice_volume(), r(1, 2));
        let p = VPolytope::new(4, pts).unwrap();
        assert_eq!(lattice_volume(&p, None).unwrap(), r(1, 2));
    }

    #[test]
    fn square_and_cube() {
        let sq = vp(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let t = triangulate(&sq).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.euclidean_volume(), r(1, 1));
        let cube = claw::ambient(GroupId::Z2, 3).unwrap().vertex_enumeration().unwrap();
        assert_eq!(lattice_volume(&cube, None).unwrap(), r(6, 1));
        let c32 = claw::ambient(GroupId::Z2xZ2, 2).unwrap().vertex_enumeration().unwrap();
        assert_eq!(lattice_volume(&c32, None).unwrap(), r(20, 1));
    }

    #[test]
    fn claw_volumes() {
        let p3 = claw::vertices(GroupId::Z2, 3).unwrap();
        assert_eq!(triangulate(&p3).unwrap().len(), 1);
        let l = claw::lattice(GroupId::Z2, 3).unwrap();
        assert_eq!(lattice_volume(&p3, Some(&l)).unwrap(), r(1, 1));
        let p4 = claw::vertices(GroupId::Z2, 4).unwrap();
        assert_eq!(lattice_volume(&p4, None).unwrap(), r(16, 1));
        let p2 = claw::vertices(GroupId::Z2, 2).unwrap();
        let l2 = claw::lattice(GroupId::Z2, 2).unwrap();
        assert_eq!(lattice_volume(&p2, Some(&l2)).unwrap(), r(0, 1));
        assert!(triangulate(&p2).unwrap().is_empty());
    }

    #[test]
    fn interior_and_boundary_points_are_skipped() {
        let p = vp(2, &[&[0, 0], &[2, 0], &[0, 2], &[1, 1], &[1, 0]]);
        assert_eq!(lattice_volume(&p, None).unwrap(), r(4, 1));
        let q = vp(2, &[&[0, 0], &[4, 0], &[0, 4], &[1, 1]]);
        assert_eq!(lattice_volume(&q, None).unwrap(), r(16, 1));
    }

    #[test]
    fn guard_rails() {
        let big = VPolytope::new(15, vec![RatPoint::zero(15)]).unwrap();
        assert!(matches!(triangulate(&big), Err(Error::GuardRail(_))));
        let ok = triangulate_with(&big, TriangulateOptions { allow_large: true }).unwrap();
        assert!(ok.is_empty());
    }

    #[test]
    fn joins() {
        let seg = vp(1, &[&[0], &[1]]);
        let j = join_product(&seg, &seg).unwrap();
        assert_eq!(j, vp(2, &[&[0, 0], &[1, 0], &[0, 1]]));
        let no_origin = vp(1, &[&[1], &[2]]);
        assert!(join_product(&seg, &no_origin).is_err());
        // conv{0, e_β, e_γ, e_α+e_β, e_α+e_γ}
        let ri = vp(3, &[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 0, 1]]);
        assert_eq!(lattice_volume(&ri, None).unwrap(), r(2, 1));
        for n in 2..=3 {
            let j = join_all(&vec![ri.clone(); n]).unwrap();
            assert_eq!(lattice_volume(&j, None).unwrap(), r(1 << n, 1));
        }
    }

    #[test]
    fn deterministic() {
        let p = claw::vertices(GroupId::Z3, 3).unwrap();
        assert_eq!(triangulate(&p).unwrap(), triangulate(&p).unwrap());
    }
}
