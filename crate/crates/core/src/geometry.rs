//! Exact points, half-spaces and the two representations of a polytope.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dd;
use crate::error::{Error, Result};
use crate::linalg;

pub type Rat = BigRational;

/// Formats a rational as `p/q`, omitting `/1`.
pub fn fmt_rat(x: &Rat) -> alloc::string::String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational: '{s}'"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(p, q))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RatPoint(Vec<Rat>);

impl RatPoint {
    pub fn new(coords: Vec<Rat>) -> Self {
        RatPoint(coords)
    }

    pub fn zero(dim: usize) -> Self {
        RatPoint(vec![Rat::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RatPoint(coords.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&fmt_rat(x))?;
        }
        f.write_str(")")
    }
}

/// `normal · x <= offset`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    normal: Vec<BigInt>,
    offset: BigInt,
}

impl HalfSpace {
    pub fn new(normal: Vec<BigInt>, offset: BigInt) -> Result<Self> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::InvalidInput("half-space with zero normal".into()));
        }
        Ok(HalfSpace { normal, offset })
    }

    pub fn from_ints(normal: &[i64], offset: i64) -> Result<Self> {
        Self::new(normal.iter().map(|&a| a.into()).collect(), offset.into())
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    /// `normal · p`.
    pub fn eval(&self, p: &RatPoint) -> Rat {
        linalg::dot_rat(&self.normal, p.coords())
    }

    pub fn contains(&self, p: &RatPoint) -> bool {
        self.eval(p) <= Rat::from_integer(self.offset.clone())
    }

    pub fn is_tight(&self, p: &RatPoint) -> bool {
        self.eval(p) == Rat::from_integer(self.offset.clone())
    }

    /// The reversed inequality `normal · x >= offset`, as `-normal · x <= -offset`.
    pub fn flipped(&self) -> HalfSpace {
        HalfSpace {
            normal: self.normal.iter().map(|a| -a).collect(),
            offset: -&self.offset,
        }
    }

    /// Divides normal and offset by their common gcd.
    pub fn canonicalize(&self) -> HalfSpace {
        let g = self
            .normal
            .iter()
            .fold(self.offset.clone(), |g, a| g.gcd(a));
        if g.is_one() {
            return self.clone();
        }
        HalfSpace {
            normal: self.normal.iter().map(|a| a / &g).collect(),
            offset: &self.offset / &g,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    halfspaces: Vec<HalfSpace>,
}

impl HPolytope {
    pub fn new(dim: usize, halfspaces: Vec<HalfSpace>) -> Result<Self> {
        if let Some(h) = halfspaces.iter().find(|h| h.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: h.dim(),
            });
        }
        Ok(HPolytope { dim, halfspaces })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn len(&self) -> usize {
        self.halfspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.halfspaces.is_empty()
    }

    pub fn push(&mut self, h: HalfSpace) -> Result<()> {
        if h.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: h.dim(),
            });
        }
        self.halfspaces.push(h);
        Ok(())
    }

    /// The system with `extra` appended.
    pub fn with(&self, extra: impl IntoIterator<Item = HalfSpace>) -> Result<Self> {
        let mut out = self.clone();
        for h in extra {
            out.push(h)?;
        }
        Ok(out)
    }

    pub fn contains(&self, p: &RatPoint) -> bool {
        p.dim() == self.dim && self.halfspaces.iter().all(|h| h.contains(p))
    }

    /// Exact vertex set by the double description method. An infeasible
    /// system yields an empty [`VPolytope`]; a feasible unbounded one is
    /// [`Error::Unbounded`].
    pub fn vertex_enumeration(&self) -> Result<VPolytope> {
        let verts = dd::vertices(self)?;
        VPolytope::new(self.dim, verts)
    }
}

/// A finite point set, deduplicated and sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolytope {
    dim: usize,
    vertices: Vec<RatPoint>,
}

impl VPolytope {
    pub fn new(dim: usize, mut vertices: Vec<RatPoint>) -> Result<Self> {
        if let Some(p) = vertices.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.dim(),
            });
        }
        vertices.sort();
        vertices.dedup();
        Ok(VPolytope { dim, vertices })
    }

    pub fn from_int_points(dim: usize, points: &[Vec<i64>]) -> Result<Self> {
        Self::new(dim, points.iter().map(|p| RatPoint::from_ints(p)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RatPoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, p: &RatPoint) -> bool {
        self.vertices.binary_search(p).is_ok()
    }

    /// Dimension of the affine hull.
    pub fn affine_dim(&self) -> Result<usize> {
        let (pts, _) = linalg::integer_points(&self.vertices);
        let base = pts.first().ok_or(Error::Empty)?;
        let rows: Vec<Vec<BigInt>> = pts[1..]
            .iter()
            .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        Ok(linalg::rank(rows))
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim().is_ok_and(|k| k == self.dim)
    }

    /// Inequality description of the convex hull. Lower-dimensional hulls get
    /// their affine equations as pairs of opposite inequalities.
    pub fn hull_hrep(&self) -> Result<HPolytope> {
        let hull = self.hull()?;
        let mut hs = Vec::new();
        for eq in &hull.equations {
            hs.push(eq.clone());
            hs.push(eq.flipped());
        }
        hs.extend(hull.facets.iter().cloned());
        HPolytope::new(self.dim, hs)
    }

    /// Drops every point that lies in the convex hull of the others.
    pub fn canonicalize(&self) -> Result<VPolytope> {
        if self.vertices.len() <= 1 {
            return Ok(self.clone());
        }
        let hull = self.hull()?;
        let keep = self
            .vertices
            .iter()
            .filter(|p| {
                let tight: Vec<Vec<BigInt>> = hull
                    .facets
                    .iter()
                    .filter(|h| h.is_tight(p))
                    .map(|h| h.normal().to_vec())
                    .chain(hull.equations.iter().map(|h| h.normal().to_vec()))
                    .collect();
                linalg::rank(tight) == self.dim
            })
            .cloned()
            .collect();
        VPolytope::new(self.dim, keep)
    }

    fn hull(&self) -> Result<Hull> {
        let (pts, _) = linalg::integer_points(&self.vertices);
        let base = pts.first().ok_or(Error::Empty)?.clone();
        let diffs: Vec<Vec<BigInt>> = pts
            .iter()
            .map(|p| p.iter().zip(&base).map(|(a, b)| a - b).collect())
            .collect();
        let (_, pivots) = linalg::echelon(diffs.clone());
        let k = pivots.len();

        // affine equations: normals orthogonal to every difference vector
        let equations = linalg::nullspace(diffs, self.dim)
            .into_iter()
            .map(|a| {
                let b = linalg::dot_rat(&a, self.vertices[0].coords());
                let mut row = a;
                let den = b.denom().clone();
                for x in row.iter_mut() {
                    *x *= &den;
                }
                HalfSpace::new(row, b.numer().clone())
            })
            .collect::<Result<Vec<_>>>()?;
        if k == 0 {
            return Ok(Hull {
                equations,
                facets: Vec::new(),
            });
        }

        // The coordinates in `pivots` parametrize the affine hull, so the
        // projection onto them is injective there and full-dimensional.
        let projected: Vec<Vec<Rat>> = self
            .vertices
            .iter()
            .map(|p| pivots.iter().map(|&c| p.coords()[c].clone()).collect())
            .collect();
        let count = Rat::from_integer(projected.len().into());
        let centroid: Vec<Rat> = (0..k)
            .map(|c| projected.iter().map(|p| p[c].clone()).sum::<Rat>() / &count)
            .collect();

        // Facets of the hull are the vertices of the polar body
        // { y : (p - c) · y <= 1 }, bounded because c is interior.
        // a point at the centroid gives the vacuous 0 <= 1
        let polar_rows = projected
            .iter()
            .filter(|p| **p != centroid)
            .map(|p| {
                let mut row: Vec<Rat> = p.iter().zip(&centroid).map(|(a, b)| a - b).collect();
                row.push(-Rat::one());
                let ints = linalg::integer_row(&row);
                let (normal, rhs) = ints.split_at(k);
                HalfSpace::new(normal.to_vec(), -&rhs[0])
            })
            .collect::<Result<Vec<_>>>()?;
        let polar = HPolytope::new(k, polar_rows)?;
        let mut facets = Vec::new();
        for y in dd::vertices(&polar)? {
            // y · x <= 1 + y · c, lifted to the full coordinates
            let rhs = Rat::one()
                + y.coords()
                    .iter()
                    .zip(&centroid)
                    .map(|(a, b)| a * b)
                    .sum::<Rat>();
            let mut row: Vec<Rat> = vec![Rat::zero(); self.dim];
            for (i, &c) in pivots.iter().enumerate() {
                row[c] = y.coords()[i].clone();
            }
            row.push(rhs);
            let ints = linalg::integer_row(&row);
            let (normal, offset) = ints.split_at(self.dim);
            facets.push(HalfSpace::new(normal.to_vec(), offset[0].clone())?);
        }
        facets.sort();
        Ok(Hull { equations, facets })
    }
}

struct Hull {
    equations: Vec<HalfSpace>,
    facets: Vec<HalfSpace>,
}

/// Affine dimension of a nonempty point set.
pub fn affine_dim(p: &VPolytope) -> Result<usize> {
    p.affine_dim()
}

pub fn contains(h: &HPolytope, p: &RatPoint) -> bool {
    h.contains(p)
}

pub fn vertex_enumeration(h: &HPolytope) -> Result<VPolytope> {
    h.vertex_enumeration()
}

/// True iff every point of `v` satisfies `h` and the vertex set of `h` is
/// exactly `v`.
pub fn vh_consistent(v: &VPolytope, h: &HPolytope) -> bool {
    if v.dim() != h.dim() || !v.vertices().iter().all(|p| h.contains(p)) {
        return false;
    }
    match h.vertex_enumeration() {
        Ok(e) => e.vertices() == v.vertices(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square_h() -> HPolytope {
        HPolytope::new(
            2,
            vec![
                HalfSpace::from_ints(&[-1, 0], 0).unwrap(),
                HalfSpace::from_ints(&[0, -1], 0).unwrap(),
                HalfSpace::from_ints(&[1, 0], 1).unwrap(),
                HalfSpace::from_ints(&[0, 1], 1).unwrap(),
            ],
        )
        .unwrap()
    }

    fn r(p: i64, q: i64) -> Rat {
        Rat::new(p.into(), q.into())
    }

    #[test]
    fn rational_text() {
        assert_eq!(fmt_rat(&r(5, 2)), "5/2");
        assert_eq!(fmt_rat(&r(-4, 2)), "-2");
        assert_eq!(parse_rat("10/4").unwrap(), r(5, 2));
        assert_eq!(parse_rat("-3").unwrap(), r(-3, 1));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn affine_dims() {
        let seg = VPolytope::from_int_points(2, &[vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(seg.affine_dim().unwrap(), 1);
        let simplex =
            VPolytope::from_int_points(3, &[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])
                .unwrap();
        assert_eq!(simplex.affine_dim().unwrap(), 3);
        assert_eq!(VPolytope::new(2, vec![]).unwrap().affine_dim(), Err(Error::Empty));
    }

    #[test]
    fn containment() {
        let sq = unit_square_h();
        assert!(sq.contains(&RatPoint::new(vec![r(1, 2), r(1, 2)])));
        assert!(!sq.contains(&RatPoint::from_ints(&[2, 0])));
    }

    #[test]
    fn interval_vertices() {
        let h = HPolytope::new(
            1,
            vec![
                HalfSpace::from_ints(&[-1], 0).unwrap(),
                HalfSpace::from_ints(&[1], 1).unwrap(),
            ],
        )
        .unwrap();
        let v = h.vertex_enumeration().unwrap();
        assert_eq!(v.vertices(), &[RatPoint::from_ints(&[0]), RatPoint::from_ints(&[1])]);
    }

    #[test]
    fn unbounded_and_empty_are_distinguished() {
        let ray = HPolytope::new(1, vec![HalfSpace::from_ints(&[-1], 0).unwrap()]).unwrap();
        assert_eq!(ray.vertex_enumeration(), Err(Error::Unbounded));
        let free = HPolytope::new(2, vec![HalfSpace::from_ints(&[1, 0], 0).unwrap()]).unwrap();
        assert_eq!(free.vertex_enumeration(), Err(Error::Unbounded));
        let empty = HPolytope::new(
            1,
            vec![
                HalfSpace::from_ints(&[-1], -1).unwrap(),
                HalfSpace::from_ints(&[1], 0).unwrap(),
            ],
        )
        .unwrap();
        assert!(empty.vertex_enumeration().unwrap().is_empty());
    }

    #[test]
    fn degenerate_vertices() {
        // square pyramid: apex lies on four facets
        let h = HPolytope::new(
            3,
            vec![
                HalfSpace::from_ints(&[0, 0, -1], 0).unwrap(),
                HalfSpace::from_ints(&[-1, 0, 1], 0).unwrap(),
                HalfSpace::from_ints(&[0, -1, 1], 0).unwrap(),
                HalfSpace::from_ints(&[1, 0, 1], 2).unwrap(),
                HalfSpace::from_ints(&[0, 1, 1], 2).unwrap(),
            ],
        )
        .unwrap();
        let v = h.vertex_enumeration().unwrap();
        assert_eq!(v.len(), 5);
        assert!(v.contains_vertex(&RatPoint::from_ints(&[1, 1, 1])));
    }

    #[test]
    fn square_vs_triangle() {
        let sq = VPolytope::from_int_points(2, &[vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]).unwrap();
        assert!(vh_consistent(&sq, &unit_square_h()));
        let tri = HPolytope::new(
            2,
            vec![
                HalfSpace::from_ints(&[-1, 0], 0).unwrap(),
                HalfSpace::from_ints(&[0, -1], 0).unwrap(),
                HalfSpace::from_ints(&[1, 1], 1).unwrap(),
            ],
        )
        .unwrap();
        assert!(!vh_consistent(&sq, &tri));
    }

    #[test]
    fn hull_round_trip_and_canonicalize() {
        let pts = VPolytope::from_int_points(
            2,
            &[vec![0, 0], vec![2, 0], vec![0, 2], vec![2, 2], vec![1, 1], vec![1, 0]],
        )
        .unwrap();
        let c = pts.canonicalize().unwrap();
        assert_eq!(c.len(), 4);
        let h = pts.hull_hrep().unwrap();
        assert_eq!(h.len(), 4);
        assert!(vh_consistent(&c, &h));

        // a segment inside R^3 with an interior point
        let seg = VPolytope::from_int_points(3, &[vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]]).unwrap();
        let c = seg.canonicalize().unwrap();
        assert_eq!(c.len(), 2);
        assert!(vh_consistent(&c, &seg.hull_hrep().unwrap()));
    }

    #[test]
    fn halfspace_canonical_form() {
        let h = HalfSpace::from_ints(&[2, -4], 6).unwrap().canonicalize();
        assert_eq!(h, HalfSpace::from_ints(&[1, -2], 3).unwrap());
        assert!(HalfSpace::from_ints(&[0, 0], 1).is_err());
    }
}
