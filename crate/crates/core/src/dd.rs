//! Double description vertex enumeration over the integers.
//!
//! The polytope `{x : a_i · x <= b_i}` is homogenized to the cone
//! `{(t, x) : t >= 0, b_i t - a_i · x >= 0}` whose extreme rays with `t > 0`
//! are the vertices. Constraints are added one at a time; the cone starts as
//! the whole space, so it carries an explicit lineality basis until the
//! constraints pin it down. Adjacency of rays is decided combinatorially
//! from their zero sets, which tolerates degenerate vertices.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{HPolytope, Rat, RatPoint};
use crate::linalg::{dot, make_primitive};

#[derive(Clone, PartialEq, Eq)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(bits: usize) -> Self {
        BitSet(vec![0; bits.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: BitSet,
}

/// Scaled combination `ca * a - cb * b`, made primitive.
fn combine(ca: &BigInt, a: &[BigInt], cb: &BigInt, b: &[BigInt]) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| ca * x - cb * y).collect();
    make_primitive(&mut out);
    out
}

pub(crate) fn vertices(h: &HPolytope) -> Result<Vec<RatPoint>> {
    let d = h.dim();
    let width = d + 1;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(h.len() + 1);
    let mut t_row = vec![BigInt::zero(); width];
    t_row[0] = 1.into();
    rows.push(t_row);
    for hs in h.halfspaces() {
        let mut row = Vec::with_capacity(width);
        row.push(hs.offset().clone());
        row.extend(hs.normal().iter().map(|a| -a));
        rows.push(row);
    }

    let nbits = rows.len();
    let mut lineality: Vec<Vec<BigInt>> = (0..width)
        .map(|i| {
            let mut e = vec![BigInt::zero(); width];
            e[i] = 1.into();
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    let mut processed = BitSet::new(nbits);

    for (k, row) in rows.iter().enumerate() {
        if let Some(pos) = lineality.iter().position(|l| !dot(row, l).is_zero()) {
            let mut l0 = lineality.swap_remove(pos);
            let mut s0 = dot(row, &l0);
            if s0.is_negative() {
                l0.iter_mut().for_each(|x| *x = -&*x);
                s0 = -s0;
            }
            for l in lineality.iter_mut() {
                let s = dot(row, l);
                if !s.is_zero() {
                    *l = combine(&s0, l, &s, &l0);
                }
            }
            for r in rays.iter_mut() {
                let s = dot(row, &r.v);
                if !s.is_zero() {
                    r.v = combine(&s0, &r.v, &s, &l0);
                }
                r.zeros.insert(k);
            }
            rays.push(Ray {
                v: l0,
                zeros: processed.clone(),
            });
        } else {
            let signs: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.v)).collect();
            let min_common = width.saturating_sub(lineality.len() + 2);
            let mut next: Vec<Ray> = Vec::new();
            let pos: Vec<usize> = (0..rays.len()).filter(|&i| signs[i].is_positive()).collect();
            let neg: Vec<usize> = (0..rays.len()).filter(|&i| signs[i].is_negative()).collect();
            for &p in &pos {
                for &q in &neg {
                    let common = rays[p].zeros.intersect(&rays[q].zeros);
                    if common.count() < min_common {
                        continue;
                    }
                    let blocked = rays
                        .iter()
                        .enumerate()
                        .any(|(i, r)| i != p && i != q && common.is_subset(&r.zeros));
                    if blocked {
                        continue;
                    }
                    let v = combine(&signs[p], &rays[q].v, &signs[q], &rays[p].v);
                    let mut zeros = common;
                    zeros.insert(k);
                    next.push(Ray { v, zeros });
                }
            }
            for (i, mut r) in rays.drain(..).enumerate() {
                if signs[i].is_zero() {
                    r.zeros.insert(k);
                    next.push(r);
                } else if signs[i].is_positive() {
                    next.push(r);
                }
            }
            rays = next;
        }
        processed.insert(k);
    }

    let feasible = rays.iter().any(|r| r.v[0].is_positive());
    if !feasible {
        return Ok(Vec::new());
    }
    if !lineality.is_empty() || rays.iter().any(|r| r.v[0].is_zero()) {
        return Err(Error::Unbounded);
    }
    let mut out: Vec<RatPoint> = rays
        .into_iter()
        .map(|r| {
            let t = &r.v[0];
            RatPoint::new(r.v[1..].iter().map(|x| Rat::new(x.clone(), t.clone())).collect())
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}
