//! Exact integer linear algebra: fraction-free elimination, determinants,
//! rank and nullspaces. Rational input is scaled row-wise to integers first.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::geometry::{Rat, RatPoint};

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[BigInt], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .filter(|(x, _)| !x.is_zero())
        .map(|(x, y)| y * Rat::from_integer(x.clone()))
        .sum()
}

/// Divides out the gcd of the entries. The zero vector is returned unchanged.
pub fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Scales a rational row to a primitive integer row with the same sign.
pub fn integer_row(row: &[Rat]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    make_primitive(&mut out);
    out
}

/// Common denominator of a point set together with the points scaled by it.
pub fn integer_points(points: &[RatPoint]) -> (Vec<Vec<BigInt>>, BigInt) {
    let l = points
        .iter()
        .flat_map(|p| p.coords())
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let scaled = points
        .iter()
        .map(|p| p.coords().iter().map(|x| x.numer() * (&l / x.denom())).collect())
        .collect();
    (scaled, l)
}

/// Determinant by Bareiss' fraction-free elimination.
pub fn det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Reduced integer echelon form: every pivot column is zero outside its pivot
/// row, rows are kept primitive. Returns the nonzero rows and pivot columns.
pub fn echelon(mut m: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len())
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].abs())
        else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            if row[c].is_zero() {
                continue;
            }
            let g = pivot_row[c].gcd(&row[c]);
            let a = &pivot_row[c] / &g;
            let b = &row[c] / &g;
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &a - y * &b;
            }
            make_primitive(row);
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    for (row, &c) in m.iter_mut().zip(&pivots) {
        if row[c].is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
    }
    (m, pivots)
}

pub fn rank(m: Vec<Vec<BigInt>>) -> usize {
    echelon(m).1.len()
}

pub fn rank_rat(rows: &[Vec<Rat>]) -> usize {
    rank(rows.iter().map(|r| integer_row(r)).collect())
}

/// A basis of the integer nullspace `{x : M x = 0}`, one primitive vector per
/// free column. `ncols` is needed when `m` has no rows.
pub fn nullspace(m: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
    let (e, pivots) = echelon(m);
    let mut out = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains(c)) {
        let l = pivots
            .iter()
            .enumerate()
            .fold(BigInt::one(), |l, (k, &p)| l.lcm(&e[k][p]));
        let mut v = alloc::vec![BigInt::zero(); ncols];
        v[f] = l.clone();
        for (k, &p) in pivots.iter().enumerate() {
            v[p] = -(&l / &e[k][p]) * &e[k][f];
        }
        make_primitive(&mut v);
        out.push(v);
    }
    out
}

/// Affine hyperplane `normal · x = offset` through `d` integer points of
/// `Z^d`, or `None` if they are affinely dependent.
pub fn hyperplane_through(points: &[&[BigInt]]) -> Option<(Vec<BigInt>, BigInt)> {
    let d = points.first()?.len();
    let base = points[0];
    let rows: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let mut ns = nullspace(rows, d);
    if ns.len() != 1 {
        return None;
    }
    let normal = ns.pop()?;
    let offset = dot(&normal, base);
    Some((normal, offset))
}
