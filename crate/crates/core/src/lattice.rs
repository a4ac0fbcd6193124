//! Finite-index sublattices of `Z^d` and their index.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer generators of a full-rank sublattice `L ⊆ Z^d`, with `|Z^d / L|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    dim: usize,
    generators: Vec<Vec<BigInt>>,
    index: BigInt,
}

impl LatticeBasis {
    pub fn new(dim: usize, generators: Vec<Vec<BigInt>>) -> Result<Self> {
        let index = lattice_index(dim, &generators)?;
        Ok(LatticeBasis {
            dim,
            generators,
            index,
        })
    }

    pub fn from_ints(dim: usize, generators: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            dim,
            generators
                .iter()
                .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// `Z^d` itself.
    pub fn standard(dim: usize) -> Self {
        let generators = (0..dim)
            .map(|i| {
                let mut e = alloc::vec![BigInt::zero(); dim];
                e[i] = BigInt::one();
                e
            })
            .collect();
        LatticeBasis {
            dim,
            generators,
            index: BigInt::one(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    pub fn index(&self) -> &BigInt {
        &self.index
    }
}

/// Index of the lattice spanned by `generators` in `Z^dim`, by unimodular
/// row reduction to Hermite form; the index is the product of the pivots.
pub fn lattice_index(dim: usize, generators: &[Vec<BigInt>]) -> Result<BigInt> {
    if let Some(g) = generators.iter().find(|g| g.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: g.len(),
        });
    }
    let mut m: Vec<Vec<BigInt>> = generators.to_vec();
    let mut index = BigInt::one();
    let mut r = 0;
    for c in 0..dim {
        loop {
            let Some(p) = (r..m.len())
                .filter(|&i| !m[i][c].is_zero())
                .min_by_key(|&i| m[i][c].abs())
            else {
                return Err(Error::RankDeficient { rank: r, dim });
            };
            m.swap(r, p);
            let pivot = m[r].clone();
            let mut done = true;
            for row in m[r + 1..].iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&pivot[c]);
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
                if !row[c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        index *= m[r][c].abs();
        r += 1;
    }
    Ok(index)
}
