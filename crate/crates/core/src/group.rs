//! The three groups `Z2`, `Z2×Z2`, `Z3`, zero-sum tuples, and the symmetry
//! actions of the claw polytopes.
//!
//! Elements are encoded by a small index with `0` the identity. For `Z2×Z2`
//! the nonzero elements `α, β, γ` are `1, 2, 3`; reading the index as a
//! 2-bit vector makes the group law XOR.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::One;

use crate::error::{Error, Result};
use crate::geometry::{Rat, RatPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupId {
    Z2,
    Z2xZ2,
    Z3,
}

impl GroupId {
    pub const ALL: [GroupId; 3] = [GroupId::Z2, GroupId::Z2xZ2, GroupId::Z3];

    pub const fn order(self) -> usize {
        match self {
            GroupId::Z2 => 2,
            GroupId::Z2xZ2 => 4,
            GroupId::Z3 => 3,
        }
    }

    /// Number of nonzero elements, i.e. the number of projected coordinates
    /// per leaf.
    pub const fn block_len(self) -> usize {
        self.order() - 1
    }

    /// Ambient dimension `(|G| - 1) n` of the projected polytope.
    pub const fn ambient_dim(self, n: usize) -> usize {
        self.block_len() * n
    }

    pub const fn name(self) -> &'static str {
        match self {
            GroupId::Z2 => "z2",
            GroupId::Z2xZ2 => "z2xz2",
            GroupId::Z3 => "z3",
        }
    }

    pub(crate) fn add_index(self, a: u8, b: u8) -> u8 {
        match self {
            GroupId::Z2 | GroupId::Z2xZ2 => a ^ b,
            GroupId::Z3 => (a + b) % 3,
        }
    }

    pub(crate) fn neg_index(self, a: u8) -> u8 {
        match self {
            GroupId::Z2 | GroupId::Z2xZ2 => a,
            GroupId::Z3 => (3 - a) % 3,
        }
    }

    fn check(self, index: u8) -> Result<()> {
        if (index as usize) < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidElement { group: self, index })
        }
    }

    /// All automorphisms, each given as the images of the nonzero elements
    /// `1..order` in order.
    pub fn automorphisms(self) -> Vec<Vec<u8>> {
        let nonzero: Vec<u8> = (1..self.order() as u8).collect();
        permutations(&nonzero)
            .into_iter()
            .filter(|images| is_additive(self, images))
            .collect()
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "z2" => Ok(GroupId::Z2),
            "z2xz2" => Ok(GroupId::Z2xZ2),
            "z3" => Ok(GroupId::Z3),
            other => Err(Error::InvalidInput(format!("unknown group '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElem {
    group: GroupId,
    index: u8,
}

impl GroupElem {
    pub fn new(group: GroupId, index: u8) -> Result<Self> {
        group.check(index)?;
        Ok(GroupElem { group, index })
    }

    pub fn zero(group: GroupId) -> Self {
        GroupElem { group, index: 0 }
    }

    pub fn group(self) -> GroupId {
        self.group
    }

    pub fn index(self) -> u8 {
        self.index
    }

    pub fn is_zero(self) -> bool {
        self.index == 0
    }

}

impl core::ops::Neg for GroupElem {
    type Output = GroupElem;

    fn neg(self) -> GroupElem {
        GroupElem {
            group: self.group,
            index: self.group.neg_index(self.index),
        }
    }
}

pub fn add(a: GroupElem, b: GroupElem) -> Result<GroupElem> {
    if a.group != b.group {
        return Err(Error::GroupMismatch(a.group, b.group));
    }
    Ok(GroupElem {
        group: a.group,
        index: a.group.add_index(a.index, b.index),
    })
}

/// An `n`-tuple of group elements: the G-presentation of a vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GTuple {
    group: GroupId,
    entries: Vec<u8>,
}

impl GTuple {
    pub fn new(group: GroupId, entries: Vec<u8>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidLeafCount {
                n: 0,
                reason: "a tuple needs at least one entry",
            });
        }
        for &e in &entries {
            group.check(e)?;
        }
        Ok(GTuple { group, entries })
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn get(&self, j: usize) -> GroupElem {
        GroupElem {
            group: self.group,
            index: self.entries[j],
        }
    }

    pub fn sum(&self) -> GroupElem {
        let index = self
            .entries
            .iter()
            .fold(0, |acc, &e| self.group.add_index(acc, e));
        GroupElem {
            group: self.group,
            index,
        }
    }
}

/// All `n`-tuples over `group` summing to zero, in lexicographic order.
pub fn zero_sum_tuples(group: GroupId, n: usize) -> Result<Vec<GTuple>> {
    if n == 0 {
        return Err(Error::InvalidLeafCount {
            n,
            reason: "need at least one leaf",
        });
    }
    let order = group.order() as u8;
    let mut out = Vec::with_capacity(group.order().pow(n as u32 - 1));
    let mut prefix = vec![0u8; n - 1];
    loop {
        let partial = prefix.iter().fold(0, |acc, &e| group.add_index(acc, e));
        let mut entries = prefix.clone();
        entries.push(group.neg_index(partial));
        out.push(GTuple { group, entries });

        // odometer, last position fastest
        let mut pos = prefix.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            prefix[pos] += 1;
            if prefix[pos] < order {
                break;
            }
            prefix[pos] = 0;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionKind {
    /// `(h x)_i^j = x_{i + h_j}^j`; requires `h_1 + ... + h_n = 0`.
    Translate(Vec<u8>),
    /// `(σ x)^{σ(j)} = x^j`, with `sigma[j]` the 0-based image of leaf `j`.
    Permute(Vec<usize>),
    /// `(φ x)_{φ(i)} = x_i`, with `images[i - 1] = φ(i)`.
    Automorphism(Vec<u8>),
}

/// A linear symmetry of `P(G, n)` acting on projected coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryAction {
    group: GroupId,
    n: usize,
    kind: ActionKind,
}

impl SymmetryAction {
    pub fn translate(h: &GTuple) -> Result<Self> {
        if !h.sum().is_zero() {
            return Err(Error::InvalidAction(format!(
                "translation {:?} does not sum to zero",
                h.entries()
            )));
        }
        Ok(SymmetryAction {
            group: h.group(),
            n: h.len(),
            kind: ActionKind::Translate(h.entries().to_vec()),
        })
    }

    pub fn permute(group: GroupId, sigma: Vec<usize>) -> Result<Self> {
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return Err(Error::InvalidAction(format!("{sigma:?} is not a permutation")));
            }
            seen[s] = true;
        }
        if n == 0 {
            return Err(Error::InvalidAction("empty permutation".into()));
        }
        Ok(SymmetryAction {
            group,
            n,
            kind: ActionKind::Permute(sigma),
        })
    }

    pub fn automorphism(group: GroupId, n: usize, images: Vec<u8>) -> Result<Self> {
        if images.len() != group.block_len() {
            return Err(Error::InvalidAction(format!(
                "automorphism of {group} needs {} images",
                group.block_len()
            )));
        }
        let mut seen = vec![false; group.order()];
        for &im in &images {
            if im == 0 || im as usize >= group.order() || seen[im as usize] {
                return Err(Error::InvalidAction(format!(
                    "{images:?} is not a permutation of the nonzero elements"
                )));
            }
            seen[im as usize] = true;
        }
        if !is_additive(group, &images) {
            return Err(Error::InvalidAction(format!(
                "{images:?} does not respect addition in {group}"
            )));
        }
        Ok(SymmetryAction {
            group,
            n,
            kind: ActionKind::Automorphism(images),
        })
    }

    pub fn group(&self) -> GroupId {
        self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &ActionKind {
        &self.kind
    }

    pub fn apply(&self, p: &RatPoint) -> Result<RatPoint> {
        let b = self.group.block_len();
        let dim = b * self.n;
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.dim(),
            });
        }
        let x = p.coords();
        let mut out = vec![Rat::default(); dim];
        match &self.kind {
            ActionKind::Translate(h) => {
                for j in 0..self.n {
                    let block = &x[j * b..(j + 1) * b];
                    let mut full = Vec::with_capacity(b + 1);
                    full.push(Rat::one() - block.iter().sum::<Rat>());
                    full.extend(block.iter().cloned());
                    for i in 1..=b {
                        let src = self.group.add_index(i as u8, h[j]) as usize;
                        out[j * b + i - 1] = full[src].clone();
                    }
                }
            }
            ActionKind::Permute(sigma) => {
                for (j, &target) in sigma.iter().enumerate() {
                    out[target * b..(target + 1) * b].clone_from_slice(&x[j * b..(j + 1) * b]);
                }
            }
            ActionKind::Automorphism(images) => {
                for j in 0..self.n {
                    for (i, &im) in images.iter().enumerate() {
                        out[j * b + im as usize - 1] = x[j * b + i].clone();
                    }
                }
            }
        }
        Ok(RatPoint::new(out))
    }
}

fn is_additive(group: GroupId, images: &[u8]) -> bool {
    let phi = |a: u8| if a == 0 { 0 } else { images[a as usize - 1] };
    let order = group.order() as u8;
    (0..order).all(|a| {
        (0..order).all(|b| phi(group.add_index(a, b)) == group.add_index(phi(a), phi(b)))
    })
}

fn permutations(items: &[u8]) -> Vec<Vec<u8>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}
