//! Exact polyhedral computations for the polytopes of group-based
//! phylogenetic models on claw trees.
//!
//! For `G` one of `Z2`, `Z2×Z2`, `Z3` and an `n`-leaf claw tree, the polytope
//! `P(G, n)` lives in `(|G| - 1) n` projected coordinates. Its normalized
//! volume in the lattice generated by its vertices is the algebraic degree
//! of the associated toric variety. This crate computes that number three
//! independent ways:
//!
//! * [`formulas`]: closed forms evaluated in exact rationals,
//! * [`cuts`]: the cube / product-of-simplices cut-off bookkeeping, which
//!   assembles the volume from the volumes of the cut-off pieces,
//! * [`volume`]: a deterministic placing triangulation of the vertex set.
//!
//! Everything is exact; there is no floating point anywhere in the crate.
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod claw;
pub mod cuts;
pub mod error;
pub mod formulas;
pub mod geometry;
pub mod group;
pub mod lattice;
pub mod lemmas;
pub mod linalg;
pub mod volume;

mod dd;

pub use error::{Error, Result};
pub use geometry::{HPolytope, HalfSpace, Rat, RatPoint, VPolytope};
pub use group::{GTuple, GroupElem, GroupId, SymmetryAction};
pub use lattice::LatticeBasis;
