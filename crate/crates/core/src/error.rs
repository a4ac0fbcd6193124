use alloc::string::String;

use crate::group::GroupId;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("group mismatch: {0} vs {1}")]
    GroupMismatch(GroupId, GroupId),
    #[error("invalid group element index {index} for {group}")]
    InvalidElement { group: GroupId, index: u8 },
    #[error("invalid number of leaves {n}: {reason}")]
    InvalidLeafCount { n: usize, reason: &'static str },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid symmetry action: {0}")]
    InvalidAction(String),
    #[error("invalid cut: {0}")]
    InvalidCut(String),
    #[error("empty point set")]
    Empty,
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("generators are rank deficient: rank {rank} < {dim}")]
    RankDeficient { rank: usize, dim: usize },
    #[error("{0}")]
    InvalidInput(String),
    #[error("guard rail: {0}")]
    GuardRail(String),
    #[error("lemma hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("formula {0} produced a non-integral value")]
    NonIntegral(&'static str),
}
