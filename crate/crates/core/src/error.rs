use thiserror::Error;

use crate::rootsys::LieType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Lie type {family}{rank}")]
    InvalidType { family: char, rank: usize },

    #[error("weight belongs to {found}, expected {expected}")]
    SystemMismatch { expected: LieType, found: LieType },

    #[error("coordinate vector has length {found}, expected {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("{0:?} is not a root of the system")]
    NotARoot(Vec<i64>),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("invalid diagram automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("unsupported folding: {0}")]
    UnsupportedPair(String),

    #[error("audit failed: {0}")]
    Audit(String),

    #[error("{0} is gated behind allow_large")]
    Gated(String),

    #[error("character is not Weyl-invariant at weight {0:?}")]
    NotInvariant(Vec<i64>),

    #[error("decomposition has a negative coefficient {mult} at {weight:?}")]
    NegativeCoefficient { weight: Vec<i64>, mult: i64 },

    #[error("resource guard exceeded: {what} reached {size} (limit {limit})")]
    Guard { what: String, size: usize, limit: usize },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
