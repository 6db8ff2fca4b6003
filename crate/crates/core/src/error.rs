use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid transposition ({0},{1}) for S_{2}")]
    InvalidTransposition(usize, usize, usize),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("i-component for color {0} is not ranked")]
    UnrankedComponent(usize),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
