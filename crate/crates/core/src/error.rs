use thiserror::Error;

use crate::f2chain::ChainError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Text that does not parse. The CLI maps this to exit status 2.
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("slot {slot} out of range for arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("arity mismatch: expected {expected}, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("grade mismatch: {0}")]
    GradeMismatch(String),
    #[error("algebra is not connected: {0}")]
    Disconnected(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid simplicial set: {0}")]
    InvalidSimplicialSet(String),
    #[error("bar slice is unbounded: {0}")]
    UnboundedSlice(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

impl Error {
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
