use std::io;
use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vector length {0} exceeds the 64-coordinate limit")]
    LengthTooLong(usize),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("position {position} out of range 1..={limit}")]
    PositionOutOfRange { position: usize, limit: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix has rank {rank}, expected full row rank {rows}")]
    RankDeficient { rows: usize, rank: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("job requires {required} subset tests, over the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    /// Search ran out of budget after ruling out every candidate of size
    /// `sizes_exhausted` or smaller; the minimum is therefore at least
    /// `lower_bound`.
    #[error(
        "search budget of {budget} exhausted: all sets of size <= {sizes_exhausted} ruled out, \
         minimum is at least {lower_bound}"
    )]
    SearchBudgetExceeded {
        lower_bound: usize,
        sizes_exhausted: usize,
        budget: u64,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
