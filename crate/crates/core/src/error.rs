use thiserror::Error;

/// Errors produced by the matrix, graph and clique routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A dense intermediate would exceed the configured entry budget.
    #[error("memory guard: {what} needs {requested} entries, limit is {limit}")]
    MemoryGuard {
        what: &'static str,
        requested: u128,
        limit: u64,
    },

    #[error("work limit: {what} needs {requested} steps, limit is {limit}")]
    WorkLimit {
        what: &'static str,
        requested: u128,
        limit: u64,
    },

    /// An extension tally was not a multiple of its multiplicity correction.
    #[error("{algorithm}: tally {tally} is not divisible by {divisor}")]
    Indivisible {
        algorithm: &'static str,
        tally: u64,
        divisor: u64,
    },
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::MemoryGuard { .. } | Error::WorkLimit { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
