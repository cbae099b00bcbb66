use thiserror::Error;

/// Errors surfaced by the library. Exact arithmetic never wraps: any
/// computation that would overflow the fixed-width representation is
/// reported as [`Error::Overflow`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{what} cap exceeded: limit {limit}")]
    CapExceeded { what: &'static str, limit: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("oracle inconsistency: {0}")]
    OracleInconsistency(String),

    #[error("internal solver error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
