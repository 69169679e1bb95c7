//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    /// Malformed textual input (graph6 or edge list). `offset` is the byte
    /// offset within the input where parsing failed.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Input violates an operation precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An exact search was asked to run beyond its configured limit.
    #[error("resource limit exceeded in {stage}: {actual} > {limit}")]
    ResourceLimit {
        stage: &'static str,
        limit: usize,
        actual: usize,
    },

    /// Numerical failure (eigensolver non-convergence, cross-check mismatch).
    #[error("numeric error: {0}")]
    Numeric(String),

    /// A search stage ran past its deadline.
    #[error("timeout in {stage}")]
    Timeout { stage: &'static str },
}

pub type Result<T> = std::result::Result<T, AlgError>;

impl AlgError {
    pub fn parse(offset: usize, message: impl Into<String>) -> Self {
        AlgError::Parse {
            offset,
            message: message.into(),
        }
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        AlgError::InvalidInput(message.into())
    }
}
