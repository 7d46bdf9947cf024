//! Error taxonomy shared by every subsystem.

use thiserror::Error;

/// Unified error type. Variants are grouped so a caller can map them onto
/// process exit codes: configuration/domain problems, numeric or accuracy
/// failures, and I/O or format failures.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A requested table or scan does not fit the configured memory budget.
    #[error("capacity error: need {required_bytes} bytes, budget is {budget_bytes} bytes")]
    Capacity {
        required_bytes: u64,
        budget_bytes: u64,
    },

    /// An accuracy contract could not be met (quadrature tolerance, window
    /// tail bound, audit mismatch treated as fatal by the caller, ...).
    #[error("accuracy error: {0}")]
    Accuracy(String),

    /// Malformed input data; carries a 1-based line number when known.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A binary cache file has the wrong magic, shape, or length.
    #[error("cache format error: {0}")]
    CacheFormat(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn accuracy(msg: impl Into<String>) -> Self {
        Error::Accuracy(msg.into())
    }
}
