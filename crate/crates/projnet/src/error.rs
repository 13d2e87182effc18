//! Error type shared across the crate.
//!
//! Two failure classes matter to callers: a caller handed us arguments that
//! violate a documented precondition (`Precondition`), or an internal
//! consistency check failed after construction (`Invariant`). The CLI maps
//! them to exit codes 2 and 3 respectively.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The caller violated a documented precondition (bad parameter, zero
    /// inverse, disconnected analysis scope, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A post-construction consistency check failed. This indicates a bug,
    /// not a usage error.
    #[error("internal invariant failed: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
