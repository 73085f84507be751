//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    /// Dimensions or spaces of the supplied data do not fit together.
    #[error("shape error: {0}")]
    Shape(String),

    /// A map required to be invertible is singular.
    #[error("singular map: {0}")]
    Singular(String),

    /// A construction precondition failed mathematically (axiom, cocycle or
    /// law violation), with a human-readable witness.
    #[error("{0}")]
    Math(String),

    /// Internal consistency check failed; indicates a bug, not bad input.
    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("usage error: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn math(msg: impl Into<String>) -> Self {
        Error::Math(msg.into())
    }
}
