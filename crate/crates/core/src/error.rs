use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("outside the domain: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("failed to converge: {0}")]
    Convergence(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("degenerate argument: {0}")]
    Degenerate(String),
    #[error("unknown check id or pattern: {0}")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
