use thiserror::Error;

/// Error type shared across the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A domain precondition was violated (division by zero, equal indices,
    /// index out of range, malformed input, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A Clifford constant cannot be commuted past the coordinate variable
    /// of the given coordinate with a uniform sign.
    #[error("element is not passable through coordinate {0}")]
    NotPassable(usize),

    /// A polynomial is not a simultaneous eigenvector of the Cartan operators.
    #[error("not an eigenvector: {0}")]
    NotEigen(String),

    /// Unsupported parameters for a verification suite or CLI command.
    #[error("usage error: {0}")]
    Usage(String),

    /// Textual form could not be parsed back.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}
