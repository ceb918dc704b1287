use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter violates a documented constraint; the message names it.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// Two independent computations that must agree did not.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
