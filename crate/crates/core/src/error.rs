use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A degree sequence (or other user input) failed validation.
    #[error("invalid input: {0}")]
    Validation(String),

    /// The request would need more materialized state than the configured cap allows.
    #[error("capacity exceeded: {what} (limit {limit})")]
    Capacity { what: String, limit: String },

    /// Two independent computations disagreed. Always a bug.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn capacity(what: impl Into<String>, limit: impl ToString) -> Self {
        Error::Capacity {
            what: what.into(),
            limit: limit.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
