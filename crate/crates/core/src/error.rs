use thiserror::Error;

/// Errors raised by constructors, parsers and bounded enumerations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input violates a structural requirement (not a partition, not a
    /// bijection, not transitively closed, ...).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// Requested size is above the configured enumeration limit.
    #[error("{what}: size {requested} exceeds limit {limit}")]
    Resource {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    /// Text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

pub(crate) fn check_limit(what: &'static str, requested: usize, limit: usize) -> Result<()> {
    if requested > limit {
        Err(Error::Resource {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}
