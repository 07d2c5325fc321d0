use thiserror::Error;

/// Errors produced by the graph toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: bad graph6 bytes, out-of-range vertices, loops,
    /// unparsable edge lists.
    #[error("format error: {0}")]
    Format(String),
    /// A call whose arguments violate the operation's preconditions.
    #[error("usage error: {0}")]
    Usage(String),
    /// Exact integer arithmetic left the representable range.
    #[error("arithmetic overflow while evaluating {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub(crate) fn format_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}
