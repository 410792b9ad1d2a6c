use std::fmt;

/// Error type shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation
    /// (e.g. `n = 0`, or `r` not strictly between powers of two).
    Domain(String),
    /// An argument exceeds the documented width or sweep bound.
    Range(String),
    /// An exact formula produced a value it provably cannot produce
    /// (non-integer where an integer is guaranteed). Indicates a bug.
    Inconsistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Range(msg) => write!(f, "range error: {msg}"),
            Error::Inconsistency(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
