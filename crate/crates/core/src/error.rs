use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The request does not fit the fixed-width encodings or configured caps.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// Parameters outside the domain of the operation (e.g. `n < 2k`).
    #[error("domain error: {0}")]
    Domain(String),
    /// A caller-side contract was violated (non-adjacent pair, foreign subset, ...).
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("search failed: {0}")]
    SearchFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
