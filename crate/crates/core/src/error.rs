use thiserror::Error;

/// Errors shared by every pipeline in the crate.
///
/// The variants are coarse on purpose: the CLI maps each one onto a distinct
/// exit code (domain 1, input/parse 2, oracle bound 3).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input (bad vertex id, invalid partition, ...).
    #[error("invalid input: {0}")]
    Input(String),
    /// Well-formed input outside the domain of the operation,
    /// e.g. orienting a graph that is not a comparability graph.
    #[error("{0}")]
    Domain(String),
    /// An exhaustive oracle refused to run because the instance is too large.
    #[error("oracle bound exceeded: {what} is {actual}, bound is {bound}")]
    OracleBound {
        what: &'static str,
        actual: usize,
        bound: usize,
    },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
