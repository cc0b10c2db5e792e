use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a shape (parts must be positive and non-increasing): {0:?}")]
    InvalidShape(Vec<usize>),
    #[error("invalid minor: {0}")]
    InvalidMinor(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau is not standard")]
    NotStandard,
    #[error("row {row} is not a removable corner of the shape")]
    NotACorner { row: usize },
    #[error("invalid two-line array: {0}")]
    InvalidArray(String),
    #[error("entry {entry} exceeds bound {bound}")]
    OutOfBounds { entry: usize, bound: usize },
    #[error("input of length {len} exceeds the configured bound {bound}")]
    TooLarge { len: usize, bound: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported ideal: {0}")]
    Unsupported(String),
    #[error("cannot parse input: {0}")]
    Parse(String),
    #[error("not a facet: {0}")]
    NotAFacet(String),
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
