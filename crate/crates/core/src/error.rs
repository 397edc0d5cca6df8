use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system type {tag}{rank}")]
    InvalidType { tag: String, rank: usize },

    #[error("vector {0:?} is not a root of the ambient system")]
    NotARoot(Vec<i64>),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { expected: usize, got: usize },

    #[error("module dimension exceeds the cap of {cap}")]
    DimensionCap { cap: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("unsupported field F_{p}^{d}")]
    UnsupportedField { p: u64, d: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular")]
    Singular,

    #[error("integral form unavailable for this module")]
    NoIntegralForm,

    #[error("incompatible modules: {0}")]
    Incompatible(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("search failed after {0} trials")]
    SearchFailed(usize),

    #[error("unknown case id {0}")]
    UnknownCase(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
