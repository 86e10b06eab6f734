use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid spherical index: {0}")]
    InvalidIndex(String),

    #[error("spherical index mismatch: {left:?} vs {right:?}")]
    IndexMismatch { left: Vec<usize>, right: Vec<usize> },

    #[error("invalid permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("invalid wreath element: {0}")]
    InvalidElement(String),

    #[error("group order {order} exceeds enumeration limit {limit}")]
    OrderExceedsLimit { order: String, limit: u64 },

    #[error("{0} is not an odd prime below 2^62")]
    NotAPrime(u64),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial is not squarefree modulo {0}")]
    NotSquarefree(u64),

    #[error("polynomial must have degree >= 1")]
    ConstantPolynomial,

    #[error("degree {degree} exceeds limit {limit}")]
    DegreeLimitExceeded { degree: u128, limit: u128 },

    #[error("sequence has only {len} members, requested f_{k}")]
    SequenceExhausted { len: usize, k: usize },

    #[error("sequence members must be monic of degree >= 1 (member {0})")]
    NotMonic(usize),

    #[error("could not parse polynomial {0:?}")]
    PolyParse(String),

    #[error("could not parse sequence spec {0:?}")]
    SpecParse(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("index {0:?} has no exact classifier; use heuristic mode")]
    UnsupportedIndexExactMode(Vec<usize>),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
