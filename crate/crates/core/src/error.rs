use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("sequence has too few terms: need {needed}, have {have}")]
    InsufficientTerms { needed: usize, have: usize },
    #[error("leading principal minor h_{0} is zero: sequence is not regular at index {0}")]
    SingularMinor(usize),
    #[error("division by a series with zero constant term")]
    DivisorNotUnit,
    #[error("inner series of a composition must have zero constant term")]
    InnerNotNilpotent,
    #[error("series is not invertible under composition (need f(0) = 0 and f'(0) = 1)")]
    NotInvertible,
    #[error("cannot combine an ordinary and an exponential Riordan array")]
    KindMismatch,
    #[error("continued fraction has insufficient depth: need {needed}, have {have}")]
    InsufficientDepth { needed: usize, have: usize },
    #[error("series precision {have} is below the requested order {needed}")]
    InsufficientPrecision { needed: usize, have: usize },
    #[error("index out of range: n={n}, k={k}")]
    IndexOutOfRange { n: usize, k: usize },
    #[error("unknown sequence name: {0}")]
    UnknownName(String),
    #[error("parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("network error: {0}")]
    NetworkError(String),
    #[error("OEIS sequence not found: {0}")]
    NotFound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
