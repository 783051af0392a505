use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("generator `{0}` is not part of the presentation")]
    UnknownGenerator(String),
    #[error("degree {requested} exceeds the configured cap {cap}")]
    DegreeCapExceeded { requested: usize, cap: usize },
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("generator alphabets differ ({0} vs {1} generators)")]
    AlphabetMismatch(usize, usize),
    #[error("no rewriting system for {0}; use the quotient oracle instead")]
    NoRewriteSystem(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("invalid ternary phase: {0} is not a cube root of unity")]
    InvalidPhase(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
