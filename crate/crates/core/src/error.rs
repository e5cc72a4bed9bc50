use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by constructors, parsers and degree-checked operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid one-line window: {0}")]
    InvalidWindow(String),
    #[error("root index {index} out of range for the {side} action at degree {degree}")]
    RootIndexOutOfRange {
        side: &'static str,
        index: usize,
        degree: usize,
    },
    #[error("invalid hat set: {0}")]
    InvalidDelta(String),
    #[error("invalid flag: {0}")]
    InvalidFlag(String),
    #[error("not an orbit pair: {0}")]
    NotOrbitPair(String),
    #[error("parse error: {0}")]
    Parse(String),
}
