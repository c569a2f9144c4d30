use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed rational `{0}`")]
    Rational(String),
    #[error("malformed weight `{0}`")]
    EpsRational(String),
    #[error("malformed partition `{0}`")]
    Partition(String),
    #[error("malformed index set `{0}`")]
    IndexSet(String),
    #[error("table line {line}: {reason}")]
    Table { line: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
