use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("truncation must be at least 1, got {0}")]
    InvalidTruncation(usize),

    #[error("elements live in different truncation contexts")]
    ContextMismatch,

    #[error("expected a homogeneous element of degree {expected}, {found}")]
    DegreeMismatch { expected: i64, found: String },

    #[error("derivation has no value on generator `{0}`")]
    MissingGenerator(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("requested length {length} exceeds truncation {max_length}")]
    LengthExceedsTruncation { length: usize, max_length: usize },

    #[error("invalid rational `{0}`")]
    InvalidRational(String),

    #[error("malformed element record: {0}")]
    MalformedRecord(String),
}
