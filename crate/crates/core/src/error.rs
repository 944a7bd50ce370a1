use thiserror::Error;

/// A syntax error with the character offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("ordinal syntax error {0}")]
    Parse(#[from] ParseError),
    #[error("digit string error {0}")]
    Digits(ParseError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed coloring: {0}")]
    Coloring(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
