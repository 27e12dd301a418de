use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{0}")]
    InvalidInput(String),

    #[error("exact separator limited to n ≤ {limit}")]
    ExactLimit { limit: usize },

    #[error("rank-exponential weights overflow")]
    ExponentialOverflow,

    #[error("{what} limited to n ≤ {limit} (got n = {n})")]
    SizeLimit { what: &'static str, limit: usize, n: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidInput(message.into())
    }
}
