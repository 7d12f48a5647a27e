use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid tree: {0}")]
    Validation(String),

    #[error("{0}")]
    Undefined(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("size limit exceeded: {0}")]
    Limit(String),

    #[error("{0}")]
    Sampling(String),

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
