use thiserror::Error;

use crate::spec::ParseError;

/// Every failure mode of the engine. The three main classes map onto the
/// CLI exit codes: bad input (2), exhausted budget (3), and a theorem
/// prediction that did not match an exact computation (4).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("verification failure: {0}")]
    Verification(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Argument(_) | Error::Parse(_) | Error::Io(_) => 2,
            Error::Resource(_) => 3,
            Error::Verification(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
