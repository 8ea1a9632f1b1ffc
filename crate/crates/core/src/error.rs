use thiserror::Error;

use crate::linalg::Field;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("cannot parse scalar {text:?} in {field}")]
    ScalarParse { text: String, field: Field },

    #[error("unknown law {0:?}")]
    UnknownLaw(String),

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    #[error("unknown canonical algebra {0:?}")]
    UnknownAlgebra(String),

    #[error("malformed extension: {0}")]
    MalformedExtension(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("action is not derived: {0}")]
    NotDerived(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
