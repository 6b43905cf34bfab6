use thiserror::Error;

/// Errors raised by the library.
///
/// The variants mirror the failure classes every operation documents: a size
/// budget was exceeded, two operands have incompatible shapes, an argument lies
/// outside the domain of the operation, or two independent computations that
/// must agree did not.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("outside domain: {0}")]
    Domain(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Capacity(_) => "capacity",
            Error::Shape(_) => "shape",
            Error::Domain(_) => "domain",
            Error::Internal(_) => "internal",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
