use num_bigint::BigUint;
use thiserror::Error;

/// Errors produced by construction, arithmetic and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("element cap exceeded: {required} elements required, cap is {cap}")]
    CapExceeded { required: BigUint, cap: u64 },
    #[error("closure failure: {0}")]
    Closure(String),
    #[error("at {path}: {message}")]
    Expression { path: String, message: String },
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
