use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("usage: {0}")]
    Usage(String),
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("expression mixes enveloping-algebra and function-algebra symbols")]
    MixedSides,
    #[error("{what} cap exceeded: {value} > {cap}")]
    Cap { what: &'static str, value: usize, cap: usize },
    #[error("matrix body is not invertible")]
    Singular,
    #[error("relation check failed at group point: {0}")]
    Relation(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

impl Error {
    /// Process exit code for this error: 3 for resource caps, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Cap { .. } => 3,
            Error::Relation(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
