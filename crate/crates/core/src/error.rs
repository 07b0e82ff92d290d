use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word is not null in the surface group")]
    NotNull,
    #[error("fuel exhausted in {0}")]
    FuelExhausted(&'static str),
    #[error("syntax error at token {token:?}: {reason}")]
    Syntax { token: String, reason: String },
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("word has a nontrivial permutation")]
    NontrivialPermutation,
    #[error("word is not in the kernel: {0}")]
    NotInKernel(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
