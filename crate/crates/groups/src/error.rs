use thiserror::Error;

/// Errors raised while building groups, tables and class-product counts.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("unsupported field size {0} (entries are packed into 4 bits)")]
    FieldTooLarge(u64),
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("group order exceeds the cap of {cap} elements")]
    OrderCap { cap: usize },
    #[error("form not preserved by generator {0}")]
    FormViolation(usize),
    #[error("character table validation failed: {0}")]
    Table(String),
    #[error("result is not rational: {0}")]
    Irrational(String),
    #[error("negative class-product count: {0}")]
    Negative(String),
    #[error("class index {0} out of range")]
    ClassIndex(usize),
    #[error("element is not in the group")]
    NotMember,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("search exhausted: {0}")]
    Exhausted(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
