use thiserror::Error;

/// Errors raised by the combinatorial and counting routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("entries must be strictly increasing: {0:?}")]
    NotIncreasing(Vec<u32>),
    #[error("rank routes disagree for {array}: {sum_route} vs {beta_route}")]
    RankRoutes { array: String, sum_route: i64, beta_route: i64 },
    #[error("(d, i) = (0, 0) is not a hook displacement")]
    ZeroDisplacement,
    #[error("{0} is not a ({1},{2})-hook")]
    NotAHook(String, i64, u8),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(u64, u64),
    #[error("rank mismatch: symbol has rank {symbol}, class has size {class}")]
    RankMismatch { symbol: u64, class: u64 },
    #[error("class {class} does not lie in the coset W^{expected} required by {symbol}")]
    CosetMismatch { symbol: String, class: String, expected: u8 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("degree is not integral: {0}")]
    NonIntegral(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Group(#[from] hookline_groups::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
