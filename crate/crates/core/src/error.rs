use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u64, right: u64 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid partition {input:?} at position {position}: {reason}")]
    Parse {
        input: String,
        position: usize,
        reason: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("exterior expansion of about {estimate} terms exceeds the limit {limit}")]
    ExpansionTooLarge { estimate: u128, limit: u128 },

    #[error("weight space with {size} fillings exceeds the limit {limit}")]
    WeightSpaceTooLarge { size: usize, limit: usize },

    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBound { degree: u64, bound: u64 },

    #[error("the symmetric-group comparison requires p > 2, got p = {0}")]
    OracleRequiresOddPrime(u64),

    #[error("arithmetic overflow computing {0}")]
    Overflow(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
