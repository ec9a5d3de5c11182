use thiserror::Error;

use crate::algebra::RingDescriptor;

/// Errors raised by the algebraic routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingDescriptor, RingDescriptor),
    #[error("division by zero")]
    DivisionByZero,
    #[error("quotient 0/0 is ambiguous")]
    Ambiguous,
    #[error("operand must be nonzero")]
    ZeroInput,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("reduction unsupported: {0}")]
    UnsupportedReduction(String),
    #[error("degenerate diagonal entry at degree {degree}")]
    DegenerateDiagonal { degree: usize },
    #[error("polynomial is not normalized: {0}")]
    NotNormalized(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("bad weight: {0}")]
    BadWeight(String),
    #[error("degenerate Gram matrix: {0}")]
    Degenerate(String),
    #[error("operator and weight do not form a matched pair: {0}")]
    BadPair(String),
    #[error("not in the radical: {0}")]
    NotInRadical(String),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
