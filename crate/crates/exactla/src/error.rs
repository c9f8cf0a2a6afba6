use thiserror::Error;

use crate::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("modulus must be prime (got {0})")]
    NotPrime(u64),
    #[error("modulus {0} is not below 2^31")]
    ModulusTooLarge(u64),
    #[error("cannot parse {0:?} as a scalar")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("no solution")]
    NoSolution,
    #[error("enumeration needs a finite field")]
    InfiniteField,
    #[error("limit exceeded: {base}^{exponent} candidates > limit {limit}")]
    LimitExceeded { base: u64, exponent: usize, limit: u64 },
}
