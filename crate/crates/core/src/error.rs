use thiserror::Error;

/// Errors raised by the arithmetic kernel and the coefficient routes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivideByZero,
    #[error("polynomial is not exactly divisible by the given divisor")]
    NotDivisible,
    #[error("polynomial has a negative coefficient at exponent {0}")]
    NegativeCoefficient(i64),
    #[error("index ({m}, {k}) is outside the supported range for family {family}")]
    BadIndex { family: char, m: i64, k: i64 },
    #[error("matrix dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("a denominator vanishes at sample point {0}")]
    SingularSample(String),
    #[error("internal disagreement: {0}")]
    Disagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
