use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a finite rational, got infinity")]
    Infinite,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial division by zero")]
    DivisionByZero,
    #[error("divisor leading coefficient must be a unit, got {0}")]
    NonUnitLeading(String),
    #[error("evaluation does not yield an integer: {0}")]
    NonIntegral(String),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(String, String),
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
