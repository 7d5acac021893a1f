use thiserror::Error;

/// Errors raised by the series, form, and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has no nonzero coefficient below its precision; cannot invert")]
    ZeroLeadingCoefficient,

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("eta quotient exponent sum {0} is not divisible by 24")]
    FractionalExponent(i64),

    #[error("unknown form name `{0}`")]
    UnknownName(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ill-formed substitution: {0}")]
    SubstitutionError(String),

    #[error("inexact division at n = {n}: {numerator} / {denominator}")]
    NonIntegralResult {
        n: u64,
        numerator: String,
        denominator: String,
    },

    #[error("unknown congruence rule `{0}`")]
    UnknownRule(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("descriptor mismatch: {0}")]
    DescriptorMismatch(String),

    #[error("malformed series record: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
