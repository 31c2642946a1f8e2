use thiserror::Error;

/// Errors produced by the polynomial, q-series and identity layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor does not divide the dividend exactly")]
    InexactDivision,
    #[error("cannot evaluate a polynomial with negative exponents at q = 0")]
    EvalAtZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("exponent arithmetic overflowed")]
    Overflow,
    #[error("monomial coefficient must be 0 or +/-1, got {0}")]
    NonUnitCoefficient(String),
    #[error("monomial argument is zero but k > 0")]
    ZeroArgument,
    #[error("series constant term must be 1")]
    NonUnitConstantTerm,
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("precondition violated: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
