use thiserror::Error;

/// Errors raised by the tropical, polytope and network layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("the constant -inf polynomial is not allowed here")]
    EmptyPolynomial,
    #[error("negative exponent {exponent} on x{var} is not allowed in a polynomial")]
    NegativeExponent { var: usize, exponent: i64 },
    #[error("ambient dimension {dim} exceeds the supported maximum of {max}")]
    DimensionCap { dim: usize, max: usize },
    #[error("empty point set")]
    EmptyInput,
    #[error("candidate count {count} exceeds the cap of {cap}")]
    CandidateCap { count: usize, cap: usize },
    #[error("invalid network: {0}")]
    InvalidNetwork(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid rational literal {0:?}")]
    RationalLiteral(String),
    #[error("json error: {0}")]
    Json(String),
    #[error("explicit geometry requires d = 2, got d = {0}")]
    NotPlanar(usize),
    #[error("overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
