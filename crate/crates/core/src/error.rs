use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parse::ParseError;

/// How an error should be surfaced to callers that map failures onto exit
/// statuses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorClass {
    /// The input could not be understood.
    Malformed,
    /// The input is well formed but violates a mathematical hypothesis.
    Hypothesis,
    /// A computed invariant that must hold did not.
    Internal,
}

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("{q} is not a power of the characteristic {p}")]
    NotPowerOfP { q: u64, p: u32 },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("polynomial {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("operation undefined for the unit ideal")]
    UnitIdeal,
    #[error("quotient is not artinian (Krull dimension {0})")]
    NotArtinian(usize),
    #[error("{0}")]
    Hypothesis(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl AlgebraError {
    pub fn class(&self) -> ErrorClass {
        match self {
            AlgebraError::InvalidRing(_)
            | AlgebraError::Parse(_)
            | AlgebraError::RingMismatch
            | AlgebraError::NotPowerOfP { .. }
            | AlgebraError::ExponentOverflow
            | AlgebraError::OutOfRange(_) => ErrorClass::Malformed,
            AlgebraError::NotHomogeneous(_)
            | AlgebraError::ZeroPolynomial
            | AlgebraError::ZeroIdeal
            | AlgebraError::UnitIdeal
            | AlgebraError::NotArtinian(_)
            | AlgebraError::Hypothesis(_) => ErrorClass::Hypothesis,
            AlgebraError::Internal(_) => ErrorClass::Internal,
        }
    }
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
