use thiserror::Error;

use crate::arith::Rational;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("invalid rational literal {0:?} (expected an integer or p/q)")]
    InvalidRational(String),

    /// A Binet-style sum left a nonzero coefficient on ω.
    #[error("non-real Binet residue: omega part is {0}")]
    NonRealResidue(Rational),

    #[error("empty range: from {from} > to {to}")]
    EmptyRange { from: u64, to: u64 },

    /// An input lies outside the domain of the operation. The message names
    /// the violated constraint.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("not a unit in the power-series ring: denominator has zero constant term")]
    NotAUnit,

    #[error("pole of closed form at x = {0}")]
    Pole(Rational),

    #[error("degenerate closed form (sigma=0 for m divisible by 3): m = {0}; use the oracle sum")]
    DegenerateStride(u64),

    #[error("I/O error: {0}")]
    Io(String),

    #[error("unknown identity {name:?}; valid names: {valid}")]
    UnknownIdentity { name: String, valid: String },
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
