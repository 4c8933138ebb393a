use thiserror::Error;

use crate::exact::Int;

/// Errors surfaced by the library. Arithmetic never wraps silently: any
/// operation that would leave the exact 128-bit range reports `Overflow`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("zero divisor")]
    ZeroDivisor,

    #[error("0 has infinitely many divisors")]
    DivisorsOfZero,

    #[error("integer square root of negative number {0}")]
    NegativeSquareRoot(Int),

    #[error("perfect-power test requires base >= 1 and exponent >= 1 (got base {base}, exponent {exp})")]
    NonPositivePowerArgs { base: Int, exp: Int },

    #[error("leading coefficient must be nonzero")]
    ZeroLeadingCoefficient,

    #[error("degree {got} outside supported range {min}..={max}")]
    DegreeOutOfRange { got: usize, min: usize, max: usize },

    #[error("expected {expected} roots, got {got}")]
    RootCountMismatch { expected: usize, got: usize },

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("invalid family parameters: {0}")]
    InvalidFamilySpec(String),

    #[error("family parameters rejected: {0}")]
    FamilyRejected(String),

    /// A fast-path result contradicts the brute-force oracle, or a generator
    /// failed its own round-trip. Always a bug, never a data condition.
    #[error("internal invariant breach: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that indicate an implementation bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
