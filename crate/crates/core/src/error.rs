//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by the operator-theory pipeline.
///
/// Variants split into three classes, reflected in [`Error::exit_code`]:
/// parse failures (exit 2), violated preconditions on otherwise valid
/// requests (exit 3), and internal inconsistencies (exit 4).  The last class
/// signals that an exact identity which is a theorem failed to hold, so it is
/// never expected on any input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial division by zero")]
    DivisionByZeroPolynomial,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("sharp of a sum requires the sum to be nonzero")]
    ZeroSum,
    #[error("denominator polynomial is zero")]
    ZeroDenominator,
    #[error("numerator polynomial is zero")]
    ZeroNumerator,
    #[error("symbol must have all poles on the unit circle")]
    NotRatT,
    #[error("symbol must be proper (deg s <= deg q)")]
    NotProper,
    #[error("coefficients must be real rationals")]
    NonRealCoefficients,
    #[error("denominator must have only real roots")]
    NonRealPoles,
    #[error("argument has poles in the closed unit disk")]
    PolesInClosedDisk,
    #[error("polynomial degree {got} exceeds the allowed bound {bound}")]
    DegreeTooLarge { got: usize, bound: usize },
    #[error("evaluation point must lie in the open unit disk")]
    LambdaNotInDisk,
    #[error("polynomials must be coprime")]
    NotCoprime,
    #[error("denominator must not vanish at the origin")]
    DenominatorVanishesAtZero,
    #[error("root detected on the unit circle where coprimality forbids one")]
    CircleRootDetected,
    #[error("explicit factors are not available exactly for this polynomial")]
    FactorsNotExact,
    #[error("parse error at position {position}: expected {expected}")]
    Parse { position: usize, expected: String },
    #[error("exact identity failed: {0}")]
    IdentityFailure(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::IdentityFailure(_) | Error::InternalInconsistency(_) => 4,
            _ => 3,
        }
    }
}
