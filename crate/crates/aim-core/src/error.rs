//! Error type shared across the crate.

use crate::algebra::Scalar;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while parsing, iterating or solving.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parameter value {0} is a pole of a coefficient")]
    PoleAtParameterValue(Scalar),

    #[error("iterate degree exceeded cap {cap} at step {step}")]
    IterateBlowup { step: usize, cap: usize },

    #[error("expected exactly one spectral parameter in the coefficients")]
    MultipleParameters,

    #[error("side condition violated: lambda_{0} vanishes identically")]
    SideConditionViolated(i64),

    #[error("no polynomial solution of degree <= {0}")]
    NoPolynomialSolution(usize),

    #[error("solution methods disagree: {0}")]
    InconsistentMethods(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("inadmissible parameters for `{family}`: {reason}")]
    InadmissibleParams { family: String, reason: String },

    #[error("syntax error at byte {offset}: expected {expected}")]
    SyntaxError { offset: usize, expected: String },

    #[error("zero denominator in expression")]
    ZeroDenominator,
}
