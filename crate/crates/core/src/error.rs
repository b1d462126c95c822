//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by parsing, evaluation, and the numerical operators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An idempotent component is exactly zero, so no multiplicative inverse exists.
    #[error("value is not invertible: an idempotent component is zero")]
    NonInvertible,

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("unknown function `{0}`")]
    UnknownFunction(String),

    #[error("evaluation domain error: {0}")]
    EvalDomain(String),

    /// A real-valued context rejected a result with a nonnegligible imaginary part.
    #[error("expression value is not real (|Im| = {imag:e})")]
    NonReal { imag: f64 },

    #[error("point outside the function domain: {0}")]
    OutOfDomain(String),

    /// The two component expressions differ where equal ones are required.
    #[error("idempotent component functions differ structurally")]
    ComponentMismatch,

    /// A non-analytic node (`abs`, `re`, `im`, `step`) where holomorphy is required.
    #[error("non-analytic operation `{0}` in a holomorphic context")]
    NonAnalytic(String),

    #[error(
        "function failed harmonicity certification (residuals {residual1:e}, {residual2:e}, tol {tol:e})"
    )]
    NotHarmonic {
        residual1: f64,
        residual2: f64,
        tol: f64,
    },

    /// Poisson kernel evaluated at its singular point.
    #[error("Poisson kernel is undefined at the origin")]
    DegenerateKernel,

    #[error("point not in the upper half-plane (y1 = {y1}, y2 = {y2})")]
    OutOfHalfPlane { y1: f64, y2: f64 },

    /// Closed form and quadrature disagree beyond the configured tolerance.
    #[error("representation mismatch: deviation {deviation:e} exceeds tol {tol:e}")]
    RepresentationMismatch { deviation: f64, tol: f64 },

    /// Sampled boundary data exceeded its declared bound.
    #[error("boundary data exceeds declared bound: |{value}| > {bound} near t = {at}")]
    BoundExceeded { value: f64, bound: f64, at: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
