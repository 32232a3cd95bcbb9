use thiserror::Error;

use crate::dsl::ParseError;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    /// Evaluation left the real domain of the expression.
    #[error("domain error at s = {s}: {message}")]
    Domain { s: f64, message: String },

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("quadrature on [{a}, {b}] did not converge within {budget} evaluations")]
    Quadrature { a: f64, b: f64, budget: usize },

    /// The radicand 1 - a'(s)^2 is genuinely negative, so the height
    /// function of the embedding would be complex valued.
    #[error("profile is not embeddable: |a'({s})| = {abs_slope} > 1")]
    NotEmbeddable { s: f64, abs_slope: f64 },

    /// Two criteria that must agree did not. Always a numerical bug.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("malformed sample file, line {line}: {message}")]
    SampleFormat { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
