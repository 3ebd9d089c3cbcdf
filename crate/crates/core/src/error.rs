//! Error type shared by every module of the kernel.

use crate::scalars::ParamMode;

/// Errors raised by the algebra kernel and its front ends.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A rational function was constructed with a zero denominator.
    #[error("zero denominator")]
    ZeroDenominator,

    /// Exact division by the zero scalar.
    #[error("division by zero")]
    DivisionByZero,

    /// Two values from different parameter modes were combined.
    #[error("parameter mode mismatch: {0} vs {1}")]
    ModeMismatch(ParamMode, ParamMode),

    /// A locked mode was requested with n = 0.
    #[error("locked mode requires n >= 1")]
    InvalidLockedParameter,

    /// An operation required a homogeneous form degree it did not get.
    #[error("expected a homogeneous element of degree {expected}, found degrees {found:?}")]
    DegreeMismatch { expected: u8, found: Vec<u8> },

    /// Negative powers of x or y outside torus mode.
    #[error("negative powers of x and y are only allowed in torus mode")]
    NegativeExponent,

    /// `rewrite_pair` was called on a pair already in canonical order.
    #[error("generator pair is already in canonical order")]
    PairInOrder,

    /// An operation that needs a specific parameter mode was called elsewhere.
    #[error("{op} is not available in {mode} mode")]
    UnsupportedMode { op: &'static str, mode: ParamMode },

    /// Expression syntax error, with 1-based position information.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
