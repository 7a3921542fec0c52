//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong across the geometry, spline, curvature and
/// oracle modules, plus dataset I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left}-dimensional vs {right}-dimensional")]
    DimensionMismatch { left: usize, right: usize },

    #[error("coordinate {coord} of point {index} is not finite")]
    NonFinite { index: usize, coord: usize },

    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },

    #[error("parameter {t} lies outside the curve domain [0, {max}]")]
    OutOfDomain { t: f64, max: f64 },

    #[error("beta index {index} exceeds the supported maximum {max}")]
    IndexTooLarge { index: i64, max: i64 },

    #[error("polynomial degree {degree} exceeds the root finder's limit of {max}")]
    DegreeTooHigh { degree: usize, max: usize },

    #[error("invalid interval: lo = {lo} is not below hi = {hi}")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("control polygon does not solve the defining system of this point set and kind")]
    KindMismatch,

    #[error("velocity vanishes at t = {t}; curvature is undefined there")]
    ZeroVelocity { t: f64 },

    #[error("curvature vanishes at t = {t}; the Frenet frame is undefined there")]
    ZeroCurvature { t: f64 },

    #[error("the Frenet frame requires a space curve (got a plane curve)")]
    NotSpaceCurve,

    #[error("too few samples: {got} (minimum {min})")]
    TooFewSamples { got: usize, min: usize },

    #[error("unsupported generator curve '{0}'")]
    UnknownGenerator(String),

    #[error("malformed dataset: {0}")]
    DatasetFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
