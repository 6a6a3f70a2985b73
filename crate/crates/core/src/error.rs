use core::fmt;

use crate::fuzzy::Violation;

/// Errors raised by constructors and evaluators in this crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An α-grid that is not strictly increasing from 0 to 1.
    InvalidGrid(&'static str),
    /// Triangular parameters out of order; names the offending pair.
    Ordering {
        left: &'static str,
        right: &'static str,
        left_value: f64,
        right_value: f64,
    },
    /// α outside `[0, 1]`.
    AlphaOutOfRange(f64),
    /// Sample arrays do not match the grid length.
    LengthMismatch {
        grid: usize,
        lower: usize,
        upper: usize,
    },
    /// A NaN or infinite sample.
    NonFinite { alpha: f64 },
    /// Level functions do not describe a fuzzy number.
    NotFuzzyNumber(Violation),
    /// An evaluator produced a non-finite value.
    Evaluation {
        which: &'static str,
        t: f64,
        alpha: f64,
    },
    /// Out-of-range problem parameter (wave speed, length, ...).
    InvalidParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidGrid(why) => write!(f, "invalid alpha grid: {why}"),
            Error::Ordering {
                left,
                right,
                left_value,
                right_value,
            } => write!(
                f,
                "expected {left} <= {right}, got {left} = {left_value}, {right} = {right_value}"
            ),
            Error::AlphaOutOfRange(a) => write!(f, "alpha {a} is outside [0, 1]"),
            Error::LengthMismatch { grid, lower, upper } => write!(
                f,
                "sample length mismatch: grid has {grid} levels, lower {lower}, upper {upper}"
            ),
            Error::NonFinite { alpha } => write!(f, "non-finite level value at alpha = {alpha}"),
            Error::NotFuzzyNumber(v) => write!(f, "not a fuzzy number: {v}"),
            Error::Evaluation { which, t, alpha } => {
                write!(f, "evaluator {which} failed at t = {t}, alpha = {alpha}")
            }
            Error::InvalidParameter(why) => write!(f, "invalid parameter: {why}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
