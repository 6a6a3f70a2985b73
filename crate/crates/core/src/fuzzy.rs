//! Fuzzy numbers represented by their level functions.
//!
//! A fuzzy number `ã` is stored as its lower and upper level functions
//! `a1(α)`, `a2(α)` sampled on an [`AlphaGrid`]. A pair of samples is a fuzzy
//! number when `a1` is non-decreasing, `a2` is non-increasing and
//! `a1 ≤ a2` at every level. Left/right continuity cannot be observed from
//! samples and is recorded as assumed.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Decreases in a level function smaller than this are treated as ties.
pub const MONOTONE_TOL: f64 = 1e-12;

/// Sorted α levels, starting at 0 and ending at 1.
#[derive(Debug, Clone)]
pub struct AlphaGrid {
    levels: Arc<[f64]>,
}

impl AlphaGrid {
    pub const DEFAULT_LEVELS: usize = 101;

    /// `n` equally spaced levels `i / (n - 1)`.
    pub fn uniform(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGrid("need at least 2 levels"));
        }
        let last = (n - 1) as f64;
        let levels: Vec<f64> = (0..n).map(|i| i as f64 / last).collect();
        Ok(Self {
            levels: levels.into(),
        })
    }

    pub fn new(levels: Vec<f64>) -> Result<Self> {
        if levels.len() < 2 {
            return Err(Error::InvalidGrid("need at least 2 levels"));
        }
        if levels[0] != 0.0 || levels[levels.len() - 1] != 1.0 {
            return Err(Error::InvalidGrid("levels must start at 0 and end at 1"));
        }
        if levels.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidGrid("levels must be strictly increasing"));
        }
        Ok(Self {
            levels: levels.into(),
        })
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Position of `alpha` on the grid: either an exact level or a bracket
    /// `(i, i + 1)` with the interpolation weight of level `i + 1`.
    pub(crate) fn locate(&self, alpha: f64) -> Result<Position> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        let i = self.levels.partition_point(|&l| l < alpha);
        if self.levels[i] == alpha {
            return Ok(Position::Exact(i));
        }
        let (lo, hi) = (self.levels[i - 1], self.levels[i]);
        Ok(Position::Between(i - 1, (alpha - lo) / (hi - lo)))
    }

    /// Interpolated value of `samples` (one per level) at `alpha`.
    pub(crate) fn interpolate(&self, samples: &[f64], alpha: f64) -> Result<f64> {
        Ok(match self.locate(alpha)? {
            Position::Exact(i) => samples[i],
            Position::Between(i, w) => samples[i] + w * (samples[i + 1] - samples[i]),
        })
    }
}

impl Default for AlphaGrid {
    fn default() -> Self {
        Self::uniform(Self::DEFAULT_LEVELS).expect("default grid is valid")
    }
}

impl PartialEq for AlphaGrid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.levels, &other.levels) || self.levels[..] == other.levels[..]
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Position {
    Exact(usize),
    Between(usize, f64),
}

/// Closed interval `[lo, hi]` with `lo ≤ hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo <= hi {
            Ok(Self { lo, hi })
        } else {
            Err(Error::Ordering {
                left: "lo",
                right: "hi",
                left_value: lo,
                right_value: hi,
            })
        }
    }

    /// Interval spanned by two values in either order.
    pub fn hull(a: f64, b: f64) -> Self {
        if a <= b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }

    pub fn point(v: f64) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

/// Which characterising condition a sample pair violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// (i) lower level function is non-decreasing.
    LowerNonDecreasing,
    /// (ii) upper level function is non-increasing.
    UpperNonIncreasing,
    /// (iv) lower ≤ upper at every level.
    Ordered,
}

impl Condition {
    pub fn label(&self) -> &'static str {
        match self {
            Condition::LowerNonDecreasing => "(i) lower non-decreasing",
            Condition::UpperNonIncreasing => "(ii) upper non-increasing",
            Condition::Ordered => "(iv) lower <= upper",
        }
    }
}

/// First offending pair for a condition.
///
/// For the monotonicity conditions `alphas` are the two levels whose values
/// are out of order and `values` the corresponding samples. For
/// [`Condition::Ordered`] both alphas coincide and `values` is `(lower, upper)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub condition: Condition,
    pub alphas: (f64, f64),
    pub values: (f64, f64),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails between alpha {} and {} (values {}, {})",
            self.condition.label(),
            self.alphas.0,
            self.alphas.1,
            self.values.0,
            self.values.1
        )
    }
}

/// Result of scanning one condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Outcome {
    Pass,
    Fail(Violation),
    /// Not decidable from samples.
    Assumed,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        !matches!(self, Outcome::Fail(_))
    }

    fn from_violation(v: Option<Violation>) -> Self {
        v.map_or(Outcome::Pass, Outcome::Fail)
    }
}

/// Per-condition outcome of a sampled scan of the level-function characterisation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidityReport {
    pub lower_non_decreasing: Outcome,
    pub upper_non_increasing: Outcome,
    pub continuity: Outcome,
    pub ordered: Outcome,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.lower_non_decreasing.passed()
            && self.upper_non_increasing.passed()
            && self.ordered.passed()
    }

    /// First failing condition in the order (i), (ii), (iv).
    pub fn first_violation(&self) -> Option<Violation> {
        [
            self.lower_non_decreasing,
            self.upper_non_increasing,
            self.ordered,
        ]
        .into_iter()
        .find_map(|o| match o {
            Outcome::Fail(v) => Some(v),
            _ => None,
        })
    }
}

/// Scans sampled level functions for conditions (i), (ii) and (iv).
///
/// Fails structurally when the arrays do not match the grid or contain
/// non-finite values.
pub fn validate(lower: &[f64], upper: &[f64], grid: &AlphaGrid) -> Result<ValidityReport> {
    let n = grid.len();
    if lower.len() != n || upper.len() != n {
        return Err(Error::LengthMismatch {
            grid: n,
            lower: lower.len(),
            upper: upper.len(),
        });
    }
    let alphas = grid.levels();
    if let Some(i) = (0..n).find(|&i| !lower[i].is_finite() || !upper[i].is_finite()) {
        return Err(Error::NonFinite { alpha: alphas[i] });
    }
    Ok(ValidityReport {
        lower_non_decreasing: Outcome::from_violation(monotone_violation(
            lower,
            alphas,
            Condition::LowerNonDecreasing,
        )),
        upper_non_increasing: Outcome::from_violation(monotone_violation(
            upper,
            alphas,
            Condition::UpperNonIncreasing,
        )),
        continuity: Outcome::Assumed,
        ordered: Outcome::from_violation((0..n).find(|&i| lower[i] > upper[i]).map(|i| {
            Violation {
                condition: Condition::Ordered,
                alphas: (alphas[i], alphas[i]),
                values: (lower[i], upper[i]),
            }
        })),
    })
}

// Compares every sample against the running extreme so that a slow drift of
// sub-tolerance steps is still caught.
fn monotone_violation(samples: &[f64], alphas: &[f64], condition: Condition) -> Option<Violation> {
    let increasing = condition == Condition::LowerNonDecreasing;
    let mut best = 0;
    for j in 1..samples.len() {
        let (prev, cur) = (samples[best], samples[j]);
        let bad = if increasing {
            cur < prev - MONOTONE_TOL
        } else {
            cur > prev + MONOTONE_TOL
        };
        if bad {
            return Some(Violation {
                condition,
                alphas: (alphas[best], alphas[j]),
                values: (prev, cur),
            });
        }
        if (increasing && cur > prev) || (!increasing && cur < prev) {
            best = j;
        }
    }
    None
}

/// Closed-form descriptor kept alongside the samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Shape {
    /// Support `[a, c]`, core `{b}`.
    Triangular { a: f64, b: f64, c: f64 },
}

/// A fuzzy number given by sampled level functions.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyNumber {
    grid: AlphaGrid,
    lower: Vec<f64>,
    upper: Vec<f64>,
    shape: Option<Shape>,
}

impl FuzzyNumber {
    /// Builds from samples, rejecting pairs that are not a fuzzy number.
    pub fn from_samples(grid: AlphaGrid, lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        let report = validate(&lower, &upper, &grid)?;
        if let Some(v) = report.first_violation() {
            return Err(Error::NotFuzzyNumber(v));
        }
        Ok(Self {
            grid,
            lower,
            upper,
            shape: None,
        })
    }

    /// Samples two level functions on `grid` and validates the result.
    pub fn from_level_functions(
        lower: impl Fn(f64) -> f64,
        upper: impl Fn(f64) -> f64,
        grid: &AlphaGrid,
    ) -> Result<Self> {
        let lo = grid.levels().iter().map(|&a| lower(a)).collect();
        let hi = grid.levels().iter().map(|&a| upper(a)).collect();
        Self::from_samples(grid.clone(), lo, hi)
    }

    /// Triangular number with support `[a, c]` and core `b`.
    pub fn triangular(a: f64, b: f64, c: f64, grid: &AlphaGrid) -> Result<Self> {
        for (left, right, lv, rv) in [("a", "b", a, b), ("b", "c", b, c)] {
            if !(lv <= rv) {
                return Err(Error::Ordering {
                    left,
                    right,
                    left_value: lv,
                    right_value: rv,
                });
            }
        }
        // Measured from the core so both sides meet exactly at `b`.
        let mut number = Self::from_level_functions(
            |alpha| {
                if alpha == 0.0 {
                    a
                } else {
                    b - (1.0 - alpha) * (b - a)
                }
            },
            |alpha| {
                if alpha == 0.0 {
                    c
                } else {
                    b + (1.0 - alpha) * (c - b)
                }
            },
            grid,
        )?;
        number.shape = Some(Shape::Triangular { a, b, c });
        Ok(number)
    }

    /// The crisp number `v` (all levels equal to `[v, v]`).
    pub fn crisp(v: f64, grid: &AlphaGrid) -> Result<Self> {
        Self::triangular(v, v, v, grid)
    }

    pub fn grid(&self) -> &AlphaGrid {
        &self.grid
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn shape(&self) -> Option<Shape> {
        self.shape
    }

    /// α-cut `[a1(α), a2(α)]`, linearly interpolated between grid levels.
    pub fn alpha_cut(&self, alpha: f64) -> Result<Interval> {
        let lo = self.grid.interpolate(&self.lower, alpha)?;
        let hi = self.grid.interpolate(&self.upper, alpha)?;
        // Interpolation rounding can cross by an ulp when the ends touch.
        Ok(Interval { lo, hi: hi.max(lo) })
    }

    pub fn support(&self) -> Interval {
        Interval {
            lo: self.lower[0],
            hi: self.upper[0],
        }
    }

    pub fn core(&self) -> Interval {
        let last = self.lower.len() - 1;
        Interval {
            lo: self.lower[last],
            hi: self.upper[last],
        }
    }

    /// True when every level is a single point.
    pub fn is_crisp(&self) -> bool {
        self.lower.iter().zip(&self.upper).all(|(l, u)| l == u)
    }

    /// True when neither level function changes with α, so its α-derivatives vanish.
    pub fn is_alpha_constant(&self) -> bool {
        let last = self.lower.len() - 1;
        self.lower[0] == self.lower[last] && self.upper[0] == self.upper[last]
    }

    /// Scalar multiple `λ ⊙ ã`; a negative factor swaps the level functions.
    ///
    /// `lambda` must be finite.
    pub fn scale(&self, lambda: f64) -> Self {
        let (lower, upper) = if lambda >= 0.0 {
            (
                self.lower.iter().map(|v| lambda * v).collect(),
                self.upper.iter().map(|v| lambda * v).collect(),
            )
        } else {
            (
                self.upper.iter().map(|v| lambda * v).collect(),
                self.lower.iter().map(|v| lambda * v).collect(),
            )
        };
        let shape = self.shape.map(|Shape::Triangular { a, b, c }| {
            if lambda >= 0.0 {
                Shape::Triangular {
                    a: lambda * a,
                    b: lambda * b,
                    c: lambda * c,
                }
            } else {
                Shape::Triangular {
                    a: lambda * c,
                    b: lambda * b,
                    c: lambda * a,
                }
            }
        });
        Self {
            grid: self.grid.clone(),
            lower,
            upper,
            shape,
        }
    }

    pub fn validity(&self) -> ValidityReport {
        validate(&self.lower, &self.upper, &self.grid).expect("stored samples are well formed")
    }
}

/// `λ ⊙ ã`.
pub fn scalar_mul(lambda: f64, number: &FuzzyNumber) -> FuzzyNumber {
    number.scale(lambda)
}
