//! Seikkala and generalized Seikkala (gS) derivatives of fuzzy-valued functions.
//!
//! A fuzzy-valued function `f̃(t)` is handled through its level functions
//! `f1(t, α)`, `f2(t, α)`. The Seikkala derivative takes the levels
//! `[f1', f2']` and exists only when those samples form a fuzzy number. The gS
//! derivative takes `[min(f1', f2'), max(f1', f2')]` instead, which keeps
//! functions such as `ã ⊙ exp(-t)` differentiable.
//!
//! Two-variable support is limited to the separable form `ã ⊙ z(x, t)`.

use alloc::boxed::Box;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fuzzy::{validate, AlphaGrid, FuzzyNumber, Interval, ValidityReport, MONOTONE_TOL};

/// `(t, α) ↦ value`.
pub type LevelEvaluator = dyn Fn(f64, f64) -> f64 + Send + Sync;
/// Crisp factor `t ↦ g(t)`.
pub type CrispFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
/// Crisp two-variable factor `(x, t) ↦ z(x, t)`.
pub type CrispFn2 = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

/// Relative step of the central-difference fallback for first derivatives.
pub const FD_STEP: f64 = 1e-6;
const FD_STEP_SECOND: f64 = 1e-4;

/// A fuzzy-valued function of one variable given by its level functions and,
/// optionally, their analytic `t`-derivatives.
pub struct LevelFunctionFamily {
    lower: Box<LevelEvaluator>,
    upper: Box<LevelEvaluator>,
    d_lower: Option<Box<LevelEvaluator>>,
    d_upper: Option<Box<LevelEvaluator>>,
    grid: AlphaGrid,
}

impl LevelFunctionFamily {
    pub fn new(
        lower: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        upper: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        grid: AlphaGrid,
    ) -> Self {
        Self {
            lower: Box::new(lower),
            upper: Box::new(upper),
            d_lower: None,
            d_upper: None,
            grid,
        }
    }

    /// Supplies analytic `∂f1/∂t` and `∂f2/∂t`.
    pub fn with_derivatives(
        mut self,
        d_lower: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        d_upper: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        self.d_lower = Some(Box::new(d_lower));
        self.d_upper = Some(Box::new(d_upper));
        self
    }

    pub fn grid(&self) -> &AlphaGrid {
        &self.grid
    }

    pub fn has_analytic_derivatives(&self) -> bool {
        self.d_lower.is_some() && self.d_upper.is_some()
    }

    /// `f̃(t)` as a fuzzy number; fails if the levels at `t` are not one.
    pub fn value_at(&self, t: f64) -> Result<FuzzyNumber> {
        let lower = self.sample(&*self.lower, "f1", t)?;
        let upper = self.sample(&*self.upper, "f2", t)?;
        FuzzyNumber::from_samples(self.grid.clone(), lower, upper)
    }

    /// `(∂f1/∂t, ∂f2/∂t)` sampled on the grid; analytic when available,
    /// otherwise central differences.
    pub fn derivative_samples(&self, t: f64) -> Result<(Vec<f64>, Vec<f64>)> {
        match (&self.d_lower, &self.d_upper) {
            (Some(dl), Some(du)) => {
                Ok((self.sample(&**dl, "df1", t)?, self.sample(&**du, "df2", t)?))
            }
            _ => self.finite_difference_samples(t),
        }
    }

    /// Central-difference derivatives with step `1e-6 · max(1, |t|)`.
    pub fn finite_difference_samples(&self, t: f64) -> Result<(Vec<f64>, Vec<f64>)> {
        let h = FD_STEP * t.abs().max(1.0);
        let diff = |f: &LevelEvaluator, which| -> Result<Vec<f64>> {
            let plus = self.sample(f, which, t + h)?;
            let minus = self.sample(f, which, t - h)?;
            Ok(plus
                .iter()
                .zip(&minus)
                .map(|(p, m)| (p - m) / (2.0 * h))
                .collect())
        };
        Ok((diff(&*self.lower, "f1")?, diff(&*self.upper, "f2")?))
    }

    fn sample(&self, f: &LevelEvaluator, which: &'static str, t: f64) -> Result<Vec<f64>> {
        self.grid
            .levels()
            .iter()
            .map(|&alpha| {
                let v = f(t, alpha);
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(Error::Evaluation { which, t, alpha })
                }
            })
            .collect()
    }
}

/// Outcome of a derivative classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// `[f1', f2']` is a fuzzy number (and so is the gS form).
    Seikkala,
    /// Only the `[min, max]` form is a fuzzy number.
    GsOnly,
    /// Neither form is a fuzzy number on the sampled grid.
    NotDifferentiable,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Seikkala => "Seikkala",
            Classification::GsOnly => "gS_only",
            Classification::NotDifferentiable => "none",
        }
    }
}

/// Which casewise rule produced the gS levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeCase {
    /// `f1' ≤ f2'` at every level: `[f1', f2']`.
    LowerFirst,
    /// `f1' ≥ f2'` at every level: `[f2', f1']`.
    UpperFirst,
    /// `f1' = f2'` everywhere; both cases apply.
    Coincident,
    /// The order changes with α; resolved level by level.
    Mixed,
}

/// The classical sufficient conditions for `[f1', f2']` to be a fuzzy number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SufficientConditions {
    /// (i) `f1'` increasing in α.
    pub lower_increasing: bool,
    /// (ii) `f2'` decreasing in α.
    pub upper_decreasing: bool,
    /// (iii) `f1'(t, 1) ≤ f2'(t, 1)`.
    pub core_ordered: bool,
}

impl SufficientConditions {
    pub fn all(&self) -> bool {
        self.lower_increasing && self.upper_decreasing && self.core_ordered
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Diagnostics {
    /// Scan of the Seikkala candidate `[f1', f2']`.
    pub seikkala: ValidityReport,
    /// Scan of the gS candidate `[min, max]`.
    pub gs: ValidityReport,
    pub sufficient: SufficientConditions,
    pub case: DerivativeCase,
}

/// Derivative levels at one point together with their classification.
#[derive(Debug, Clone, PartialEq)]
pub struct GsDerivativeResult {
    pub t: f64,
    pub classification: Classification,
    pub diagnostics: Diagnostics,
    grid: AlphaGrid,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl GsDerivativeResult {
    pub fn grid(&self) -> &AlphaGrid {
        &self.grid
    }

    /// Lower derivative level per grid α.
    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Derivative α-cut, or `None` when no derivative exists.
    pub fn levels_at(&self, alpha: f64) -> Option<Interval> {
        if self.classification == Classification::NotDifferentiable {
            return None;
        }
        let lo = self.grid.interpolate(&self.lower, alpha).ok()?;
        let hi = self.grid.interpolate(&self.upper, alpha).ok()?;
        Some(Interval::hull(lo, hi))
    }

    pub fn as_fuzzy_number(&self) -> Option<FuzzyNumber> {
        if self.classification == Classification::NotDifferentiable {
            return None;
        }
        FuzzyNumber::from_samples(self.grid.clone(), self.lower.clone(), self.upper.clone()).ok()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rule {
    Seikkala,
    MinMax,
    Casewise,
}

fn classify(
    grid: &AlphaGrid,
    t: f64,
    d1: Vec<f64>,
    d2: Vec<f64>,
    rule: Rule,
) -> Result<GsDerivativeResult> {
    let n = d1.len();
    let last = n - 1;
    let seikkala = validate(&d1, &d2, grid)?;
    let min: Vec<f64> = d1.iter().zip(&d2).map(|(a, b)| a.min(*b)).collect();
    let max: Vec<f64> = d1.iter().zip(&d2).map(|(a, b)| a.max(*b)).collect();
    let gs = validate(&min, &max, grid)?;

    let sufficient = SufficientConditions {
        lower_increasing: d1.windows(2).all(|w| w[1] >= w[0] - MONOTONE_TOL),
        upper_decreasing: d2.windows(2).all(|w| w[1] <= w[0] + MONOTONE_TOL),
        core_ordered: d1[last] <= d2[last],
    };
    let case = if d1.iter().zip(&d2).all(|(a, b)| a == b) {
        DerivativeCase::Coincident
    } else if d1.iter().zip(&d2).all(|(a, b)| a <= b) {
        DerivativeCase::LowerFirst
    } else if d1.iter().zip(&d2).all(|(a, b)| a >= b) {
        DerivativeCase::UpperFirst
    } else {
        DerivativeCase::Mixed
    };

    let classification = match (rule, seikkala.is_valid(), gs.is_valid()) {
        (Rule::Seikkala, true, _) => Classification::Seikkala,
        (Rule::Seikkala, false, _) => Classification::NotDifferentiable,
        (_, true, true) => Classification::Seikkala,
        (_, false, true) => Classification::GsOnly,
        (_, _, false) => Classification::NotDifferentiable,
    };

    let (lower, upper) = match rule {
        Rule::Seikkala => (d1, d2),
        Rule::MinMax => (min, max),
        Rule::Casewise => {
            // Stated pointwise: case (i) where f1' ≤ f2', case (ii) otherwise.
            let mut lower = Vec::with_capacity(n);
            let mut upper = Vec::with_capacity(n);
            for (a, b) in d1.into_iter().zip(d2) {
                if a <= b {
                    lower.push(a);
                    upper.push(b);
                } else {
                    lower.push(b);
                    upper.push(a);
                }
            }
            (lower, upper)
        }
    };

    Ok(GsDerivativeResult {
        t,
        classification,
        diagnostics: Diagnostics {
            seikkala,
            gs,
            sufficient,
            case,
        },
        grid: grid.clone(),
        lower,
        upper,
    })
}

/// Seikkala derivative: levels `[f1'(t, α), f2'(t, α)]`.
pub fn seikkala_derivative(f: &LevelFunctionFamily, t: f64) -> Result<GsDerivativeResult> {
    let (d1, d2) = f.derivative_samples(t)?;
    classify(f.grid(), t, d1, d2, Rule::Seikkala)
}

/// gS derivative: levels `[min(f1', f2'), max(f1', f2')]`.
pub fn gs_derivative(f: &LevelFunctionFamily, t: f64) -> Result<GsDerivativeResult> {
    let (d1, d2) = f.derivative_samples(t)?;
    classify(f.grid(), t, d1, d2, Rule::MinMax)
}

/// gS derivative through its case split: `[f1', f2']` where `f1' ≤ f2'`,
/// `[f2', f1']` where `f1' ≥ f2'`. Mixed orderings are resolved per level and
/// flagged as [`DerivativeCase::Mixed`].
pub fn gs_derivative_casewise(f: &LevelFunctionFamily, t: f64) -> Result<GsDerivativeResult> {
    let (d1, d2) = f.derivative_samples(t)?;
    classify(f.grid(), t, d1, d2, Rule::Casewise)
}

/// `ã ⊙ g(t)`: a fuzzy constant scaled by a crisp function.
#[derive(Clone)]
pub struct EnvelopeFunction {
    coeff: FuzzyNumber,
    factor: CrispFn,
    dfactor: Option<CrispFn>,
    domain: (f64, f64),
}

impl EnvelopeFunction {
    pub fn new(
        coeff: FuzzyNumber,
        factor: impl Fn(f64) -> f64 + Send + Sync + 'static,
        domain: (f64, f64),
    ) -> Self {
        Self {
            coeff,
            factor: Arc::new(factor),
            dfactor: None,
            domain,
        }
    }

    /// Supplies `g'(t)`; without it the level family falls back to finite differences.
    pub fn with_derivative(mut self, dfactor: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.dfactor = Some(Arc::new(dfactor));
        self
    }

    pub fn coeff(&self) -> &FuzzyNumber {
        &self.coeff
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn factor(&self, t: f64) -> f64 {
        (self.factor)(t)
    }

    pub fn value_at(&self, t: f64) -> FuzzyNumber {
        self.coeff.scale((self.factor)(t))
    }

    /// Level functions `[a1 g, a2 g]` where `g ≥ 0` and `[a2 g, a1 g]` where `g < 0`.
    pub fn level_family(&self) -> LevelFunctionFamily {
        let grid = self.coeff.grid().clone();
        let pick = |coeff: FuzzyNumber, g: CrispFn, first: bool| {
            move |t: f64, alpha: f64| {
                let gt = g(t);
                match coeff.alpha_cut(alpha) {
                    Ok(cut) => {
                        let (a1, a2) = (cut.lo(), cut.hi());
                        let a = if (gt >= 0.0) == first { a1 } else { a2 };
                        a * gt
                    }
                    Err(_) => f64::NAN,
                }
            }
        };
        let family = LevelFunctionFamily::new(
            pick(self.coeff.clone(), self.factor.clone(), true),
            pick(self.coeff.clone(), self.factor.clone(), false),
            grid,
        );
        let Some(dg) = self.dfactor.clone() else {
            return family;
        };
        let deriv = |coeff: FuzzyNumber, g: CrispFn, dg: CrispFn, first: bool| {
            move |t: f64, alpha: f64| match coeff.alpha_cut(alpha) {
                Ok(cut) => {
                    let a = if (g(t) >= 0.0) == first {
                        cut.lo()
                    } else {
                        cut.hi()
                    };
                    a * dg(t)
                }
                Err(_) => f64::NAN,
            }
        };
        family.with_derivatives(
            deriv(self.coeff.clone(), self.factor.clone(), dg.clone(), true),
            deriv(self.coeff.clone(), self.factor.clone(), dg, false),
        )
    }
}

/// Coordinate for a first-order partial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variable {
    X,
    T,
}

/// Second-order pure partial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecondOrder {
    XX,
    TT,
}

/// Separable two-variable fuzzy function `ã ⊙ z(x, t)`.
#[derive(Clone)]
pub struct Envelope2 {
    coeff: FuzzyNumber,
    kernel: CrispFn2,
    dx: Option<CrispFn2>,
    dt: Option<CrispFn2>,
    dxx: Option<CrispFn2>,
    dtt: Option<CrispFn2>,
}

impl Envelope2 {
    pub fn new(
        coeff: FuzzyNumber,
        kernel: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            coeff,
            kernel: Arc::new(kernel),
            dx: None,
            dt: None,
            dxx: None,
            dtt: None,
        }
    }

    pub fn with_partial(
        mut self,
        which: Variable,
        f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        let f: CrispFn2 = Arc::new(f);
        match which {
            Variable::X => self.dx = Some(f),
            Variable::T => self.dt = Some(f),
        }
        self
    }

    pub fn with_second_partial(
        mut self,
        which: SecondOrder,
        f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        let f: CrispFn2 = Arc::new(f);
        match which {
            SecondOrder::XX => self.dxx = Some(f),
            SecondOrder::TT => self.dtt = Some(f),
        }
        self
    }

    pub fn coeff(&self) -> &FuzzyNumber {
        &self.coeff
    }

    pub fn kernel(&self, x: f64, t: f64) -> f64 {
        (self.kernel)(x, t)
    }

    pub fn value_at(&self, x: f64, t: f64) -> FuzzyNumber {
        self.coeff.scale((self.kernel)(x, t))
    }

    fn first_partial(&self, which: Variable, x: f64, t: f64) -> f64 {
        let analytic = match which {
            Variable::X => &self.dx,
            Variable::T => &self.dt,
        };
        if let Some(f) = analytic {
            return f(x, t);
        }
        let z = &self.kernel;
        match which {
            Variable::X => {
                let h = FD_STEP * x.abs().max(1.0);
                (z(x + h, t) - z(x - h, t)) / (2.0 * h)
            }
            Variable::T => {
                let h = FD_STEP * t.abs().max(1.0);
                (z(x, t + h) - z(x, t - h)) / (2.0 * h)
            }
        }
    }

    fn second_partial(&self, which: SecondOrder, x: f64, t: f64) -> f64 {
        let analytic = match which {
            SecondOrder::XX => &self.dxx,
            SecondOrder::TT => &self.dtt,
        };
        if let Some(f) = analytic {
            return f(x, t);
        }
        let z = &self.kernel;
        let mid = z(x, t);
        match which {
            SecondOrder::XX => {
                let h = FD_STEP_SECOND * x.abs().max(1.0);
                (z(x + h, t) - 2.0 * mid + z(x - h, t)) / (h * h)
            }
            SecondOrder::TT => {
                let h = FD_STEP_SECOND * t.abs().max(1.0);
                (z(x, t + h) - 2.0 * mid + z(x, t - h)) / (h * h)
            }
        }
    }

    // Level functions of ã ⊙ z are (a1 z, a2 z) where z ≥ 0 and swapped
    // elsewhere; their partials inherit the same pairing.
    fn levels_of(
        &self,
        x: f64,
        t: f64,
        derivative: f64,
        which: &'static str,
    ) -> Result<GsDerivativeResult> {
        if !derivative.is_finite() {
            return Err(Error::Evaluation {
                which,
                t,
                alpha: f64::NAN,
            });
        }
        let positive = (self.kernel)(x, t) >= 0.0;
        let (a1, a2) = if positive {
            (self.coeff.lower(), self.coeff.upper())
        } else {
            (self.coeff.upper(), self.coeff.lower())
        };
        let d1 = a1.iter().map(|a| a * derivative).collect();
        let d2 = a2.iter().map(|a| a * derivative).collect();
        classify(self.coeff.grid(), t, d1, d2, Rule::MinMax)
    }
}

/// gS partial derivative of `ã ⊙ z` at `(x, t)`.
pub fn gs_partial(f: &Envelope2, which: Variable, point: (f64, f64)) -> Result<GsDerivativeResult> {
    let (x, t) = point;
    let d = f.first_partial(which, x, t);
    f.levels_of(x, t, d, "dz")
}

/// Second-order gS partial derivative of `ã ⊙ z` at `(x, t)`.
pub fn gs_second_partial(
    f: &Envelope2,
    which: SecondOrder,
    point: (f64, f64),
) -> Result<GsDerivativeResult> {
    let (x, t) = point;
    let d = f.second_partial(which, x, t);
    f.levels_of(x, t, d, "d2z")
}
