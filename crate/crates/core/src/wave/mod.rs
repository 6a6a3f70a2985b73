//! Fourier-series solution of the homogeneous fuzzy wave equation
//! `ũ_tt = c² ⊙ ũ_xx` with zero boundary values, constant fuzzy initial
//! displacement `Ũ0` and zero initial velocity.
//!
//! Each level problem has the crisp solution `u_i(x, t, α) = U0i(α) z(x, t)`
//! with the truncated kernel
//!
//! ```text
//! z(x, t) = 4/π Σ_{n=0}^{m} sin((2n+1)x) cos((2n+1)t) / (2n+1)
//! ```
//!
//! The pair `[u1, u2]` is a fuzzy number exactly where `z ≥ 0`; see
//! [`domain`] for the search of that region.

pub mod domain;
pub mod levelwise;

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::fuzzy::{AlphaGrid, FuzzyNumber, Interval};
use crate::sum::CompensatedSum;

pub const FOUR_OVER_PI: f64 = 4.0 / PI;

#[inline]
fn mode(n: usize) -> f64 {
    (2 * n + 1) as f64
}

/// Truncated series kernel with terms `n = 0..=m`, summed in increasing `n`.
pub fn z_series(x: f64, t: f64, m: usize) -> f64 {
    let sum: CompensatedSum = (0..=m)
        .map(|n| {
            let k = mode(n);
            libm::sin(k * x) * libm::cos(k * t) / k
        })
        .collect();
    FOUR_OVER_PI * sum.value()
}

/// `∂z/∂t`, term by term.
pub fn z_series_dt(x: f64, t: f64, m: usize) -> f64 {
    let sum: CompensatedSum = (0..=m)
        .map(|n| {
            let k = mode(n);
            -libm::sin(k * x) * libm::sin(k * t)
        })
        .collect();
    FOUR_OVER_PI * sum.value()
}

/// Kernel values on a tensor grid with the trigonometric factors tabulated
/// once per axis. [`KernelTable::value`] is bit-identical to [`z_series`].
#[derive(Debug, Clone)]
pub struct KernelTable {
    terms: usize,
    xs: Vec<f64>,
    ts: Vec<f64>,
    sin_x: Vec<f64>,
    cos_t: Vec<f64>,
}

impl KernelTable {
    pub fn new(xs: &[f64], ts: &[f64], m: usize) -> Self {
        let terms = m + 1;
        let sin_x = xs
            .iter()
            .flat_map(|&x| (0..terms).map(move |n| libm::sin(mode(n) * x)))
            .collect();
        let cos_t = ts
            .iter()
            .flat_map(|&t| (0..terms).map(move |n| libm::cos(mode(n) * t)))
            .collect();
        Self {
            terms,
            xs: xs.to_vec(),
            ts: ts.to_vec(),
            sin_x,
            cos_t,
        }
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ts(&self) -> &[f64] {
        &self.ts
    }

    /// `z(xs[i], ts[j])`.
    #[inline]
    pub fn value(&self, i: usize, j: usize) -> f64 {
        let s = &self.sin_x[i * self.terms..(i + 1) * self.terms];
        let c = &self.cos_t[j * self.terms..(j + 1) * self.terms];
        let sum: CompensatedSum = (0..self.terms).map(|n| s[n] * c[n] / mode(n)).collect();
        FOUR_OVER_PI * sum.value()
    }
}

/// Grid points `lo, lo + step, ...` ending exactly at `hi`.
pub fn axis(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    debug_assert!(step > 0.0 && hi >= lo);
    let intervals = libm::ceil((hi - lo) / step - 1e-6).max(0.0) as usize;
    let mut points: Vec<f64> = (0..intervals).map(|i| lo + i as f64 * step).collect();
    points.push(hi);
    points
}

/// Wave speed, spatial length, fuzzy initial displacement and truncation index.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveProblem {
    speed: f64,
    length: f64,
    initial: FuzzyNumber,
    terms: usize,
}

impl WaveProblem {
    pub fn new(speed: f64, length: f64, initial: FuzzyNumber, m: usize) -> Result<Self> {
        if !(speed > 0.0 && speed.is_finite()) {
            return Err(Error::InvalidParameter("wave speed must be positive"));
        }
        if !(length > 0.0 && length.is_finite()) {
            return Err(Error::InvalidParameter("length must be positive"));
        }
        Ok(Self {
            speed,
            length,
            initial,
            terms: m,
        })
    }

    /// `c = 1`, `L = π`: the kernel is exactly [`z_series`].
    pub fn canonical(initial: FuzzyNumber, m: usize) -> Self {
        Self {
            speed: 1.0,
            length: PI,
            initial,
            terms: m,
        }
    }

    pub fn speed(&self) -> f64 {
        self.speed
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn initial(&self) -> &FuzzyNumber {
        &self.initial
    }

    /// Highest series index `m`.
    pub fn m(&self) -> usize {
        self.terms
    }

    /// Spatial wavenumber of the first mode, `π / L` (exactly 1 for `L = π`).
    pub fn wavenumber(&self) -> f64 {
        PI / self.length
    }

    pub fn kernel(&self, x: f64, t: f64) -> f64 {
        let w = self.wavenumber();
        z_series(w * x, w * self.speed * t, self.terms)
    }

    pub fn kernel_dt(&self, x: f64, t: f64) -> f64 {
        let w = self.wavenumber();
        w * self.speed * z_series_dt(w * x, w * self.speed * t, self.terms)
    }

    /// Raw level solutions `(u1, u2) = (U01(α) z, U02(α) z)` of the two crisp
    /// problems. Not reordered, so `u1 > u2` wherever `z < 0`.
    pub fn level_pair(&self, x: f64, t: f64, alpha: f64) -> Result<(f64, f64)> {
        let cut = self.initial.alpha_cut(alpha)?;
        let z = self.kernel(x, t);
        Ok((cut.lo() * z, cut.hi() * z))
    }

    /// α-cut of the solution, ordered as scalar multiplication orders it.
    pub fn level_solution(&self, x: f64, t: f64, alpha: f64) -> Result<Interval> {
        let (u1, u2) = self.level_pair(x, t, alpha)?;
        Ok(Interval::hull(u1, u2))
    }

    /// `z(x, t) ⊙ Ũ0`. Always a fuzzy number; whether it is an S-solution at
    /// `(x, t)` is decided by [`WaveProblem::s_solution_check`].
    pub fn fuzzy_solution(&self, x: f64, t: f64) -> FuzzyNumber {
        self.initial.scale(self.kernel(x, t))
    }

    /// Checks `∂u1/∂α ≥ -ε` and `∂u2/∂α ≤ ε` over `[0, x_max] × [0, t_max]`
    /// and the α-grid, with forward differences between adjacent levels.
    pub fn s_solution_check(
        &self,
        x_max: f64,
        t_max: f64,
        step: f64,
        alphas: &AlphaGrid,
        epsilon: f64,
    ) -> Result<SSolutionReport> {
        if !(step > 0.0) {
            return Err(Error::InvalidParameter("step must be positive"));
        }
        let levels = alphas.levels();
        let cuts: Vec<Interval> = levels
            .iter()
            .map(|&a| self.initial.alpha_cut(a))
            .collect::<Result<_>>()?;
        let vacuous = cuts.iter().all(|c| *c == cuts[0]);
        let xs = axis(0.0, x_max, step);
        let ts = axis(0.0, t_max, step);
        let mut points = 0;
        for &x in &xs {
            for &t in &ts {
                points += 1;
                let z = self.kernel(x, t);
                for i in 0..levels.len() - 1 {
                    let da = levels[i + 1] - levels[i];
                    let du1 = (cuts[i + 1].lo() * z - cuts[i].lo() * z) / da;
                    let du2 = (cuts[i + 1].hi() * z - cuts[i].hi() * z) / da;
                    if du1 < -epsilon || du2 > epsilon {
                        return Ok(SSolutionReport {
                            points,
                            vacuous,
                            violation: Some(SViolation {
                                x,
                                t,
                                alpha: levels[i],
                                du1,
                                du2,
                                z,
                            }),
                        });
                    }
                }
            }
        }
        Ok(SSolutionReport {
            points,
            vacuous,
            violation: None,
        })
    }
}

/// First grid point where an α-derivative has the wrong sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SViolation {
    pub x: f64,
    pub t: f64,
    pub alpha: f64,
    pub du1: f64,
    pub du2: f64,
    pub z: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SSolutionReport {
    pub points: usize,
    /// `Ũ0` has no α-variation, so the sign conditions hold trivially.
    pub vacuous: bool,
    pub violation: Option<SViolation>,
}

impl SSolutionReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}
