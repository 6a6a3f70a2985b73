//! Splitting the fuzzy wave problem into its two crisp level problems.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{axis, WaveProblem};
use crate::error::{Error, Result};
use crate::fuzzy::{validate, AlphaGrid};

/// `α ↦ value`.
pub type LevelValue = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
/// `(x, α) ↦ value`.
pub type LevelProfile = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;
/// `x ↦ value` for a fixed α.
pub type Profile = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Lower,
    Upper,
}

/// Fuzzy boundary values `C̃1`, `C̃2` and fuzzy initial data `f̃(x)`, `g̃(x)`,
/// all given by level evaluators (lower, upper).
#[derive(Clone)]
pub struct GeneralLevelProblem {
    pub speed: f64,
    pub length: f64,
    pub left: [LevelValue; 2],
    pub right: [LevelValue; 2],
    pub displacement: [LevelProfile; 2],
    pub velocity: [LevelProfile; 2],
}

/// Sample points in `[0, L]` used to check the initial profiles.
const PROFILE_SAMPLES: usize = 64;

impl GeneralLevelProblem {
    /// Checks that every boundary value and every sampled profile is a fuzzy
    /// number on `grid`.
    pub fn validate(&self, grid: &AlphaGrid) -> Result<()> {
        if !(self.speed > 0.0) || !(self.length > 0.0) {
            return Err(Error::InvalidParameter("speed and length must be positive"));
        }
        let check = |lo: &dyn Fn(f64) -> f64, hi: &dyn Fn(f64) -> f64| -> Result<()> {
            let l: Vec<f64> = grid.levels().iter().map(|&a| lo(a)).collect();
            let u: Vec<f64> = grid.levels().iter().map(|&a| hi(a)).collect();
            match validate(&l, &u, grid)?.first_violation() {
                Some(v) => Err(Error::NotFuzzyNumber(v)),
                None => Ok(()),
            }
        };
        check(&*self.left[0], &*self.left[1])?;
        check(&*self.right[0], &*self.right[1])?;
        let xs = axis(0.0, self.length, self.length / PROFILE_SAMPLES as f64);
        for &x in &xs {
            for pair in [&self.displacement, &self.velocity] {
                check(&|a| pair[0](x, a), &|a| pair[1](x, a))?;
            }
        }
        Ok(())
    }
}

impl From<&WaveProblem> for GeneralLevelProblem {
    /// Zero boundary values, constant displacement `Ũ0`, zero velocity.
    fn from(p: &WaveProblem) -> Self {
        let zero: LevelValue = Arc::new(|_| 0.0);
        let still: LevelProfile = Arc::new(|_, _| 0.0);
        let u0 = p.initial().clone();
        let u0_upper = u0.clone();
        Self {
            speed: p.speed(),
            length: p.length(),
            left: [zero.clone(), zero.clone()],
            right: [zero.clone(), zero],
            displacement: [
                Arc::new(move |_, a| u0.alpha_cut(a).map_or(f64::NAN, |c| c.lo())),
                Arc::new(move |_, a| u0_upper.alpha_cut(a).map_or(f64::NAN, |c| c.hi())),
            ],
            velocity: [still.clone(), still],
        }
    }
}

/// One crisp problem `u_tt = c² u_xx` on `[0, L]` at a fixed α.
#[derive(Clone)]
pub struct CrispWaveProblem {
    pub level: Level,
    pub alpha: f64,
    pub speed: f64,
    pub length: f64,
    /// `u(0, t)`.
    pub left: f64,
    /// `u(L, t)`.
    pub right: f64,
    /// `u(x, 0)`.
    pub displacement: Profile,
    /// `u_t(x, 0)`.
    pub velocity: Profile,
}

impl core::fmt::Debug for CrispWaveProblem {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("CrispWaveProblem")
            .field("level", &self.level)
            .field("alpha", &self.alpha)
            .field("speed", &self.speed)
            .field("length", &self.length)
            .field("left", &self.left)
            .field("right", &self.right)
            .finish_non_exhaustive()
    }
}

/// The lower and upper crisp problems at level `alpha`, after validating the
/// level data on `grid`.
pub fn levelwise_decompose(
    problem: &GeneralLevelProblem,
    alpha: f64,
    grid: &AlphaGrid,
) -> Result<[CrispWaveProblem; 2]> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    problem.validate(grid)?;
    let make = |level: Level, i: usize| {
        let f = problem.displacement[i].clone();
        let g = problem.velocity[i].clone();
        CrispWaveProblem {
            level,
            alpha,
            speed: problem.speed,
            length: problem.length,
            left: (problem.left[i])(alpha),
            right: (problem.right[i])(alpha),
            displacement: Arc::new(move |x| f(x, alpha)),
            velocity: Arc::new(move |x| g(x, alpha)),
        }
    };
    Ok([make(Level::Lower, 0), make(Level::Upper, 1)])
}
