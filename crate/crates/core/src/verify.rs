//! Independent numerical checks of the series solution: finite-difference
//! PDE residuals, boundary and initial conditions, and a pointwise scan of the
//! fuzzy-number property of the level solutions.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fuzzy::{validate, AlphaGrid, Violation};
use crate::wave::{axis, z_series, WaveProblem};

/// Base finite-difference step.
pub const BASE_STEP: f64 = 1e-3;

/// Interior evaluation points and finite-difference steps for [`pde_residual`].
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualGrid {
    pub x_range: (f64, f64),
    pub t_range: (f64, f64),
    /// Interior points per axis; the range endpoints themselves are excluded.
    pub points: (usize, usize),
    pub alphas: Vec<f64>,
    /// Base step `h`, used on both axes.
    pub step: f64,
    /// Number of step halvings after the base step (2 gives `h, h/2, h/4`).
    pub halvings: usize,
}

impl ResidualGrid {
    pub fn new(
        x_range: (f64, f64),
        t_range: (f64, f64),
        points: (usize, usize),
        alphas: Vec<f64>,
    ) -> Self {
        Self {
            x_range,
            t_range,
            points,
            alphas,
            step: BASE_STEP,
            halvings: 2,
        }
    }

    fn interior(range: (f64, f64), n: usize) -> impl Iterator<Item = f64> {
        let h = (range.1 - range.0) / (n + 1) as f64;
        (1..=n).map(move |i| range.0 + i as f64 * h)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    /// Maximum of `|u_tt - c² u_xx|` at the base step.
    pub max_abs_residual: f64,
    pub step_x: f64,
    pub step_t: f64,
    pub alpha_levels: usize,
    /// `(x, t, α)` of the maximum at the base step.
    pub worst_point: (f64, f64, f64),
    /// `(h, max residual)` for each step size.
    pub refinements: Vec<(f64, f64)>,
    /// Least-squares slope of `log R` against `log h`; `None` with fewer than
    /// three steps or when a residual is exactly zero.
    pub order_estimate: Option<f64>,
    /// Points skipped because the evaluator returned a non-finite value.
    pub skipped: usize,
}

struct Sweep {
    max: f64,
    worst: (f64, f64, f64),
    skipped: usize,
}

fn sweep(u: &impl Fn(f64, f64, f64) -> f64, c: f64, grid: &ResidualGrid, h: f64) -> Sweep {
    let mut out = Sweep {
        max: 0.0,
        worst: (f64::NAN, f64::NAN, f64::NAN),
        skipped: 0,
    };
    let c2 = c * c;
    let h2 = h * h;
    for x in ResidualGrid::interior(grid.x_range, grid.points.0) {
        for t in ResidualGrid::interior(grid.t_range, grid.points.1) {
            for &a in &grid.alphas {
                let mid = u(x, t, a);
                let stencil = [
                    u(x, t + h, a),
                    u(x, t - h, a),
                    u(x + h, t, a),
                    u(x - h, t, a),
                ];
                if !mid.is_finite() || stencil.iter().any(|v| !v.is_finite()) {
                    out.skipped += 1;
                    continue;
                }
                let u_tt = (stencil[0] - 2.0 * mid + stencil[1]) / h2;
                let u_xx = (stencil[2] - 2.0 * mid + stencil[3]) / h2;
                let r = (u_tt - c2 * u_xx).abs();
                // Strict comparison keeps the lexicographically first maximum.
                if r > out.max || out.worst.0.is_nan() {
                    out.max = r;
                    out.worst = (x, t, a);
                }
            }
        }
    }
    out
}

fn log_slope(samples: &[(f64, f64)]) -> Option<f64> {
    if samples.len() < 3 || samples.iter().any(|&(_, r)| !(r > 0.0)) {
        return None;
    }
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .map(|&(h, r)| (libm::log2(h), libm::log2(r)))
        .collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    Some(sxy / sxx)
}

/// Central second differences of `u(x, t, α)` with the same step `h` in
/// `x` and `t`, repeated for `h, h/2, ...` to estimate the observed order.
pub fn pde_residual(
    u: impl Fn(f64, f64, f64) -> f64,
    c: f64,
    grid: &ResidualGrid,
) -> ResidualReport {
    let base = sweep(&u, c, grid, grid.step);
    let mut refinements = alloc::vec![(grid.step, base.max)];
    let mut h = grid.step;
    for _ in 0..grid.halvings {
        h *= 0.5;
        refinements.push((h, sweep(&u, c, grid, h).max));
    }
    ResidualReport {
        max_abs_residual: base.max,
        step_x: grid.step,
        step_t: grid.step,
        alpha_levels: grid.alphas.len(),
        worst_point: base.worst,
        order_estimate: log_slope(&refinements),
        refinements,
        skipped: base.skipped,
    }
}

/// Sampling used by [`boundary_initial_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundarySpec {
    /// Samples of `t` over one period `[0, 2L/c]`.
    pub t_samples: usize,
    /// Samples of `x` over `[0, L]`.
    pub x_samples: usize,
    /// Interior point where the initial-value convergence is tracked.
    /// `None` uses `L / 2`.
    pub probe_x: Option<f64>,
}

impl Default for BoundarySpec {
    fn default() -> Self {
        Self {
            t_samples: 256,
            x_samples: 2000,
            probe_x: None,
        }
    }
}

/// `z(probe, 0)` with `m` terms and its distance from the target value 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceStep {
    pub m: usize,
    pub z: f64,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryInitialReport {
    /// Largest `|u_i|` on `x = 0` and `x = L`.
    pub boundary_max: f64,
    /// Every boundary sample within `1e-12 (m+1) |U0i(α)|`.
    pub boundary_ok: bool,
    /// Largest `|∂u_i/∂t|` on `t = 0`.
    pub initial_velocity_max: f64,
    /// The initial velocity vanishes exactly.
    pub initial_velocity_ok: bool,
    pub probe_x: f64,
    pub convergence: Vec<ConvergenceStep>,
    /// `|z(probe, 0) - 1|` is non-increasing in `m`.
    pub convergence_ok: bool,
    /// `z(0, 0)`: the sine series vanishes at the endpoint (expected, not a failure).
    pub endpoint_value: f64,
    /// Largest `z(x, 0) - 1` over `[0, L]` and where it occurs; Gibbs
    /// overshoot, informational only.
    pub gibbs_overshoot: f64,
    pub gibbs_x: f64,
}

impl BoundaryInitialReport {
    pub fn passed(&self) -> bool {
        self.boundary_ok && self.initial_velocity_ok && self.convergence_ok
    }
}

pub fn boundary_initial_check(
    p: &WaveProblem,
    spec: &BoundarySpec,
) -> Result<BoundaryInitialReport> {
    if spec.t_samples == 0 || spec.x_samples == 0 {
        return Err(Error::InvalidParameter("sample counts must be positive"));
    }
    let u0 = p.initial();
    let levels = u0.grid().levels();
    let length = p.length();
    let period = 2.0 * length / p.speed();
    let ts = axis(0.0, period, period / spec.t_samples as f64);
    let xs = axis(0.0, length, length / spec.x_samples as f64);
    let scale = 1e-12 * (p.m() + 1) as f64;

    let mut boundary_max: f64 = 0.0;
    let mut boundary_ok = true;
    for &edge in &[0.0, length] {
        for &t in &ts {
            let z = p.kernel(edge, t);
            for (i, _) in levels.iter().enumerate() {
                for a in [u0.lower()[i], u0.upper()[i]] {
                    let u = (a * z).abs();
                    boundary_max = boundary_max.max(u);
                    boundary_ok &= u <= scale * a.abs();
                }
            }
        }
    }

    let mut initial_velocity_max: f64 = 0.0;
    for &x in &xs {
        let dz = p.kernel_dt(x, 0.0);
        for (l, h) in u0.lower().iter().zip(u0.upper()) {
            initial_velocity_max = initial_velocity_max.max((l * dz).abs()).max((h * dz).abs());
        }
    }

    let w = p.wavenumber();
    let probe_x = spec.probe_x.unwrap_or(0.5 * length);
    let convergence: Vec<ConvergenceStep> = (0..=p.m())
        .map(|m| {
            let z = z_series(w * probe_x, 0.0, m);
            ConvergenceStep {
                m,
                z,
                error: (z - 1.0).abs(),
            }
        })
        .collect();
    let convergence_ok = convergence.windows(2).all(|s| s[1].error <= s[0].error);

    let (gibbs_x, peak) =
        xs.iter()
            .map(|&x| (x, p.kernel(x, 0.0)))
            .fold((0.0, f64::NEG_INFINITY), |best, cur| {
                if cur.1 > best.1 {
                    cur
                } else {
                    best
                }
            });

    Ok(BoundaryInitialReport {
        boundary_max,
        boundary_ok,
        initial_velocity_max,
        initial_velocity_ok: initial_velocity_max == 0.0,
        probe_x,
        convergence,
        convergence_ok,
        endpoint_value: p.kernel(0.0, 0.0),
        gibbs_overshoot: peak - 1.0,
        gibbs_x,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanFailure {
    pub x: f64,
    pub t: f64,
    pub violation: Violation,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanReport {
    pub points: usize,
    pub passed: usize,
    pub first_failure: Option<ScanFailure>,
    /// `Ũ0` is crisp; every level has zero width.
    pub vacuous: bool,
}

impl ScanReport {
    pub fn pass_rate(&self) -> f64 {
        self.passed as f64 / self.points as f64
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.points
    }
}

/// Validates the raw level pair `(U01(α) z, U02(α) z)` at every point of the
/// grid over `[0, x_max] × [0, t_max]`.
pub fn fuzzy_validity_scan(
    p: &WaveProblem,
    x_max: f64,
    t_max: f64,
    step: f64,
    alphas: &AlphaGrid,
) -> Result<ScanReport> {
    if !(step > 0.0) {
        return Err(Error::InvalidParameter("step must be positive"));
    }
    let u0 = p.initial();
    let cuts = alphas
        .levels()
        .iter()
        .map(|&a| u0.alpha_cut(a))
        .collect::<Result<Vec<_>>>()?;
    let mut lower = alloc::vec![0.0; cuts.len()];
    let mut upper = alloc::vec![0.0; cuts.len()];
    let mut report = ScanReport {
        points: 0,
        passed: 0,
        first_failure: None,
        vacuous: u0.is_crisp(),
    };
    for &x in &axis(0.0, x_max, step) {
        for &t in &axis(0.0, t_max, step) {
            let z = p.kernel(x, t);
            for (i, cut) in cuts.iter().enumerate() {
                lower[i] = cut.lo() * z;
                upper[i] = cut.hi() * z;
            }
            report.points += 1;
            match validate(&lower, &upper, alphas)?.first_violation() {
                None => report.passed += 1,
                Some(violation) => {
                    report
                        .first_failure
                        .get_or_insert(ScanFailure { x, t, violation });
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::FuzzyNumber;
    use alloc::vec;
    use core::f64::consts::{FRAC_PI_2, PI};

    fn problem(m: usize) -> WaveProblem {
        let g = AlphaGrid::default();
        WaveProblem::canonical(FuzzyNumber::triangular(1.0, 2.0, 3.0, &g).unwrap(), m)
    }

    #[test]
    fn residual_of_simple_functions() {
        let grid = ResidualGrid::new((0.0, 1.0), (0.0, 1.0), (5, 5), vec![0.0]);
        let linear = pde_residual(|x, _, _| x, 3.0, &grid);
        assert!(linear.max_abs_residual < 1e-9);

        let quad = pde_residual(|_, t, _| t * t, 7.0, &grid);
        assert!((quad.max_abs_residual - 2.0).abs() < 1e-6);
        // Exact in the stencil: order is flat.
        assert!(quad.order_estimate.unwrap().abs() < 0.1);
    }

    #[test]
    fn residual_order_for_unequal_wavenumbers() {
        // sin(x) cos(2t) solves u_tt = 4 u_xx, but the x and t stencils
        // truncate differently, leaving an O(h²) residual of about |u| h².
        let grid = ResidualGrid {
            step: 1e-2,
            ..ResidualGrid::new((0.0, 1.0), (0.0, 1.0), (6, 6), vec![0.0])
        };
        let r = pde_residual(|x, t, _| libm::sin(x) * libm::cos(2.0 * t), 2.0, &grid);
        assert_eq!(r.refinements.len(), 3);
        assert_eq!(r.refinements[2].0, 2.5e-3);
        let order = r.order_estimate.unwrap();
        assert!((order - 2.0).abs() < 0.05, "{order}");
    }

    #[test]
    fn residual_of_series_solution_is_small() {
        let p = problem(0);
        let grid = ResidualGrid::new((0.0, PI), (0.0, FRAC_PI_2), (20, 20), vec![0.0, 0.5, 1.0]);
        let r = pde_residual(|x, t, a| p.level_pair(x, t, a).unwrap().0, 1.0, &grid);
        assert!(r.max_abs_residual < 1e-5);
        assert_eq!(r.skipped, 0);
        assert_eq!(r.alpha_levels, 3);
    }

    #[test]
    fn skipped_points_are_counted() {
        let grid = ResidualGrid::new((0.0, 1.0), (0.0, 1.0), (4, 4), vec![0.0]);
        let r = pde_residual(|x, _, _| if x > 0.5 { f64::NAN } else { x }, 1.0, &grid);
        assert_eq!(r.skipped, 8);
    }

    #[test]
    fn boundary_and_initial_conditions() {
        for m in 0..4 {
            let r = boundary_initial_check(&problem(m), &BoundarySpec::default()).unwrap();
            assert!(r.passed(), "m = {m}: {r:?}");
            assert_eq!(r.endpoint_value, 0.0);
            assert_eq!(r.initial_velocity_max, 0.0);
        }
        let r = boundary_initial_check(&problem(3), &BoundarySpec::default()).unwrap();
        let zs: Vec<f64> = r.convergence.iter().map(|s| s.z).collect();
        // Leibniz partial sums 4/π (1 - 1/3 + 1/5 - ...).
        let mut partial = 0.0;
        for (n, z) in zs.iter().enumerate() {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            partial += sign / (2 * n + 1) as f64;
            assert!((z - 4.0 / core::f64::consts::PI * partial).abs() < 1e-14);
        }
        for (z, e) in zs.iter().zip([1.27324, 0.84883, 1.10347]) {
            assert!((z - e).abs() < 5e-6);
        }
        assert!(r.gibbs_overshoot > 0.0);
    }

    #[test]
    fn scan_examples() {
        let g = AlphaGrid::default();
        let r = fuzzy_validity_scan(&problem(1), 0.78, 0.78, 0.01, &g).unwrap();
        assert!(r.all_passed());
        let r = fuzzy_validity_scan(&problem(3), 0.41, 0.41, 0.005, &g).unwrap();
        assert!(!r.all_passed());
        let f = r.first_failure.unwrap();
        assert!(f.t > 0.39 && f.x < 0.2);

        let crisp = WaveProblem::canonical(FuzzyNumber::crisp(2.0, &g).unwrap(), 3);
        let r = fuzzy_validity_scan(&crisp, 0.41, 0.41, 0.005, &g).unwrap();
        assert!(r.all_passed() && r.vacuous);
        assert_eq!(r.pass_rate(), 1.0);
    }
}
