use std::f64::consts::PI;
use std::io::Write;

use fuzzy_wave_core::verify::{BoundarySpec, ResidualGrid, ResidualReport};
use fuzzy_wave_core::wave::domain::REFINE_TOL;
use fuzzy_wave_core::{
    boundary_initial_check, fuzzy_validity_scan, pde_residual, validity_square, DomainKind,
    WaveProblem,
};
use serde::Serialize;

use super::{coefficient, require, Outcome};
use crate::args::VerifyArgs;
use crate::error::CliError;
use crate::formats::FormatError;

/// Largest finite-difference residual accepted at the base step.
pub const RESIDUAL_TOL: f64 = 1e-5;
const RESIDUAL_POINTS: usize = 8;

#[derive(Serialize)]
struct Residual {
    passed: bool,
    threshold: f64,
    max_abs_residual: f64,
    step: f64,
    worst_point: [f64; 3],
    refinements: Vec<[f64; 2]>,
    /// Informational: the equal-step stencil cancels the truncation error of
    /// each mode, so what remains is rounding.
    order_estimate: Option<f64>,
}

#[derive(Serialize)]
struct Boundary {
    passed: bool,
    boundary_max: f64,
    initial_velocity_max: f64,
    probe_x: f64,
    convergence: Vec<[f64; 3]>,
    endpoint_value: f64,
    gibbs_overshoot: f64,
    gibbs_x: f64,
}

#[derive(Serialize)]
struct ScanFailure {
    x: f64,
    t: f64,
    condition: &'static str,
    alphas: [f64; 2],
    values: [f64; 2],
}

#[derive(Serialize)]
struct Scan {
    passed: bool,
    step: f64,
    points: usize,
    passed_points: usize,
    pass_rate: f64,
    vacuous: bool,
    first_failure: Option<ScanFailure>,
}

#[derive(Serialize)]
struct Summary {
    m: usize,
    domain: f64,
    alpha_levels: usize,
    pde_residual: Residual,
    boundary_initial: Boundary,
    fuzzy_validity_scan: Scan,
    passed: bool,
    failed: Vec<&'static str>,
}

fn merge(a: ResidualReport, b: ResidualReport) -> ResidualReport {
    let worse = |x: &ResidualReport, y: &ResidualReport| y.max_abs_residual > x.max_abs_residual;
    let refinements = a
        .refinements
        .iter()
        .zip(&b.refinements)
        .map(|(p, q)| (p.0, p.1.max(q.1)))
        .collect::<Vec<_>>();
    let mut out = if worse(&a, &b) { b } else { a };
    out.refinements = refinements;
    out
}

fn order(refinements: &[(f64, f64)]) -> Option<f64> {
    let n = refinements.len();
    if n < 2 || !refinements.iter().all(|r| r.1 > 0.0) {
        return None;
    }
    let (h0, r0) = refinements[0];
    let (h1, r1) = refinements[n - 1];
    Some((r0 / r1).log2() / (h0 / h1).log2())
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let u0 = coefficient(&args.coeff)?;
    require(
        args.resolution.is_finite() && args.resolution > 0.0,
        "--resolution must be positive",
    )?;
    let side = match args.domain {
        Some(s) => {
            require(
                s.is_finite() && s > 0.0 && s <= PI,
                "--domain must be in (0, π]",
            )?;
            s
        }
        None => match validity_square(args.m, 0.0, REFINE_TOL).kind {
            DomainKind::Square { side } => side,
            DomainKind::Rectangle { .. } => unreachable!("square search returns a square"),
        },
    };
    let problem = WaveProblem::canonical(u0.clone(), args.m);
    let alphas = u0.grid().clone();

    let grid = ResidualGrid::new(
        (0.0, side),
        (0.0, side),
        (RESIDUAL_POINTS, RESIDUAL_POINTS),
        alphas.levels().to_vec(),
    );
    let level = |upper: bool| {
        let p = &problem;
        let u0 = &u0;
        move |x: f64, t: f64, a: f64| match u0.alpha_cut(a) {
            Ok(cut) => (if upper { cut.hi() } else { cut.lo() }) * p.kernel(x, t),
            Err(_) => f64::NAN,
        }
    };
    let residual = merge(
        pde_residual(level(false), 1.0, &grid),
        pde_residual(level(true), 1.0, &grid),
    );
    let residual_ok = residual.max_abs_residual < RESIDUAL_TOL && residual.skipped == 0;

    let bi = boundary_initial_check(&problem, &BoundarySpec::default())?;
    let scan = fuzzy_validity_scan(&problem, side, side, args.resolution, &alphas)?;

    let mut failed = Vec::new();
    if !residual_ok {
        failed.push("pde_residual");
    }
    if !bi.passed() {
        failed.push("boundary_initial_check");
    }
    if !scan.all_passed() {
        failed.push("fuzzy_validity_scan");
    }

    let summary = Summary {
        m: args.m,
        domain: side,
        alpha_levels: alphas.len(),
        pde_residual: Residual {
            passed: residual_ok,
            threshold: RESIDUAL_TOL,
            max_abs_residual: residual.max_abs_residual,
            step: residual.step_x,
            worst_point: [
                residual.worst_point.0,
                residual.worst_point.1,
                residual.worst_point.2,
            ],
            order_estimate: order(&residual.refinements),
            refinements: residual.refinements.iter().map(|&(h, r)| [h, r]).collect(),
        },
        boundary_initial: Boundary {
            passed: bi.passed(),
            boundary_max: bi.boundary_max,
            initial_velocity_max: bi.initial_velocity_max,
            probe_x: bi.probe_x,
            convergence: bi
                .convergence
                .iter()
                .map(|c| [c.m as f64, c.z, c.error])
                .collect(),
            endpoint_value: bi.endpoint_value,
            gibbs_overshoot: bi.gibbs_overshoot,
            gibbs_x: bi.gibbs_x,
        },
        fuzzy_validity_scan: Scan {
            passed: scan.all_passed(),
            step: args.resolution,
            points: scan.points,
            passed_points: scan.passed,
            pass_rate: scan.pass_rate(),
            vacuous: scan.vacuous,
            first_failure: scan.first_failure.as_ref().map(|f| ScanFailure {
                x: f.x,
                t: f.t,
                condition: f.violation.condition.label(),
                alphas: [f.violation.alphas.0, f.violation.alphas.1],
                values: [f.violation.values.0, f.violation.values.1],
            }),
        },
        passed: failed.is_empty(),
        failed: failed.clone(),
    };
    serde_json::to_writer(&mut *out, &summary).map_err(FormatError::from)?;
    writeln!(out)?;
    Ok(if failed.is_empty() {
        Outcome::Pass
    } else {
        Outcome::Fail(format!("verification failed: {}", failed.join(", ")))
    })
}
