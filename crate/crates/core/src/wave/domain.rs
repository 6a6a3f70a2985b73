//! Regions anchored at the origin on which the truncated kernel stays
//! non-negative, i.e. where the level solutions form fuzzy numbers.
//!
//! Near `x = 0` the kernel behaves like
//! `x · 4/π Σ cos((2n+1)t) = x · 2/π · sin(2(m+1)t) / sin t`,
//! which changes sign at `t = π / (2(m+1))`. That edge value serves as the
//! analytic oracle for both searches.

use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{axis, z_series, KernelTable};

/// Default bisection tolerance on the square side.
pub const REFINE_TOL: f64 = 1e-4;
/// Coarsest scan step used inside the square search.
pub const MAX_SCAN_STEP: f64 = 1e-3;
/// Relaxed non-negativity tolerance for callers that want to absorb rounding.
pub const RELAXED_EPSILON: f64 = 1e-12;
/// Default column spacing of the rectangle search.
pub const RECT_RESOLUTION: f64 = 1e-2;
const COLUMN_TOL: f64 = 1e-9;

/// `π / (2(m+1))`, the first sign change of the kernel along `x → 0`.
pub fn edge_oracle(m: usize) -> f64 {
    PI / (2.0 * (m + 1) as f64)
}

/// Square sides reported in the literature for `m = 1, 2, 3`.
pub fn published_square_side(m: usize) -> Option<f64> {
    match m {
        1 => Some(0.78),
        2 => Some(0.525),
        3 => Some(0.39996),
        _ => None,
    }
}

/// Rectangle reported in the literature for `m = 0`.
pub fn published_rectangle(m: usize) -> Option<(f64, f64)> {
    (m == 0).then_some((PI, PI / 2.0))
}

/// Scan step used for a square of side `s`.
pub fn square_scan_step(s: f64) -> f64 {
    MAX_SCAN_STEP.min(s / 2000.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DomainKind {
    Square { side: f64 },
    Rectangle { x: f64, t: f64 },
}

impl DomainKind {
    pub fn name(&self) -> &'static str {
        match self {
            DomainKind::Square { .. } => "square",
            DomainKind::Rectangle { .. } => "rectangle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidityDomain {
    pub m: usize,
    pub kind: DomainKind,
    /// The kernel is required to satisfy `z ≥ -epsilon`.
    pub epsilon: f64,
    /// Grid step of the final scan.
    pub resolution: f64,
    pub refine_tol: f64,
    /// Edge oracle `π / (2(m+1))`.
    pub oracle: f64,
    /// The search result agrees with the oracle.
    pub certified: bool,
}

/// A kernel sample on a scan grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelPoint {
    pub x: f64,
    pub t: f64,
    pub z: f64,
}

/// First grid point of `[0, s]²` with `z < -epsilon`. The top row `t = s`
/// is scanned first since that is where the square fails as it grows.
pub fn first_negative_on_square(m: usize, s: f64, step: f64, epsilon: f64) -> Option<KernelPoint> {
    let grid = axis(0.0, s, step);
    let table = KernelTable::new(&grid, &grid, m);
    let top = grid.len() - 1;
    let rows = core::iter::once(top).chain(0..top);
    for j in rows {
        for i in 0..grid.len() {
            let z = table.value(i, j);
            if z < -epsilon {
                return Some(KernelPoint {
                    x: grid[i],
                    t: grid[j],
                    z,
                });
            }
        }
    }
    None
}

/// Smallest kernel value on the grid over `[0, x_max] × [0, t_max]`; ties go
/// to the lexicographically smallest `(x, t)`.
pub fn kernel_minimum(m: usize, x_max: f64, t_max: f64, step: f64) -> KernelPoint {
    let xs = axis(0.0, x_max, step);
    let ts = axis(0.0, t_max, step);
    let table = KernelTable::new(&xs, &ts, m);
    let mut best = KernelPoint {
        x: xs[0],
        t: ts[0],
        z: table.value(0, 0),
    };
    for (i, &x) in xs.iter().enumerate() {
        for (j, &t) in ts.iter().enumerate() {
            let z = table.value(i, j);
            if z < best.z {
                best = KernelPoint { x, t, z };
            }
        }
    }
    best
}

fn square_feasible(m: usize, s: f64, epsilon: f64) -> bool {
    first_negative_on_square(m, s, square_scan_step(s), epsilon).is_none()
}

/// Largest `s ≤ π` with `z ≥ -epsilon` on `[0, s]²`: bisection on `s`, grid
/// scan of each candidate square at step `min(1e-3, s/2000)`.
pub fn validity_square(m: usize, epsilon: f64, refine_tol: f64) -> ValidityDomain {
    let (mut lo, mut hi) = (0.0, PI);
    if square_feasible(m, hi, epsilon) {
        lo = hi;
    }
    while hi - lo > refine_tol {
        let mid = 0.5 * (lo + hi);
        if square_feasible(m, mid, epsilon) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let resolution = square_scan_step(lo);
    let oracle = edge_oracle(m);
    ValidityDomain {
        m,
        kind: DomainKind::Square { side: lo },
        epsilon,
        resolution,
        refine_tol,
        oracle,
        certified: (lo - oracle).abs() <= refine_tol.max(2.0 * resolution),
    }
}

/// Height of the feasible part of the column at `x`: the first `t` where the
/// kernel drops below `-epsilon`, found on `ts` and refined by bisection.
fn column_height(m: usize, x: f64, ts: &[f64], column: impl Fn(usize) -> f64, epsilon: f64) -> f64 {
    let Some(j) = (0..ts.len()).find(|&j| column(j) < -epsilon) else {
        return *ts.last().unwrap();
    };
    if j == 0 {
        return 0.0;
    }
    let (mut lo, mut hi) = (ts[j - 1], ts[j]);
    while hi - lo > COLUMN_TOL {
        let mid = 0.5 * (lo + hi);
        if z_series(x, mid, m) >= -epsilon {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Maximal-area rectangle `[0, X] × [0, T] ⊆ [0, π]²` with `z ≥ -epsilon`.
///
/// Column heights are computed at the given resolution; the running minimum
/// of the heights is the staircase of feasible `T` for each `X`.
pub fn validity_rectangle(m: usize, epsilon: f64, resolution: f64) -> ValidityDomain {
    let xs = axis(0.0, PI, resolution);
    let ts = axis(0.0, PI, resolution);
    let table = KernelTable::new(&xs, &ts, m);
    let heights: Vec<f64> = xs
        .iter()
        .enumerate()
        .map(|(i, &x)| column_height(m, x, &ts, |j| table.value(i, j), epsilon))
        .collect();

    let mut floor = f64::INFINITY;
    let mut best = (0.0, heights[0], -1.0);
    for (&x, &h) in xs.iter().zip(&heights) {
        floor = floor.min(h);
        let area = x * floor;
        if area > best.2 {
            best = (x, floor, area);
        }
    }
    let (x, t, _) = best;
    let oracle = edge_oracle(m);
    let tol = 2.0 * resolution;
    ValidityDomain {
        m,
        kind: DomainKind::Rectangle { x, t },
        epsilon,
        resolution,
        refine_tol: COLUMN_TOL,
        oracle,
        certified: (t - oracle).abs() <= tol && (x - PI).abs() <= tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn square_m1_matches_edge_oracle() {
        let d = validity_square(1, 0.0, REFINE_TOL);
        let DomainKind::Square { side } = d.kind else {
            panic!()
        };
        assert!((0.78..=0.786).contains(&side), "{side}");
        assert!((side - FRAC_PI_4).abs() <= 2.0 * REFINE_TOL);
        assert!(d.certified);
    }

    #[test]
    fn square_m0_is_half_pi() {
        let d = validity_square(0, 0.0, REFINE_TOL);
        let DomainKind::Square { side } = d.kind else {
            panic!()
        };
        assert!((side - FRAC_PI_2).abs() <= REFINE_TOL);
        assert!(d.certified);
    }

    #[test]
    fn rectangle_m0() {
        let d = validity_rectangle(0, 0.0, RECT_RESOLUTION);
        let DomainKind::Rectangle { x, t } = d.kind else {
            panic!()
        };
        assert!((x - PI).abs() < 1e-3);
        assert!((t - FRAC_PI_2).abs() < 1e-3);
        assert!(z_series(PI - 0.01, FRAC_PI_2 - 0.01, 0) > 0.0);
        assert!(d.certified);
    }

    #[test]
    fn rectangle_m1_contains_published_square() {
        let d = validity_rectangle(1, 0.0, RECT_RESOLUTION);
        let DomainKind::Rectangle { x, t } = d.kind else {
            panic!()
        };
        assert!(x >= 0.78 && t >= 0.78);
        assert!(d.certified);
    }

    #[test]
    fn negative_values_beyond_the_square() {
        let p = first_negative_on_square(3, 0.4, 1e-3, 0.0).unwrap();
        assert!(p.z < 0.0);
        assert!(first_negative_on_square(3, 0.39, 1e-3, 0.0).is_none());
        let min = kernel_minimum(3, 0.4, 0.4, 1e-3);
        assert!(min.z < 0.0 && min.t > edge_oracle(3));
    }
}
