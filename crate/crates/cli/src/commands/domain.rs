use std::f64::consts::PI;
use std::io::Write;

use fuzzy_wave_core::wave::domain::{
    first_negative_on_square, published_rectangle, published_square_side, square_scan_step,
};
use fuzzy_wave_core::{validity_rectangle, validity_square};

use super::{require, Outcome};
use crate::args::DomainArgs;
use crate::error::CliError;
use crate::formats::{Domain, FormatError, NegativeProbe, Published};

/// Smallest multiple of 0.01 not below `v`.
fn round_up_hundredth(v: f64) -> f64 {
    (v * 100.0 - 1e-9).ceil() / 100.0
}

pub fn wave_domain(args: &DomainArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    require(
        args.epsilon.is_finite() && args.epsilon >= 0.0,
        "--epsilon must be finite and non-negative",
    )?;
    require(
        args.refine_tol > 0.0 && args.refine_tol < 1.0,
        "--refine-tol must be in (0, 1)",
    )?;
    require(
        args.resolution > 0.0 && args.resolution <= PI,
        "--resolution must be in (0, π]",
    )?;

    let json = if args.rect {
        let d = validity_rectangle(args.m, args.epsilon, args.resolution);
        let published = published_rectangle(args.m).map(|(x, t)| Published::Rectangle { x, t });
        Domain::new(&d, published)
    } else {
        let d = validity_square(args.m, args.epsilon, args.refine_tol);
        let published = published_square_side(args.m);
        let mut json = Domain::new(&d, published.map(Published::Side));
        if let (Some(p), Some(s)) = (published, json.s) {
            // The kernel should already go negative on a slightly larger square.
            let side = round_up_hundredth(p.max(s));
            let hit = first_negative_on_square(args.m, side, square_scan_step(side), args.epsilon);
            json.negative_probe = Some(NegativeProbe {
                side,
                found: hit.is_some(),
                x: hit.map(|h| h.x),
                t: hit.map(|h| h.t),
                z: hit.map(|h| h.z),
            });
        }
        json
    };
    serde_json::to_writer(&mut *out, &json).map_err(FormatError::from)?;
    writeln!(out)?;
    Ok(Outcome::Pass)
}
