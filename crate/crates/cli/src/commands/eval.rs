use std::fs::File;
use std::io::{BufWriter, Write};

use fuzzy_wave_core::wave::KernelTable;
use fuzzy_wave_core::Interval;

use super::{coefficient, require, Outcome};
use crate::args::{EvalArgs, Format};
use crate::error::CliError;
use crate::formats::Table;

const MAX_ROWS: usize = 50_000_000;

/// `0, step, 2 step, ...` up to `max`. Unlike the scan grids, an endpoint that
/// is not a multiple of `step` is left out, so a rounded-up bound such as
/// `1.5708` for `π/2` adds no samples past it.
fn steps(max: f64, step: f64) -> Vec<f64> {
    let n = (max / step + 1e-9).floor() as usize;
    (0..=n).map(|i| i as f64 * step).collect()
}

pub fn wave_eval(args: &EvalArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    require(
        args.xmax.is_finite() && args.xmax >= 0.0 && args.tmax.is_finite() && args.tmax >= 0.0,
        "--xmax and --tmax must be finite and non-negative",
    )?;
    require(
        args.step.is_finite() && args.step > 0.0,
        "--step must be positive",
    )?;
    require(
        args.xmax / args.step < MAX_ROWS as f64 && args.tmax / args.step < MAX_ROWS as f64,
        "grid too large; increase --step",
    )?;
    let xs = steps(args.xmax, args.step);
    let ts = steps(args.tmax, args.step);
    let kernel = KernelTable::new(&xs, &ts, args.m);

    let table = if args.fuzzy {
        let u0 = coefficient(&args.coeff)?;
        let alphas = u0.grid().levels().to_vec();
        require(
            xs.len() * ts.len() * alphas.len() <= MAX_ROWS,
            "grid too large; increase --step",
        )?;
        let cuts = alphas
            .iter()
            .map(|&a| u0.alpha_cut(a))
            .collect::<Result<Vec<Interval>, _>>()?;
        let mut table = Table::new(&["x", "t", "alpha", "u1", "u2"]);
        for (i, &x) in xs.iter().enumerate() {
            for (j, &t) in ts.iter().enumerate() {
                let z = kernel.value(i, j);
                for (&a, cut) in alphas.iter().zip(&cuts) {
                    table.push(vec![x, t, a, cut.lo() * z, cut.hi() * z]);
                }
            }
        }
        table
    } else {
        require(
            xs.len() * ts.len() <= MAX_ROWS,
            "grid too large; increase --step",
        )?;
        let mut table = Table::new(&["x", "t", "z"]);
        for (i, &x) in xs.iter().enumerate() {
            for (j, &t) in ts.iter().enumerate() {
                table.push(vec![x, t, kernel.value(i, j)]);
            }
        }
        table
    };

    let emit = |w: &mut dyn Write| match args.format {
        Format::Csv => table.write_csv(w),
        Format::Json => table.write_json(w),
    };
    match &args.output {
        Some(path) => {
            let io_err = |source| CliError::Io {
                path: path.clone(),
                source,
            };
            let mut w = BufWriter::new(File::create(path).map_err(io_err)?);
            emit(&mut w)?;
            w.flush().map_err(io_err)?;
        }
        None => emit(out)?,
    }
    Ok(Outcome::Pass)
}
