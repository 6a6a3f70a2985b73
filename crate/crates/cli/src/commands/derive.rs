use std::io::Write;

use fuzzy_wave_core::{gs_derivative, EnvelopeFunction};
use serde::Serialize;

use super::{coefficient, require, Outcome};
use crate::args::{DeriveArgs, Function};
use crate::error::CliError;
use crate::formats::{Derivative, Levels};

#[derive(Serialize)]
struct Report {
    function: &'static str,
    coefficient: Levels,
    derivatives: Vec<Derivative>,
}

fn polynomial(c: &[f64], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &k| acc * t + k)
}

fn polynomial_derivative(c: &[f64], t: f64) -> f64 {
    c.iter()
        .enumerate()
        .skip(1)
        .rev()
        .fold(0.0, |acc, (k, &ck)| acc * t + k as f64 * ck)
}

pub fn derive(args: &DeriveArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let coeff = coefficient(&args.coeff)?;
    require(
        args.poly.is_none() || args.function == Function::CustomEnvelope,
        "--poly only applies to --fn custom-envelope",
    )?;
    require(
        args.t.iter().all(|t| t.is_finite()),
        "--t values must be finite",
    )?;
    let everywhere = (f64::NEG_INFINITY, f64::INFINITY);
    let (name, envelope) = match args.function {
        Function::ExpDecay => (
            "exp-decay",
            EnvelopeFunction::new(coeff.clone(), |t| (-t).exp(), everywhere)
                .with_derivative(|t| -(-t).exp()),
        ),
        Function::Sin => (
            "sin",
            EnvelopeFunction::new(coeff.clone(), f64::sin, everywhere).with_derivative(f64::cos),
        ),
        Function::CustomEnvelope => {
            let Some(poly) = args.poly.clone() else {
                return Err(CliError::Usage(
                    "--fn custom-envelope needs --poly c0,c1,...".into(),
                ));
            };
            require(
                poly.iter().all(|c| c.is_finite()),
                "--poly coefficients must be finite",
            )?;
            let dpoly = poly.clone();
            (
                "custom-envelope",
                EnvelopeFunction::new(coeff.clone(), move |t| polynomial(&poly, t), everywhere)
                    .with_derivative(move |t| polynomial_derivative(&dpoly, t)),
            )
        }
    };
    let family = envelope.level_family();
    let derivatives = args
        .t
        .iter()
        .map(|&t| gs_derivative(&family, t).map(|r| Derivative::from(&r)))
        .collect::<Result<Vec<_>, _>>()?;
    let report = Report {
        function: name,
        coefficient: Levels::from_number(&coeff),
        derivatives,
    };
    serde_json::to_writer(&mut *out, &report).map_err(crate::formats::FormatError::from)?;
    writeln!(out)?;
    Ok(Outcome::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_evaluation() {
        let c = [1.0, -2.0, 3.0];
        assert_eq!(polynomial(&c, 2.0), 9.0);
        assert_eq!(polynomial_derivative(&c, 2.0), 10.0);
        assert_eq!(polynomial(&[], 2.0), 0.0);
        assert_eq!(polynomial_derivative(&[5.0], 2.0), 0.0);
    }
}
