//! JSON and CSV representations shared by the subcommands.
//!
//! Numbers are written in shortest round-trip form and `-0` is written as `0`.

use std::io::{Read, Write};

use fuzzy_wave_core::{AlphaGrid, DomainKind, FuzzyNumber, GsDerivativeResult, ValidityDomain};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("level arrays differ in length: alphas {alphas}, lower {lower}, upper {upper}")]
    Length {
        alphas: usize,
        lower: usize,
        upper: usize,
    },
    #[error("row {row}: {message}")]
    Row { row: usize, message: String },
    #[error(transparent)]
    Core(#[from] fuzzy_wave_core::Error),
}

fn clean(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

fn cleaned(v: &[f64]) -> Vec<f64> {
    v.iter().copied().map(clean).collect()
}

/// Shortest decimal that parses back to `v`.
pub fn format_number(v: f64) -> String {
    format!("{:?}", clean(v))
}

/// `{"alphas": [...], "lower": [...], "upper": [...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Levels {
    pub alphas: Vec<f64>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl Levels {
    pub fn from_number(f: &FuzzyNumber) -> Self {
        Self {
            alphas: f.grid().levels().to_vec(),
            lower: cleaned(f.lower()),
            upper: cleaned(f.upper()),
        }
    }

    /// Checks array lengths, the α-grid and the level conditions.
    pub fn into_number(self) -> Result<FuzzyNumber, FormatError> {
        let (alphas, lower, upper) = (self.alphas.len(), self.lower.len(), self.upper.len());
        if alphas != lower || alphas != upper {
            return Err(FormatError::Length {
                alphas,
                lower,
                upper,
            });
        }
        let grid = AlphaGrid::new(self.alphas)?;
        Ok(FuzzyNumber::from_samples(grid, self.lower, self.upper)?)
    }
}

pub fn parse_fuzzy_number(text: &str) -> Result<FuzzyNumber, FormatError> {
    serde_json::from_str::<Levels>(text)?.into_number()
}

pub fn fuzzy_number_json(f: &FuzzyNumber) -> String {
    serde_json::to_string(&Levels::from_number(f)).expect("plain data serializes")
}

/// Derivative levels at one `t`, in the level format plus classification.
#[derive(Debug, Clone, Serialize)]
pub struct Derivative {
    pub t: f64,
    pub classification: &'static str,
    pub case: &'static str,
    #[serde(flatten)]
    pub levels: Levels,
}

impl From<&GsDerivativeResult> for Derivative {
    fn from(r: &GsDerivativeResult) -> Self {
        use fuzzy_wave_core::DerivativeCase::*;
        Self {
            t: r.t,
            classification: r.classification.as_str(),
            case: match r.diagnostics.case {
                LowerFirst => "lower_first",
                UpperFirst => "upper_first",
                Coincident => "coincident",
                Mixed => "mixed",
            },
            levels: Levels {
                alphas: r.grid().levels().to_vec(),
                lower: cleaned(r.lower()),
                upper: cleaned(r.upper()),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Published {
    Side(f64),
    Rectangle { x: f64, t: f64 },
}

/// First negative kernel value found on a probe square.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NegativeProbe {
    pub side: f64,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Domain {
    pub m: usize,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    pub epsilon: f64,
    pub certified: bool,
    pub oracle: f64,
    pub resolution: f64,
    pub refine_tol: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub published: Option<Published>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub published_delta: Option<Published>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub negative_probe: Option<NegativeProbe>,
}

impl Domain {
    pub fn new(d: &ValidityDomain, published: Option<Published>) -> Self {
        let (s, x, t) = match d.kind {
            DomainKind::Square { side } => (Some(side), None, None),
            DomainKind::Rectangle { x, t } => (None, Some(x), Some(t)),
        };
        let published_delta = match (d.kind, published) {
            (DomainKind::Square { side }, Some(Published::Side(p))) => {
                Some(Published::Side(side - p))
            }
            (DomainKind::Rectangle { x, t }, Some(Published::Rectangle { x: px, t: pt })) => {
                Some(Published::Rectangle {
                    x: x - px,
                    t: t - pt,
                })
            }
            _ => None,
        };
        Self {
            m: d.m,
            kind: d.kind.name(),
            s,
            x,
            t,
            epsilon: d.epsilon,
            certified: d.certified,
            oracle: d.oracle,
            resolution: d.resolution,
            refine_tol: d.refine_tol,
            published,
            published_delta,
            negative_probe: None,
        }
    }
}

/// Column names plus numeric rows, `x` outermost.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row.into_iter().map(clean).collect());
    }

    pub fn write_csv(&self, out: impl Write) -> Result<(), FormatError> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|&v| format_number(v)))?;
        }
        w.flush().map_err(csv::Error::from)?;
        Ok(())
    }

    pub fn read_csv(input: impl Read) -> Result<Self, FormatError> {
        let mut r = csv::Reader::from_reader(input);
        let columns: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
        let mut rows = Vec::new();
        for (i, record) in r.records().enumerate() {
            let row = record?
                .iter()
                .map(|field| {
                    field.parse::<f64>().map_err(|e| FormatError::Row {
                        row: i + 1,
                        message: format!("{field:?}: {e}"),
                    })
                })
                .collect::<Result<Vec<f64>, _>>()?;
            rows.push(row);
        }
        Ok(Self { columns, rows })
    }

    pub fn write_json(&self, mut out: impl Write) -> Result<(), FormatError> {
        serde_json::to_writer(&mut out, self)?;
        out.write_all(b"\n").map_err(serde_json::Error::io)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_round_trip() {
        for v in [0.1, 1.0 / 3.0, -2.5e-300, 4.0 / std::f64::consts::PI, 1e21] {
            assert_eq!(format_number(v).parse::<f64>().unwrap(), v);
        }
        assert_eq!(format_number(-0.0), "0.0");
    }

    #[test]
    fn levels_round_trip() {
        let g = AlphaGrid::uniform(5).unwrap();
        let f = FuzzyNumber::triangular(1.0, 2.0, 3.0, &g).unwrap();
        let back = parse_fuzzy_number(&fuzzy_number_json(&f)).unwrap();
        assert_eq!(back.lower(), f.lower());
        assert_eq!(back.upper(), f.upper());
    }

    #[test]
    fn bad_levels_are_rejected() {
        let text = r#"{"alphas":[0,1],"lower":[0,1],"upper":[2]}"#;
        assert!(matches!(
            parse_fuzzy_number(text),
            Err(FormatError::Length { .. })
        ));
        let text = r#"{"alphas":[0,1],"lower":[1,0],"upper":[2,2]}"#;
        assert!(matches!(
            parse_fuzzy_number(text),
            Err(FormatError::Core(_))
        ));
        assert!(matches!(parse_fuzzy_number("{"), Err(FormatError::Json(_))));
    }

    #[test]
    fn csv_round_trip() {
        let mut t = Table::new(&["x", "t", "z"]);
        t.push(vec![0.0, -0.0, 0.1]);
        t.push(vec![1.0 / 3.0, 2.0, -1e-17]);
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text.lines().next(), Some("x,t,z"));
        assert!(!text.contains('\r') && !text.contains("-0.0"));
        assert_eq!(Table::read_csv(&buf[..]).unwrap(), t);
    }
}
