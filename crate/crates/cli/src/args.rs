use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "fuzzy-wave",
    version,
    about = "Fuzzy derivatives and the fuzzy wave equation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the derivative of a fuzzy envelope function at given t values
    Derive(DeriveArgs),
    /// Search the region where the truncated solution kernel is non-negative
    WaveDomain(DomainArgs),
    /// Evaluate the kernel or the fuzzy level solutions on a grid
    WaveEval(EvalArgs),
    /// Run the residual, boundary/initial and fuzzy-validity checks
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    /// ã ⊙ e^(-t)
    ExpDecay,
    /// ã ⊙ sin t
    Sin,
    /// ã ⊙ p(t) with p given by --poly
    CustomEnvelope,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Fuzzy coefficient: triangular `a,b,c` or a level JSON file.
#[derive(Debug, Clone, Args)]
pub struct CoeffArgs {
    /// Triangular coefficient a,b,c
    #[arg(
        long,
        value_delimiter = ',',
        num_args = 1,
        allow_hyphen_values = true,
        conflicts_with = "coeff_file"
    )]
    pub coeff: Option<Vec<f64>>,

    /// Coefficient in level JSON form {"alphas","lower","upper"}
    #[arg(long)]
    pub coeff_file: Option<PathBuf>,

    /// Number of uniform α-levels
    #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u32).range(2..))]
    pub alpha_levels: u32,
}

#[derive(Debug, Clone, Args)]
pub struct DeriveArgs {
    #[arg(long = "fn", value_enum)]
    pub function: Function,

    /// Polynomial coefficients c0,c1,... for custom-envelope
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub poly: Option<Vec<f64>>,

    /// Points at which to differentiate
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_value = "0"
    )]
    pub t: Vec<f64>,

    #[command(flatten)]
    pub coeff: CoeffArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DomainArgs {
    /// Truncation index of the series
    #[arg(long, default_value_t = 1)]
    pub m: usize,

    /// Search for the maximal rectangle instead of a square
    #[arg(long)]
    pub rect: bool,

    /// Accept kernel values down to -epsilon
    #[arg(long, default_value_t = 0.0)]
    pub epsilon: f64,

    /// Bisection tolerance on the square side
    #[arg(long, default_value_t = fuzzy_wave_core::wave::domain::REFINE_TOL)]
    pub refine_tol: f64,

    /// Column spacing of the rectangle search
    #[arg(long, default_value_t = fuzzy_wave_core::wave::domain::RECT_RESOLUTION)]
    pub resolution: f64,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[arg(long, default_value_t = 0)]
    pub m: usize,

    #[arg(long, default_value_t = std::f64::consts::PI)]
    pub xmax: f64,

    #[arg(long, default_value_t = std::f64::consts::PI)]
    pub tmax: f64,

    #[arg(long, default_value_t = 0.05)]
    pub step: f64,

    /// Emit the level solutions x,t,alpha,u1,u2 instead of x,t,z
    #[arg(long)]
    pub fuzzy: bool,

    #[command(flatten)]
    pub coeff: CoeffArgs,

    /// Write to this file instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    pub m: usize,

    /// Side of the square [0,s]² to check; defaults to the computed validity square
    #[arg(long)]
    pub domain: Option<f64>,

    /// Grid step of the fuzzy-validity scan
    #[arg(long, default_value_t = 0.01)]
    pub resolution: f64,

    #[command(flatten)]
    pub coeff: CoeffArgs,
}
