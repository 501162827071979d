//! Command-line front end: PPS tables, spectra, wavefunctions, figure data and
//! the verification suite, all written as CSV.

pub mod commands;
pub mod config;
pub mod output;
pub mod verify;

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use pps_core::models::{Branch, ModelKind};

pub use config::{GridSpec, RunConfig, Units};

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// A verification check failed.
pub const EXIT_VERIFY: i32 = 1;
/// Invalid parameters, configuration or I/O.
pub const EXIT_PARAM: i32 = 2;
/// Truncation or convergence failure.
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "pps", version, about = "Potential parameter spectra and bound states by the tridiagonal representation approach")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Potential parameter spectrum at a fixed energy: columns k,rho_k,model,energy,N
    Pps(ModelArgs),
    /// Bound-state energies: columns k,E_k,units (one E column per N for pulse)
    Spectrum(ModelArgs),
    /// Unit-normalized wavefunctions: columns x (r for kratzer),psi,V
    Wavefunction(ModelArgs),
    /// Data behind figure 4 (PPS against energy) or figure 5 (spectrum against B/A)
    Figure(FigureArgs),
    /// Run the verification suite; exit 0 iff every check passes
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Default, Args)]
#[command(allow_negative_numbers = true)]
pub struct ModelArgs {
    /// kratzer, morse or pulse
    #[arg(value_name = "MODEL")]
    pub model_pos: Option<ModelKind>,

    /// Same as the positional MODEL
    #[arg(long = "model")]
    pub model: Option<ModelKind>,

    /// Fixed energy E < 0 in atomic units
    #[arg(long)]
    pub energy: Option<f64>,

    /// Kratzer Coulomb charge Z
    #[arg(long = "Z")]
    pub z: Option<f64>,

    /// Kratzer angular momentum [default: 0]
    #[arg(long)]
    pub ell: Option<u32>,

    /// Morse alpha (> 1/4)
    #[arg(long)]
    pub alpha: Option<f64>,

    /// Kratzer inverse-square strength or Morse beta
    #[arg(long)]
    pub beta: Option<f64>,

    /// Pulse amplitude A
    #[arg(long = "A")]
    pub a: Option<f64>,

    /// Pulse offset B
    #[arg(long = "B")]
    pub b: Option<f64>,

    /// Pulse ratio B/A in [-1, 1]
    #[arg(long)]
    pub ratio: Option<f64>,

    /// Range parameter lambda > 0 [default: 1]
    #[arg(long)]
    pub lambda: Option<f64>,

    /// Basis truncation; a comma list gives one spectrum column per N [default: 100]
    #[arg(long = "N", value_delimiter = ',')]
    pub n: Vec<usize>,

    /// Highest level index for kratzer spectra and morse PPS [default: 3]
    #[arg(long)]
    pub kmax: Option<usize>,

    /// Number of pulse PPS values [default: 4]
    #[arg(long)]
    pub count: Option<usize>,

    /// Level indices for wavefunctions, comma separated [default: 0]
    #[arg(long = "k", value_delimiter = ',')]
    pub k: Vec<usize>,

    /// Kratzer Laguerre index nu [default: 2 sqrt(beta + (ell+1/2)^2) - 1]
    #[arg(long)]
    pub nu: Option<f64>,

    /// Sign of A kept in pulse PPS: auto, positive, negative or both [default: auto]
    #[arg(long, value_parser = parse_branch)]
    pub branch: Option<Branch>,

    /// Coordinate grid x0:x1:n [default: kratzer 0:40:8001, morse -10:35:9001, pulse -25:25:10001]
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<GridSpec>,

    /// Energy display: atomic, neg-lambda2 (-E/lambda^2) or lambda2 (E/lambda^2) [default: atomic]
    #[arg(long, value_enum)]
    pub units: Option<Units>,

    #[command(flatten)]
    pub io: IoArgs,
}

impl ModelArgs {
    pub fn model(&self) -> Option<ModelKind> {
        self.model.or(self.model_pos)
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct IoArgs {
    /// Write CSV here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// JSON configuration file; flags override its fields
    #[arg(long)]
    pub config: Option<PathBuf>,

    /// Prefix the CSV with '#' comment lines recording every input and default
    #[arg(long)]
    pub provenance: bool,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct FigureArgs {
    /// 4 (PPS against energy, ratio -0.7) or 5 (spectrum against B/A, A = 100)
    #[arg(value_parser = clap::value_parser!(u8).range(4..=5))]
    pub id: u8,

    #[command(flatten)]
    pub model: ModelArgs,
}

#[derive(Debug, Clone, Default, Args)]
#[command(allow_negative_numbers = true)]
pub struct VerifyArgs {
    /// Run only these groups, comma separated (see --list)
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,

    /// List the check groups and exit
    #[arg(long)]
    pub list: bool,

    /// Scale every pulse recursion coefficient G_n by (1 + REL) in the Table 1 checks
    #[arg(long, hide = true, value_name = "REL")]
    pub debug_perturb_recursion: Option<f64>,

    #[command(flatten)]
    pub io: IoArgs,
}

fn parse_branch(s: &str) -> Result<Branch, String> {
    s.parse().map_err(|e: pps_core::Error| e.to_string())
}

/// Error carrying its exit status.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn param(message: impl Into<String>) -> Self {
        Self { code: EXIT_PARAM, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<pps_core::Error> for CliError {
    fn from(e: pps_core::Error) -> Self {
        let code = if e.is_numerical() { EXIT_NUMERICAL } else { EXIT_PARAM };
        Self { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::param(format!("i/o error: {e}"))
    }
}

/// Runs one parsed command and returns its exit status.
pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Pps(args) => RunConfig::resolve(&args).and_then(|c| commands::pps(&c)),
        Command::Spectrum(args) => RunConfig::resolve(&args).and_then(|c| commands::spectrum(&c)),
        Command::Wavefunction(args) => RunConfig::resolve(&args).and_then(|c| commands::wavefunction(&c)),
        Command::Figure(args) => RunConfig::resolve(&args.model).and_then(|c| commands::figure(args.id, &c)),
        Command::Verify(args) => verify::command(&args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.code
        }
    }
}
