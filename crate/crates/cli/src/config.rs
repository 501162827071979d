//! Run configuration: JSON file fields overridden by command-line flags.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "model": "pulse",
//!   "A": 100, "B": -50, "lambda": 1,
//!   "N": [15, 20, 30, 50, 100],
//!   "units": "neg-lambda2",
//!   "verify": { "only": ["table1"] }
//! }
//! ```
//!
//! Every field is optional except `schema_version`. `N` and `k` accept a
//! number or a list.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use pps_core::models::{Branch, ModelKind, DEFAULT_TRUNCATION};
use pps_core::oracle::Grid1D;
use serde::Deserialize;

use crate::{CliError, ModelArgs};

pub const SCHEMA_VERSION: u32 = 1;

pub const DEFAULT_LAMBDA: f64 = 1.0;
pub const DEFAULT_KMAX: usize = 3;
pub const DEFAULT_COUNT: usize = 4;

/// Energy display convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Units {
    /// E in hartree
    #[default]
    Atomic,
    /// -E / lambda^2, the convention of the pulse tables
    #[value(name = "neg-lambda2")]
    NegLambda2,
    /// E / lambda^2
    Lambda2,
}

impl Units {
    pub fn name(self) -> &'static str {
        match self {
            Units::Atomic => "atomic",
            Units::NegLambda2 => "neg-lambda2",
            Units::Lambda2 => "lambda2",
        }
    }

    pub fn display(self, energy: f64, lambda: f64) -> f64 {
        match self {
            Units::Atomic => energy,
            Units::NegLambda2 => -energy / (lambda * lambda),
            Units::Lambda2 => energy / (lambda * lambda),
        }
    }
}

impl FromStr for Units {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        <Units as ValueEnum>::from_str(s, true)
    }
}

/// `x0:x1:n`, a uniform grid with `n` points including both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x0: f64,
    pub x1: f64,
    pub n: usize,
}

impl GridSpec {
    pub const fn new(x0: f64, x1: f64, n: usize) -> Self {
        Self { x0, x1, n }
    }

    pub fn default_for(model: ModelKind) -> Self {
        match model {
            ModelKind::Kratzer => Self::new(0.0, 40.0, 8001),
            ModelKind::Morse => Self::new(-10.0, 35.0, 9001),
            ModelKind::Pulse => Self::new(-25.0, 25.0, 10001),
        }
    }

    pub fn points(&self) -> Result<Vec<f64>, CliError> {
        Ok(Grid1D::new(self.x0, self.x1, self.n)?.points())
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("grid '{s}' is not of the form x0:x1:n"));
        }
        let num = |p: &str| p.trim().parse::<f64>().map_err(|e| format!("grid bound '{p}': {e}"));
        let n = parts[2].trim().parse::<usize>().map_err(|e| format!("grid count '{}': {e}", parts[2]))?;
        Ok(Self { x0: num(parts[0])?, x1: num(parts[1])?, n })
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.x0, self.x1, self.n)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum OneOrMany {
    One(usize),
    Many(Vec<usize>),
}

impl OneOrMany {
    fn into_vec(self) -> Vec<usize> {
        match self {
            OneOrMany::One(v) => vec![v],
            OneOrMany::Many(v) => v,
        }
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyToggles {
    #[serde(default)]
    pub only: Vec<String>,
}

/// Contents of a `--config` file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub schema_version: u32,
    pub model: Option<String>,
    pub energy: Option<f64>,
    #[serde(rename = "Z")]
    pub z: Option<f64>,
    pub ell: Option<u32>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    #[serde(rename = "A")]
    pub a: Option<f64>,
    #[serde(rename = "B")]
    pub b: Option<f64>,
    pub ratio: Option<f64>,
    pub lambda: Option<f64>,
    #[serde(rename = "N")]
    pub n: Option<OneOrMany>,
    pub kmax: Option<usize>,
    pub count: Option<usize>,
    pub k: Option<OneOrMany>,
    pub nu: Option<f64>,
    pub branch: Option<String>,
    pub grid: Option<String>,
    pub units: Option<String>,
    pub out: Option<PathBuf>,
    pub provenance: Option<bool>,
    pub verify: Option<VerifyToggles>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::param(format!("cannot read config {}: {e}", path.display())))?;
        let cfg: FileConfig = serde_json::from_str(&text)
            .map_err(|e| CliError::param(format!("invalid config {}: {e}", path.display())))?;
        if cfg.schema_version != SCHEMA_VERSION {
            return Err(CliError::param(format!(
                "config schema_version {} is not supported (expected {SCHEMA_VERSION})",
                cfg.schema_version
            )));
        }
        Ok(cfg)
    }
}

/// Fully merged settings for one command.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub model: Option<ModelKind>,
    pub energy: Option<f64>,
    pub z: Option<f64>,
    pub ell: u32,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub ratio: Option<f64>,
    pub lambda: f64,
    pub n: Vec<usize>,
    pub kmax: usize,
    pub count: usize,
    pub k: Vec<usize>,
    pub nu: Option<f64>,
    pub branch: Branch,
    pub grid: Option<GridSpec>,
    pub units: Units,
    pub out: Option<PathBuf>,
    pub provenance: bool,
}

fn parse_field<T: FromStr>(name: &str, value: Option<String>) -> Result<Option<T>, CliError>
where
    T::Err: fmt::Display,
{
    value
        .map(|v| v.parse::<T>().map_err(|e| CliError::param(format!("config field {name}: {e}"))))
        .transpose()
}

impl RunConfig {
    pub fn resolve(args: &ModelArgs) -> Result<Self, CliError> {
        let file = match &args.io.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig { schema_version: SCHEMA_VERSION, ..FileConfig::default() },
        };
        Self::merge(args, file)
    }

    /// Flags win over file fields; anything unset falls back to its default.
    pub fn merge(args: &ModelArgs, file: FileConfig) -> Result<Self, CliError> {
        let file_model = parse_field::<ModelKind>("model", file.model)?;
        let file_branch = parse_field::<Branch>("branch", file.branch)?;
        let file_grid = parse_field::<GridSpec>("grid", file.grid)?;
        let file_units = parse_field::<Units>("units", file.units)?;
        let pick_list = |flag: &Vec<usize>, file: Option<OneOrMany>| {
            if flag.is_empty() {
                file.map(OneOrMany::into_vec).unwrap_or_default()
            } else {
                flag.clone()
            }
        };
        let n = pick_list(&args.n, file.n);
        let k = pick_list(&args.k, file.k);
        Ok(Self {
            model: args.model().or(file_model),
            energy: args.energy.or(file.energy),
            z: args.z.or(file.z),
            ell: args.ell.or(file.ell).unwrap_or(0),
            alpha: args.alpha.or(file.alpha),
            beta: args.beta.or(file.beta),
            a: args.a.or(file.a),
            b: args.b.or(file.b),
            ratio: args.ratio.or(file.ratio),
            lambda: args.lambda.or(file.lambda).unwrap_or(DEFAULT_LAMBDA),
            n: if n.is_empty() { vec![DEFAULT_TRUNCATION] } else { n },
            kmax: args.kmax.or(file.kmax).unwrap_or(DEFAULT_KMAX),
            count: args.count.or(file.count).unwrap_or(DEFAULT_COUNT),
            k: if k.is_empty() { vec![0] } else { k },
            nu: args.nu.or(file.nu),
            branch: args.branch.or(file_branch).unwrap_or_default(),
            grid: args.grid.or(file_grid),
            units: args.units.or(file_units).unwrap_or_default(),
            out: args.io.out.clone().or(file.out),
            provenance: args.io.provenance || file.provenance.unwrap_or(false),
        })
    }

    pub fn require_model(&self) -> Result<ModelKind, CliError> {
        self.model.ok_or_else(|| CliError::param("no model given (expected kratzer, morse or pulse)"))
    }

    /// First truncation of the `--N` list.
    pub fn truncation(&self) -> usize {
        self.n[0]
    }

    pub fn grid_for(&self, model: ModelKind) -> GridSpec {
        self.grid.unwrap_or_else(|| GridSpec::default_for(model))
    }

    /// `# key=value` lines describing every input, including defaults.
    pub fn provenance_lines(&self, command: &str) -> Vec<String> {
        let opt = |v: Option<f64>| v.map_or_else(|| "unset".to_string(), |v| v.to_string());
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let mut lines = vec![
            format!("pps {} {command}", env!("CARGO_PKG_VERSION")),
            format!("model={}", self.model.map_or("unset", |m| m.name())),
            format!("energy={}", opt(self.energy)),
            format!("Z={}", opt(self.z)),
            format!("ell={}", self.ell),
            format!("alpha={}", opt(self.alpha)),
            format!("beta={}", opt(self.beta)),
            format!("A={}", opt(self.a)),
            format!("B={}", opt(self.b)),
            format!("ratio={}", opt(self.ratio)),
            format!("lambda={}", self.lambda),
            format!("N={}", list(&self.n)),
            format!("kmax={}", self.kmax),
            format!("count={}", self.count),
            format!("k={}", list(&self.k)),
            format!("nu={}", opt(self.nu)),
            format!("branch={}", self.branch.name()),
            format!("units={}", self.units.name()),
            format!("tail_tolerance={:e}", pps_core::models::TAIL_TOLERANCE),
        ];
        if let Some(m) = self.model {
            lines.push(format!("grid={}", self.grid_for(m)));
        }
        if self.model == Some(ModelKind::Pulse) {
            let s = pps_core::models::PulseSolver::default();
            lines.push(format!("mu_step={} mu_min={} mu_tolerance=1e-13 pps_stability=1e-9", s.mu_step, s.mu_min));
        }
        lines
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_spec_round_trip() {
        let g: GridSpec = "-8:25.5:1001".parse().unwrap();
        assert_eq!(g, GridSpec::new(-8.0, 25.5, 1001));
        assert_eq!(g.to_string(), "-8:25.5:1001");
        assert!("1:2".parse::<GridSpec>().is_err());
        assert!("a:2:3".parse::<GridSpec>().is_err());
    }

    #[test]
    fn units_display() {
        assert_eq!(Units::NegLambda2.display(-8.0, 2.0), 2.0);
        assert_eq!(Units::Lambda2.display(-8.0, 2.0), -2.0);
        assert_eq!("neg-lambda2".parse::<Units>().unwrap(), Units::NegLambda2);
    }

    #[test]
    fn file_values_fill_gaps_and_flags_win() {
        let file: FileConfig = serde_json::from_str(
            r#"{"schema_version": 1, "model": "pulse", "A": 100, "B": -50, "N": [15, 20], "units": "neg-lambda2", "lambda": 2}"#,
        )
        .unwrap();
        let args = ModelArgs { a: Some(80.0), n: vec![30], ..ModelArgs::default() };
        let c = RunConfig::merge(&args, file).unwrap();
        assert_eq!(c.model, Some(ModelKind::Pulse));
        assert_eq!(c.a, Some(80.0));
        assert_eq!(c.b, Some(-50.0));
        assert_eq!(c.n, vec![30]);
        assert_eq!(c.units, Units::NegLambda2);
        assert_eq!(c.lambda, 2.0);
    }

    #[test]
    fn defaults() {
        let file = FileConfig { schema_version: 1, ..FileConfig::default() };
        let c = RunConfig::merge(&ModelArgs::default(), file).unwrap();
        assert_eq!(c.n, vec![100]);
        assert_eq!(c.k, vec![0]);
        assert_eq!(c.lambda, 1.0);
        assert_eq!(c.branch, Branch::Auto);
        assert_eq!(c.units, Units::Atomic);
        assert!(c.require_model().is_err());
    }

    #[test]
    fn unknown_fields_rejected() {
        assert!(serde_json::from_str::<FileConfig>(r#"{"schema_version": 1, "bogus": 2}"#).is_err());
        let n: FileConfig = serde_json::from_str(r#"{"schema_version": 1, "N": 40, "k": [1, 2]}"#).unwrap();
        assert_eq!(n.n.unwrap().into_vec(), vec![40]);
    }
}
