//! Kratzer, generalized Morse and hyperbolic pulse pipelines.
//!
//! Each model exposes its potential, the potential parameter spectrum at a
//! fixed negative energy, the energy spectrum obtained by inverting that
//! relation, and wavefunctions synthesized from the expansion coefficients.
//! Atomic units (ħ = m = 1) throughout.

mod kratzer;
mod morse;
mod pulse;

pub use kratzer::{
    kratzer_bound_state, kratzer_default_nu, kratzer_pps, kratzer_potential, kratzer_spectrum,
    kratzer_wavefunction, kratzer_wavefunction_with_nu, KratzerParams,
};
pub use morse::{
    morse_bound_state, morse_potential, morse_pps, morse_spectrum, morse_sqrt_c,
    morse_wavefunction, MorseParams,
};
pub use pulse::{
    pulse_bound_state, pulse_potential, pulse_pps, pulse_spectrum, pulse_wavefunction, Branch,
    PulseParams, PulseSolver,
};

use crate::{Error, Result};

/// Default basis truncation.
pub const DEFAULT_TRUNCATION: usize = 100;

/// Largest admissible `|f_{N-1}| / max |f_n|` for an accepted expansion.
pub const TAIL_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Kratzer,
    Morse,
    Pulse,
}

impl ModelKind {
    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Kratzer => "kratzer",
            ModelKind::Morse => "morse",
            ModelKind::Pulse => "pulse",
        }
    }
}

impl std::fmt::Display for ModelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "kratzer" => Ok(ModelKind::Kratzer),
            "morse" => Ok(ModelKind::Morse),
            "pulse" => Ok(ModelKind::Pulse),
            other => Err(Error::Domain(format!("unknown model '{other}' (expected kratzer, morse or pulse)"))),
        }
    }
}

/// A potential model with its physical parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelParams {
    Kratzer(KratzerParams),
    Morse(MorseParams),
    Pulse(PulseParams),
}

impl ModelParams {
    pub fn kind(&self) -> ModelKind {
        match self {
            ModelParams::Kratzer(_) => ModelKind::Kratzer,
            ModelParams::Morse(_) => ModelKind::Morse,
            ModelParams::Pulse(_) => ModelKind::Pulse,
        }
    }

    /// Potential entering `H = -½ d²/dx² + V`; for Kratzer this includes the
    /// orbital term `ℓ(ℓ+1)/(2r²)`.
    pub fn effective_potential(&self, x: f64) -> f64 {
        match self {
            ModelParams::Kratzer(p) => kratzer_potential(x, p, true).unwrap_or(f64::NAN),
            ModelParams::Morse(p) => morse_potential(x, p),
            ModelParams::Pulse(p) => pulse_potential(x, p),
        }
    }
}

/// One member of a potential parameter spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PpsEntry {
    pub k: usize,
    pub rho: f64,
}

/// Discrete parameter values admitting a bound state at a fixed energy.
#[derive(Debug, Clone, PartialEq)]
pub struct PpsResult {
    pub model: ModelKind,
    pub energy: f64,
    /// Sorted by `k`.
    pub entries: Vec<PpsEntry>,
    /// Candidates dropped by a physical admissibility check.
    pub excluded: Vec<PpsEntry>,
    /// Kratzer: the index cap; Morse: the requested `k_max`; pulse: matrix size.
    pub truncation: Option<usize>,
    /// Explanation when the list is empty or shortened.
    pub status: Option<String>,
}

/// A bound state represented by its expansion coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundState {
    pub k: usize,
    pub energy: f64,
    /// `λ_k` (Kratzer), `ν_k` (Morse) or `μ_k` (pulse).
    pub basis_scale: f64,
    /// Expansion coefficients `f_n / f_0`.
    pub coefficients: Vec<f64>,
    /// Euclidean norm of the coefficient vector.
    pub normalization: f64,
}

/// Samples of a wavefunction and its potential on a coordinate grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    pub x: Vec<f64>,
    pub psi: Vec<f64>,
    pub potential: Vec<f64>,
    /// L² norm of the raw expansion before normalization.
    pub raw_norm: f64,
}

impl GridFunction {
    fn from_samples(x: Vec<f64>, psi: Vec<f64>, potential: Vec<f64>) -> Result<Self> {
        let raw_norm = trapezoid_norm(&x, &psi);
        if !(raw_norm > 0.0) || !raw_norm.is_finite() {
            return Err(Error::NumericalFailure(format!(
                "wavefunction has non-normalizable grid norm {raw_norm}"
            )));
        }
        let psi = psi.into_iter().map(|v| v / raw_norm).collect();
        Ok(Self { x, psi, potential, raw_norm })
    }

    /// Trapezoidal L² norm of `psi`.
    pub fn l2_norm(&self) -> f64 {
        trapezoid_norm(&self.x, &self.psi)
    }

    pub fn max_abs(&self) -> f64 {
        self.psi.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Sign changes of `psi`, ignoring samples below `1e-8 · max|ψ|`.
    pub fn node_count(&self) -> usize {
        let floor = 1e-8 * self.max_abs();
        let mut last = 0.0_f64;
        let mut nodes = 0;
        for &v in &self.psi {
            if v.abs() <= floor {
                continue;
            }
            if last != 0.0 && v.signum() != last.signum() {
                nodes += 1;
            }
            last = v;
        }
        nodes
    }
}

fn trapezoid_norm(x: &[f64], psi: &[f64]) -> f64 {
    let s: f64 = x
        .windows(2)
        .zip(psi.windows(2))
        .map(|(xw, pw)| 0.5 * (xw[1] - xw[0]) * (pw[0] * pw[0] + pw[1] * pw[1]))
        .sum();
    s.sqrt()
}

/// Rejects expansions whose last coefficient has not decayed.
fn check_tail(coefficients: &[f64]) -> Result<()> {
    let n = coefficients.len();
    let max = coefficients.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let tail = coefficients.last().map_or(0.0, |v| v.abs());
    let ratio = if max > 0.0 { tail / max } else { f64::INFINITY };
    if !(ratio <= TAIL_TOLERANCE) {
        return Err(Error::TruncationInsufficient {
            n,
            tail_ratio: ratio,
            tolerance: TAIL_TOLERANCE,
            suggested: 2 * n.max(1),
        });
    }
    Ok(())
}

fn coefficient_norm(c: &[f64]) -> f64 {
    c.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn require_negative_energy(energy: f64) -> Result<()> {
    if !(energy < 0.0) || !energy.is_finite() {
        return Err(Error::Domain(format!("energy E = {energy} must satisfy E < 0")));
    }
    Ok(())
}

fn require_positive(name: &str, v: f64) -> Result<()> {
    if !(v > 0.0) || !v.is_finite() {
        return Err(Error::Domain(format!("{name} = {v} must satisfy {name} > 0")));
    }
    Ok(())
}
