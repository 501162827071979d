//! `pps`, `spectrum`, `wavefunction` and `figure`.

use pps_core::models::{
    kratzer_pps, kratzer_spectrum, kratzer_wavefunction_with_nu, morse_pps, morse_spectrum,
    morse_wavefunction, pulse_pps, pulse_spectrum, pulse_wavefunction, GridFunction,
    KratzerParams, ModelKind, MorseParams, PpsResult, PulseParams, PulseSolver,
};

use crate::output::{real, Table};
use crate::{CliError, RunConfig, EXIT_OK};

/// Relative energy match when locating the pulse level that sits at `--energy`.
const LEVEL_MATCH: f64 = 1e-9;

fn need(value: Option<f64>, flag: &str, model: ModelKind) -> Result<f64, CliError> {
    value.ok_or_else(|| CliError::param(format!("{model} needs --{flag}")))
}

fn finish(mut table: Table, c: &RunConfig, command: &str) -> Result<i32, CliError> {
    if c.provenance {
        let mut lines = c.provenance_lines(command);
        lines.append(&mut table.comments);
        table.comments = lines;
    }
    table.emit(c.out.as_deref())?;
    Ok(EXIT_OK)
}

fn status_note(result: &PpsResult) {
    if let Some(s) = &result.status {
        eprintln!("note: {s}");
    }
}

fn kratzer_params(c: &RunConfig) -> Result<KratzerParams, CliError> {
    let m = ModelKind::Kratzer;
    Ok(KratzerParams { z: need(c.z, "Z", m)?, beta: need(c.beta, "beta", m)?, ell: c.ell })
}

fn morse_params(c: &RunConfig) -> Result<MorseParams, CliError> {
    let m = ModelKind::Morse;
    Ok(MorseParams { alpha: need(c.alpha, "alpha", m)?, beta: need(c.beta, "beta", m)?, lambda: c.lambda })
}

/// `--A` with `--B` or `--ratio`.
fn pulse_params(c: &RunConfig) -> Result<PulseParams, CliError> {
    let a = need(c.a, "A", ModelKind::Pulse)?;
    let b = match (c.b, c.ratio) {
        (Some(b), _) => b,
        (None, Some(r)) => r * a,
        (None, None) => return Err(CliError::param("pulse needs --B or --ratio")),
    };
    Ok(PulseParams { a, b, lambda: c.lambda })
}

fn pulse_ratio(c: &RunConfig) -> Result<f64, CliError> {
    match (c.ratio, c.a, c.b) {
        (Some(r), _, _) => Ok(r),
        (None, Some(a), Some(b)) => Ok(b / a),
        _ => Err(CliError::param("pulse needs --ratio (or both --A and --B)")),
    }
}

pub fn compute_pps(c: &RunConfig) -> Result<PpsResult, CliError> {
    let model = c.require_model()?;
    let energy = need(c.energy, "energy", model)?;
    let result = match model {
        ModelKind::Kratzer => kratzer_pps(energy, need(c.z, "Z", model)?, c.ell)?,
        ModelKind::Morse => morse_pps(energy, need(c.alpha, "alpha", model)?, c.lambda, c.kmax)?,
        ModelKind::Pulse => {
            pulse_pps(energy, pulse_ratio(c)?, c.lambda, c.count, c.branch, &PulseSolver::with_n(c.truncation()))?
        }
    };
    Ok(result)
}

pub fn pps(c: &RunConfig) -> Result<i32, CliError> {
    let result = compute_pps(c)?;
    status_note(&result);
    let mut table = Table::new(&["k", "rho_k", "model", "energy", "N"]);
    let n = match result.model {
        ModelKind::Pulse => c.truncation().to_string(),
        _ => String::new(),
    };
    for e in &result.entries {
        table.push(vec![e.k.to_string(), real(e.rho), result.model.to_string(), real(result.energy), n.clone()]);
    }
    finish(table, c, "pps")
}

/// Bound-state energies in atomic units, one list per truncation for pulse.
pub fn compute_spectrum(c: &RunConfig) -> Result<Vec<Vec<f64>>, CliError> {
    let model = c.require_model()?;
    Ok(match model {
        ModelKind::Kratzer => vec![kratzer_spectrum(&kratzer_params(c)?, c.kmax)?],
        ModelKind::Morse => vec![morse_spectrum(&morse_params(c)?)?],
        ModelKind::Pulse => {
            let p = pulse_params(c)?;
            c.n.iter().map(|&n| pulse_spectrum(&p, &PulseSolver::with_n(n))).collect::<Result<_, _>>()?
        }
    })
}

pub fn spectrum(c: &RunConfig) -> Result<i32, CliError> {
    let model = c.require_model()?;
    let columns = compute_spectrum(c)?;
    let mut header = vec!["k".to_string()];
    if columns.len() == 1 {
        header.push("E_k".into());
    } else {
        header.extend(c.n.iter().map(|n| format!("E_k_N{n}")));
    }
    header.push("units".into());
    let mut table = Table { header, ..Table::default() };
    let rows = columns.iter().map(Vec::len).max().unwrap_or(0);
    if rows == 0 {
        eprintln!("note: the {model} potential supports no bound state for these parameters");
    }
    for k in 0..rows {
        let mut row = vec![k.to_string()];
        for col in &columns {
            row.push(col.get(k).map_or_else(String::new, |&e| real(c.units.display(e, c.lambda))));
        }
        row.push(c.units.name().into());
        table.push(row);
    }
    finish(table, c, "spectrum")
}

/// Index of the level at `energy` in a pulse spectrum.
fn level_at(levels: &[f64], energy: f64) -> Option<usize> {
    levels.iter().position(|&e| (e - energy).abs() <= LEVEL_MATCH * energy.abs())
}

pub fn compute_wavefunction(c: &RunConfig, k: usize) -> Result<GridFunction, CliError> {
    let model = c.require_model()?;
    let grid = c.grid_for(model).points()?;
    let n = c.truncation();
    // with --energy and no potential strength, the strength is the k-th PPS value
    let from_energy = c.energy.is_some()
        && match model {
            ModelKind::Pulse => c.a.is_none(),
            _ => c.beta.is_none(),
        };
    let f = match model {
        ModelKind::Kratzer => {
            let mut p = KratzerParams { z: need(c.z, "Z", model)?, beta: 0.0, ell: c.ell };
            p.beta = if from_energy { pps_value(c, k)? } else { need(c.beta, "beta", model)? };
            kratzer_wavefunction_with_nu(k, &p, &grid, n, c.nu)?
        }
        ModelKind::Morse => {
            let mut p = MorseParams { alpha: need(c.alpha, "alpha", model)?, beta: 0.0, lambda: c.lambda };
            p.beta = if from_energy { pps_value(c, k)? } else { need(c.beta, "beta", model)? };
            morse_wavefunction(k, &p, &grid, n)?
        }
        ModelKind::Pulse if from_energy => {
            let energy = need(c.energy, "energy", model)?;
            let ratio = pulse_ratio(c)?;
            let a = pps_value(&RunConfig { count: c.count.max(k + 1), ..c.clone() }, k)?;
            let p = PulseParams { a, b: a * ratio, lambda: c.lambda };
            let s = PulseSolver::with_n(n);
            let level = level_at(&pulse_spectrum(&p, &s)?, energy).ok_or_else(|| {
                CliError::param(format!("no level of the pulse with A = {a} lies at E = {energy}"))
            })?;
            pulse_wavefunction(level, &p, &grid, &s)?
        }
        ModelKind::Pulse => pulse_wavefunction(k, &pulse_params(c)?, &grid, &PulseSolver::with_n(n))?,
    };
    Ok(f)
}

fn pps_value(c: &RunConfig, k: usize) -> Result<f64, CliError> {
    let result = compute_pps(c)?;
    result.entries.iter().find(|e| e.k == k).map(|e| e.rho).ok_or_else(|| {
        CliError::param(format!(
            "no PPS value with index k = {k} at E = {}{}",
            result.energy,
            result.status.as_deref().map_or_else(String::new, |s| format!(" ({s})"))
        ))
    })
}

pub fn wavefunction(c: &RunConfig) -> Result<i32, CliError> {
    let model = c.require_model()?;
    let coord = if model == ModelKind::Kratzer { "r" } else { "x" };
    let many = c.k.len() > 1;
    let mut header = Vec::new();
    if many {
        header.push("k");
    }
    header.extend([coord, "psi", "V"]);
    let mut table = Table::new(&header);
    for &k in &c.k {
        let f = compute_wavefunction(c, k)?;
        for i in 0..f.x.len() {
            let mut row = Vec::with_capacity(4);
            if many {
                row.push(k.to_string());
            }
            row.extend([real(f.x[i]), real(f.psi[i]), real(f.potential[i])]);
            table.push(row);
        }
    }
    finish(table, c, "wavefunction")
}

/// Energies of the figure 4 sweep in units of `λ²`: -10, -9.9, ..., -0.1.
pub fn figure4_energies() -> Vec<f64> {
    (1..=100).rev().map(|i| -(i as f64) / 10.0).collect()
}

/// Ratios of the figure 5 sweep: -1, -0.98, ..., 1.
pub fn figure5_ratios() -> Vec<f64> {
    (0..=100).map(|i| (i as f64 - 50.0) / 50.0).collect()
}

pub const FIGURE4_RATIO: f64 = -0.7;
pub const FIGURE5_A: f64 = 100.0;

pub fn figure(id: u8, c: &RunConfig) -> Result<i32, CliError> {
    if c.model.is_some_and(|m| m != ModelKind::Pulse) {
        return Err(CliError::param("figures 4 and 5 are pulse figures"));
    }
    let s = PulseSolver::with_n(c.truncation());
    let table = match id {
        4 => {
            let ratio = c.ratio.unwrap_or(FIGURE4_RATIO);
            let mut t = Table::new(&["E", "k", "A_k"]);
            for e in figure4_energies() {
                let energy = e * c.lambda * c.lambda;
                let r = pulse_pps(energy, ratio, c.lambda, c.count, c.branch, &s)?;
                for entry in &r.entries {
                    t.push(vec![real(c.units.display(energy, c.lambda)), entry.k.to_string(), real(entry.rho)]);
                }
            }
            t.comments.push(format!("B/A={ratio} branch={}", c.branch.name()));
            t
        }
        5 => {
            let a = c.a.unwrap_or(FIGURE5_A);
            let mut t = Table::new(&["ratio", "k", "E_k"]);
            for ratio in figure5_ratios() {
                let p = PulseParams { a, b: ratio * a, lambda: c.lambda };
                for (k, e) in pulse_spectrum(&p, &s)?.into_iter().enumerate() {
                    t.push(vec![real(ratio), k.to_string(), real(c.units.display(e, c.lambda))]);
                }
            }
            t.comments.push(format!("A={a} units={}", c.units.name()));
            t
        }
        other => return Err(CliError::param(format!("figure {other} is not available (expected 4 or 5)"))),
    };
    let mut table = table;
    if !c.provenance {
        table.comments.clear();
    }
    finish(table, c, &format!("figure {id}"))
}
