//! Kratzer potential `Z/r + β/(2r²)` in three dimensions.
//!
//! Laguerre basis `(λr)^{1+ν/2} e^{-λr/2} L_n^ν(λr)` with `λ² = -8E`; the
//! expansion coefficients are continuous dual Hahn polynomials with
//! `a = b = (ν+1)/2`, `c = 2Z/λ + ½`.

use super::{
    check_tail, coefficient_norm, require_negative_energy, BoundState, GridFunction, ModelKind,
    PpsEntry, PpsResult,
};
use crate::orthopoly::{cdh_sequence, laguerre_series, CdhParams};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KratzerParams {
    /// Coulomb charge `Z`.
    pub z: f64,
    /// Inverse-square strength `β`.
    pub beta: f64,
    pub ell: u32,
}

impl KratzerParams {
    fn critical_beta(&self) -> f64 {
        critical_beta(self.ell)
    }

    fn check_subcritical(&self) -> Result<()> {
        if !(self.beta > self.critical_beta()) {
            return Err(Error::Supercritical { beta: self.beta, critical: self.critical_beta() });
        }
        Ok(())
    }

    /// `sqrt(β + (ℓ+½)²)`.
    fn root(&self) -> f64 {
        (self.beta - self.critical_beta()).sqrt()
    }
}

fn critical_beta(ell: u32) -> f64 {
    -(ell as f64 + 0.5).powi(2)
}

/// `Z/r + β/(2r²)`, plus `ℓ(ℓ+1)/(2r²)` when `with_orbital` is set.
pub fn kratzer_potential(r: f64, p: &KratzerParams, with_orbital: bool) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("radius r = {r} must satisfy r > 0")));
    }
    let mut inverse_square = 0.5 * p.beta;
    if with_orbital {
        let l = p.ell as f64;
        inverse_square += 0.5 * l * (l + 1.0);
    }
    Ok(p.z / r + inverse_square / (r * r))
}

/// `β_k = (k+ℓ+1+2Z/λ)(k-ℓ+2Z/λ)` for `k = 0..=floor(-(½+2Z/λ))`, `λ = sqrt(-8E)`.
pub fn kratzer_pps(energy: f64, z: f64, ell: u32) -> Result<PpsResult> {
    require_negative_energy(energy)?;
    let lambda = (-8.0 * energy).sqrt();
    let t = 2.0 * z / lambda;
    let mut out = PpsResult {
        model: ModelKind::Kratzer,
        energy,
        entries: Vec::new(),
        excluded: Vec::new(),
        truncation: None,
        status: None,
    };
    let bound = -(0.5 + t);
    if bound < 0.0 {
        out.status = Some(format!(
            "no bound state: Z = {z} > -lambda/4 = {} at E = {energy}",
            -lambda / 4.0
        ));
        return Ok(out);
    }
    let cap = bound.floor() as usize;
    out.truncation = Some(cap);
    let l = ell as f64;
    let critical = critical_beta(ell);
    for k in 0..=cap {
        let kf = k as f64;
        let rho = (kf + l + 1.0 + t) * (kf - l + t);
        let entry = PpsEntry { k, rho };
        if rho > critical {
            out.entries.push(entry);
        } else {
            out.excluded.push(entry);
        }
    }
    if !out.excluded.is_empty() {
        out.status = Some(format!(
            "{} value(s) at or below the critical coupling -(l+1/2)^2 = {critical} excluded",
            out.excluded.len()
        ));
    }
    Ok(out)
}

/// `E_k = -(Z²/2) / [k + ½ + sqrt(β + (ℓ+½)²)]²` for `k = 0..=k_max`.
pub fn kratzer_spectrum(p: &KratzerParams, k_max: usize) -> Result<Vec<f64>> {
    if !(p.z < 0.0) {
        return Err(Error::Domain(format!("Kratzer bound states need Z < 0, got Z = {}", p.z)));
    }
    p.check_subcritical()?;
    let root = p.root();
    Ok((0..=k_max)
        .map(|k| -0.5 * p.z * p.z / (k as f64 + 0.5 + root).powi(2))
        .collect())
}

/// Basis index `ν = 2 sqrt(β + (ℓ+½)²) - 1`, matching the small-`r` power of
/// the exact solution so the expansion terminates.
pub fn kratzer_default_nu(p: &KratzerParams) -> Result<f64> {
    p.check_subcritical()?;
    Ok(2.0 * p.root() - 1.0)
}

/// Expansion coefficients of level `k` in the energy-`k` Laguerre basis.
pub fn kratzer_bound_state(
    k: usize,
    p: &KratzerParams,
    n: usize,
    nu: Option<f64>,
) -> Result<(BoundState, f64)> {
    let energy = *kratzer_spectrum(p, k)?.last().expect("k_max >= 0");
    let nu = match nu {
        Some(v) if v > -1.0 => v,
        Some(v) => return Err(Error::Domain(format!("basis nu = {v} must satisfy nu > -1"))),
        None => kratzer_default_nu(p)?,
    };
    let lambda = (-8.0 * energy).sqrt();
    let alpha = 2.0 * p.z / lambda;
    let a = 0.5 * (nu + 1.0);
    let c = alpha + 0.5;
    let params = CdhParams { a, b: a, c, z2: -(k as f64 + c).powi(2) };
    let seq = cdh_sequence(n, &params)?;
    check_tail(&seq.values)?;
    let normalization = coefficient_norm(&seq.values);
    Ok((
        BoundState { k, energy, basis_scale: lambda, coefficients: seq.values, normalization },
        nu,
    ))
}

/// Unit-normalized radial wavefunction `u_k(r)` of level `k` on `r_grid`.
///
/// The potential column holds the effective potential including the orbital
/// term.
pub fn kratzer_wavefunction(k: usize, p: &KratzerParams, r_grid: &[f64], n: usize) -> Result<GridFunction> {
    kratzer_wavefunction_with_nu(k, p, r_grid, n, None)
}

/// [`kratzer_wavefunction`] with an explicit Laguerre index `ν`.
pub fn kratzer_wavefunction_with_nu(
    k: usize,
    p: &KratzerParams,
    r_grid: &[f64],
    n: usize,
    nu: Option<f64>,
) -> Result<GridFunction> {
    if let Some(r) = r_grid.iter().find(|r| !(**r >= 0.0)) {
        return Err(Error::Domain(format!("radial grid point r = {r} is negative")));
    }
    let (state, nu) = kratzer_bound_state(k, p, n, nu)?;
    let lambda = state.basis_scale;
    let power = 1.0 + 0.5 * nu;
    let psi = r_grid
        .iter()
        .map(|&r| {
            let x = lambda * r;
            let weight = if x == 0.0 { 0.0 } else { (power * x.ln() - 0.5 * x).exp() };
            laguerre_series(&state.coefficients, nu, x, weight)
        })
        .collect();
    let potential = r_grid
        .iter()
        .map(|&r| if r > 0.0 { kratzer_potential(r, p, true).unwrap_or(f64::NAN) } else { f64::NAN })
        .collect();
    GridFunction::from_samples(r_grid.to_vec(), psi, potential)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    const FIG1: KratzerParams = KratzerParams { z: -5.0, beta: 18.0, ell: 1 };

    #[test]
    fn potential_values() {
        let p = KratzerParams { z: -5.0, beta: 18.0, ell: 1 };
        assert_relative_eq!(kratzer_potential(1.0, &p, false).unwrap(), 4.0);
        assert_relative_eq!(kratzer_potential(1.0, &p, true).unwrap(), 5.0);
        let coulomb = KratzerParams { z: -5.0, beta: 0.0, ell: 0 };
        assert_relative_eq!(kratzer_potential(2.0, &coulomb, false).unwrap(), -2.5);
        assert!(kratzer_potential(1e12, &p, true).unwrap().abs() < 1e-11);
        assert!(kratzer_potential(0.0, &p, false).is_err());
    }

    #[test]
    fn pps_at_figure_one_configuration() {
        let pps = kratzer_pps(-0.5, -5.0, 1).unwrap();
        assert_eq!(pps.truncation, Some(4));
        let betas: Vec<f64> = pps.entries.iter().map(|e| e.rho).collect();
        assert_eq!(betas, vec![18.0, 10.0, 4.0, 0.0, -2.0]);
        assert!(pps.excluded.is_empty());
        assert!(-2.0 > critical_beta(1));
    }

    #[test]
    fn pps_empty_when_charge_too_weak() {
        let pps = kratzer_pps(-0.5, -0.1, 0).unwrap();
        assert!(pps.entries.is_empty());
        assert!(pps.status.unwrap().contains("no bound state"));
        assert!(kratzer_pps(0.0, -5.0, 1).is_err());
        assert!(kratzer_pps(0.3, -5.0, 1).is_err());
    }

    #[test]
    fn pps_excludes_critical_coupling() {
        // λ = 2, 2Z/λ = -2.5: k = 2 gives β = (k - 2)² - 2.25 + ... = -(ℓ+½)² exactly
        let pps = kratzer_pps(-0.5, -2.5, 1).unwrap();
        assert_eq!(pps.excluded.len(), 1);
        assert_eq!(pps.excluded[0].k, 2);
        assert_eq!(pps.excluded[0].rho, -2.25);
    }

    #[test]
    fn spectrum_values() {
        let e = kratzer_spectrum(&FIG1, 2).unwrap();
        assert_relative_eq!(e[0], -0.5, max_relative = 1e-15);
        assert_relative_eq!(e[1], -12.5 / 36.0, max_relative = 1e-15);
        assert_relative_eq!(e[2], -12.5 / 49.0, max_relative = 1e-15);
        let e = kratzer_spectrum(&KratzerParams { z: -5.0, beta: 0.0, ell: 1 }, 0).unwrap();
        assert_relative_eq!(e[0], -3.125, max_relative = 1e-15);
    }

    #[test]
    fn spectrum_rejects_supercritical_and_repulsive() {
        let p = KratzerParams { z: -5.0, beta: -2.25, ell: 1 };
        assert!(matches!(kratzer_spectrum(&p, 3), Err(Error::Supercritical { .. })));
        let p = KratzerParams { z: 1.0, beta: 0.0, ell: 0 };
        assert!(matches!(kratzer_spectrum(&p, 3), Err(Error::Domain(_))));
        assert!(matches!(
            kratzer_wavefunction(0, &KratzerParams { z: -1.0, beta: -3.0, ell: 1 }, &[1.0, 2.0], 30),
            Err(Error::Supercritical { .. })
        ));
    }

    #[test]
    fn default_basis_expansion_terminates() {
        for k in 0..4 {
            let p = KratzerParams { beta: ((k as f64) - 3.0) * ((k as f64) - 6.0), ..FIG1 };
            let (state, _) = kratzer_bound_state(k, &p, 100, None).unwrap();
            assert_relative_eq!(state.energy, -0.5, max_relative = 1e-12);
            for (n, c) in state.coefficients.iter().enumerate() {
                if n > k {
                    assert_eq!(*c, 0.0);
                }
            }
        }
    }

    #[test]
    fn non_terminating_basis_reports_truncation() {
        let grid: Vec<f64> = (1..200).map(|i| i as f64 * 0.1).collect();
        let err = kratzer_wavefunction_with_nu(2, &FIG1, &grid, 40, Some(9.5)).unwrap_err();
        assert!(matches!(err, Error::TruncationInsufficient { n: 40, suggested: 80, .. }));
    }

    proptest! {
        #[test]
        fn pps_spectrum_round_trip(energy in -4.0f64..-0.05, z in -12.0f64..-0.5, ell in 0u32..4) {
            let pps = kratzer_pps(energy, z, ell).unwrap();
            for e in &pps.entries {
                let p = KratzerParams { z, beta: e.rho, ell };
                let spectrum = kratzer_spectrum(&p, e.k).unwrap();
                prop_assert!((spectrum[e.k] - energy).abs() <= 1e-12 * energy.abs());
            }
        }

        #[test]
        fn spectrum_increases_toward_zero(z in -10.0f64..-0.1, beta in -2.0f64..30.0) {
            let e = kratzer_spectrum(&KratzerParams { z, beta, ell: 1 }, 20).unwrap();
            prop_assert!(e.windows(2).all(|w| w[1] > w[0]));
            prop_assert!(e.iter().all(|&v| v < 0.0));
        }
    }
}
