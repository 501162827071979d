//! Generalized Morse potential `(λ²/2)(α e^{-2λx} + β e^{-λx})`.
//!
//! Basis `y^{ν/2} e^{-y/2} L_n^ν(y)` with `y = e^{-λx}` and `(λν)² = -8E`.
//! The expansion coefficients are modified Meixner polynomials
//! `M̃_n(k; ν+1, c)`.

use super::{
    check_tail, coefficient_norm, require_negative_energy, require_positive, BoundState,
    GridFunction, ModelKind, PpsEntry, PpsResult,
};
use crate::orthopoly::{laguerre_series, meixner_mod_sequence, MeixnerParams};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorseParams {
    pub alpha: f64,
    pub beta: f64,
    /// Range parameter `λ > 0`.
    pub lambda: f64,
}

impl MorseParams {
    fn validate(&self) -> Result<()> {
        require_alpha(self.alpha)?;
        require_positive("lambda", self.lambda)?;
        if !(self.beta < 0.0) {
            return Err(Error::Domain(format!("Morse beta = {} must satisfy beta < 0", self.beta)));
        }
        Ok(())
    }
}

fn require_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.25) || !alpha.is_finite() {
        return Err(Error::Domain(format!("Morse alpha = {alpha} must satisfy alpha > 1/4")));
    }
    Ok(())
}

pub fn morse_potential(x: f64, p: &MorseParams) -> f64 {
    let e = (-p.lambda * x).exp();
    0.5 * p.lambda * p.lambda * e * (p.alpha * e + p.beta)
}

/// `√c = (4α - 4√α + 1)/(4α - 1) = (2√α - 1)/(2√α + 1)`.
pub fn morse_sqrt_c(alpha: f64) -> Result<f64> {
    require_alpha(alpha)?;
    let s = alpha.sqrt();
    Ok((2.0 * s - 1.0) / (2.0 * s + 1.0))
}

/// `β_k = -√α (2k + ν + 1)` for `k = 0..=k_max`, `ν = sqrt(-8E)/λ`.
pub fn morse_pps(energy: f64, alpha: f64, lambda: f64, k_max: usize) -> Result<PpsResult> {
    require_negative_energy(energy)?;
    require_alpha(alpha)?;
    require_positive("lambda", lambda)?;
    let nu = (-8.0 * energy).sqrt() / lambda;
    let s = alpha.sqrt();
    let entries = (0..=k_max)
        .map(|k| PpsEntry { k, rho: -s * (2.0 * k as f64 + nu + 1.0) })
        .collect();
    Ok(PpsResult {
        model: ModelKind::Morse,
        energy,
        entries,
        excluded: Vec::new(),
        truncation: Some(k_max),
        status: None,
    })
}

/// `E_k = -(λ²/8)(2k + 1 + β/√α)²` for every `k` with `E_k < 0` on the
/// bound branch `2k + 1 + β/√α < 0`.
pub fn morse_spectrum(p: &MorseParams) -> Result<Vec<f64>> {
    p.validate()?;
    let t = 1.0 + p.beta / p.alpha.sqrt();
    // k < -t/2 strictly; states within rounding of the edge have E = 0
    let edge_tol = 1e-12 * (1.0 + t.abs());
    let mut out = Vec::new();
    let mut k = 0usize;
    loop {
        let s = 2.0 * k as f64 + t;
        if s > -edge_tol {
            break;
        }
        out.push(-0.125 * p.lambda * p.lambda * s * s);
        k += 1;
    }
    Ok(out)
}

/// Meixner expansion coefficients of level `k`.
pub fn morse_bound_state(k: usize, p: &MorseParams, n: usize) -> Result<BoundState> {
    let spectrum = morse_spectrum(p)?;
    let energy = *spectrum.get(k).ok_or_else(|| {
        Error::Domain(format!("level k = {k} outside the {} bound state(s)", spectrum.len()))
    })?;
    let nu = (-8.0 * energy).sqrt() / p.lambda;
    let c = morse_sqrt_c(p.alpha)?.powi(2);
    let coefficients = meixner_mod_sequence(n, &MeixnerParams { gamma: nu + 1.0, c, k })?;
    check_tail(&coefficients)?;
    let normalization = coefficient_norm(&coefficients);
    Ok(BoundState { k, energy, basis_scale: nu, coefficients, normalization })
}

/// Unit-normalized wavefunction of level `k` on `x_grid`.
pub fn morse_wavefunction(k: usize, p: &MorseParams, x_grid: &[f64], n: usize) -> Result<GridFunction> {
    let state = morse_bound_state(k, p, n)?;
    let nu = state.basis_scale;
    let psi = x_grid
        .iter()
        .map(|&x| {
            let ln_y = -p.lambda * x;
            let y = ln_y.exp();
            let weight = (0.5 * nu * ln_y - 0.5 * y).exp();
            laguerre_series(&state.coefficients, nu, y, weight)
        })
        .collect();
    let potential = x_grid.iter().map(|&x| morse_potential(x, p)).collect();
    GridFunction::from_samples(x_grid.to_vec(), psi, potential)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::meixner_mod_eval;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn fig2() -> MorseParams {
        MorseParams { alpha: 5.0, beta: -5.0 * 5f64.sqrt(), lambda: 1.0 }
    }

    #[test]
    fn potential_values() {
        let p = fig2();
        assert_relative_eq!(morse_potential(0.0, &p), (5.0 - 5.0 * 5f64.sqrt()) / 2.0, max_relative = 1e-15);
        assert!(morse_potential(60.0, &p).abs() < 1e-20);
        let x_star = -(-p.beta / (2.0 * p.alpha)).ln() / p.lambda;
        let v_min = -p.lambda.powi(2) * p.beta.powi(2) / (8.0 * p.alpha);
        assert_relative_eq!(morse_potential(x_star, &p), v_min, max_relative = 1e-14);
        assert!(morse_potential(x_star + 1e-4, &p) > v_min);
        assert!(morse_potential(x_star - 1e-4, &p) > v_min);
    }

    #[test]
    fn sqrt_c_forms_agree() {
        for alpha in [0.3f64, 1.0, 5.0, 40.0] {
            let s = alpha.sqrt();
            let long = (4.0 * alpha - 4.0 * s + 1.0) / (4.0 * alpha - 1.0);
            assert_relative_eq!(morse_sqrt_c(alpha).unwrap(), long, max_relative = 1e-12);
        }
        let s5 = 5f64.sqrt();
        assert_relative_eq!(morse_sqrt_c(5.0).unwrap(), (21.0 - 4.0 * s5) / 19.0, max_relative = 1e-15);
        assert!(morse_sqrt_c(0.25).is_err());
    }

    #[test]
    fn pps_at_figure_two_configuration() {
        let pps = morse_pps(-2.0, 5.0, 1.0, 3).unwrap();
        let s5 = 5f64.sqrt();
        for e in &pps.entries {
            assert_relative_eq!(e.rho, -s5 * (2.0 * e.k as f64 + 5.0), max_relative = 1e-15);
        }
        assert_relative_eq!(pps.entries[0].rho, -11.180339887498949, max_relative = 1e-15);
        assert!(morse_pps(-2.0, 0.25, 1.0, 3).is_err());
        assert!(morse_pps(2.0, 5.0, 1.0, 3).is_err());
    }

    #[test]
    fn spectrum_excludes_zero_energy_edge() {
        let e = morse_spectrum(&fig2()).unwrap();
        assert_eq!(e.len(), 2);
        assert_relative_eq!(e[0], -2.0, max_relative = 1e-14);
        assert_relative_eq!(e[1], -0.5, max_relative = 1e-14);
        let empty = morse_spectrum(&MorseParams { beta: -5f64.sqrt(), ..fig2() }).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn spectrum_count_matches_cap() {
        for beta in [-3.1, -7.0, -20.5, -44.0] {
            let p = MorseParams { alpha: 5.0, beta, lambda: 1.3 };
            let bound = -0.5 * (1.0 + beta / 5f64.sqrt());
            assert_eq!(morse_spectrum(&p).unwrap().len(), bound.ceil() as usize);
        }
    }

    #[test]
    fn minimal_coefficients_agree_with_upward_recursion_at_low_degree() {
        let p = MorseParams { alpha: 5.0, beta: -30.0, lambda: 1.0 };
        for k in 0..3 {
            let state = morse_bound_state(k, &p, 100).unwrap();
            let m = MeixnerParams {
                gamma: state.basis_scale + 1.0,
                c: morse_sqrt_c(5.0).unwrap().powi(2),
                k,
            };
            for n in 0..10 {
                let up = meixner_mod_eval(n, &m).unwrap();
                assert!((state.coefficients[n] - up).abs() <= 1e-9 * (1.0 + up.abs()));
            }
        }
    }

    #[test]
    fn missing_level_is_a_domain_error() {
        assert!(matches!(morse_bound_state(2, &fig2(), 50), Err(Error::Domain(_))));
    }

    proptest! {
        #[test]
        fn pps_spectrum_round_trip(energy in -6.0f64..-0.01, alpha in 0.3f64..20.0, lambda in 0.2f64..3.0) {
            let pps = morse_pps(energy * lambda * lambda, alpha, lambda, 6).unwrap();
            for e in &pps.entries {
                let p = MorseParams { alpha, beta: e.rho, lambda };
                let spectrum = morse_spectrum(&p).unwrap();
                let target = energy * lambda * lambda;
                prop_assert!((spectrum[e.k] - target).abs() <= 1e-12 * target.abs());
            }
        }

        #[test]
        fn pps_spacing_is_constant(energy in -6.0f64..-0.01, alpha in 0.3f64..20.0) {
            let pps = morse_pps(energy, alpha, 1.0, 5).unwrap();
            for w in pps.entries.windows(2) {
                prop_assert!((w[1].rho - w[0].rho + 2.0 * alpha.sqrt()).abs() <= 1e-12 * w[1].rho.abs());
                prop_assert!(w[0].rho < 0.0);
            }
        }
    }
}
