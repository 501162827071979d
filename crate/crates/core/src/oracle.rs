//! Finite-difference reference solver.
//!
//! Three-point central differences for `H = -½ d²/dx² + V` with Dirichlet
//! boundaries. Independent of the expansion machinery; only the tridiagonal
//! eigensolver is shared.

use crate::models::{GridFunction, ModelParams};
use crate::spectral::{sym_tridiag_eigenvalues_tol, SymTridiag, Which};
use crate::{Error, Result};

/// Uniform grid on `[x0, x1]` with `n_points` nodes including both endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub x0: f64,
    pub x1: f64,
    pub n_points: usize,
}

impl Grid1D {
    pub fn new(x0: f64, x1: f64, n_points: usize) -> Result<Self> {
        if !(x1 > x0) || !x0.is_finite() || !x1.is_finite() {
            return Err(Error::Domain(format!("grid needs finite x0 < x1, got [{x0}, {x1}]")));
        }
        if n_points < 3 {
            return Err(Error::Domain(format!("grid needs at least 3 points, got {n_points}")));
        }
        Ok(Self { x0, x1, n_points })
    }

    /// Grid on `[x0, x1]` with spacing as close to `h` as an integer count allows.
    pub fn with_spacing(x0: f64, x1: f64, h: f64) -> Result<Self> {
        if !(h > 0.0) {
            return Err(Error::Domain(format!("grid spacing h = {h} must be positive")));
        }
        let n = ((x1 - x0) / h).round() as usize + 1;
        Self::new(x0, x1, n.max(3))
    }

    pub fn spacing(&self) -> f64 {
        (self.x1 - self.x0) / (self.n_points - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.x1
        } else {
            self.x0 + i as f64 * self.spacing()
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.point(i)).collect()
    }

    /// Nodes strictly inside the grid, where the unknowns live.
    pub fn interior(&self) -> Vec<f64> {
        (1..self.n_points - 1).map(|i| self.point(i)).collect()
    }
}

/// `diag[i] = 1/h² + V(x_i)`, `offdiag[i] = -1/(2h²)` over the interior nodes.
pub fn fd_hamiltonian(potential: impl Fn(f64) -> f64, grid: &Grid1D) -> Result<SymTridiag> {
    let h = grid.spacing();
    let kinetic = 1.0 / (h * h);
    let interior = grid.interior();
    let mut diag = Vec::with_capacity(interior.len());
    for x in interior {
        let v = potential(x);
        if !v.is_finite() {
            return Err(Error::Domain(format!("potential is not finite at x = {x}")));
        }
        diag.push(kinetic + v);
    }
    let offdiag = vec![-0.5 * kinetic; diag.len() - 1];
    SymTridiag::new(diag, offdiag)
}

/// Lowest eigenvalues of the discretized Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct FdSpectrum {
    pub energies: Vec<f64>,
    /// Set when fewer than the requested number of negative eigenvalues exist.
    pub short_count: Option<String>,
}

/// Absolute bisection width for bound-state energies. Steep walls make
/// `‖H‖∞` huge, so the norm-scaled default would be far too coarse.
pub const FD_EIGEN_TOLERANCE: f64 = 1e-12;

/// The `count` lowest bound-state energies of `model` on `grid`, keeping only
/// negative eigenvalues.
pub fn fd_bound_states(model: &ModelParams, grid: &Grid1D, count: usize) -> Result<FdSpectrum> {
    let h = fd_hamiltonian(|x| model.effective_potential(x), grid)?;
    let negative = h.sturm_count(0.0);
    let take = count.min(negative);
    let energies = sym_tridiag_eigenvalues_tol(&h, Which::Lowest(take), FD_EIGEN_TOLERANCE);
    let short_count = (take < count)
        .then(|| format!("requested {count} states but the discretized {} model has {negative} negative eigenvalue(s)", model.kind()));
    Ok(FdSpectrum { energies, short_count })
}

/// Points dropped at each end of the grid by [`hamiltonian_residual`].
pub const RESIDUAL_MARGIN: usize = 5;

/// `‖(H_fd - E) ψ‖₂ / ‖ψ‖₂` over the interior, excluding
/// [`RESIDUAL_MARGIN`] points at each end. The grid must be uniform.
pub fn hamiltonian_residual(psi: &GridFunction, potential: impl Fn(f64) -> f64, energy: f64) -> Result<f64> {
    let n = psi.x.len();
    if n < 2 * RESIDUAL_MARGIN + 20 {
        return Err(Error::Domain(format!(
            "residual needs at least 20 interior points after trimming, grid has {n}"
        )));
    }
    let h = (psi.x[n - 1] - psi.x[0]) / (n - 1) as f64;
    let uniform = psi.x.windows(2).all(|w| ((w[1] - w[0]) - h).abs() <= 1e-9 * h.abs());
    if !uniform {
        return Err(Error::Domain("residual needs a uniform grid".into()));
    }
    let inv_h2 = 1.0 / (h * h);
    let mut num = 0.0;
    let mut den = 0.0;
    for i in RESIDUAL_MARGIN..n - RESIDUAL_MARGIN {
        let p = &psi.psi;
        let lap = (p[i - 1] - 2.0 * p[i] + p[i + 1]) * inv_h2;
        let r = -0.5 * lap + (potential(psi.x[i]) - energy) * p[i];
        num += r * r;
        den += p[i] * p[i];
    }
    if !(den > 0.0) {
        return Err(Error::Domain("wavefunction vanishes on the residual window".into()));
    }
    Ok((num / den).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::sym_tridiag_eigenvalues;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn grid_geometry() {
        let g = Grid1D::new(0.0, 1.0, 11).unwrap();
        assert_relative_eq!(g.spacing(), 0.1);
        assert_eq!(g.points().len(), 11);
        assert_eq!(g.interior().len(), 9);
        assert_eq!(g.point(10), 1.0);
        assert!(Grid1D::new(1.0, 0.0, 11).is_err());
        assert!(Grid1D::new(0.0, 1.0, 2).is_err());
    }

    #[test]
    fn hamiltonian_pattern() {
        let g = Grid1D::new(0.0, 1.0, 11).unwrap();
        let h = fd_hamiltonian(|x| x, &g).unwrap();
        for &e in h.offdiag() {
            assert_relative_eq!(e, -50.0, max_relative = 1e-12);
        }
        assert_relative_eq!(h.diag()[0], 100.0 + 0.1);
        let err = fd_hamiltonian(|x| 1.0 / (x - 0.5), &g).unwrap_err();
        assert!(matches!(err, Error::Domain(m) if m.contains("0.5")));
    }

    #[test]
    fn particle_in_a_box() {
        let g = Grid1D::new(0.0, PI, 2001).unwrap();
        let h = fd_hamiltonian(|_| 0.0, &g).unwrap();
        let e = sym_tridiag_eigenvalues(&h, Which::Lowest(2));
        assert!((e[0] - 0.5).abs() < 1e-6);
        assert!((e[1] - 2.0).abs() < 1e-5);
    }

    #[test]
    fn harmonic_oscillator() {
        let g = Grid1D::with_spacing(-12.0, 12.0, 1e-3).unwrap();
        let h = fd_hamiltonian(|x| 0.5 * x * x, &g).unwrap();
        let e = sym_tridiag_eigenvalues(&h, Which::Lowest(3));
        for (got, want) in e.iter().zip([0.5, 1.5, 2.5]) {
            assert!((got - want).abs() < 1e-5, "{got} vs {want}");
        }
    }

    fn sampled(x: Vec<f64>, f: impl Fn(f64) -> f64) -> GridFunction {
        let psi = x.iter().map(|&x| f(x)).collect();
        GridFunction { potential: vec![0.0; x.len()], x, psi, raw_norm: 1.0 }
    }

    #[test]
    fn residual_of_exact_and_generic_functions() {
        let g = Grid1D::new(0.0, PI, 1001).unwrap();
        let h = g.spacing();
        let exact = sampled(g.points(), f64::sin);
        let r = hamiltonian_residual(&exact, |_| 0.0, 0.5).unwrap();
        assert!(r < h * h, "{r}");
        let generic = sampled(g.points(), |x| x * (PI - x) * (1.0 + x));
        assert!(hamiltonian_residual(&generic, |_| 0.0, 0.5).unwrap() > 0.1);
        let tiny = sampled(vec![0.0, 0.1, 0.2], f64::sin);
        assert!(hamiltonian_residual(&tiny, |_| 0.0, 0.5).is_err());
    }

    #[test]
    fn short_count_reported() {
        let model = ModelParams::Morse(crate::models::MorseParams { alpha: 5.0, beta: -5.0 * 5f64.sqrt(), lambda: 1.0 });
        let g = Grid1D::with_spacing(-8.0, 25.0, 1e-2).unwrap();
        let s = fd_bound_states(&model, &g, 5).unwrap();
        assert_eq!(s.energies.len(), 2);
        assert!(s.short_count.is_some());
    }
}
