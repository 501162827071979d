//! Hyperbolic pulse `(λ²/2)(B + A tanh λx)/cosh² λx`.
//!
//! Jacobi basis `(1-y²)^{μ/2} P_n^{(μ,μ)}(y)` with `y = tanh λx` and
//! `(λμ)² = -2E`. At fixed `μ` and `B/A` the recursion of the expansion
//! coefficients is the symmetric tridiagonal eigenproblem of
//! [`build_pulse_matrix`], whose eigenvalues are the admissible `-1/A`.

use super::{
    check_tail, coefficient_norm, require_negative_energy, require_positive, BoundState,
    GridFunction, ModelKind, PpsEntry, PpsResult, DEFAULT_TRUNCATION,
};
use crate::orthopoly::{jacobi_recursion_table, jacobi_series};
use crate::spectral::{
    build_pulse_matrix_perturbed, sym_tridiag_eigenvalues, sym_tridiag_eigenvector, SymTridiag, Which,
};
use crate::{Error, Result};

/// Relative agreement required between the `N` and `2N` PPS values.
const PPS_STABILITY: f64 = 1e-9;

/// Root-finding bracket width in `μ`.
const MU_TOLERANCE: f64 = 1e-13;

/// Largest accepted `|ε - (-1/A)|` when matching a bound state to the matrix.
const EIGEN_MATCH: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseParams {
    pub a: f64,
    pub b: f64,
    /// Range parameter `λ > 0`.
    pub lambda: f64,
}

impl PulseParams {
    pub fn ratio(&self) -> f64 {
        self.b / self.a
    }

    fn validate(&self) -> Result<()> {
        if !(self.a != 0.0) || !self.a.is_finite() {
            return Err(Error::Domain(format!("pulse A = {} must be nonzero and finite", self.a)));
        }
        require_ratio(self.ratio())?;
        require_positive("lambda", self.lambda)
    }
}

fn require_ratio(r: f64) -> Result<()> {
    if !(r.abs() <= 1.0) {
        return Err(Error::Domain(format!("pulse ratio B/A = {r} must satisfy |B/A| <= 1")));
    }
    Ok(())
}

/// Sign of `A` retained by [`pulse_pps`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Branch {
    /// `A < 0` when `B/A > 0`, otherwise `A > 0`: the sign whose well is deeper.
    #[default]
    Auto,
    Positive,
    Negative,
    Both,
}

impl Branch {
    fn keeps(self, a: f64, ratio: f64) -> bool {
        match self {
            Branch::Auto => {
                if ratio > 0.0 {
                    a < 0.0
                } else {
                    a > 0.0
                }
            }
            Branch::Positive => a > 0.0,
            Branch::Negative => a < 0.0,
            Branch::Both => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Branch::Auto => "auto",
            Branch::Positive => "positive",
            Branch::Negative => "negative",
            Branch::Both => "both",
        }
    }
}

impl std::str::FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "auto" => Ok(Branch::Auto),
            "positive" | "pos" | "+" => Ok(Branch::Positive),
            "negative" | "neg" | "-" => Ok(Branch::Negative),
            "both" => Ok(Branch::Both),
            other => Err(Error::Domain(format!("unknown branch '{other}' (expected auto, positive, negative or both)"))),
        }
    }
}

/// Numerical settings shared by the pulse operations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseSolver {
    /// Matrix size `N`.
    pub n: usize,
    /// Scan step in `μ` for bracketing roots.
    pub mu_step: f64,
    /// Lower end of the `μ` scan.
    pub mu_min: f64,
    /// Relative perturbation of every `G_n`; zero except in sensitivity checks.
    pub perturbation: f64,
}

impl Default for PulseSolver {
    fn default() -> Self {
        Self { n: DEFAULT_TRUNCATION, mu_step: 0.02, mu_min: 1e-3, perturbation: 0.0 }
    }
}

impl PulseSolver {
    pub fn with_n(n: usize) -> Self {
        Self { n, ..Self::default() }
    }

    fn matrix(&self, mu: f64, ratio: f64) -> Result<SymTridiag> {
        build_pulse_matrix_perturbed(mu, mu, ratio, self.n, self.perturbation)
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Size("truncation N must be at least 1".into()));
        }
        require_positive("mu_step", self.mu_step)?;
        require_positive("mu_min", self.mu_min)
    }
}

pub fn pulse_potential(x: f64, p: &PulseParams) -> f64 {
    let t = p.lambda * x;
    let sech = 1.0 / t.cosh();
    0.5 * p.lambda * p.lambda * (p.b + p.a * t.tanh()) * sech * sech
}

/// Values of `A` with a bound state at energy `E` for fixed `B/A`.
///
/// Every nonzero eigenvalue `ε` of the pulse matrix at `μ = sqrt(-2E)/λ`
/// gives a candidate `A = -1/ε`. Candidates on the requested branch are
/// sorted by `|A|`, the first `count` are kept, and each must agree with the
/// `2N` computation to 1e-9 relative.
pub fn pulse_pps(
    energy: f64,
    ratio: f64,
    lambda: f64,
    count: usize,
    branch: Branch,
    solver: &PulseSolver,
) -> Result<PpsResult> {
    require_negative_energy(energy)?;
    require_ratio(ratio)?;
    require_positive("lambda", lambda)?;
    solver.validate()?;
    let mu = (-2.0 * energy).sqrt() / lambda;
    let candidates = |n: usize| -> Result<Vec<f64>> {
        let m = build_pulse_matrix_perturbed(mu, mu, ratio, n, solver.perturbation)?;
        let floor = 1e-14 * m.norm_inf().max(1.0);
        let mut a: Vec<f64> = sym_tridiag_eigenvalues(&m, Which::All)
            .into_iter()
            .filter(|e| e.abs() > floor)
            .map(|e| -1.0 / e)
            .filter(|&a| branch.keeps(a, ratio))
            .collect();
        a.sort_by(|x, y| x.abs().total_cmp(&y.abs()));
        a.truncate(count);
        Ok(a)
    };
    let values = candidates(solver.n)?;
    let check = candidates(2 * solver.n)?;
    for (a, b) in values.iter().zip(&check) {
        let drift = (a - b).abs() / b.abs();
        if !(drift <= PPS_STABILITY) {
            return Err(Error::TruncationInsufficient {
                n: solver.n,
                tail_ratio: drift,
                tolerance: PPS_STABILITY,
                suggested: 2 * solver.n,
            });
        }
    }
    let status = (values.len() < count).then(|| {
        format!("only {} value(s) of A on the {} branch at N = {}", values.len(), branch.name(), solver.n)
    });
    Ok(PpsResult {
        model: ModelKind::Pulse,
        energy,
        entries: values.into_iter().enumerate().map(|(k, rho)| PpsEntry { k, rho }).collect(),
        excluded: Vec::new(),
        truncation: Some(solver.n),
        status,
    })
}

/// Bound-state energies in order of decreasing `|E|`.
///
/// The Sturm count of the pulse matrix at `-1/A` changes by one each time an
/// eigenvalue crosses `-1/A` as `μ` varies. The count is scanned on a `μ`
/// grid up to `sqrt(max|(B + A u)(1 - u²)|) + 2`, which bounds `μ` for any
/// level, and every change is located by bisection on the count to 1e-13.
pub fn pulse_spectrum(p: &PulseParams, solver: &PulseSolver) -> Result<Vec<f64>> {
    let mus = pulse_roots(p, solver)?;
    Ok(mus.into_iter().map(|mu| energy_of(mu, p.lambda)).collect())
}

fn energy_of(mu: f64, lambda: f64) -> f64 {
    -0.5 * (lambda * mu).powi(2)
}

/// Roots `μ_k`, decreasing.
fn pulse_roots(p: &PulseParams, solver: &PulseSolver) -> Result<Vec<f64>> {
    p.validate()?;
    solver.validate()?;
    let ratio = p.ratio();
    let target = -1.0 / p.a;
    let count = |mu: f64| -> Result<usize> { Ok(solver.matrix(mu, ratio)?.sturm_count(target)) };

    let mu_max = well_depth(p).sqrt() + 2.0;
    let steps = ((mu_max - solver.mu_min) / solver.mu_step).ceil().max(1.0) as usize;
    let mut roots = Vec::new();
    let mut lo = solver.mu_min;
    let mut c_lo = count(lo)?;
    for i in 1..=steps {
        let hi = (solver.mu_min + i as f64 * solver.mu_step).min(mu_max);
        let c_hi = count(hi)?;
        if c_hi != c_lo {
            // one crossing per intermediate count value
            let (small, large) = (c_lo.min(c_hi), c_lo.max(c_hi));
            for level in small..large {
                roots.push(bisect_crossing(&count, lo, hi, c_lo, level)?);
            }
        }
        lo = hi;
        c_lo = c_hi;
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    Ok(roots)
}

/// `μ` in `[lo, hi]` where the count passes between `level` and `level + 1`.
fn bisect_crossing(
    count: &dyn Fn(f64) -> Result<usize>,
    mut lo: f64,
    mut hi: f64,
    c_lo: usize,
    level: usize,
) -> Result<f64> {
    let lo_above = c_lo > level;
    while hi - lo > MU_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (count(mid)? > level) == lo_above {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `max |(B + A u)(1 - u²)|` over `u ∈ [-1, 1]`, i.e. `2 max|V| / λ²`.
fn well_depth(p: &PulseParams) -> f64 {
    const SAMPLES: usize = 4001;
    (0..SAMPLES)
        .map(|i| {
            let u = -1.0 + 2.0 * i as f64 / (SAMPLES - 1) as f64;
            ((p.b + p.a * u) * (1.0 - u * u)).abs()
        })
        .fold(0.0, f64::max)
}

/// Expansion coefficients `f_n = f̄_n / F_n` of level `k`, where `f̄` is the
/// unit eigenvector of the pulse matrix at eigenvalue `-1/A`.
pub fn pulse_bound_state(k: usize, p: &PulseParams, solver: &PulseSolver) -> Result<BoundState> {
    let roots = pulse_roots(p, solver)?;
    let mu = *roots.get(k).ok_or_else(|| {
        Error::Domain(format!("level k = {k} outside the {} bound state(s)", roots.len()))
    })?;
    let m = solver.matrix(mu, p.ratio())?;
    let target = -1.0 / p.a;
    let nearest = nearest_eigenvalue(&m, target);
    if !((nearest - target).abs() <= EIGEN_MATCH * target.abs().max(1.0)) {
        return Err(Error::InconsistentState(format!(
            "pulse matrix at mu = {mu} has no eigenvalue within {EIGEN_MATCH:e} of -1/A = {target} (nearest {nearest})"
        )));
    }
    let pair = sym_tridiag_eigenvector(&m, nearest)?;
    let table = jacobi_recursion_table(solver.n, mu, mu)?;
    let coefficients: Vec<f64> = pair.vector.iter().zip(&table).map(|(v, t)| v / t.f).collect();
    check_tail(&coefficients)?;
    let normalization = coefficient_norm(&coefficients);
    Ok(BoundState { k, energy: energy_of(mu, p.lambda), basis_scale: mu, coefficients, normalization })
}

fn nearest_eigenvalue(m: &SymTridiag, target: f64) -> f64 {
    let j = m.sturm_count(target);
    let below = (j > 0).then(|| sym_tridiag_eigenvalues(m, Which::Lowest(j))[j - 1]);
    let above = (j < m.len()).then(|| sym_tridiag_eigenvalues(m, Which::Lowest(j + 1))[j]);
    match (below, above) {
        (Some(b), Some(a)) => {
            if target - b <= a - target {
                b
            } else {
                a
            }
        }
        (Some(b), None) => b,
        (None, Some(a)) => a,
        (None, None) => f64::NAN,
    }
}

/// `ln cosh t` without overflow.
fn ln_cosh(t: f64) -> f64 {
    let a = t.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

/// Unit-normalized wavefunction of level `k` on `x_grid`.
pub fn pulse_wavefunction(k: usize, p: &PulseParams, x_grid: &[f64], solver: &PulseSolver) -> Result<GridFunction> {
    let state = pulse_bound_state(k, p, solver)?;
    let mu = state.basis_scale;
    let table = jacobi_recursion_table(solver.n, mu, mu)?;
    let psi = x_grid
        .iter()
        .map(|&x| {
            let t = p.lambda * x;
            let weight = (-mu * ln_cosh(t)).exp();
            jacobi_series(&state.coefficients, &table, t.tanh(), weight)
        })
        .collect();
    let potential = x_grid.iter().map(|&x| pulse_potential(x, p)).collect();
    GridFunction::from_samples(x_grid.to_vec(), psi, potential)
}
