//! Symmetric tridiagonal eigenproblems.
//!
//! Eigenvalues come from Sturm-sequence bisection, eigenvectors from inverse
//! iteration. [`dense_eig_bruteforce`] is a slow independent route through the
//! characteristic polynomial, kept for cross-checking small matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::orthopoly::jacobi_recursion_table;
use crate::{Error, Result};

/// Symmetric tridiagonal matrix stored as its diagonal and first off-diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiag {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Size("tridiagonal matrix needs at least one row".into()));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::Size(format!(
                "off-diagonal length {} does not match diagonal length {}",
                offdiag.len(),
                diag.len()
            )));
        }
        if let Some(i) = diag.iter().chain(&offdiag).position(|v| !v.is_finite()) {
            return Err(Error::Domain(format!("non-finite matrix entry at flat index {i}")));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Infinity norm (max absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        (0..self.len())
            .map(|i| {
                let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
                let right = self.offdiag.get(i).map_or(0.0, |e| e.abs());
                self.diag[i].abs() + left + right
            })
            .fold(0.0, f64::max)
    }

    /// Interval containing every eigenvalue.
    pub fn gershgorin(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..self.len() {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
            let right = self.offdiag.get(i).map_or(0.0, |e| e.abs());
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn sturm_count(&self, x: f64) -> usize {
        let pivmin = f64::MIN_POSITIVE
            * self.offdiag.iter().fold(1.0_f64, |m, e| m.max(e * e));
        let mut count = 0;
        let mut q = self.diag[0] - x;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
        for i in 1..self.len() {
            let e = self.offdiag[i - 1];
            q = self.diag[i] - x - e * e / q;
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// `M v`.
    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * v[i];
                if i > 0 {
                    s += self.offdiag[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    s += self.offdiag[i] * v[i + 1];
                }
                s
            })
            .collect()
    }

    /// Leading `n × n` principal submatrix.
    pub fn leading(&self, n: usize) -> Result<Self> {
        if n == 0 || n > self.len() {
            return Err(Error::Size(format!("leading block {n} of a {}-row matrix", self.len())));
        }
        Self::new(self.diag[..n].to_vec(), self.offdiag[..n - 1].to_vec())
    }
}

/// Which part of the spectrum to compute.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Which {
    #[default]
    All,
    /// The `j` smallest eigenvalues.
    Lowest(usize),
    /// Eigenvalues in the half-open interval `[lo, hi)`.
    InInterval(f64, f64),
}

/// Default absolute bisection tolerance, `1e-13 · max(1, ‖m‖∞)`.
pub fn default_tolerance(m: &SymTridiag) -> f64 {
    1e-13 * m.norm_inf().max(1.0)
}

/// Sorted eigenvalues by Sturm bisection at the default tolerance.
pub fn sym_tridiag_eigenvalues(m: &SymTridiag, which: Which) -> Vec<f64> {
    sym_tridiag_eigenvalues_tol(m, which, default_tolerance(m))
}

/// Sorted eigenvalues by Sturm bisection, each bracketed to width `tol`
/// (or to adjacent floating-point numbers, whichever comes first).
pub fn sym_tridiag_eigenvalues_tol(m: &SymTridiag, which: Which, tol: f64) -> Vec<f64> {
    let n = m.len();
    let (lo, hi) = m.gershgorin();
    let pad = f64::EPSILON * lo.abs().max(hi.abs()).max(1.0);
    let (lo, hi) = (lo - pad, hi + pad);
    let indices = match which {
        Which::All => 0..n,
        Which::Lowest(j) => 0..j.min(n),
        Which::InInterval(a, b) => {
            if !(b > a) {
                return Vec::new();
            }
            m.sturm_count(a)..m.sturm_count(b)
        }
    };
    indices.map(|j| bisect_eigenvalue(m, j, lo, hi, tol)).collect()
}

fn bisect_eigenvalue(m: &SymTridiag, j: usize, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    loop {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid <= lo || mid >= hi {
            return mid;
        }
        if m.sturm_count(mid) > j {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Eigenvalue with its unit eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
}

impl EigenPair {
    /// `‖M v - λ v‖₂`.
    pub fn residual(&self, m: &SymTridiag) -> f64 {
        m.mul_vec(&self.vector)
            .iter()
            .zip(&self.vector)
            .map(|(mv, v)| (mv - self.value * v).powi(2))
            .sum::<f64>()
            .sqrt()
    }
}

const INVERSE_ITERATION_SEED: u64 = 0x7261_5f70_7073;
const INVERSE_ITERATION_MAX: usize = 50;

/// Eigenvector for an eigenvalue known to about 1e-8, by inverse iteration.
///
/// The returned value is the Rayleigh quotient of the converged vector; the
/// vector has unit norm and its first non-negligible component is positive.
pub fn sym_tridiag_eigenvector(m: &SymTridiag, value: f64) -> Result<EigenPair> {
    let n = m.len();
    let norm = m.norm_inf().max(f64::MIN_POSITIVE);
    if n == 1 {
        return Ok(EigenPair { value: m.diag[0], vector: vec![1.0] });
    }
    let lu = ShiftedLu::factor(m, value, norm);
    let mut rng = ChaCha8Rng::seed_from_u64(INVERSE_ITERATION_SEED);
    let mut x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    normalize(&mut x);
    let mut best: Option<(f64, EigenPair)> = None;
    for _ in 0..INVERSE_ITERATION_MAX {
        let mut y = lu.solve(&x);
        if !normalize(&mut y) {
            return Err(Error::NumericalFailure("inverse iteration produced a non-finite vector".into()));
        }
        let my = m.mul_vec(&y);
        let rayleigh: f64 = my.iter().zip(&y).map(|(a, b)| a * b).sum();
        let pair = EigenPair { value: rayleigh, vector: y.clone() };
        let res = pair.residual(m);
        if best.as_ref().map_or(true, |(r, _)| res < *r) {
            best = Some((res, pair));
        }
        if res <= 1e-13 * norm {
            break;
        }
        x = y;
    }
    let (res, mut pair) = best.expect("at least one iteration");
    if res > 1e-10 * norm {
        return Err(Error::NumericalFailure(format!(
            "inverse iteration at {value} did not converge: residual {res:.3e} > {:.3e}",
            1e-10 * norm
        )));
    }
    fix_sign(&mut pair.vector);
    Ok(pair)
}

fn normalize(v: &mut [f64]) -> bool {
    let s = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if !(s > 0.0) || !s.is_finite() {
        return false;
    }
    v.iter_mut().for_each(|x| *x /= s);
    true
}

fn fix_sign(v: &mut [f64]) {
    let max = v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    if let Some(first) = v.iter().find(|x| x.abs() > 1e-12 * max) {
        if *first < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

/// LU factorization of `M - σI` with partial pivoting; `U` has two
/// super-diagonals after row interchanges.
struct ShiftedLu {
    u0: Vec<f64>,
    u1: Vec<f64>,
    u2: Vec<f64>,
    mult: Vec<f64>,
    swapped: Vec<bool>,
}

impl ShiftedLu {
    fn factor(m: &SymTridiag, shift: f64, norm: f64) -> Self {
        let n = m.len();
        let tiny = f64::EPSILON * norm;
        let mut u0 = vec![0.0; n];
        let mut u1 = vec![0.0; n];
        let mut u2 = vec![0.0; n];
        let mut mult = vec![0.0; n];
        let mut swapped = vec![false; n];
        // Current row i being eliminated: (a, b, c) at columns i, i+1, i+2.
        let mut a = m.diag[0] - shift;
        let mut b = if n > 1 { m.offdiag[0] } else { 0.0 };
        let mut c = 0.0;
        for i in 0..n {
            if i + 1 == n {
                u0[i] = if a.abs() < tiny { tiny } else { a };
                break;
            }
            let sub = m.offdiag[i];
            let next_d = m.diag[i + 1] - shift;
            let next_e = if i + 2 < n { m.offdiag[i + 1] } else { 0.0 };
            if sub.abs() > a.abs() {
                swapped[i] = true;
                u0[i] = sub;
                u1[i] = next_d;
                u2[i] = next_e;
                let l = a / sub;
                mult[i] = l;
                a = b - l * next_d;
                b = c - l * next_e;
                c = 0.0;
            } else {
                let piv = if a.abs() < tiny { tiny } else { a };
                u0[i] = piv;
                u1[i] = b;
                u2[i] = c;
                let l = sub / piv;
                mult[i] = l;
                a = next_d - l * b;
                b = next_e - l * c;
                c = 0.0;
            }
        }
        Self { u0, u1, u2, mult, swapped }
    }

    fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        let n = rhs.len();
        let mut y = rhs.to_vec();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                y.swap(i, i + 1);
            }
            y[i + 1] -= self.mult[i] * y[i];
        }
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = y[i];
            if i + 1 < n {
                s -= self.u1[i] * x[i + 1];
            }
            if i + 2 < n {
                s -= self.u2[i] * x[i + 2];
            }
            x[i] = s / self.u0[i];
        }
        x
    }
}

/// Symmetrized pulse-model recursion matrix at fixed `(μ, ν, B/A)`.
///
/// `diag[n] = (C_n + B/A) / Q_n` and
/// `offdiag[n-1] = sqrt(G_{n-1} D_n / (Q_{n-1} Q_n))`. Its eigenvalues are the
/// admissible values of `-1/A`.
pub fn build_pulse_matrix(mu: f64, nu: f64, b_over_a: f64, n: usize) -> Result<SymTridiag> {
    build_pulse_matrix_perturbed(mu, nu, b_over_a, n, 0.0)
}

/// [`build_pulse_matrix`] with every `G_n` scaled by `1 + rel`; a sensitivity
/// hook for the verification report.
pub fn build_pulse_matrix_perturbed(
    mu: f64,
    nu: f64,
    b_over_a: f64,
    n: usize,
    rel: f64,
) -> Result<SymTridiag> {
    if n == 0 {
        return Err(Error::Size("pulse matrix needs N >= 1".into()));
    }
    if !(mu > -1.0) || !(nu > -1.0) {
        return Err(Error::Domain(format!("mu = {mu}, nu = {nu} must both exceed -1")));
    }
    let table = jacobi_recursion_table(n, mu, nu)?;
    let mut diag = Vec::with_capacity(n);
    for (i, t) in table.iter().enumerate() {
        if t.q == 0.0 {
            return Err(Error::Degenerate(format!("Q_{i} = 0 (mu + nu = {})", mu + nu)));
        }
        diag.push((t.c + b_over_a) / t.q);
    }
    let mut offdiag = Vec::with_capacity(n - 1);
    for i in 1..n {
        let g_prev = table[i - 1].g * (1.0 + rel);
        let radicand = g_prev * table[i].d / (table[i - 1].q * table[i].q);
        assert!(radicand >= 0.0, "negative off-diagonal radicand {radicand} at n = {i}");
        offdiag.push(radicand.sqrt());
    }
    SymTridiag::new(diag, offdiag)
}

/// Largest matrix accepted by [`dense_eig_bruteforce`].
pub const BRUTEFORCE_MAX: usize = 12;

/// Eigenvalues from the characteristic-polynomial recurrence
/// `p_k(λ) = (d_k - λ) p_{k-1}(λ) - e_{k-1}² p_{k-2}(λ)`.
///
/// Roots of `p_k` strictly interlace those of `p_{k-1}` in an unreduced block,
/// so each root is bracketed between consecutive roots of the previous
/// polynomial and found by sign bisection. Shares no code with the Sturm
/// bisection path.
pub fn dense_eig_bruteforce(m: &SymTridiag) -> Result<Vec<f64>> {
    let n = m.len();
    if n > BRUTEFORCE_MAX {
        return Err(Error::Size(format!("brute-force eigensolve limited to N <= {BRUTEFORCE_MAX}, got {n}")));
    }
    let mut all = Vec::with_capacity(n);
    let mut start = 0;
    for i in 0..n {
        let split = i + 1 == n || m.offdiag[i] == 0.0;
        if split {
            all.extend(block_roots(&m.diag[start..=i], &m.offdiag[start..i]));
            start = i + 1;
        }
    }
    all.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    Ok(all)
}

fn char_poly(d: &[f64], e: &[f64], k: usize, x: f64) -> f64 {
    let mut p_prev = 1.0;
    let mut p = d[0] - x;
    for i in 1..k {
        let next = (d[i] - x) * p - e[i - 1] * e[i - 1] * p_prev;
        p_prev = p;
        p = next;
    }
    p
}

fn block_roots(d: &[f64], e: &[f64]) -> Vec<f64> {
    let n = d.len();
    let bound = (0..n)
        .map(|i| {
            let l = if i > 0 { e[i - 1].abs() } else { 0.0 };
            let r = e.get(i).map_or(0.0, |x| x.abs());
            d[i].abs() + l + r
        })
        .fold(0.0, f64::max)
        + 1.0;
    let mut roots = vec![d[0]];
    for k in 2..=n {
        let mut edges = Vec::with_capacity(k + 1);
        edges.push(-bound);
        edges.extend(roots.iter().copied());
        edges.push(bound);
        roots = edges
            .windows(2)
            .map(|w| sign_bisect(|x| char_poly(d, e, k, x), w[0], w[1]))
            .collect();
    }
    roots
}

fn sign_bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    if flo == 0.0 {
        return lo;
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return mid;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::jacobi_recursion_coeffs;
    use approx::assert_relative_eq;
    use rand::Rng;
    use proptest::prelude::*;

    fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> SymTridiag {
        let diag = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let off = (0..n - 1).map(|_| rng.gen_range(-1.5..1.5)).collect();
        SymTridiag::new(diag, off).unwrap()
    }

    #[test]
    fn rejects_malformed() {
        assert!(SymTridiag::new(vec![], vec![]).is_err());
        assert!(SymTridiag::new(vec![1.0, 2.0], vec![]).is_err());
        assert!(SymTridiag::new(vec![1.0, f64::NAN], vec![0.1]).is_err());
    }

    #[test]
    fn small_closed_forms() {
        let m = SymTridiag::new(vec![5.0], vec![]).unwrap();
        assert_eq!(sym_tridiag_eigenvalues(&m, Which::All), vec![5.0]);

        let m = SymTridiag::new(vec![2.0, 2.0], vec![-1.0]).unwrap();
        let ev = sym_tridiag_eigenvalues(&m, Which::All);
        let tol = default_tolerance(&m);
        assert_relative_eq!(ev[0], 1.0, epsilon = tol);
        assert_relative_eq!(ev[1], 3.0, epsilon = tol);

        let m = SymTridiag::new(vec![2.0; 3], vec![-1.0; 2]).unwrap();
        let ev = sym_tridiag_eigenvalues(&m, Which::All);
        let s = 2f64.sqrt();
        let tol = default_tolerance(&m);
        for (got, want) in ev.iter().zip([2.0 - s, 2.0, 2.0 + s]) {
            assert_relative_eq!(*got, want, epsilon = tol);
        }
    }

    #[test]
    fn selectors() {
        let m = SymTridiag::new(vec![2.0; 6], vec![-1.0; 5]).unwrap();
        let all = sym_tridiag_eigenvalues(&m, Which::All);
        assert_eq!(sym_tridiag_eigenvalues(&m, Which::Lowest(2)), all[..2].to_vec());
        let mid = sym_tridiag_eigenvalues(&m, Which::InInterval(1.0, 3.0));
        let expected: Vec<f64> = all.iter().copied().filter(|&x| (1.0..3.0).contains(&x)).collect();
        assert_eq!(mid, expected);
        assert!(sym_tridiag_eigenvalues(&m, Which::InInterval(3.0, 1.0)).is_empty());
    }

    #[test]
    fn eigenvector_two_by_two() {
        let m = SymTridiag::new(vec![2.0, 2.0], vec![-1.0]).unwrap();
        let h = 0.5f64.sqrt();
        let p = sym_tridiag_eigenvector(&m, 1.0).unwrap();
        assert_relative_eq!(p.vector[0], h, epsilon = 1e-12);
        assert_relative_eq!(p.vector[1], h, epsilon = 1e-12);
        let p = sym_tridiag_eigenvector(&m, 3.0).unwrap();
        assert_relative_eq!(p.vector[0], h, epsilon = 1e-12);
        assert_relative_eq!(p.vector[1], -h, epsilon = 1e-12);
    }

    #[test]
    fn eigenvectors_of_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, 8);
            let norm = m.norm_inf();
            for lam in dense_eig_bruteforce(&m).unwrap() {
                let p = sym_tridiag_eigenvector(&m, lam).unwrap();
                let unit: f64 = p.vector.iter().map(|x| x * x).sum();
                assert_relative_eq!(unit, 1.0, epsilon = 1e-13);
                assert!(p.residual(&m) <= 1e-10 * norm);
            }
        }
    }

    #[test]
    fn toeplitz_bruteforce() {
        let m = SymTridiag::new(vec![2.0; 6], vec![-1.0; 5]).unwrap();
        let ev = dense_eig_bruteforce(&m).unwrap();
        for (k, got) in ev.iter().enumerate() {
            let want = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / 7.0).cos();
            assert_relative_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn bruteforce_handles_split_blocks_and_size_limit() {
        let m = SymTridiag::new(vec![1.0, 4.0, 4.0], vec![0.0, 1.0]).unwrap();
        let ev = dense_eig_bruteforce(&m).unwrap();
        assert_relative_eq!(ev[0], 1.0, epsilon = 1e-14);
        assert_relative_eq!(ev[1], 3.0, epsilon = 1e-13);
        assert_relative_eq!(ev[2], 5.0, epsilon = 1e-13);
        let big = SymTridiag::new(vec![0.0; 13], vec![1.0; 12]).unwrap();
        assert!(matches!(dense_eig_bruteforce(&big), Err(Error::Size(_))));
    }

    #[test]
    fn pulse_matrix_symmetric_case() {
        let (mu, r) = (3.4, -0.35);
        let m = build_pulse_matrix(mu, mu, r, 7).unwrap();
        for (n, d) in m.diag().iter().enumerate() {
            let nf = n as f64;
            assert_relative_eq!(*d, r / ((nf + mu) * (nf + mu + 1.0)), max_relative = 1e-14);
        }
        let zero = build_pulse_matrix(mu, mu, 0.0, 7).unwrap();
        assert!(zero.diag().iter().all(|&d| d == 0.0));
    }

    #[test]
    fn pulse_matrix_hand_substitution() {
        // μ = ν = 8, B/A = -1/2, N = 2
        let m = build_pulse_matrix(8.0, 8.0, -0.5, 2).unwrap();
        assert_relative_eq!(m.diag()[0], -0.5 / 72.0, max_relative = 1e-14);
        assert_relative_eq!(m.diag()[1], -0.5 / 90.0, max_relative = 1e-14);
        // G_0 = 2/18, D_1 = 9/19, Q_0 = 72, Q_1 = 90
        let off = ((2.0f64 / 18.0) * (9.0 / 19.0) / (72.0 * 90.0)).sqrt();
        assert_relative_eq!(m.offdiag()[0], off, max_relative = 1e-14);
    }

    #[test]
    fn pulse_matrix_general_parameters() {
        let (mu, nu, r) = (1.7, 0.6, 0.25);
        let m = build_pulse_matrix(mu, nu, r, 5).unwrap();
        for n in 0..5 {
            let t = jacobi_recursion_coeffs(n, mu, nu).unwrap();
            assert_relative_eq!(m.diag()[n], (t.c + r) / t.q, max_relative = 1e-14);
        }
    }

    #[test]
    fn pulse_spectrum_survives_unsymmetrizing() {
        // Eigenvalues of the companion matrix K[n][n-1] = G_{n-1}/Q_n,
        // K[n][n+1] = D_{n+1}/Q_n equal those of the symmetrized form.
        let (mu, nu, r, n) = (2.3, 1.1, -0.4, 9);
        let table = jacobi_recursion_table(n + 1, mu, nu).unwrap();
        let sym = build_pulse_matrix(mu, nu, r, n).unwrap();
        let expected = dense_eig_bruteforce(&sym).unwrap();
        // det(K - λ) via the unsymmetrized three-term recurrence
        let det = |lam: f64| {
            let mut p_prev = 1.0;
            let mut p = (table[0].c + r) / table[0].q - lam;
            for i in 1..n {
                let prod = table[i - 1].g / table[i].q * table[i].d / table[i - 1].q;
                let next = ((table[i].c + r) / table[i].q - lam) * p - prod * p_prev;
                p_prev = p;
                p = next;
            }
            p
        };
        let scale = sym.norm_inf();
        for lam in expected {
            let h = 1e-7 * scale;
            assert!(det(lam - h).signum() != det(lam + h).signum(), "no sign change at {lam}");
        }
    }

    proptest! {
        #[test]
        fn sturm_agrees_with_bruteforce(seed in 0u64..5000, n in 5usize..=10) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_matrix(&mut rng, n);
            let a = sym_tridiag_eigenvalues(&m, Which::All);
            let b = dense_eig_bruteforce(&m).unwrap();
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x - y).abs() <= 1e-10);
            }
        }

        #[test]
        fn sturm_count_orders_eigenvalues(seed in 0u64..5000, n in 2usize..=30) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_matrix(&mut rng, n);
            let ev = sym_tridiag_eigenvalues(&m, Which::All);
            for (j, lam) in ev.iter().enumerate() {
                let gap = ev.get(j + 1).map_or(1.0, |next| next - lam);
                if gap > 1e-9 {
                    prop_assert_eq!(m.sturm_count(lam + gap.min(1e-3) * 0.5), j + 1);
                }
            }
        }

        #[test]
        fn leading_block_interlaces(seed in 0u64..5000, n in 3usize..=20) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_matrix(&mut rng, n);
            let big = sym_tridiag_eigenvalues(&m, Which::All);
            let small = sym_tridiag_eigenvalues(&m.leading(n - 1).unwrap(), Which::All);
            // strict in exact arithmetic; near-decoupled blocks leave gaps below the bisection width
            let tol = 2.0 * default_tolerance(&m);
            for (i, s) in small.iter().enumerate() {
                prop_assert!(big[i] - tol < *s && *s < big[i + 1] + tol);
            }
        }

        #[test]
        fn pulse_matrix_smooth_in_mu(mu in 0.5f64..12.0, r in -1.0f64..1.0) {
            let a = build_pulse_matrix(mu, mu, r, 12).unwrap();
            let b = build_pulse_matrix(mu + 1e-8, mu + 1e-8, r, 12).unwrap();
            for (x, y) in a.diag().iter().chain(a.offdiag()).zip(b.diag().iter().chain(b.offdiag())) {
                prop_assert!((x - y).abs() <= 1e-6 * x.abs().max(1e-300));
            }
        }
    }
}
