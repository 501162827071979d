use super::check_index_param;
use crate::{Error, Result};

/// Coefficients of `y P_n = C_n P_n + D_n P_{n-1} + G_n P_{n+1}` for Jacobi
/// polynomials, plus the quantities used to symmetrize the pulse-model
/// recursion.
///
/// `q` is `(n + (μ+ν+1)/2)² - 1/4`. `r` and `f` are the cumulative diagonal
/// rescalings `R_{n+1} = R_n (n+μ+1)(n+ν+1)(2n+μ+ν+1) / ((n+1)(n+μ+ν+1)(2n+μ+ν+3))`
/// and `F_{n+1} = F_n sqrt(Q_{n+1} D_{n+1} / (Q_n G_n))`, both starting at 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiRecursionCoeffs {
    pub c: f64,
    pub d: f64,
    pub g: f64,
    pub q: f64,
    pub r: f64,
    pub f: f64,
}

/// `(C_n, D_n, G_n)` for a single index.
fn step(n: usize, mu: f64, nu: f64) -> Result<(f64, f64, f64)> {
    if n == 0 {
        // Closed forms of the n = 0 row; the generic expressions are 0/0 when μ+ν = 0.
        let s = mu + nu + 2.0;
        if s == 0.0 {
            return Err(Error::Degenerate("mu + nu + 2 = 0".into()));
        }
        return Ok(((nu - mu) / s, 0.0, 2.0 / s));
    }
    let nf = n as f64;
    let s = 2.0 * nf + mu + nu;
    if s == 0.0 || s + 1.0 == 0.0 || s + 2.0 == 0.0 {
        return Err(Error::Degenerate(format!(
            "Jacobi recursion denominator vanishes at n = {n} (mu + nu = {})",
            mu + nu
        )));
    }
    let c = (nu * nu - mu * mu) / (s * (s + 2.0));
    let d = 2.0 * (nf + mu) * (nf + nu) / (s * (s + 1.0));
    let g = 2.0 * (nf + 1.0) * (nf + mu + nu + 1.0) / ((s + 1.0) * (s + 2.0));
    Ok((c, d, g))
}

fn q_of(n: usize, mu: f64, nu: f64) -> f64 {
    let t = n as f64 + 0.5 * (mu + nu + 1.0);
    t * t - 0.25
}

/// Recursion coefficients for `n = 0..len`, with the cumulative rescalings.
pub fn jacobi_recursion_table(len: usize, mu: f64, nu: f64) -> Result<Vec<JacobiRecursionCoeffs>> {
    let mut out = Vec::with_capacity(len);
    let mut r = 1.0;
    let mut f = 1.0;
    for n in 0..len {
        let (c, d, g) = step(n, mu, nu)?;
        let q = q_of(n, mu, nu);
        if n > 0 {
            let prev: &JacobiRecursionCoeffs = &out[n - 1];
            let m = (n - 1) as f64;
            r *= (m + mu + 1.0) * (m + nu + 1.0) * (2.0 * m + mu + nu + 1.0)
                / ((m + 1.0) * (m + mu + nu + 1.0) * (2.0 * m + mu + nu + 3.0));
            let radicand = q * d / (prev.q * prev.g);
            if !(radicand > 0.0) || !radicand.is_finite() {
                return Err(Error::Degenerate(format!(
                    "symmetrizing factor F_{n} undefined (Q_{} = {}, radicand {radicand})",
                    n - 1,
                    prev.q
                )));
            }
            f *= radicand.sqrt();
        }
        out.push(JacobiRecursionCoeffs { c, d, g, q, r, f });
    }
    Ok(out)
}

/// Recursion coefficients at index `n`; `R_n` and `F_n` are accumulated from 0.
pub fn jacobi_recursion_coeffs(n: usize, mu: f64, nu: f64) -> Result<JacobiRecursionCoeffs> {
    Ok(jacobi_recursion_table(n + 1, mu, nu)?[n])
}

/// Jacobi polynomial `P_n^{(μ,ν)}(y)` from `P_{n+1} = ((y - C_n) P_n - D_n P_{n-1}) / G_n`.
pub fn jacobi_eval(n: usize, mu: f64, nu: f64, y: f64) -> Result<f64> {
    check_index_param("mu", mu)?;
    check_index_param("nu", nu)?;
    let mut prev = 0.0;
    let mut cur = 1.0;
    for m in 0..n {
        let (c, d, g) = step(m, mu, nu)?;
        let next = ((y - c) * cur - d * prev) / g;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `((μ+1)_n / (2μ+1)_n) C_n^{(μ+1/2)}(y)`, which is exactly `P_n^{(μ,μ)}(y)`.
pub fn gegenbauer_via_jacobi(n: usize, mu: f64, y: f64) -> Result<f64> {
    jacobi_eval(n, mu, mu, y)
}

/// `weight · Σ_n coeffs[n] · P_n^{(μ,ν)}(y)` with the weight folded into the seeds.
pub fn jacobi_series(coeffs: &[f64], table: &[JacobiRecursionCoeffs], y: f64, weight: f64) -> f64 {
    debug_assert!(table.len() + 1 >= coeffs.len());
    if weight == 0.0 || coeffs.is_empty() {
        return 0.0;
    }
    let mut prev = 0.0;
    let mut cur = weight;
    let mut sum = coeffs[0] * cur;
    for (m, &coef) in coeffs.iter().enumerate().skip(1) {
        let t = &table[m - 1];
        let next = ((y - t.c) * cur - t.d * prev) / t.g;
        prev = cur;
        cur = next;
        sum += coef * cur;
    }
    sum
}
