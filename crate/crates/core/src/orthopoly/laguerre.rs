use super::check_index_param;
use crate::Result;

/// Generalized Laguerre polynomial `L_n^ν(x)`.
///
/// Upward recursion `(n+1) L_{n+1} = (2n+1+ν-x) L_n - (n+ν) L_{n-1}` seeded
/// with `L_0 = 1`, `L_1 = 1+ν-x`.
pub fn laguerre_eval(n: usize, nu: f64, x: f64) -> Result<f64> {
    check_index_param("nu", nu)?;
    let mut prev = 0.0;
    let mut cur = 1.0;
    for m in 0..n {
        let m = m as f64;
        let next = ((2.0 * m + 1.0 + nu - x) * cur - (m + nu) * prev) / (m + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `weight · Σ_n coeffs[n] · L_n^ν(x)`.
///
/// The weight is folded into the recursion seeds, so a tiny weight times a
/// huge polynomial value (e.g. `e^{-x/2} L_n(x)` at large `x`) never overflows
/// when the product itself is representable.
pub fn laguerre_series(coeffs: &[f64], nu: f64, x: f64, weight: f64) -> f64 {
    if weight == 0.0 || coeffs.is_empty() {
        return 0.0;
    }
    let mut prev = 0.0;
    let mut cur = weight;
    let mut sum = coeffs[0] * cur;
    for (m, &c) in coeffs.iter().enumerate().skip(1) {
        let j = (m - 1) as f64;
        let next = ((2.0 * j + 1.0 + nu - x) * cur - (j + nu) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
        sum += c * cur;
    }
    sum
}
