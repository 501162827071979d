//! Terminating hypergeometric sums for the polynomial families.
//!
//! Test oracles only: independent of the recursions used in production.
//! Each `*_terms` function returns the individual summands so callers can
//! form both the value and the absolute-sum condition scale.

use super::pochhammer;

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, j| acc * j as f64)
}

fn value(terms: &[f64]) -> f64 {
    terms.iter().sum()
}

fn abs_sum(terms: &[f64]) -> f64 {
    terms.iter().map(|t| t.abs()).sum()
}

/// `L_n^ν(x) = Σ_j (-1)^j (ν+j+1)_{n-j} / ((n-j)! j!) x^j`.
pub fn laguerre_terms(n: usize, nu: f64, x: f64) -> Vec<f64> {
    (0..=n)
        .map(|j| {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            sign * pochhammer(nu + j as f64 + 1.0, n - j) / (factorial(n - j) * factorial(j))
                * x.powi(j as i32)
        })
        .collect()
}

pub fn laguerre(n: usize, nu: f64, x: f64) -> f64 {
    value(&laguerre_terms(n, nu, x))
}

pub fn laguerre_abs(n: usize, nu: f64, x: f64) -> f64 {
    abs_sum(&laguerre_terms(n, nu, x))
}

/// `P_n^{(μ,ν)}(y) = (μ+1)_n/n! ₂F₁(-n, n+μ+ν+1; μ+1; (1-y)/2)`.
pub fn jacobi_terms(n: usize, mu: f64, nu: f64, y: f64) -> Vec<f64> {
    let pre = pochhammer(mu + 1.0, n) / factorial(n);
    let t = (1.0 - y) / 2.0;
    (0..=n)
        .map(|j| {
            pre * pochhammer(-(n as f64), j) * pochhammer(n as f64 + mu + nu + 1.0, j)
                / (pochhammer(mu + 1.0, j) * factorial(j))
                * t.powi(j as i32)
        })
        .collect()
}

pub fn jacobi(n: usize, mu: f64, nu: f64, y: f64) -> f64 {
    value(&jacobi_terms(n, mu, nu, y))
}

pub fn jacobi_abs(n: usize, mu: f64, nu: f64, y: f64) -> f64 {
    abs_sum(&jacobi_terms(n, mu, nu, y))
}

/// `S_n(z²; a,b,c) = ₃F₂(-n, a+iz, a-iz; a+b, a+c; 1)`; the conjugate pair
/// product `(a+iz)_j (a-iz)_j = Π_{m<j} ((a+m)² + z²)` is real for any real z².
pub fn cdh_terms(n: usize, a: f64, b: f64, c: f64, z2: f64) -> Vec<f64> {
    (0..=n)
        .map(|j| {
            let pair: f64 = (0..j).map(|m| (a + m as f64).powi(2) + z2).product();
            pochhammer(-(n as f64), j) * pair
                / (pochhammer(a + b, j) * pochhammer(a + c, j) * factorial(j))
        })
        .collect()
}

pub fn cdh(n: usize, a: f64, b: f64, c: f64, z2: f64) -> f64 {
    value(&cdh_terms(n, a, b, c, z2))
}

pub fn cdh_abs(n: usize, a: f64, b: f64, c: f64, z2: f64) -> f64 {
    abs_sum(&cdh_terms(n, a, b, c, z2))
}

/// `c^{n/2} ₂F₁(-n, -k; γ; 1 - 1/c)`.
pub fn meixner_mod_terms(n: usize, k: usize, gamma: f64, c: f64) -> Vec<f64> {
    let pre = c.powf(n as f64 / 2.0);
    let t = 1.0 - 1.0 / c;
    (0..=n.min(k))
        .map(|j| {
            pre * pochhammer(-(n as f64), j) * pochhammer(-(k as f64), j)
                / (pochhammer(gamma, j) * factorial(j))
                * t.powi(j as i32)
        })
        .collect()
}

pub fn meixner_mod(n: usize, k: usize, gamma: f64, c: f64) -> f64 {
    value(&meixner_mod_terms(n, k, gamma, c))
}

pub fn meixner_mod_abs(n: usize, k: usize, gamma: f64, c: f64) -> f64 {
    abs_sum(&meixner_mod_terms(n, k, gamma, c))
}

/// `∫_{-1}^{1} (1-y)^μ (1+y)^ν f(y) dy` by tanh-sinh quadrature.
///
/// The endpoint factors are formed from the substitution directly so they keep
/// full relative precision as `y → ±1`.
pub fn jacobi_weight_integral(f: impl Fn(f64) -> f64, mu: f64, nu: f64) -> f64 {
    let half_pi = std::f64::consts::FRAC_PI_2;
    let h = 1.0 / 128.0;
    let t_max = 4.0;
    let steps = (t_max / h) as i64;
    let mut sum = 0.0;
    for j in -steps..=steps {
        let t = j as f64 * h;
        let s = half_pi * t.sinh();
        let cs = s.cosh();
        let one_minus = (-s).exp() / cs;
        let one_plus = s.exp() / cs;
        let y = s.tanh();
        let dy = half_pi * t.cosh() / (cs * cs);
        let w = one_minus.powf(mu) * one_plus.powf(nu) * dy;
        if w == 0.0 || !w.is_finite() {
            continue;
        }
        sum += w * f(y);
    }
    sum * h
}
