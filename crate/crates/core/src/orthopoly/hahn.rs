use num_complex::Complex64;

use super::gamma::{ln_gamma, ln_gamma_real};
use crate::{Error, Result};

/// Parameters of the continuous dual Hahn polynomial `S_n(z²; a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CdhParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub z2: f64,
}

impl CdhParams {
    /// Forward coefficient `(n+a+b)(n+a+c)` factors and backward coefficient `n(n+b+c-1)`.
    fn coefficients(&self, n: usize) -> (f64, f64, f64) {
        let nf = n as f64;
        (nf + self.a + self.b, nf + self.a + self.c, nf * (nf + self.b + self.c - 1.0))
    }

    fn diagonal(&self, n: usize) -> f64 {
        let (ab, ac, back) = self.coefficients(n);
        ab * ac + back - self.a * self.a
    }
}

const VANISHING: f64 = 1e-9;

/// `S_n(z²; a, b, c)` from
/// `z² S_n = [(n+a+b)(n+a+c) + n(n+b+c-1) - a²] S_n - n(n+b+c-1) S_{n-1} - (n+a+b)(n+a+c) S_{n+1}`.
pub fn cdh_eval(n: usize, params: &CdhParams) -> Result<f64> {
    let mut prev = 0.0;
    let mut cur = 1.0;
    for m in 0..n {
        let (ab, ac, back) = params.coefficients(m);
        if ab.abs() < VANISHING * (1.0 + m as f64) || ac.abs() < VANISHING * (1.0 + m as f64) {
            return Err(Error::Degenerate(format!(
                "continuous dual Hahn recursion coefficient (n+a+b)(n+a+c) vanishes at n = {m}"
            )));
        }
        let next = ((params.diagonal(m) - params.z2) * cur - back * prev) / (ab * ac);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// A run of `S_0 .. S_{len-1}`, possibly terminating early.
#[derive(Debug, Clone, PartialEq)]
pub struct CdhSequence {
    pub values: Vec<f64>,
    /// Last nonzero index when the forward coefficient vanished and the
    /// recursion row closed consistently, so every later value is zero.
    pub terminated_at: Option<usize>,
}

/// `S_0 .. S_{len-1}` for an expansion-coefficient sequence.
///
/// When `(n+a+b)(n+a+c)` vanishes at some `n` and row `n` of the recursion is
/// already satisfied, the sequence is the finite polynomial solution and all
/// later entries are zero. A vanishing coefficient with an unsatisfied row is
/// a degenerate-parameter error.
pub fn cdh_sequence(len: usize, params: &CdhParams) -> Result<CdhSequence> {
    let mut values = Vec::with_capacity(len);
    if len == 0 {
        return Ok(CdhSequence { values, terminated_at: None });
    }
    values.push(1.0);
    let mut prev = 0.0;
    for m in 0..len.saturating_sub(1) {
        let cur = values[m];
        let (ab, ac, back) = params.coefficients(m);
        let scale = 1.0 + m as f64;
        if ab.abs() < VANISHING * scale || ac.abs() < VANISHING * scale {
            let lhs = (params.diagonal(m) - params.z2) * cur;
            let rhs = back * prev;
            let residual = (lhs - rhs).abs();
            let size = lhs.abs() + rhs.abs() + (ab * ac * cur).abs();
            if residual <= 1e-8 * size.max(f64::MIN_POSITIVE) {
                values.resize(len, 0.0);
                return Ok(CdhSequence { values, terminated_at: Some(m) });
            }
            return Err(Error::Degenerate(format!(
                "continuous dual Hahn recursion coefficient vanishes at n = {m} with nonzero residual {residual:.3e}"
            )));
        }
        let next = ((params.diagonal(m) - params.z2) * cur - back * prev) / (ab * ac);
        prev = cur;
        values.push(next);
    }
    Ok(CdhSequence { values, terminated_at: None })
}

/// Large-`n` amplitude of `S_n(z²; a,b,c)` with the `n^{-a}` factor removed:
/// `2 Γ(b+c) |Γ(2iz)| / |Γ(a+iz) Γ(b+iz) Γ(c+iz)|` for real `z > 0`.
///
/// Returns exactly zero when one of `a, b, c` sits on a pole of the gamma
/// function, where the amplitude vanishes.
pub fn cdh_asymptotic_amplitude(z: f64, a: f64, b: f64, c: f64) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain(format!("asymptotic amplitude needs real z > 0, got {z}")));
    }
    let is_pole = |x: f64| x <= 0.0 && x == x.floor();
    if is_pole(a) || is_pole(b) || is_pole(c) {
        return Ok(0.0);
    }
    let (lg_bc, sign) = ln_gamma_real(b + c)
        .ok_or_else(|| Error::Domain(format!("Γ(b+c) has a pole at b+c = {}", b + c)))?;
    let iz = Complex64::new(0.0, z);
    let log_amp = lg_bc + ln_gamma(2.0 * iz).re
        - ln_gamma(iz + a).re
        - ln_gamma(iz + b).re
        - ln_gamma(iz + c).re;
    Ok(2.0 * sign * log_amp.exp())
}

/// Parameters of the Meixner polynomial `M_n(k; γ, c)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeixnerParams {
    pub gamma: f64,
    pub c: f64,
    pub k: usize,
}

impl MeixnerParams {
    fn validate(&self) -> Result<()> {
        if !(self.gamma > 0.0) || !self.gamma.is_finite() {
            return Err(Error::Domain(format!("Meixner gamma = {} must satisfy gamma > 0", self.gamma)));
        }
        if !(self.c > 0.0 && self.c < 1.0) {
            return Err(Error::Domain(format!("Meixner c = {} must satisfy 0 < c < 1", self.c)));
        }
        Ok(())
    }

    /// `(√c - 1/√c) k + n (√c + 1/√c) + γ √c`, the coefficient of `M̃_n`.
    fn diagonal(&self, n: usize) -> f64 {
        let s = self.c.sqrt();
        (s - 1.0 / s) * self.k as f64 + n as f64 * (s + 1.0 / s) + self.gamma * s
    }
}

/// `M̃_n(k; γ, c) = c^{n/2} M_n(k; γ, c)` from
/// `(n+γ) M̃_{n+1} = [(√c - 1/√c) k + n(√c + 1/√c) + γ√c] M̃_n - n M̃_{n-1}`.
pub fn meixner_mod_eval(n: usize, params: &MeixnerParams) -> Result<f64> {
    params.validate()?;
    let mut prev = 0.0;
    let mut cur = 1.0;
    for m in 0..n {
        let next = (params.diagonal(m) * cur - m as f64 * prev) / (m as f64 + params.gamma);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `M̃_0 .. M̃_{len-1}` as the decaying (minimal) solution of the recursion.
///
/// `M̃_n` decays like `c^{n/2}` while the companion solution grows like
/// `c^{-n/2}`, so upward recursion loses all accuracy after a few dozen
/// terms. The sequence is generated downward from well past `len`
/// (Miller's algorithm) and normalized to `M̃_0 = 1`.
pub fn meixner_mod_sequence(len: usize, params: &MeixnerParams) -> Result<Vec<f64>> {
    params.validate()?;
    if len == 0 {
        return Ok(Vec::new());
    }
    let rate = -0.5 * params.c.ln();
    let extra = ((60.0 / rate).ceil() as usize).max(40) + 4 * params.k;
    let start = len + extra;
    let mut values = vec![0.0; start + 2];
    values[start] = 1e-300;
    for n in (1..=start).rev() {
        let nf = n as f64;
        values[n - 1] = (params.diagonal(n) * values[n] - (nf + params.gamma) * values[n + 1]) / nf;
        if values[n - 1].abs() > 1e200 {
            for v in &mut values[n - 1..] {
                *v *= 1e-200;
            }
        }
    }
    let m0 = values[0];
    if m0 == 0.0 || !m0.is_finite() {
        return Err(Error::NumericalFailure("backward Meixner recursion produced M_0 = 0".into()));
    }
    values.truncate(len);
    for v in &mut values {
        *v /= m0;
    }
    Ok(values)
}
