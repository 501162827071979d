use num_complex::Complex64;
use std::f64::consts::PI;

// Lanczos coefficients for g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Principal-branch-free log-gamma for complex argument.
///
/// The imaginary part is only meaningful modulo 2π; callers use the real part
/// (log of the modulus) and the phase through `exp`.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Γ(z) Γ(1-z) = π / sin(πz)
        let s = (z * PI).sin();
        return Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma(Complex64::new(1.0, 0.0) - z);
    }
    let z = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// `ln|Γ(x)|` and the sign of `Γ(x)` for real `x`; `None` at the poles.
pub fn ln_gamma_real(x: f64) -> Option<(f64, f64)> {
    if x <= 0.0 && x == x.floor() {
        return None;
    }
    let lg = ln_gamma(Complex64::new(x, 0.0)).re;
    let sign = if x > 0.0 || (x.floor() as i64) % 2 == 0 { 1.0 } else { -1.0 };
    Some((lg, sign))
}

/// `|Γ(z)|`, zero-free everywhere except that it is infinite at the poles.
pub fn gamma_modulus(z: Complex64) -> f64 {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor() {
        return f64::INFINITY;
    }
    ln_gamma(z).re.exp()
}
