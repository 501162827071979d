//! Orthogonal polynomials evaluated by upward three-term recursion.
//!
//! Families covered: Laguerre `L_n^ν`, Jacobi `P_n^{(μ,ν)}` (and its
//! symmetric Gegenbauer form), continuous dual Hahn `S_n(z²; a, b, c)` and the
//! rescaled Meixner `M̃_n(k; γ, c) = c^{n/2} M_n(k; γ, c)`. Closed-form
//! hypergeometric sums exist only as test oracles in [`series`].

mod gamma;
mod hahn;
mod jacobi;
mod laguerre;

#[cfg(any(test, feature = "oracles"))]
pub mod series;

pub use gamma::{gamma_modulus, ln_gamma, ln_gamma_real};
pub use hahn::{
    cdh_asymptotic_amplitude, cdh_eval, cdh_sequence, meixner_mod_eval, meixner_mod_sequence,
    CdhParams, CdhSequence, MeixnerParams,
};
pub use jacobi::{
    gegenbauer_via_jacobi, jacobi_eval, jacobi_recursion_coeffs, jacobi_recursion_table,
    jacobi_series, JacobiRecursionCoeffs,
};
pub use laguerre::{laguerre_eval, laguerre_series};

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)` by direct product.
pub fn pochhammer(a: f64, n: usize) -> f64 {
    (0..n).fold(1.0, |acc, j| acc * (a + j as f64))
}

pub(crate) fn check_index_param(name: &str, value: f64) -> crate::Result<()> {
    if !(value > -1.0) || !value.is_finite() {
        return Err(crate::Error::Domain(format!("{name} = {value} must satisfy {name} > -1")));
    }
    Ok(())
}
