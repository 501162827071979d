//! Bound-state spectra from a single fixed energy.
//!
//! The wave equation is solved at one negative energy by expanding the
//! wavefunction in an energy-dependent L² basis whose matrix wave operator is
//! tridiagonal. Requiring square integrability restricts one potential
//! parameter to a discrete set (the *potential parameter spectrum*, PPS).
//! Inverting the PPS-energy relation recovers the full bound-state spectrum.
//!
//! Modules:
//! - [`orthopoly`]: recursion evaluation of the polynomial families involved.
//! - [`spectral`]: symmetric tridiagonal eigenvalues and eigenvectors.
//! - [`models`]: Kratzer, generalized Morse and hyperbolic pulse pipelines.
//! - [`oracle`]: an independent finite-difference Schrödinger solver.

pub mod error;
pub mod models;
pub mod oracle;
pub mod orthopoly;
pub mod spectral;

pub use error::{Error, Result};
