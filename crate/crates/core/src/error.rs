use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("parameter domain violated: {0}")]
    Domain(String),

    /// A recursion denominator vanished for the given parameters.
    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    /// Inverse-square coupling at or below the critical value -(l+1/2)^2.
    #[error("supercritical coupling: beta = {beta} <= -(l+1/2)^2 = {critical}")]
    Supercritical { beta: f64, critical: f64 },

    /// The expansion has not decayed at the requested truncation.
    #[error("truncation N = {n} insufficient: tail ratio {tail_ratio:.3e} exceeds {tolerance:.1e}; try N = {suggested}")]
    TruncationInsufficient {
        n: usize,
        tail_ratio: f64,
        tolerance: f64,
        suggested: usize,
    },

    /// Iterative procedure did not converge.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// Inputs describing one state disagree with each other.
    #[error("inconsistent state: {0}")]
    InconsistentState(String),

    #[error("size error: {0}")]
    Size(String),
}

impl Error {
    /// True for failures caused by the numerics rather than by the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::TruncationInsufficient { .. }
                | Error::NumericalFailure(_)
                | Error::InconsistentState(_)
        )
    }
}
