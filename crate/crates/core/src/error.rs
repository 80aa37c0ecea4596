use thiserror::Error;

/// Errors surfaced by the numerical kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument lies on a branch cut of the requested function.
    #[error("argument on branch cut: {0}")]
    Cut(String),

    /// NaN or infinite input where a finite value is required.
    #[error("non-finite input: {0}")]
    NonFinite(String),

    /// Parameter outside its admissible domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation point coincides (to working precision) with a pole.
    #[error("evaluation at or too close to a pole: {0}")]
    Pole(String),

    /// Adaptive refinement exhausted without meeting the tolerance.
    #[error("quadrature did not converge: error estimate {err_estimate:.3e} after {evaluations} evaluations")]
    NoConvergence { err_estimate: f64, evaluations: usize },

    /// Decay envelope is unusable (nonpositive decay rate after transformation).
    #[error("envelope error: {0}")]
    Envelope(String),
}

pub type Result<T> = std::result::Result<T, Error>;
