//! Crate-wide error type.

/// Errors reported by the numerical routines.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Vector/matrix size disagreement.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// Adaptive quadrature exhausted its panel budget before reaching the
    /// requested tolerance; `achieved` is the last error estimate.
    #[error("quadrature did not converge: achieved {achieved:.3e}, requested {requested:.3e}")]
    QuadratureConvergence { achieved: f64, requested: f64 },

    /// The kernel integral diverges at the evaluation point.
    #[error("kernel diverges at x = y for alpha1 + alpha2 <= 1/2")]
    DivergentDiagonal,

    /// An asymptotic formula was invoked outside its hypotheses.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// A quantity that must be positive definite was found not to be.
    #[error("not positive definite: {0}")]
    NotPositiveDefinite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
