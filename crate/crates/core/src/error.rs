use thiserror::Error;

/// Errors raised by the numeric kernel, the state constructors and the
/// criteria evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("matrix is not Hermitian: residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    Symmetry { residual: f64, tolerance: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    /// A state-level invariant (trace, positivity, normalization) failed.
    #[error(
        "invariant `{name}` violated: measured residual {residual:.3e} (tolerance {tolerance:.3e})"
    )]
    Invariant {
        name: &'static str,
        residual: f64,
        tolerance: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
