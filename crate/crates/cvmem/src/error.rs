use thiserror::Error;

/// Errors produced by the simulation kernels.
#[derive(Debug, Error)]
pub enum CvmemError {
    /// A parameter is outside its documented domain (NaN, wrong sign, ...).
    #[error("invalid parameter `{name}`: {reason}")]
    Parameter { name: &'static str, reason: String },

    /// Matrix/vector dimensions do not match.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A value is structurally valid but physically inadmissible
    /// (non-symplectic matrix, covariance violating Heisenberg, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical routine failed to reach its tolerance.
    #[error("numerics: {context} (achieved error {achieved:.3e}, requested {requested:.3e})")]
    Numerics {
        context: &'static str,
        achieved: f64,
        requested: f64,
    },

    /// Conditioning produced a probability below the machine-noise floor.
    #[error("degenerate conditioning: success rate {0:.3e} below floor")]
    DegenerateConditioning(f64),
}

pub type Result<T> = std::result::Result<T, CvmemError>;

impl CvmemError {
    pub fn parameter(name: &'static str, reason: impl Into<String>) -> Self {
        CvmemError::Parameter {
            name,
            reason: reason.into(),
        }
    }
}

/// Reject non-finite or non-positive values early.
pub fn require_positive(name: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(CvmemError::parameter(name, format!("{value} is not finite")));
    }
    if value <= 0.0 {
        return Err(CvmemError::parameter(name, format!("{value} must be > 0")));
    }
    Ok(value)
}

pub fn require_finite(name: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(CvmemError::parameter(name, format!("{value} is not finite")));
    }
    Ok(value)
}
