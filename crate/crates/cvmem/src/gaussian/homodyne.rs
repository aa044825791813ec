//! Homodyne detection on a Gaussian state: conditioning on an exact
//! quadrature outcome via the Schur complement.

use super::state::GaussianState;
use crate::error::{CvmemError, Result};
use nalgebra::{DMatrix, DVector};

/// Which quadrature of the measured mode the homodyne reads out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quadrature {
    X,
    P,
}

/// Condition `state` on measuring `quadrature` of `mode` with result
/// `outcome`. The measured mode is removed from the output state.
/// Returns the conditional state and the Gaussian pdf of the outcome.
pub fn homodyne_condition(
    state: &GaussianState,
    mode: usize,
    quadrature: Quadrature,
    outcome: f64,
) -> Result<(GaussianState, f64)> {
    crate::error::require_finite("outcome", outcome)?;
    if mode >= state.n_modes() {
        return Err(CvmemError::DimensionMismatch {
            expected: state.n_modes(),
            got: mode,
        });
    }
    let q = state.quad_index(mode, if quadrature == Quadrature::X { 0 } else { 1 });
    let cov = state.cov();
    let mean = state.mean();
    let var_q = cov[(q, q)];
    if var_q < 1e-14 {
        return Err(CvmemError::Numerics {
            context: "measured quadrature variance is singular",
            achieved: var_q,
            requested: 1e-14,
        });
    }

    // indices of the surviving quadratures (both quadratures of the
    // measured mode are dropped: X-measurement projects, the conjugate
    // quadrature is discarded with the mode)
    let keep: Vec<usize> = (0..mean.len())
        .filter(|i| *i != 2 * mode && *i != 2 * mode + 1)
        .collect();

    let sigma_rq = DVector::from_iterator(keep.len(), keep.iter().map(|&i| cov[(i, q)]));
    let mut cov_rr = DMatrix::zeros(keep.len(), keep.len());
    for (a, &i) in keep.iter().enumerate() {
        for (b, &j) in keep.iter().enumerate() {
            cov_rr[(a, b)] = cov[(i, j)];
        }
    }
    let delta = outcome - mean[q];
    let mean_r = DVector::from_iterator(keep.len(), keep.iter().map(|&i| mean[i]))
        + &sigma_rq * (delta / var_q);
    let cov_cond = &cov_rr - &sigma_rq * sigma_rq.transpose() / var_q;
    let cov_cond = (&cov_cond + cov_cond.transpose()) * 0.5;

    let labels: Vec<String> = state
        .labels()
        .iter()
        .enumerate()
        .filter(|(m, _)| *m != mode)
        .map(|(_, l)| l.clone())
        .collect();

    let pdf = (-0.5 * delta * delta / var_q).exp() / (2.0 * std::f64::consts::PI * var_q).sqrt();
    let out = GaussianState::new(labels, mean_r, cov_cond, state.convention())?;
    Ok((out, pdf))
}
