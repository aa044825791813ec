//! Truncated-basis states and the density-matrix container.

use super::ops::{squeeze_vec, C64};
use crate::error::{CvmemError, Result};
use nalgebra::DMatrix;

/// |n> in a dim-`dim` truncated basis.
pub fn fock_vector(dim: usize, n: usize) -> Vec<C64> {
    let mut v = vec![C64::new(0.0, 0.0); dim];
    v[n] = C64::new(1.0, 0.0);
    v
}

/// Coherent state |alpha> truncated to `dim` levels (then exact
/// amplitudes, not renormalized; the tail mass is the caller's
/// truncation diagnostic).
pub fn coherent_vector(dim: usize, alpha: C64) -> Vec<C64> {
    let mut v = vec![C64::new(0.0, 0.0); dim];
    let mut c = C64::new((-0.5 * alpha.norm_sqr()).exp(), 0.0);
    v[0] = c;
    for n in 1..dim {
        c = c * alpha / (n as f64).sqrt();
        v[n] = c;
    }
    v
}

/// Squeezed single photon with x-standard-deviation a/2 (matches the
/// Wigner-engine input): S(zeta)|1>, zeta = -ln a.
pub fn squeezed_photon_vector(dim: usize, a: f64) -> Result<Vec<C64>> {
    crate::error::require_positive("a", a)?;
    let mut v = fock_vector(dim, 1);
    squeeze_vec(-a.ln(), &mut v);
    Ok(v)
}

/// Squeezed coherent-state superposition entering the upload:
/// S(-ln a) (|i x0> + |-i x0>)/norm, peaks on the p axis at +-x0/a.
/// Returns the normalized truncated vector and the tail mass the
/// truncation discarded (a warning-level diagnostic).
pub fn squeezed_cat_vector(dim: usize, x0: f64, a: f64) -> Result<(Vec<C64>, f64)> {
    crate::error::require_positive("a", a)?;
    crate::error::require_finite("x0", x0)?;
    let plus = coherent_vector(dim, C64::new(0.0, x0));
    let minus = coherent_vector(dim, C64::new(0.0, -x0));
    let mut v: Vec<C64> = plus.iter().zip(&minus).map(|(p, m)| p + m).collect();
    let norm2: f64 = v.iter().map(|c| c.norm_sqr()).sum();
    let exact_norm2 = 2.0 * (1.0 + (-2.0 * x0 * x0).exp());
    let scale = 1.0 / norm2.sqrt();
    v.iter_mut().for_each(|c| *c *= scale);
    squeeze_vec(-a.ln(), &mut v);
    // renormalize against squeeze-truncation loss as well
    let n2: f64 = v.iter().map(|c| c.norm_sqr()).sum();
    let s2 = 1.0 / n2.sqrt();
    v.iter_mut().for_each(|c| *c *= s2);
    let leak = (1.0 - norm2 / exact_norm2).abs().max((1.0 - n2).abs());
    Ok((v, leak))
}

/// Target vector for the stored cat: the ideal amplitude-x0' cat along x,
/// stretched in x by `stretch` (the known d/a squeezing frame of the raw
/// stored state).
pub fn stored_cat_target(dim: usize, x0_prime: f64, stretch: f64) -> Result<Vec<C64>> {
    crate::error::require_positive("stretch", stretch)?;
    let plus = coherent_vector(dim, C64::new(x0_prime, 0.0));
    let minus = coherent_vector(dim, C64::new(-x0_prime, 0.0));
    let mut v: Vec<C64> = plus.iter().zip(&minus).map(|(p, m)| p + m).collect();
    let norm2: f64 = v.iter().map(|c| c.norm_sqr()).sum();
    let scale = 1.0 / norm2.sqrt();
    v.iter_mut().for_each(|c| *c *= scale);
    // X -> stretch * X requires zeta = -ln(stretch)
    squeeze_vec(-stretch.ln(), &mut v);
    let n2: f64 = v.iter().map(|c| c.norm_sqr()).sum();
    let s2 = 1.0 / n2.sqrt();
    v.iter_mut().for_each(|c| *c *= s2);
    Ok(v)
}

/// Density matrix in a truncated number basis.
#[derive(Debug, Clone)]
pub struct FockDensity {
    matrix: DMatrix<C64>,
}

impl FockDensity {
    /// Validates Hermiticity (1e-12) and spectrum (eigenvalues >= -1e-10).
    pub fn new(matrix: DMatrix<C64>) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(CvmemError::DimensionMismatch {
                expected: matrix.nrows(),
                got: matrix.ncols(),
            });
        }
        let herm_dev = (&matrix - matrix.adjoint()).camax();
        if herm_dev > 1e-12 {
            return Err(CvmemError::Domain(format!(
                "density matrix not Hermitian (deviation {herm_dev:.3e})"
            )));
        }
        let eig = matrix.clone().symmetric_eigenvalues();
        if let Some(min) = eig.iter().cloned().reduce(f64::min) {
            if min < -1e-10 {
                return Err(CvmemError::Domain(format!(
                    "density matrix has negative eigenvalue {min:.3e}"
                )));
            }
        }
        Ok(FockDensity { matrix })
    }

    pub fn from_pure(v: &[C64]) -> Self {
        let n = v.len();
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = v[i] * v[j].conj();
            }
        }
        FockDensity { matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.matrix[(i, i)].re).sum()
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim()).map(|i| self.matrix[(i, i)].re).collect()
    }

    /// Population of the highest retained level (truncation diagnostic).
    pub fn edge_population(&self) -> f64 {
        self.matrix[(self.dim() - 1, self.dim() - 1)].re
    }

    /// <t| rho |t> for a pure target.
    pub fn fidelity_to(&self, target: &[C64]) -> f64 {
        let n = self.dim().min(target.len());
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                acc += target[i].conj() * self.matrix[(i, j)] * target[j];
            }
        }
        acc.re
    }
}
