//! Gaussian states over labeled modes: mean vector and covariance matrix
//! with an explicit vacuum-variance convention.

use crate::error::{CvmemError, Result};
use nalgebra::{DMatrix, DVector};

/// Vacuum-variance convention for quadrature second moments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Vacuum quadrature variance 1 (the deterministic-record algebra).
    Unit,
    /// Vacuum quadrature variance 1/4 (the Wigner/Fock machinery).
    Quarter,
}

impl Convention {
    /// Vacuum variance in this convention.
    pub fn vacuum_variance(self) -> f64 {
        match self {
            Convention::Unit => 1.0,
            Convention::Quarter => 0.25,
        }
    }
}

/// Mean vector + covariance matrix over an ordered list of modes.
/// Quadratures are stacked [X1, P1, X2, P2, ...].
#[derive(Debug, Clone)]
pub struct GaussianState {
    labels: Vec<String>,
    mean: DVector<f64>,
    cov: DMatrix<f64>,
    convention: Convention,
}

/// Standard symplectic form on n modes, block-diag of [[0,1],[-1,0]].
pub fn symplectic_form(n_modes: usize) -> DMatrix<f64> {
    let mut omega = DMatrix::zeros(2 * n_modes, 2 * n_modes);
    for m in 0..n_modes {
        omega[(2 * m, 2 * m + 1)] = 1.0;
        omega[(2 * m + 1, 2 * m)] = -1.0;
    }
    omega
}

/// Symplectic eigenvalues of a positive-definite covariance matrix:
/// the moduli of the (pairwise imaginary) eigenvalues of Omega * V.
pub fn symplectic_eigenvalues(cov: &DMatrix<f64>) -> Vec<f64> {
    let n = cov.nrows() / 2;
    let m = symplectic_form(n) * cov;
    let eig = m.complex_eigenvalues();
    let mut mags: Vec<f64> = eig.iter().map(|l| l.norm()).collect();
    mags.sort_by(|a, b| a.partial_cmp(b).unwrap());
    // eigenvalues come in +-i nu pairs; keep one of each
    mags.chunks(2).map(|c| 0.5 * (c[0] + c[1])).collect()
}

impl GaussianState {
    /// Build a state, validating symmetry and the Heisenberg constraint
    /// (all symplectic eigenvalues >= vacuum variance, up to 1e-9).
    pub fn new(
        labels: Vec<String>,
        mean: DVector<f64>,
        cov: DMatrix<f64>,
        convention: Convention,
    ) -> Result<Self> {
        let dim = 2 * labels.len();
        if mean.len() != dim || cov.nrows() != dim || cov.ncols() != dim {
            return Err(CvmemError::DimensionMismatch {
                expected: dim,
                got: mean.len().max(cov.nrows()),
            });
        }
        let asym = (&cov - cov.transpose()).amax();
        if asym > 1e-12 {
            return Err(CvmemError::Domain(format!(
                "covariance not symmetric (max asymmetry {asym:.3e})"
            )));
        }
        let floor = convention.vacuum_variance();
        if let Some(nu) = symplectic_eigenvalues(&cov).first() {
            if *nu < floor * (1.0 - 1e-9) {
                return Err(CvmemError::Domain(format!(
                    "covariance violates Heisenberg: min symplectic eigenvalue {nu:.6e} < {floor}"
                )));
            }
        }
        Ok(Self {
            labels,
            mean,
            cov,
            convention,
        })
    }

    /// Vacuum state on the given modes.
    pub fn vacuum(labels: &[&str], convention: Convention) -> Self {
        let n = labels.len();
        Self {
            labels: labels.iter().map(|s| s.to_string()).collect(),
            mean: DVector::zeros(2 * n),
            cov: DMatrix::identity(2 * n, 2 * n) * convention.vacuum_variance(),
            convention,
        }
    }

    pub fn n_modes(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mean(&self) -> &DVector<f64> {
        &self.mean
    }

    pub fn cov(&self) -> &DMatrix<f64> {
        &self.cov
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Index of the X (q=0) or P (q=1) quadrature of mode `m`.
    pub fn quad_index(&self, mode: usize, q: usize) -> usize {
        2 * mode + q
    }

    pub fn mode_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Rescale quadratures between the two vacuum conventions.
    /// UNIT -> QUARTER divides quadratures by 2 (covariance by 4);
    /// the round trip is the identity.
    pub fn convert(&self, target: Convention) -> GaussianState {
        if self.convention == target {
            return self.clone();
        }
        let s = match (self.convention, target) {
            (Convention::Unit, Convention::Quarter) => 0.5,
            (Convention::Quarter, Convention::Unit) => 2.0,
            _ => 1.0,
        };
        GaussianState {
            labels: self.labels.clone(),
            mean: &self.mean * s,
            cov: &self.cov * (s * s),
            convention: target,
        }
    }

    /// Tensor with another state (modes appended on the right).
    pub fn tensor(&self, other: &GaussianState) -> Result<GaussianState> {
        if self.convention != other.convention {
            return Err(CvmemError::Domain(
                "tensor product requires matching conventions".into(),
            ));
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let d1 = self.mean.len();
        let d2 = other.mean.len();
        let mut mean = DVector::zeros(d1 + d2);
        mean.rows_mut(0, d1).copy_from(&self.mean);
        mean.rows_mut(d1, d2).copy_from(&other.mean);
        let mut cov = DMatrix::zeros(d1 + d2, d1 + d2);
        cov.view_mut((0, 0), (d1, d1)).copy_from(&self.cov);
        cov.view_mut((d1, d1), (d2, d2)).copy_from(&other.cov);
        Ok(GaussianState {
            labels,
            mean,
            cov,
            convention: self.convention,
        })
    }
}

/// Convert between conventions (free-function form of [`GaussianState::convert`]).
pub fn convention_convert(state: &GaussianState, target: Convention) -> GaussianState {
    state.convert(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn vacuum_has_identity_covariance() {
        let v = GaussianState::vacuum(&["light"], Convention::Unit);
        assert_eq!(v.cov()[(0, 0)], 1.0);
        let vq = GaussianState::vacuum(&["light"], Convention::Quarter);
        assert_eq!(vq.cov()[(0, 0)], 0.25);
    }

    #[test]
    fn unit_vacuum_converts_to_quarter_vacuum() {
        let v = GaussianState::vacuum(&["a"], Convention::Unit);
        let q = v.convert(Convention::Quarter);
        assert_abs_diff_eq!(q.cov()[(0, 0)], 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(q.cov()[(1, 1)], 0.25, epsilon = 1e-15);
    }

    #[test]
    fn convert_round_trip_is_identity() {
        let mut cov = DMatrix::identity(2, 2);
        cov[(0, 0)] = 2.0;
        cov[(1, 1)] = 0.5;
        let s = GaussianState::new(
            vec!["m".into()],
            DVector::from_vec(vec![0.3, -0.7]),
            cov,
            Convention::Unit,
        )
        .unwrap();
        let rt = s.convert(Convention::Quarter).convert(Convention::Unit);
        assert!((rt.cov() - s.cov()).amax() < 1e-14);
        assert!((rt.mean() - s.mean()).amax() < 1e-14);
    }

    #[test]
    fn squeezed_diag_converts_with_quarter_scale() {
        let mut cov = DMatrix::zeros(2, 2);
        cov[(0, 0)] = 2.0;
        cov[(1, 1)] = 0.5;
        let s = GaussianState::new(
            vec!["m".into()],
            DVector::zeros(2),
            cov,
            Convention::Unit,
        )
        .unwrap();
        let q = s.convert(Convention::Quarter);
        assert_abs_diff_eq!(q.cov()[(0, 0)], 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(q.cov()[(1, 1)], 0.125, epsilon = 1e-15);
    }

    #[test]
    fn heisenberg_violation_is_rejected() {
        let cov = DMatrix::identity(2, 2) * 0.5; // below unit vacuum
        let r = GaussianState::new(
            vec!["m".into()],
            DVector::zeros(2),
            cov,
            Convention::Unit,
        );
        assert!(r.is_err());
    }

    #[test]
    fn asymmetric_covariance_is_rejected() {
        let mut cov = DMatrix::identity(2, 2);
        cov[(0, 1)] = 1e-6;
        let r = GaussianState::new(
            vec!["m".into()],
            DVector::zeros(2),
            cov,
            Convention::Unit,
        );
        assert!(r.is_err());
    }
}
