//! Logarithmic negativity of two-mode Gaussian states.

use super::state::{symplectic_eigenvalues, Convention, GaussianState};
use crate::error::{CvmemError, Result};
use nalgebra::DMatrix;

/// E_N = max(0, -log2 nu-), where nu- is the smallest symplectic
/// eigenvalue of the partial transpose, in units where vacuum has
/// covariance identity. Invariant under local symplectic maps.
pub fn log_negativity(state: &GaussianState) -> Result<f64> {
    if state.n_modes() != 2 {
        return Err(CvmemError::DimensionMismatch {
            expected: 2,
            got: state.n_modes(),
        });
    }
    // normalize to unit vacuum so nu = 1 marks the boundary
    let unit = state.convert(Convention::Unit);
    let cov = unit.cov();

    let nu_min_phys = symplectic_eigenvalues(cov)
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    if nu_min_phys < 1.0 - 1e-9 {
        return Err(CvmemError::Domain(format!(
            "covariance is non-physical (nu_min = {nu_min_phys:.9})"
        )));
    }

    let nu = min_pt_symplectic_eigenvalue(cov);
    Ok((-nu.log2()).max(0.0))
}

/// Smallest partial-transpose symplectic eigenvalue via the two-mode
/// invariant formula: nu^2 = (D - sqrt(D^2 - 4 det V)) / 2 with
/// D = det A + det B - 2 det C.
pub fn min_pt_symplectic_eigenvalue(cov: &DMatrix<f64>) -> f64 {
    let a = cov.view((0, 0), (2, 2)).into_owned();
    let b = cov.view((2, 2), (2, 2)).into_owned();
    let c = cov.view((0, 2), (2, 2)).into_owned();
    let delta_pt = a.determinant() + b.determinant() - 2.0 * c.determinant();
    let det_v = cov.determinant();
    let disc = (delta_pt * delta_pt - 4.0 * det_v).max(0.0);
    (0.5 * (delta_pt - disc.sqrt())).max(0.0).sqrt()
}

/// Independent route for cross-checks: eigenvalues of Omega * (Lambda V Lambda)
/// with Lambda flipping the P quadrature of mode 2.
pub fn min_pt_eigenvalue_bruteforce(cov: &DMatrix<f64>) -> f64 {
    let mut lambda = DMatrix::identity(4, 4);
    lambda[(3, 3)] = -1.0;
    let v_pt = &lambda * cov * &lambda;
    symplectic_eigenvalues(&v_pt)
        .into_iter()
        .fold(f64::INFINITY, f64::min)
}

/// Covariance of a two-mode squeezed vacuum with parameter r (unit vacuum).
pub fn two_mode_squeezed_cov(r: f64) -> DMatrix<f64> {
    let ch = (2.0 * r).cosh();
    let sh = (2.0 * r).sinh();
    let mut cov = DMatrix::identity(4, 4) * ch;
    cov[(0, 2)] = sh;
    cov[(2, 0)] = sh;
    cov[(1, 3)] = -sh;
    cov[(3, 1)] = -sh;
    cov
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::symplectic::{apply_map, squeeze_map, SqueezeDirection};
    use approx::assert_abs_diff_eq;
    use nalgebra::DVector;

    fn state_from_cov(cov: DMatrix<f64>) -> GaussianState {
        GaussianState::new(
            vec!["a".into(), "b".into()],
            DVector::zeros(4),
            cov,
            Convention::Unit,
        )
        .unwrap()
    }

    #[test]
    fn two_mode_vacuum_is_separable() {
        let vac = GaussianState::vacuum(&["a", "b"], Convention::Unit);
        assert_eq!(log_negativity(&vac).unwrap(), 0.0);
    }

    #[test]
    fn two_mode_squeezed_matches_closed_form_and_bruteforce() {
        let r = 0.5;
        let s = state_from_cov(two_mode_squeezed_cov(r));
        let en = log_negativity(&s).unwrap();
        // nu- = e^{-2r}; E_N = 2r/ln2
        assert_abs_diff_eq!(en, 2.0 * r / std::f64::consts::LN_2, epsilon = 1e-10);
        assert_abs_diff_eq!(en, 1.4426950408889634, epsilon = 1e-10);

        let nu_formula = min_pt_symplectic_eigenvalue(s.cov());
        let nu_brute = min_pt_eigenvalue_bruteforce(s.cov());
        assert_abs_diff_eq!(nu_formula, nu_brute, epsilon = 1e-10);
    }

    #[test]
    fn local_squeezing_leaves_log_negativity_invariant() {
        let s = state_from_cov(two_mode_squeezed_cov(0.7));
        let base = log_negativity(&s).unwrap();
        for c in [0.4, 1.9, 3.1] {
            for mode in [0, 1] {
                let sq = squeeze_map(2, mode, c, SqueezeDirection::XDownPUp).unwrap();
                let t = apply_map(&s, &sq).unwrap();
                let en = log_negativity(&t).unwrap();
                assert_abs_diff_eq!(en, base, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn wrong_mode_count_is_rejected() {
        let vac = GaussianState::vacuum(&["a"], Convention::Unit);
        assert!(log_negativity(&vac).is_err());
    }
}
