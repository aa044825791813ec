//! Finite-window homodyne POVM in the truncated number basis.

use super::ops::C64;
use crate::error::{require_positive, Result};
use crate::math::quad::gauss_legendre;
use nalgebra::DMatrix;

/// Oscillator position wavefunctions psi_0..psi_{n-1} at `x`, scaled so
/// the vacuum has <x^2> = 1/4 (psi_0(x) = (2/pi)^{1/4} e^{-x^2}).
pub fn wavefunctions(n: usize, x: f64) -> Vec<f64> {
    let xi = std::f64::consts::SQRT_2 * x;
    let mut out = vec![0.0; n];
    if n == 0 {
        return out;
    }
    let psi0 = (2.0 / std::f64::consts::PI).powf(0.25) * (-x * x).exp();
    out[0] = psi0;
    if n > 1 {
        out[1] = std::f64::consts::SQRT_2 * xi * psi0;
        // normalized recurrence: psi_{k+1} = sqrt(2/(k+1)) xi psi_k - sqrt(k/(k+1)) psi_{k-1}
        for k in 1..n - 1 {
            out[k + 1] = (2.0 / (k as f64 + 1.0)).sqrt() * xi * out[k]
                - (k as f64 / (k as f64 + 1.0)).sqrt() * out[k - 1];
        }
    }
    out
}

/// E(B) = int_{-B}^{B} |x><x| dx assembled by Gauss-Legendre quadrature.
/// The node count grows with B so wide windows stay spectrally resolved.
pub fn window_povm(b: f64, n_trunc: usize) -> Result<DMatrix<C64>> {
    require_positive("B", b)?;
    let dim = n_trunc + 1;
    let nodes = 32.max((6.0 * b * (2.0 * dim as f64 + 2.0).sqrt()) as usize + 8);
    let (xs, ws) = gauss_legendre(nodes);
    let mut e = DMatrix::<C64>::zeros(dim, dim);
    for (x, w) in xs.iter().zip(&ws) {
        let psi = wavefunctions(dim, b * x);
        let weight = b * w;
        for i in 0..dim {
            for j in 0..=i {
                let v = weight * psi[i] * psi[j];
                e[(i, j)] += C64::new(v, 0.0);
            }
        }
    }
    for i in 0..dim {
        for j in 0..i {
            e[(j, i)] = e[(i, j)];
        }
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::erf::erf;
    use approx::assert_abs_diff_eq;

    #[test]
    fn vacuum_window_probability_is_erf() {
        for b in [0.01, 0.3, 1.0] {
            let e = window_povm(b, 25).unwrap();
            assert_abs_diff_eq!(
                e[(0, 0)].re,
                erf(std::f64::consts::SQRT_2 * b),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn wide_window_is_the_identity() {
        let e = window_povm(9.0, 20).unwrap();
        for i in 0..=20 {
            assert_abs_diff_eq!(e[(i, i)].re, 1.0, epsilon = 1e-9);
            for j in 0..i {
                assert!(e[(i, j)].norm() < 1e-9);
            }
        }
    }

    #[test]
    fn povm_spectrum_lies_in_unit_interval() {
        let e = window_povm(0.4, 30).unwrap();
        let eig = e.symmetric_eigenvalues();
        for l in eig.iter() {
            assert!(*l >= -1e-12 && *l <= 1.0 + 1e-12, "eigenvalue {l}");
        }
    }

    #[test]
    fn vacuum_wavefunction_has_quarter_variance() {
        // <x^2> under psi_0^2 = 1/4
        let quad = crate::math::quad::adaptive_quad(
            &|x: f64| {
                let p = wavefunctions(1, x);
                x * x * p[0] * p[0]
            },
            -6.0,
            6.0,
            1e-12,
        )
        .unwrap();
        assert_abs_diff_eq!(quad.value, 0.25, epsilon = 1e-12);
    }
}
