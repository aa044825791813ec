//! The exact QND unitary on the truncated light x atom space.

use super::ops::{expm_multiply, JointGenerator, C64};
use crate::error::{require_finite, Result};
use crate::gaussian::symplectic::QndKind;
use nalgebra::DMatrix;

/// Apply the QND unitary to a joint state vector (indexed l * na + a).
pub fn apply_qnd_vec(kind: QndKind, kappa: f64, nl: usize, na: usize, psi: &mut Vec<C64>) {
    let g = JointGenerator {
        kind,
        kappa,
        nl,
        na,
    };
    expm_multiply(|x, out| g.apply(x, out), g.norm_bound(), psi);
}

/// Dense QND unitary, built column-by-column (columns are independent,
/// so they evaluate in parallel). Dimension (n_trunc+1)^2.
pub fn qnd_unitary(kind: QndKind, kappa: f64, n_trunc: usize) -> Result<DMatrix<C64>> {
    require_finite("kappa", kappa)?;
    let n = n_trunc + 1;
    let dim = n * n;
    let cols = crate::par::map_indexed(dim, |j| {
        let mut v = vec![C64::new(0.0, 0.0); dim];
        v[j] = C64::new(1.0, 0.0);
        apply_qnd_vec(kind, kappa, n, n, &mut v);
        v
    });
    let mut u = DMatrix::<C64>::zeros(dim, dim);
    for (j, col) in cols.iter().enumerate() {
        for i in 0..dim {
            u[(i, j)] = col[i];
        }
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::states::coherent_vector;
    use crate::gaussian::state::{Convention, GaussianState};
    use crate::gaussian::symplectic::{apply_map, qnd_map};
    use approx::assert_abs_diff_eq;
    use nalgebra::DVector;

    #[test]
    fn zero_coupling_gives_identity() {
        let u = qnd_unitary(QndKind::Type1, 0.0, 5).unwrap();
        let id = DMatrix::<C64>::identity(36, 36);
        assert!((u - id).camax() < 1e-14);
    }

    #[test]
    fn unitarity_on_the_inner_block() {
        let n_trunc = 12;
        let u = qnd_unitary(QndKind::Type2, 0.2, n_trunc).unwrap();
        let utu = u.adjoint() * &u;
        // exclude edge rows: basis states within n_trunc - 5 per mode
        let n = n_trunc + 1;
        let keep = n_trunc - 5;
        let mut max_dev: f64 = 0.0;
        for li in 0..=keep {
            for ai in 0..=keep {
                for lj in 0..=keep {
                    for aj in 0..=keep {
                        let (i, j) = (li * n + ai, lj * n + aj);
                        let expect = if i == j { 1.0 } else { 0.0 };
                        max_dev = max_dev.max((utu[(i, j)] - C64::new(expect, 0.0)).norm());
                    }
                }
            }
        }
        assert!(max_dev < 1e-10, "inner-block unitarity deviation {max_dev:.2e}");
    }

    #[test]
    fn heisenberg_means_match_the_symplectic_maps() {
        // coherent inputs: quadrature means transform exactly per the maps
        let n = 35;
        let cases = [
            (QndKind::Type2, 0.13),
            (QndKind::Type1, 0.21),
        ];
        for (kind, kappa) in cases {
            let al = C64::new(0.5, 0.3);
            let aa = C64::new(-0.2, 0.4);
            let light = coherent_vector(n, al);
            let atom = coherent_vector(n, aa);
            let mut joint = vec![C64::new(0.0, 0.0); n * n];
            for l in 0..n {
                for a in 0..n {
                    joint[l * n + a] = light[l] * atom[a];
                }
            }
            apply_qnd_vec(kind, kappa, n, n, &mut joint);

            // oracle-side means
            let mut a_l = C64::new(0.0, 0.0);
            let mut a_a = C64::new(0.0, 0.0);
            for l in 0..n {
                for a in 0..n {
                    let c = joint[l * n + a].conj();
                    if l + 1 < n {
                        a_l += c * joint[(l + 1) * n + a] * ((l + 1) as f64).sqrt();
                    }
                    if a + 1 < n {
                        a_a += c * joint[l * n + a + 1] * ((a + 1) as f64).sqrt();
                    }
                }
            }

            // symplectic-side means (convention-independent linear map)
            let mean = DVector::from_vec(vec![al.re, al.im, aa.re, aa.im]);
            let vac = GaussianState::vacuum(&["L", "A"], Convention::Quarter);
            let m = qnd_map(kind, kappa).unwrap();
            let expected = &m.matrix * &mean;
            let _ = apply_map(&vac, &m).unwrap();

            assert_abs_diff_eq!(a_l.re, expected[0], epsilon = 1e-8);
            assert_abs_diff_eq!(a_l.im, expected[1], epsilon = 1e-8);
            assert_abs_diff_eq!(a_a.re, expected[2], epsilon = 1e-8);
            assert_abs_diff_eq!(a_a.im, expected[3], epsilon = 1e-8);
        }
    }

    #[test]
    fn first_order_transfer_amplitude_is_linear_in_kappa() {
        // <x = 0 (light)| U |1_L, 0_A> lands on |1_A> with amplitude
        // proportional to -kappa at leading order
        let n = 25;
        let mut slopes = Vec::new();
        for kappa in [0.01, 0.02, 0.03, 0.04, 0.05] {
            let mut joint = vec![C64::new(0.0, 0.0); n * n];
            joint[n] = C64::new(1.0, 0.0); // |1_L, 0_A>
            apply_qnd_vec(QndKind::Type2, kappa, n, n, &mut joint);
            let psi0 = crate::fock::povm::wavefunctions(n, 0.0);
            // project light on x = 0, read the |1_A> amplitude
            let mut amp = C64::new(0.0, 0.0);
            for l in 0..n {
                amp += C64::new(psi0[l], 0.0) * joint[l * n + 1];
            }
            slopes.push((kappa, amp.re / psi0[0]));
        }
        // linear fit through the origin; R^2 > 0.999 and negative slope
        let sxx: f64 = slopes.iter().map(|(k, _)| k * k).sum();
        let sxy: f64 = slopes.iter().map(|(k, v)| k * v).sum();
        let slope = sxy / sxx;
        assert!(slope < 0.0, "transfer amplitude must be negative, slope {slope}");
        let ss_res: f64 = slopes.iter().map(|(k, v)| (v - slope * k).powi(2)).sum();
        let mean_v: f64 = slopes.iter().map(|(_, v)| v).sum::<f64>() / slopes.len() as f64;
        let ss_tot: f64 = slopes.iter().map(|(_, v)| (v - mean_v).powi(2)).sum();
        let r2 = 1.0 - ss_res / ss_tot;
        assert!(r2 > 0.999, "R^2 = {r2}");
    }
}
