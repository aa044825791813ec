//! Protocol-level results of the deterministic scheme: the mixed
//! uploaded single photon and its nonclassicality witnesses.

use crate::error::{require_positive, Result};
use crate::gaussian::record::{matched_kappa_prime, solve_record_gains};
use serde::Serialize;

/// Outcome of pushing a single photon through record + post-correction:
/// a pure-loss channel of transmission T leaves T|1><1| + (1-T)|0><0|.
#[derive(Debug, Clone, Serialize)]
pub struct DeterministicUploadResult {
    pub t_total: f64,
    /// Occupation of |0> and |1>.
    pub rho_diag: (f64, f64),
    /// Mandel Q = (Var n - <n>)/<n>; equals -T for this mixture.
    pub mandel_q: f64,
    pub kappa: f64,
    pub c: f64,
    pub kappa_prime: f64,
    pub g: f64,
    pub a: f64,
    pub b: f64,
}

/// Deterministically upload a single photon with coupling `kappa` and
/// pre-squeezing `c` (post-correction matched internally).
pub fn deterministic_photon_upload(kappa: f64, c: f64) -> Result<DeterministicUploadResult> {
    require_positive("kappa", kappa)?;
    require_positive("c", c)?;
    let gains = solve_record_gains(kappa, c)?;
    let kp = matched_kappa_prime(kappa, c);
    let b = (1.0 - kp * kp).sqrt();
    let t = crate::gaussian::record::composed_transmission(kappa, c);

    // photon-number moments of T|1><1| + (1-T)|0><0|:
    // <n> = T, <n^2> = T, so Q = (T - T^2 - T)/T = -T
    let mandel_q = -t;
    Ok(DeterministicUploadResult {
        t_total: t,
        rho_diag: (1.0 - t, t),
        mandel_q,
        kappa,
        c,
        kappa_prime: kp,
        g: gains.g,
        a: gains.a,
        b,
    })
}

/// Pre-squeezing that maximizes the composed transmission: c = 1/kappa.
pub fn optimal_pre_squeezing(kappa: f64) -> Result<f64> {
    require_positive("kappa", kappa)?;
    Ok(1.0 / kappa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::record::composed_transmission;
    use approx::assert_abs_diff_eq;

    #[test]
    fn matched_coupling_gives_quarter_mixture() {
        let r = deterministic_photon_upload(1.0, 1.0).unwrap();
        assert_abs_diff_eq!(r.t_total, 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(r.rho_diag.1, 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(r.rho_diag.0, 0.75, epsilon = 1e-15);
        assert_abs_diff_eq!(r.mandel_q, -0.25, epsilon = 1e-15);
    }

    #[test]
    fn weak_coupling_leaves_vacuum() {
        let r = deterministic_photon_upload(1e-9, 1.0).unwrap();
        assert!(r.t_total < 1e-15);
        assert_abs_diff_eq!(r.rho_diag.0, 1.0, epsilon = 1e-15);
        assert!(r.mandel_q.abs() < 1e-15);
    }

    #[test]
    fn off_peak_transmission() {
        let r = deterministic_photon_upload(1.0, 2.0).unwrap();
        assert_abs_diff_eq!(r.t_total, 4.0 / 25.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.mandel_q, -0.16, epsilon = 1e-15);
    }

    #[test]
    fn occupations_sum_to_one_and_p1_is_t() {
        for (k, c) in [(0.3, 0.7), (1.4, 1.0), (0.05, 5.0)] {
            let r = deterministic_photon_upload(k, c).unwrap();
            assert_abs_diff_eq!(r.rho_diag.0 + r.rho_diag.1, 1.0, epsilon = 1e-15);
            assert_abs_diff_eq!(r.rho_diag.1, r.t_total, epsilon = 1e-15);
            assert_abs_diff_eq!(r.mandel_q, -r.t_total, epsilon = 1e-15);
        }
    }

    #[test]
    fn optimal_pre_squeezing_reaches_quarter() {
        for k in [0.1, 1.0, 10.0] {
            let c = optimal_pre_squeezing(k).unwrap();
            assert_abs_diff_eq!(composed_transmission(k, c), 0.25, epsilon = 1e-12);
        }
        assert!(optimal_pre_squeezing(0.0).is_err());
    }
}
