//! Deterministic record channel: pre-squeeze, QND write, homodyne
//! feed-forward, and the optional squeezing post-correction stage,
//! synthesized exactly in the Heisenberg picture.
//!
//! The channel bookkeeping follows X' = sqrt(T) X_sig + X_N with V_N the
//! raw variance of the added noise (unit vacuum); "noise excess free"
//! means V_N <= 1 - T in both quadratures, the pure-loss minimum.

use crate::error::{require_positive, CvmemError, Result};
use nalgebra::DMatrix;
use serde::Serialize;

/// Gains solving the noise-excess-free condition for the record stage.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RecordGains {
    /// Feed-forward electronic gain (negative).
    pub g: f64,
    /// Declared squeezing of the recorded state.
    pub a: f64,
    /// Record transmission (up to the squeezing).
    pub t_r: f64,
}

/// Parameters of the squeezing post-correction stage.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PostcorrectionParams {
    /// Feed-forward gain of the correction stage (= -kappa').
    pub g: f64,
    /// Squeezing factor undone by the correction (b^2 = 1 - kappa'^2).
    pub b: f64,
    /// Transmission cost of the correction.
    pub t_c: f64,
}

/// Full channel report for the deterministic record.
#[derive(Debug, Clone, Serialize)]
pub struct ChannelReport {
    pub t_x: f64,
    pub t_p: f64,
    pub v_nx: f64,
    pub v_np: f64,
    pub noise_excess_free: bool,
    /// The fixed passive frame the channel applies on top of the loss:
    /// atomic X carries the light P and atomic P carries -X.
    pub frame: String,
    pub kappa: f64,
    pub c: f64,
    pub g: f64,
    pub a: f64,
    /// Post-correction gain/squeeze, when that stage is present.
    pub kappa_prime: Option<f64>,
    pub b: Option<f64>,
}

const NOISE_TOL: f64 = 1e-9;

/// Gains for the noise-excess-free record with pre-squeezing c:
/// g = -c^2 k / (1 + c^2 k^2), a = 1/sqrt(1 + c^2 k^2),
/// T'_R = c^2 k^2 / (1 + c^2 k^2).
pub fn solve_record_gains(kappa: f64, c: f64) -> Result<RecordGains> {
    require_positive("kappa", kappa)?;
    require_positive("c", c)?;
    let ck2 = c * c * kappa * kappa;
    Ok(RecordGains {
        g: -c * c * kappa / (1.0 + ck2),
        a: 1.0 / (1.0 + ck2).sqrt(),
        t_r: ck2 / (1.0 + ck2),
    })
}

/// Post-correction stage: g = -kappa', b^2 = T_C = 1 - kappa'^2.
/// Infeasible for kappa' >= 1 (b^2 <= 0).
pub fn postcorrection_params(kappa_prime: f64) -> Result<PostcorrectionParams> {
    require_positive("kappa_prime", kappa_prime)?;
    if kappa_prime >= 1.0 {
        return Err(CvmemError::Domain(format!(
            "post-correction infeasible: kappa' = {kappa_prime} gives b^2 <= 0"
        )));
    }
    let b2 = 1.0 - kappa_prime * kappa_prime;
    Ok(PostcorrectionParams {
        g: -kappa_prime,
        b: b2.sqrt(),
        t_c: b2,
    })
}

/// Total transmission of record plus matched post-correction:
/// T = c^2 k^2 / (1 + c^2 k^2)^2, maximized at 1/4 when c k = 1.
pub fn composed_transmission(kappa: f64, c: f64) -> f64 {
    let ck2 = c * c * kappa * kappa;
    ck2 / ((1.0 + ck2) * (1.0 + ck2))
}

/// Matching condition for the post-correction: a^2 = b^2, i.e.
/// kappa'^2 = c^2 k^2 / (1 + c^2 k^2).
pub fn matched_kappa_prime(kappa: f64, c: f64) -> f64 {
    let ck2 = c * c * kappa * kappa;
    (ck2 / (1.0 + ck2)).sqrt()
}

/// Build the record channel report with the solved gains.
pub fn record_channel_report(kappa: f64, c: f64, with_postcorrection: bool) -> Result<ChannelReport> {
    if kappa == 0.0 {
        // decoupled: the memory stays in vacuum; a pure-loss T = 0 channel
        return Ok(ChannelReport {
            t_x: 0.0,
            t_p: 0.0,
            v_nx: 1.0,
            v_np: 1.0,
            noise_excess_free: true,
            frame: frame_text(false),
            kappa,
            c,
            g: 0.0,
            a: 1.0,
            kappa_prime: None,
            b: None,
        });
    }
    let gains = solve_record_gains(kappa, c)?;
    record_channel_report_with_gain(kappa, c, gains.g, with_postcorrection)
}

/// Same pipeline with an explicit feed-forward gain (used to demonstrate
/// that detuning g away from the solved value creates noise excess).
pub fn record_channel_report_with_gain(
    kappa: f64,
    c: f64,
    g: f64,
    with_postcorrection: bool,
) -> Result<ChannelReport> {
    require_positive("kappa", kappa)?;
    require_positive("c", c)?;
    crate::error::require_finite("g", g)?;
    let gains = solve_record_gains(kappa, c)?;
    let a = gains.a;

    // Heisenberg pipeline over [X_s, P_s, X_A, P_A, X_L0, P_L0]:
    // each row of M expresses a current quadrature over the inputs.
    let mut m = DMatrix::<f64>::identity(6, 6);
    // pre-squeeze the signal light: X_s -> X_s/c, P_s -> c P_s
    scale_row(&mut m, 0, 1.0 / c);
    scale_row(&mut m, 1, c);
    // type-1 coupling (signal light <-> atoms): X_L += k P_A, X_A += k P_L
    add_row(&mut m, 0, 3, kappa);
    add_row(&mut m, 2, 1, kappa);
    // homodyne X'_L, feed-forward onto P_A
    add_row(&mut m, 3, 0, g);

    let (kp, b) = if with_postcorrection {
        let kp = matched_kappa_prime(kappa, c);
        let pc = postcorrection_params(kp)?;
        // type-2 coupling (fresh vacuum light <-> atoms):
        // X_L0 += k' X_A, P_A -= k' P_L0
        add_row(&mut m, 4, 2, kp);
        add_row(&mut m, 3, 5, -kp);
        // homodyne X'_L0, feed-forward onto X_A
        add_row(&mut m, 2, 4, pc.g);
        (Some(kp), Some(pc.b))
    } else {
        // declare the squeezing frame: report a*X_A, P_A/a
        scale_row(&mut m, 2, a);
        scale_row(&mut m, 3, 1.0 / a);
        (None, None)
    };

    // atomic X carries the signal P, atomic P carries the signal X
    let x_row = m.row(2);
    let p_row = m.row(3);
    let t_x = x_row[1] * x_row[1];
    let t_p = p_row[0] * p_row[0];
    debug_assert!(x_row[0].abs() < 1e-12, "atomic X must not carry signal X");
    debug_assert!(p_row[1].abs() < 1e-12, "atomic P must not carry signal P");
    let v_nx: f64 = (2..6).map(|i| x_row[i] * x_row[i]).sum();
    let v_np: f64 = (2..6).map(|i| p_row[i] * p_row[i]).sum();

    let noise_excess_free =
        v_nx <= 1.0 - t_x + NOISE_TOL && v_np <= 1.0 - t_p + NOISE_TOL;

    Ok(ChannelReport {
        t_x,
        t_p,
        v_nx,
        v_np,
        noise_excess_free,
        frame: frame_text(!with_postcorrection),
        kappa,
        c,
        g,
        a,
        kappa_prime: kp,
        b,
    })
}

fn frame_text(with_declared_squeeze: bool) -> String {
    let base = "quadrature exchange: X_A <- P_sig, P_A <- -X_sig";
    if with_declared_squeeze {
        format!("{base}; up to declared squeezing (a X_A, P_A / a)")
    } else {
        base.to_string()
    }
}

fn scale_row(m: &mut DMatrix<f64>, row: usize, s: f64) {
    for j in 0..m.ncols() {
        m[(row, j)] *= s;
    }
}

/// row_target += s * row_source
fn add_row(m: &mut DMatrix<f64>, target: usize, source: usize, s: f64) {
    for j in 0..m.ncols() {
        m[(target, j)] += s * m[(source, j)];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn gains_at_unit_coupling() {
        let g = solve_record_gains(1.0, 1.0).unwrap();
        assert_abs_diff_eq!(g.g, -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(g.a, std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(g.t_r, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn gains_with_pre_squeezing() {
        let g = solve_record_gains(0.5, 2.0).unwrap();
        assert_abs_diff_eq!(g.g, -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(g.a * g.a, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(g.t_r, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn weak_coupling_limit() {
        let g = solve_record_gains(1e-8, 1.0).unwrap();
        assert!(g.g.abs() < 1e-7);
        assert_abs_diff_eq!(g.a, 1.0, epsilon = 1e-12);
        assert!(g.t_r < 1e-15);
    }

    #[test]
    fn postcorrection_examples() {
        let p = postcorrection_params(std::f64::consts::FRAC_1_SQRT_2).unwrap();
        assert_abs_diff_eq!(p.b * p.b, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(p.t_c, 0.5, epsilon = 1e-15);

        let p = postcorrection_params(0.9).unwrap();
        assert_abs_diff_eq!(p.b * p.b, 0.19, epsilon = 1e-15);
        assert_abs_diff_eq!(p.g, -0.9, epsilon = 1e-15);

        assert!(postcorrection_params(1.0).is_err());
        let near_id = postcorrection_params(1e-9).unwrap();
        assert_abs_diff_eq!(near_id.t_c, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn composed_transmission_peaks_at_quarter() {
        assert_abs_diff_eq!(composed_transmission(1.0, 1.0), 0.25, epsilon = 1e-15);
        assert_eq!(composed_transmission(0.0, 1.0), 0.0);
        assert_abs_diff_eq!(composed_transmission(2.0, 1.0), 4.0 / 25.0, epsilon = 1e-15);
        // c k = 1 achieves the max for any kappa
        assert_abs_diff_eq!(composed_transmission(0.5, 2.0), 0.25, epsilon = 1e-15);
    }

    #[test]
    fn full_report_at_unit_coupling_with_postcorrection() {
        let r = record_channel_report(1.0, 1.0, true).unwrap();
        assert_abs_diff_eq!(r.t_x, 0.25, epsilon = 1e-12);
        assert_abs_diff_eq!(r.t_p, 0.25, epsilon = 1e-12);
        assert_abs_diff_eq!(r.v_nx, 0.75, epsilon = 1e-12);
        assert_abs_diff_eq!(r.v_np, 0.75, epsilon = 1e-12);
        assert!(r.noise_excess_free);
    }

    #[test]
    fn solved_gains_are_noise_excess_free_without_postcorrection() {
        for (k, c) in [(0.3, 1.0), (1.0, 1.0), (2.5, 0.4), (0.05, 10.0)] {
            let r = record_channel_report(k, c, false).unwrap();
            assert!(r.noise_excess_free, "k={k}, c={c}");
            assert_abs_diff_eq!(r.v_nx, 1.0 - r.t_x, epsilon = 1e-12);
            assert_abs_diff_eq!(r.v_np, 1.0 - r.t_p, epsilon = 1e-12);
            assert_abs_diff_eq!(r.t_x, r.t_p, epsilon = 1e-12);
        }
    }

    #[test]
    fn zero_gain_breaks_the_p_quadrature() {
        let r = record_channel_report_with_gain(1.0, 1.0, 0.0, false).unwrap();
        assert!(!r.noise_excess_free);
        assert!(r.v_np > 1.0 - r.t_p);
        // X side is untouched by the feed-forward gain
        assert_abs_diff_eq!(r.v_nx, 1.0 - r.t_x, epsilon = 1e-12);
    }

    #[test]
    fn zero_coupling_records_vacuum() {
        let r = record_channel_report(0.0, 1.0, false).unwrap();
        assert_eq!(r.t_x, 0.0);
        assert_abs_diff_eq!(r.v_nx, 1.0, epsilon = 1e-15);
        assert!(r.noise_excess_free);
    }

    #[test]
    fn perturbed_gain_always_creates_noise_excess() {
        for k in [0.2, 0.5, 1.0, 2.0] {
            let g = solve_record_gains(k, 1.0).unwrap().g;
            for f in [0.9, 1.1] {
                let r = record_channel_report_with_gain(k, 1.0, g * f, false).unwrap();
                assert!(!r.noise_excess_free, "k={k}, f={f}");
            }
        }
    }
}
