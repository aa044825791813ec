//! Small-window expansions of the photon-upload metrics.

use super::closed_form::{photon_f_max, PostSelectParams};
use crate::error::Result;
use std::f64::consts::PI;

/// Leading expansion coefficients around B = 0 at fixed (kappa, a):
///   F(B)  ~ 1 - f_coefficient * B^2          (with post-correction)
///   N(B)  ~ -2/pi + n_coefficient * B^2
///   P_S(B) ~ p_s_slope * B
/// plus the B -> 0 fidelity ceiling without post-correction.
#[derive(Debug, Clone)]
pub struct Asymptotics {
    pub f_coefficient: f64,
    pub n_coefficient: f64,
    pub p_s_slope: f64,
    pub f_max: f64,
    /// Present when B is too large for the expansions to be trusted.
    pub regime_warning: Option<String>,
}

impl Asymptotics {
    pub fn f_expansion(&self, b: f64) -> f64 {
        1.0 - self.f_coefficient * b * b
    }

    pub fn n_expansion(&self, b: f64) -> f64 {
        -2.0 / PI + self.n_coefficient * b * b
    }

    pub fn p_s_leading(&self, b: f64) -> f64 {
        self.p_s_slope * b
    }
}

pub fn asymptotics(params: &PostSelectParams) -> Result<Asymptotics> {
    params.validate()?;
    let (kappa, a, b) = (params.kappa, params.a, params.b_window);
    let k2 = kappa * kappa;
    let a4 = a.powi(4);
    let regime_warning = if b * b / k2 > 0.1 {
        Some(format!(
            "B^2/kappa^2 = {:.3} > 0.1: quadratic-in-B expansion unreliable",
            b * b / k2
        ))
    } else {
        None
    };
    Ok(Asymptotics {
        f_coefficient: 4.0 / (3.0 * k2) + k2 / (2.0 * a4),
        n_coefficient: 16.0 / (3.0 * PI * k2) + 4.0 * k2 / (PI * a4),
        p_s_slope: 2.0 * std::f64::consts::SQRT_2 * k2 / (PI.sqrt() * a.powi(3)),
        f_max: photon_f_max(kappa, a),
        regime_warning,
    })
}
