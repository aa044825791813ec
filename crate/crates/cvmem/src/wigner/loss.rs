//! Beam-splitter loss on a Wigner function: Gaussian smoothing with the
//! vacuum entering through the dark port.

use super::function::{Rect, WignerFunction};
use crate::error::{CvmemError, Result};
use crate::math::quad::adaptive_quad_2d;
use std::f64::consts::PI;

/// W'(x,p) = (1/eta) * int W((x-u)/sqrt(eta), (p-v)/sqrt(eta)) G(u,v) du dv
/// with G a Gaussian of variance (1-eta)/4 per quadrature; eta = 1 is the
/// identity.
pub fn apply_loss(w: &WignerFunction, eta: f64) -> Result<WignerFunction> {
    if !(eta > 0.0 && eta <= 1.0) {
        return Err(CvmemError::parameter("eta", "must lie in (0, 1]"));
    }
    if eta == 1.0 {
        return Ok(w.clone());
    }
    let input = w.clone();
    let se = eta.sqrt();
    let var = (1.0 - eta) / 4.0;
    let reach = 6.0 * var.sqrt();
    let norm = 1.0 / (2.0 * PI * var);
    let sup = w.support();
    let out = Rect {
        x_min: se * sup.x_min - reach - 0.5,
        x_max: se * sup.x_max + reach + 0.5,
        p_min: se * sup.p_min - reach - 0.5,
        p_max: se * sup.p_max + reach + 0.5,
    };
    Ok(WignerFunction::from_fn(
        move |x, p| {
            let f = |u: f64, v: f64| {
                input.value((x - u) / se, (p - v) / se)
                    * norm
                    * (-(u * u + v * v) / (2.0 * var)).exp()
            };
            adaptive_quad_2d(&f, (-reach, reach, -reach, reach), 1e-9)
                .map(|r| r.value / eta)
                .unwrap_or(f64::NAN)
        },
        out,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wigner::states::{wigner_single_photon, wigner_vacuum};
    use approx::assert_abs_diff_eq;

    #[test]
    fn full_transmission_is_identity() {
        let w = wigner_single_photon();
        let out = apply_loss(&w, 1.0).unwrap();
        assert_abs_diff_eq!(out.value(0.3, -0.4), w.value(0.3, -0.4), epsilon = 1e-12);
    }

    #[test]
    fn photon_negativity_vanishes_at_half_transmission() {
        // eta|1><1| + (1-eta)|0><0|: parity gives W(0,0) = (2/pi)(1-2eta)
        let w = wigner_single_photon();
        let half = apply_loss(&w, 0.5).unwrap();
        assert_abs_diff_eq!(half.value(0.0, 0.0), 0.0, epsilon = 1e-8);
        for eta in [0.3, 0.8] {
            let out = apply_loss(&w, eta).unwrap();
            let expect = (2.0 / PI) * (1.0 - 2.0 * eta);
            assert_abs_diff_eq!(out.value(0.0, 0.0), expect, epsilon = 1e-8);
        }
    }

    #[test]
    fn strong_loss_approaches_vacuum() {
        let w = wigner_single_photon();
        let out = apply_loss(&w, 0.02).unwrap();
        let vac = wigner_vacuum();
        for (x, p) in [(0.0, 0.0), (0.5, 0.5), (1.0, -1.0)] {
            assert!((out.value(x, p) - vac.value(x, p)).abs() < 0.05);
        }
    }

    #[test]
    fn loss_preserves_normalization() {
        let w = wigner_single_photon();
        let out = apply_loss(&w, 0.7).unwrap();
        assert_abs_diff_eq!(out.normalization().unwrap(), 1.0, epsilon = 1e-6);
    }

    #[test]
    fn out_of_range_eta_rejected() {
        let w = wigner_vacuum();
        assert!(apply_loss(&w, 0.0).is_err());
        assert!(apply_loss(&w, 1.2).is_err());
    }
}
