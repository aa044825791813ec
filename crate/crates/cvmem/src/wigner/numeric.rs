//! Generic numerical conditioning path: couple an arbitrary input Wigner
//! function to the vacuum memory, post-select the homodyne window, and
//! integrate out the light plane. Cross-checks the closed forms.

use super::function::{Rect, WignerFunction};
use crate::error::{require_positive, CvmemError, Result};
use crate::gaussian::symplectic::QndKind;
use crate::math::erf::erf;
use crate::math::quad::{adaptive_quad, fixed_quad};
use std::f64::consts::PI;
use std::sync::Arc;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Acceptance kernel of the homodyne window after out-coupling loss eta:
/// the probability that the lossy readout of a light mode at x lands in
/// [-B, B]. At eta = 1 it is the sharp indicator.
fn window_kernel(x: f64, b: f64, eta: f64) -> f64 {
    if eta >= 1.0 {
        return if x.abs() <= b { 1.0 } else { 0.0 };
    }
    let s = (1.0 - eta).sqrt();
    0.5 * (erf(SQRT_2 * (b - eta.sqrt() * x) / s) + erf(SQRT_2 * (b + eta.sqrt() * x) / s))
}

/// Post-selected upload of `w_l` through the QND coupling `kind`,
/// accepting homodyne outcomes of X'_L in [-B, B] (smeared by the
/// out-coupling efficiency `eta`). The atomic memory starts in vacuum.
///
/// Returns the normalized conditional atomic Wigner function and the
/// success rate. Per-point quadrature is adaptive with an absolute
/// tolerance of 1e-8 on the normalized values.
pub fn postselect_upload_numeric(
    w_l: &WignerFunction,
    kind: QndKind,
    kappa: f64,
    b_window: f64,
    eta: f64,
) -> Result<(WignerFunction, f64)> {
    require_positive("kappa", kappa)?;
    require_positive("B", b_window)?;
    if !(eta > 0.0 && eta <= 1.0) {
        return Err(CvmemError::parameter("eta", "must lie in (0, 1]"));
    }

    let s = success_rate_numeric(w_l, kappa, b_window, eta)?;
    if s < 1e-14 {
        return Err(CvmemError::DegenerateConditioning(s));
    }

    let light = w_l.clone();
    let sup = w_l.support();
    let point_tol = 1e-8 * s;
    let eval: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync> = match kind {
        QndKind::Type2 => {
            // joint after coupling: W_L(x' - k x_A, p') W_A(x_A, p_A + k p')
            Arc::new(move |x: f64, p: f64| {
                let inner = |pp: f64| window_integral(&light, x, pp, kappa, b_window, eta, true);
                let f = |pp: f64| {
                    let at = p + kappa * pp;
                    inner(pp) * (2.0 / PI) * (-2.0 * x * x - 2.0 * at * at).exp()
                };
                adaptive_quad(&f, sup.p_min - 0.5, sup.p_max + 0.5, point_tol)
                    .map(|r| r.value / s)
                    .unwrap_or(f64::NAN)
            })
        }
        QndKind::Type1 => {
            // joint after coupling: W_L(x' - k p_A, p') W_A(x_A - k p', p_A)
            Arc::new(move |x: f64, p: f64| {
                let inner = |pp: f64| window_integral(&light, p, pp, kappa, b_window, eta, true);
                let f = |pp: f64| {
                    let at = x - kappa * pp;
                    inner(pp) * (2.0 / PI) * (-2.0 * at * at - 2.0 * p * p).exp()
                };
                adaptive_quad(&f, sup.p_min - 0.5, sup.p_max + 0.5, point_tol)
                    .map(|r| r.value / s)
                    .unwrap_or(f64::NAN)
            })
        }
    };

    let out_support = match kind {
        QndKind::Type2 => Rect::symmetric(4.5, 4.5 + kappa * sup.p_max.abs()),
        QndKind::Type1 => Rect::symmetric(4.5 + kappa * sup.p_max.abs(), 4.5),
    };
    let w = WignerFunction::from_fn(move |x, p| eval(x, p), out_support);
    Ok((w, s))
}

/// Integral of W_L(x' - shift, p') over the accepted window in x'.
fn window_integral(
    w_l: &WignerFunction,
    atom_coord: f64,
    pp: f64,
    kappa: f64,
    b: f64,
    eta: f64,
    _sharp_ok: bool,
) -> f64 {
    let shift = kappa * atom_coord;
    if eta >= 1.0 {
        let f = |xp: f64| w_l.value(xp - shift, pp);
        // the window is narrow on the scale of the input state: a fixed
        // high-order rule is spectrally exact; fall back to adaptive for
        // wide windows
        if b <= 1.5 {
            fixed_quad(f, -b, b, 21)
        } else {
            adaptive_quad(&|xp| w_l.value(xp - shift, pp), -b, b, 1e-12)
                .map(|r| r.value)
                .unwrap_or(f64::NAN)
        }
    } else {
        let sup = w_l.support();
        let lo = sup.x_min + shift - 1.0;
        let hi = sup.x_max + shift + 1.0;
        adaptive_quad(
            &|xp| window_kernel(xp, b, eta) * w_l.value(xp - shift, pp),
            lo,
            hi,
            1e-12,
        )
        .map(|r| r.value)
        .unwrap_or(f64::NAN)
    }
}

/// Success rate: the measured quadrature is X_L plus kappa times a vacuum
/// atomic quadrature, so S is the window integral of the convolution of
/// the light x-marginal with the scaled vacuum marginal.
pub fn success_rate_numeric(w_l: &WignerFunction, kappa: f64, b: f64, eta: f64) -> Result<f64> {
    let sup = w_l.support();
    let m_lx = move |u: f64| -> f64 {
        adaptive_quad(&|v| w_l.value(u, v), sup.p_min, sup.p_max, 1e-12)
            .map(|r| r.value)
            .unwrap_or(f64::NAN)
    };
    let atom_reach = 4.0;
    let conv = move |xp: f64| -> f64 {
        adaptive_quad(
            &|u: f64| m_lx(xp - kappa * u) * (2.0 / PI).sqrt() * (-2.0 * u * u).exp(),
            -atom_reach,
            atom_reach,
            1e-11,
        )
        .map(|r| r.value)
        .unwrap_or(f64::NAN)
    };
    let r = if eta >= 1.0 {
        adaptive_quad(&conv, -b, b, 1e-10)?
    } else {
        let l = sup.x_max.abs().max(sup.x_min.abs()) + kappa * atom_reach + b + 4.0;
        adaptive_quad(&|xp| window_kernel(xp, b, eta) * conv(xp), -l, l, 1e-10)?
    };
    Ok(r.value)
}
