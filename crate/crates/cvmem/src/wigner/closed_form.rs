//! Closed forms of the post-selected upload for the squeezed single
//! photon and the coherent-state superposition.
//!
//! Both are exact results of conditioning the QND-coupled pair on a
//! homodyne outcome in [-B, B]: the light plane integrates to error
//! functions (a complex-argument one for the cat fringes). Every term
//! is grouped so that nothing overflows: the growing Cosh/Sinh and
//! Re-erf factors are folded into the Gaussian envelopes analytically.

use super::function::{Rect, WignerFunction};
use super::metrics::fidelity;
use super::states::{wigner_cat_ideal_x, wigner_single_photon};
use crate::error::{require_positive, CvmemError, Result};
use crate::math::erf::{erf, re_erf_scaled};
use serde::Serialize;
use std::f64::consts::PI;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Parameters of the probabilistic upload.
#[derive(Debug, Clone, Copy)]
pub struct PostSelectParams {
    /// QND coupling constant.
    pub kappa: f64,
    /// Pre-squeezing of the input light.
    pub a: f64,
    /// Half-width of the accepted homodyne window around X'_L = 0.
    pub b_window: f64,
    /// Coherent amplitude of the cat input (None for the photon).
    pub x0: Option<f64>,
    /// Total out-coupling efficiency of the measured light.
    pub eta: f64,
}

impl PostSelectParams {
    pub fn photon(kappa: f64, a: f64, b_window: f64) -> Self {
        PostSelectParams {
            kappa,
            a,
            b_window,
            x0: None,
            eta: 1.0,
        }
    }

    pub fn cat(kappa: f64, a: f64, b_window: f64, x0: f64) -> Self {
        PostSelectParams {
            kappa,
            a,
            b_window,
            x0: Some(x0),
            eta: 1.0,
        }
    }

    /// Effective width of the measured quadrature: d = sqrt(a^2 + kappa^2).
    /// Always recomputed from the current fields.
    pub fn d(&self) -> f64 {
        (self.a * self.a + self.kappa * self.kappa).sqrt()
    }

    pub fn validate(&self) -> Result<()> {
        require_positive("kappa", self.kappa)?;
        require_positive("a", self.a)?;
        require_positive("B", self.b_window)?;
        if let Some(x0) = self.x0 {
            crate::error::require_finite("x0", x0)?;
            if x0 < 0.0 {
                return Err(CvmemError::parameter("x0", "must be >= 0"));
            }
        }
        if !(self.eta > 0.0 && self.eta <= 1.0) {
            return Err(CvmemError::parameter("eta", "must lie in (0, 1]"));
        }
        Ok(())
    }
}

/// Metrics of one upload.
#[derive(Debug, Clone, Serialize)]
pub struct UploadReport {
    pub success_rate: f64,
    pub fidelity: f64,
    pub negativity: f64,
    /// Reduced amplitude of the stored cat (cat case only).
    pub x0_prime: Option<f64>,
    pub post_corrected: bool,
}

impl UploadReport {
    fn validate(&self) -> Result<()> {
        if !(self.success_rate > 0.0 && self.success_rate <= 1.0 + 1e-9) {
            return Err(CvmemError::Domain(format!(
                "success rate {} outside (0, 1]",
                self.success_rate
            )));
        }
        let bound = 2.0 / PI + 1e-9;
        if self.negativity < -bound || self.negativity > bound {
            return Err(CvmemError::Domain(format!(
                "negativity {} outside [-2/pi, 2/pi]",
                self.negativity
            )));
        }
        if !(-1e-6..=1.0 + 1e-6).contains(&self.fidelity) {
            return Err(CvmemError::Domain(format!(
                "fidelity {} outside [0, 1]",
                self.fidelity
            )));
        }
        Ok(())
    }
}

/// Success rate of the photon upload:
/// S = erf(sqrt2 B / d) - sqrt(2/pi) e^{-2B^2/d^2} 2 a^2 B / d^3.
pub fn photon_success_rate(params: &PostSelectParams) -> f64 {
    let (a, b) = (params.a, params.b_window);
    let d = params.d();
    erf(SQRT_2 * b / d)
        - (2.0 / PI).sqrt() * (-2.0 * b * b / (d * d)).exp() * 2.0 * a * a * b / (d * d * d)
}

/// Unnormalized conditioned Wigner function of the photon upload.
/// The printed form of the boundary term regroups into
/// (B -+ kx) e^{-2(B -+ kx)^2/a^2}, which is manifestly overflow-free.
fn photon_wtilde(x: f64, p: f64, kappa: f64, a: f64, b: f64) -> f64 {
    let d2 = a * a + kappa * kappa;
    let d = d2.sqrt();
    let em = SQRT_2 * (b - kappa * x) / a;
    let ep = SQRT_2 * (b + kappa * x) / a;
    let gauss = (-2.0 * a * a * p * p / d2 - 2.0 * x * x).exp();
    let t1 = a.powi(3) * (d2 + 4.0 * kappa * kappa * p * p) / (PI * d2 * d2 * d)
        * (erf(em) + erf(ep))
        * gauss;
    let t2 = 2.0 * SQRT_2 / (PI.powf(1.5) * d)
        * ((b - kappa * x) * (-2.0 * (b - kappa * x) * (b - kappa * x) / (a * a)).exp()
            + (b + kappa * x) * (-2.0 * (b + kappa * x) * (b + kappa * x) / (a * a)).exp())
        * gauss;
    t1 - t2
}

/// Closed-form photon upload. Returns the stored state's Wigner function
/// (post-corrected if requested) and its report. Fidelity is taken
/// against the ideal single photon, matching the figure convention:
/// without post-correction it saturates at F_max < 1.
pub fn closed_form_photon_upload(
    params: &PostSelectParams,
    post_correct: bool,
) -> Result<(WignerFunction, UploadReport)> {
    params.validate()?;
    if params.x0.is_some() {
        return Err(CvmemError::parameter("x0", "photon upload takes no cat amplitude"));
    }
    if params.eta < 1.0 {
        return Err(CvmemError::parameter(
            "eta",
            "closed forms hold for eta = 1; use the numeric engine for lossy detection",
        ));
    }
    let (kappa, a, b) = (params.kappa, params.a, params.b_window);
    let d = params.d();
    let s = photon_success_rate(params);
    if s < 1e-14 {
        return Err(CvmemError::DegenerateConditioning(s));
    }

    let raw = WignerFunction::from_fn(
        move |x, p| photon_wtilde(x, p, kappa, a, b) / s,
        Rect::symmetric(4.5 + b / kappa.max(0.05), 1.0 + 5.0 * d / a),
    );
    // undoing the d/a squeezing of the stored photon: W''(x,p) = W'(a x/d, d p/a)
    let state = if post_correct {
        raw.substituted(a / d, d / a)
    } else {
        raw.clone()
    };

    let negativity = raw.value(0.0, 0.0);
    let f = fidelity(&state, &wigner_single_photon())?;
    let report = UploadReport {
        success_rate: s,
        fidelity: f,
        negativity,
        x0_prime: None,
        post_corrected: post_correct,
    };
    report.validate()?;
    Ok((state, report))
}

/// Maximal photon fidelity without post-correction (B -> 0):
/// F_max = 8 a^3 d^3 / (2a^2 + kappa^2)^3.
pub fn photon_f_max(kappa: f64, a: f64) -> f64 {
    let d2 = a * a + kappa * kappa;
    8.0 * a.powi(3) * d2.powf(1.5) / (2.0 * a * a + kappa * kappa).powi(3)
}

/// Success rate of the cat upload:
/// S = [erf(sqrt2 B/d) + e^{-2 x0'^2} * e^{-v^2}Re erf(sqrt2(B + i x0 a)/d)]
///     / (1 + e^{-2 x0^2}),
/// with the growing Re-erf evaluated in its stable scaled form.
pub fn cat_success_rate(params: &PostSelectParams) -> Result<f64> {
    let x0 = params
        .x0
        .ok_or_else(|| CvmemError::parameter("x0", "cat upload requires an amplitude"))?;
    let (a, b) = (params.a, params.b_window);
    let d = params.d();
    let x0p = params.kappa * x0 / d;
    let fringe = (-2.0 * x0p * x0p).exp() * re_erf_scaled(SQRT_2 * b / d, SQRT_2 * x0 * a / d);
    Ok((erf(SQRT_2 * b / d) + fringe) / (1.0 + (-2.0 * x0 * x0).exp()))
}

/// Unnormalized conditioned Wigner function of the cat upload.
fn cat_wtilde(x: f64, p: f64, kappa: f64, a: f64, b: f64, x0: f64) -> f64 {
    let d2 = a * a + kappa * kappa;
    let d = d2.sqrt();
    let h = x0 / a;
    let c = 1.0 / (PI * (1.0 + (-2.0 * x0 * x0).exp()));
    let um = SQRT_2 * (b - kappa * p) / a;
    let up = SQRT_2 * (b + kappa * p) / a;
    let window = erf(um) + erf(up);
    // e^{-2 x0^2} [Re erf(um + i sqrt2 x0) + Re erf(up + i sqrt2 x0)]
    let v = SQRT_2 * x0;
    let fringes = re_erf_scaled(um, v) + re_erf_scaled(up, v);
    let gp = (-2.0 * p * p).exp();
    let humps = (-2.0 * a * a * (x - kappa * h) * (x - kappa * h) / d2).exp()
        + (-2.0 * a * a * (x + kappa * h) * (x + kappa * h) / d2).exp();
    c * (a / (2.0 * d)) * gp * window * humps
        + c * (a / d) * gp * (-2.0 * a * a * x * x / d2).exp() * fringes
}

/// Closed-form cat upload. The stored cat has amplitude
/// x0' = kappa x0 / d; fidelity is reported against the ideal stored cat
/// of that amplitude after undoing the known squeezing frame, so it
/// measures purity loss from the finite window rather than the frame.
pub fn closed_form_cat_upload(
    params: &PostSelectParams,
    post_correct: bool,
) -> Result<(WignerFunction, UploadReport)> {
    params.validate()?;
    if params.eta < 1.0 {
        return Err(CvmemError::parameter(
            "eta",
            "closed forms hold for eta = 1; use the numeric engine for lossy detection",
        ));
    }
    let x0 = params
        .x0
        .ok_or_else(|| CvmemError::parameter("x0", "cat upload requires an amplitude"))?;
    let (kappa, a, b) = (params.kappa, params.a, params.b_window);
    let d = params.d();
    let s = cat_success_rate(params)?;
    if s < 1e-14 {
        return Err(CvmemError::DegenerateConditioning(s));
    }
    let x0_prime = kappa * x0 / d;

    let raw = WignerFunction::from_fn(
        move |xx, pp| cat_wtilde(xx, pp, kappa, a, b, x0) / s,
        Rect::symmetric(kappa * x0 / a + 1.0 + 3.0 * d / a, 4.5),
    );
    // stored state is the ideal reduced cat stretched in x by d/a;
    // the correction is W''(x,p) = W'(d x/a, a p/d)
    let corrected = raw.substituted(d / a, a / d);
    let state = if post_correct { corrected.clone() } else { raw.clone() };

    let target = wigner_cat_ideal_x(x0_prime)?;
    let f = fidelity(&corrected, &target)?;
    let report = UploadReport {
        success_rate: s,
        fidelity: f,
        negativity: raw.value(0.0, 0.0),
        x0_prime: Some(x0_prime),
        post_corrected: post_correct,
    };
    report.validate()?;
    Ok((state, report))
}
