//! Metrics on Wigner functions: fidelity overlap, origin negativity,
//! marginals and their small-window approximations.

use super::closed_form::PostSelectParams;
use super::function::WignerFunction;
use crate::error::Result;
use crate::math::quad::{adaptive_quad, adaptive_quad_2d};
use std::f64::consts::PI;

/// F = pi * int W * W_target dx dp over the union of the support hints.
pub fn fidelity(w: &WignerFunction, target: &WignerFunction) -> Result<f64> {
    let rect = w.support().union(&target.support());
    let r = adaptive_quad_2d(
        &|x, p| w.value(x, p) * target.value(x, p),
        rect.as_tuple(),
        1e-9,
    )?;
    Ok(PI * r.value)
}

/// Negativity witness: the Wigner function at the phase-space origin.
pub fn negativity(w: &WignerFunction) -> f64 {
    w.value(0.0, 0.0)
}

/// Momentum marginal P(p) = int W(x, p) dx as an evaluable field.
pub struct Marginal {
    w: WignerFunction,
}

impl Marginal {
    pub fn value(&self, p: f64) -> Result<f64> {
        let s = self.w.support();
        Ok(adaptive_quad(&|x| self.w.value(x, p), s.x_min, s.x_max, 1e-10)?.value)
    }

    /// Integral of the marginal over the support hint.
    pub fn total(&self) -> Result<f64> {
        let s = self.w.support();
        let r = adaptive_quad(&|p| self.value(p).unwrap_or(0.0), s.p_min, s.p_max, 1e-8)?;
        Ok(r.value)
    }
}

pub fn marginal_p(w: &WignerFunction) -> Marginal {
    Marginal { w: w.clone() }
}

/// Which small-window approximation of the stored-cat marginal to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MarginalForm {
    /// Expressed through the input amplitude x0.
    SmallB,
    /// Expressed through the reduced amplitude x0' = kappa x0 / d.
    ReducedAmplitude,
}

/// Small-B approximation of the stored-cat momentum marginal:
/// P(p) ~ (4d / (sqrt(2 pi) a)) e^{-2 d^2 p^2 / a^2}
///        cos^2(2 kappa x0 p / a) / (1 + e^{-2 x0'^2}).
/// Normalized to 1 exactly; for kappa << a it coincides with the ideal
/// cat marginal at the reduced amplitude.
pub fn approx_marginal(params: &PostSelectParams, form: MarginalForm) -> Result<impl Fn(f64) -> f64> {
    params.validate()?;
    let x0 = params.x0.ok_or_else(|| {
        crate::error::CvmemError::parameter("x0", "marginal approximations are for the cat")
    })?;
    let (kappa, a) = (params.kappa, params.a);
    let d = params.d();
    let x0p = kappa * x0 / d;
    // the two printed forms are the same function in different variables
    let freq = match form {
        MarginalForm::SmallB => 2.0 * kappa * x0 / a,
        MarginalForm::ReducedAmplitude => 2.0 * d * x0p / a,
    };
    let norm = 4.0 * d / ((2.0 * PI).sqrt() * a) / (1.0 + (-2.0 * x0p * x0p).exp());
    Ok(move |p: f64| {
        let c = (freq * p).cos();
        norm * (-2.0 * d * d * p * p / (a * a)).exp() * c * c
    })
}
