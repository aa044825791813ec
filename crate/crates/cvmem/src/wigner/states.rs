//! Input-state Wigner functions (QUARTER convention).

use super::function::{Rect, WignerFunction};
use crate::error::{require_positive, Result};
use std::f64::consts::PI;

/// Vacuum: (2/pi) e^{-2x^2 - 2p^2}.
pub fn wigner_vacuum() -> WignerFunction {
    WignerFunction::from_fn(
        |x, p| (2.0 / PI) * (-2.0 * (x * x + p * p)).exp(),
        Rect::symmetric(4.5, 4.5),
    )
}

/// Ideal single photon: (2/pi) e^{-2(x^2+p^2)} (4(x^2+p^2) - 1).
pub fn wigner_single_photon() -> WignerFunction {
    WignerFunction::from_fn(
        |x, p| {
            let r2 = x * x + p * p;
            (2.0 / PI) * (-2.0 * r2).exp() * (4.0 * r2 - 1.0)
        },
        Rect::symmetric(5.0, 5.0),
    )
}

/// Squeezed single photon with squeezing parameter `a` (x-variance a^2/4):
/// (2/pi) e^{-2x^2/a^2 - 2a^2 p^2} (4(x^2/a^2 + a^2 p^2) - 1).
pub fn wigner_squeezed_photon(a: f64) -> Result<WignerFunction> {
    require_positive("a", a)?;
    let lx = 1.0 + 5.0 * a;
    let lp = 1.0 + 5.0 / a;
    Ok(WignerFunction::from_fn(
        move |x, p| {
            let u = x / a;
            let v = a * p;
            (2.0 / PI) * (-2.0 * (u * u + v * v)).exp() * (4.0 * (u * u + v * v) - 1.0)
        },
        Rect::symmetric(lx, lp),
    ))
}

/// Squeezed coherent-state superposition entering the probabilistic
/// upload. Canonical orientation for the upload pipeline: the two
/// Gaussian peaks sit on the p axis at +-x0/a (the pre-squeezing keeps
/// the x quadrature at variance a^2/4 and stretches the peaks apart),
/// the interference fringes run along x with period pi a / (2 x0).
/// The quadrature-exchanging coupling maps this onto a stored cat with
/// peaks along x. Normalized exactly by construction.
pub fn wigner_cat(x0: f64, a: f64) -> Result<WignerFunction> {
    require_positive("a", a)?;
    crate::error::require_finite("x0", x0)?;
    if x0 < 0.0 {
        return Err(crate::error::CvmemError::parameter("x0", "must be >= 0"));
    }
    let h = x0 / a;
    let norm = 1.0 / (PI * (1.0 + (-2.0 * x0 * x0).exp()));
    let lx = 1.0 + 5.0 * a;
    let lp = h + 1.0 + 4.0 / a;
    Ok(WignerFunction::from_fn(
        move |x, p| {
            let gx = (-2.0 * x * x / (a * a)).exp();
            let hump_minus = (-2.0 * a * a * (p - h) * (p - h)).exp();
            let hump_plus = (-2.0 * a * a * (p + h) * (p + h)).exp();
            let fringe = 2.0 * (-2.0 * a * a * p * p).exp() * (4.0 * x0 * x / a).cos();
            norm * gx * (hump_minus + hump_plus + fringe)
        },
        Rect::symmetric(lx, lp),
    ))
}

/// Ideal cat in the stored frame: peaks on the x axis at +-amplitude,
/// fringes along p. This is the target the probabilistic upload
/// approaches (with amplitude x0' = kappa x0 / d).
pub fn wigner_cat_ideal_x(amplitude: f64) -> Result<WignerFunction> {
    crate::error::require_finite("amplitude", amplitude)?;
    let x0 = amplitude.abs();
    let norm = 1.0 / (PI * (1.0 + (-2.0 * x0 * x0).exp()));
    Ok(WignerFunction::from_fn(
        move |x, p| {
            let gp = (-2.0 * p * p).exp();
            let hm = (-2.0 * (x - x0) * (x - x0)).exp();
            let hp = (-2.0 * (x + x0) * (x + x0)).exp();
            let fringe = 2.0 * (-2.0 * x * x).exp() * (4.0 * x0 * p).cos();
            norm * gp * (hm + hp + fringe)
        },
        Rect::symmetric(x0 + 5.0, 5.0),
    ))
}
