//! Shared numerical kernels: error functions and quadrature.

pub mod erf;
pub mod quad;

/// sqrt(pi), public for tests of the quadrature module.
pub const SQRT_PI_PUB: f64 = 1.772_453_850_905_516;

pub use erf::{erf, erf_complex, erfc, erfcx, faddeeva_w, re_erf_scaled};
pub use quad::{adaptive_quad, adaptive_quad_2d, fixed_quad, gauss_legendre, QuadResult};
