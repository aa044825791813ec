//! Evaluable Wigner functions over single-mode phase space, QUARTER
//! convention (vacuum variance 1/4). Values are immutable and cheap to
//! share; grid evaluation and sweeps parallelize over points.

use crate::error::Result;
use crate::math::quad::adaptive_quad_2d;
use std::sync::{Arc, OnceLock};

/// Rectangular support hint for quadrature.
#[derive(Debug, Clone, Copy)]
pub struct Rect {
    pub x_min: f64,
    pub x_max: f64,
    pub p_min: f64,
    pub p_max: f64,
}

impl Rect {
    pub fn symmetric(lx: f64, lp: f64) -> Self {
        Rect {
            x_min: -lx,
            x_max: lx,
            p_min: -lp,
            p_max: lp,
        }
    }

    pub fn union(&self, other: &Rect) -> Rect {
        Rect {
            x_min: self.x_min.min(other.x_min),
            x_max: self.x_max.max(other.x_max),
            p_min: self.p_min.min(other.p_min),
            p_max: self.p_max.max(other.p_max),
        }
    }

    pub fn as_tuple(&self) -> (f64, f64, f64, f64) {
        (self.x_min, self.x_max, self.p_min, self.p_max)
    }
}

/// A real scalar field over (x, p) with a support hint and a lazily
/// computed normalization integral.
pub struct WignerFunction {
    eval: Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>,
    support: Rect,
    norm: OnceLock<f64>,
}

impl Clone for WignerFunction {
    fn clone(&self) -> Self {
        let cloned = WignerFunction {
            eval: Arc::clone(&self.eval),
            support: self.support,
            norm: OnceLock::new(),
        };
        if let Some(n) = self.norm.get() {
            let _ = cloned.norm.set(*n);
        }
        cloned
    }
}

impl std::fmt::Debug for WignerFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WignerFunction")
            .field("support", &self.support)
            .field("norm", &self.norm.get())
            .finish()
    }
}

impl WignerFunction {
    pub fn from_fn<F>(f: F, support: Rect) -> Self
    where
        F: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        WignerFunction {
            eval: Arc::new(f),
            support,
            norm: OnceLock::new(),
        }
    }

    pub fn value(&self, x: f64, p: f64) -> f64 {
        (self.eval)(x, p)
    }

    pub fn support(&self) -> Rect {
        self.support
    }

    /// Integral of the function over its support (cached).
    pub fn normalization(&self) -> Result<f64> {
        if let Some(n) = self.norm.get() {
            return Ok(*n);
        }
        let eval = Arc::clone(&self.eval);
        let r = adaptive_quad_2d(&|x, p| eval(x, p), self.support.as_tuple(), 1e-9)?;
        let _ = self.norm.set(r.value);
        Ok(r.value)
    }

    /// Coordinate substitution W'(x, p) = W(sx * x, sp * p), with an
    /// area-preserving (sx * sp = 1) substitution leaving normalization
    /// intact.
    pub fn substituted(&self, sx: f64, sp: f64) -> WignerFunction {
        let eval = Arc::clone(&self.eval);
        let support = Rect {
            x_min: self.support.x_min / sx,
            x_max: self.support.x_max / sx,
            p_min: self.support.p_min / sp,
            p_max: self.support.p_max / sp,
        };
        WignerFunction::from_fn(move |x, p| eval(sx * x, sp * p), support)
    }

    /// Evaluate on a regular grid (row-major over x, then p),
    /// in parallel when the `parallel` feature is on.
    pub fn sample_grid(&self, xs: &[f64], ps: &[f64]) -> Vec<f64> {
        let nx = xs.len();
        let np = ps.len();
        let eval = Arc::clone(&self.eval);
        crate::par::map_indexed(nx * np, move |idx| {
            let i = idx / np;
            let j = idx % np;
            eval(xs[i], ps[j])
        })
    }
}

/// Evenly spaced grid coordinates, endpoints included.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}
