//! Gauss-Legendre rules and adaptive quadrature for smooth, mostly
//! Gaussian-decaying integrands.
//!
//! The adaptive driver compares nested Gauss rules (10 vs 21 points) on
//! each interval and bisects left-to-right until the local tolerance is
//! met, so results are bitwise deterministic.

use crate::error::{CvmemError, Result};
use std::sync::OnceLock;

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        // Tricomi initial guess, then Newton on P_n
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_pd(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_pd(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let pk = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = pk;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn rule(n: usize) -> &'static (Vec<f64>, Vec<f64>) {
    static G10: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    static G21: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    static G32: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    static G64: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    match n {
        10 => G10.get_or_init(|| gauss_legendre(10)),
        21 => G21.get_or_init(|| gauss_legendre(21)),
        32 => G32.get_or_init(|| gauss_legendre(32)),
        64 => G64.get_or_init(|| gauss_legendre(64)),
        _ => unreachable!("uncached rule order"),
    }
}

/// Fixed-order Gauss-Legendre quadrature of `f` on [lo, hi].
pub fn fixed_quad<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, n: usize) -> f64 {
    let (xs, ws) = rule(n);
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let mut acc = 0.0;
    for (x, w) in xs.iter().zip(ws) {
        acc += w * f(c + h * x);
    }
    acc * h
}

/// Outcome of an adaptive quadrature: value and an error estimate.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
}

/// Adaptive quadrature on [lo, hi] to absolute tolerance `abs_tol`
/// (plus a relative floor of 1e-12). Fails with `Numerics` if the
/// tolerance cannot be reached within the subdivision budget.
pub fn adaptive_quad<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, abs_tol: f64) -> Result<QuadResult> {
    let mut budget = 4000usize;
    let (value, error) = adapt_rec(f, lo, hi, abs_tol, 0, &mut budget);
    let tol = abs_tol.max(1e-12 * value.abs());
    if error > tol * 4.0 {
        return Err(CvmemError::Numerics {
            context: "adaptive quadrature did not converge",
            achieved: error,
            requested: abs_tol,
        });
    }
    Ok(QuadResult { value, error })
}

fn adapt_rec<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    tol: f64,
    depth: usize,
    budget: &mut usize,
) -> (f64, f64) {
    let coarse = fixed_quad(|x| f(x), lo, hi, 10);
    let fine = fixed_quad(|x| f(x), lo, hi, 21);
    let err = (fine - coarse).abs();
    if err <= tol || depth >= 45 || *budget == 0 {
        return (fine, err);
    }
    *budget -= 1;
    let mid = 0.5 * (lo + hi);
    let (v1, e1) = adapt_rec(f, lo, mid, 0.5 * tol, depth + 1, budget);
    let (v2, e2) = adapt_rec(f, mid, hi, 0.5 * tol, depth + 1, budget);
    (v1 + v2, e1 + e2)
}

/// Adaptive 2D quadrature over a rectangle: adaptive in x, with each
/// x-slice integrated adaptively in y at a tighter tolerance.
pub fn adaptive_quad_2d<F>(f: &F, rect: (f64, f64, f64, f64), abs_tol: f64) -> Result<QuadResult>
where
    F: Fn(f64, f64) -> f64,
{
    let (x0, x1, y0, y1) = rect;
    let inner_tol = abs_tol / (10.0 * (x1 - x0).max(1.0));
    let outer = |x: f64| -> f64 {
        let mut budget = 2000usize;
        adapt_rec(&|y| f(x, y), y0, y1, inner_tol, 0, &mut budget).0
    };
    adaptive_quad(&outer, x0, x1, abs_tol)
}
