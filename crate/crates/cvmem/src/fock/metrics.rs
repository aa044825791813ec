//! Metrics on truncated-basis density matrices.

use super::states::FockDensity;
use crate::error::{CvmemError, Result};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy)]
pub struct FockMetrics {
    /// <1| rho |1>, the single-photon fidelity.
    pub fidelity_photon: f64,
    /// Wigner value at the origin via the parity sum (2/pi) sum (-1)^n rho_nn.
    pub negativity: f64,
    /// Mandel Q = (Var n - <n>) / <n>; NaN for the vacuum.
    pub mandel_q: f64,
}

pub fn fock_metrics(rho: &FockDensity) -> Result<FockMetrics> {
    let tr = rho.trace();
    if (tr - 1.0).abs() > 1e-9 {
        return Err(CvmemError::Domain(format!(
            "metrics need a normalized density matrix (trace {tr})"
        )));
    }
    let diag = rho.diagonal();
    let mut parity = 0.0;
    let mut n1 = 0.0;
    let mut n2 = 0.0;
    for (n, p) in diag.iter().enumerate() {
        parity += if n % 2 == 0 { *p } else { -*p };
        n1 += n as f64 * p;
        n2 += (n as f64) * (n as f64) * p;
    }
    let mandel_q = if n1 > 1e-300 {
        (n2 - n1 * n1 - n1) / n1
    } else {
        f64::NAN
    };
    Ok(FockMetrics {
        fidelity_photon: rho.matrix()[(1, 1)].re,
        negativity: 2.0 / PI * parity,
        mandel_q,
    })
}
