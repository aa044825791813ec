//! Brute-force conditional upload: exact QND unitary, window POVM,
//! partial trace.

use super::ops::C64;
use super::povm::window_povm;
use super::states::FockDensity;
use super::unitary::apply_qnd_vec;
use crate::error::{require_positive, CvmemError, Result};
use crate::gaussian::symplectic::QndKind;
use nalgebra::DMatrix;

/// Result of the oracle upload.
#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub rho: FockDensity,
    pub success_rate: f64,
    /// Population of the highest retained light level after the coupling,
    /// a direct truncation-leakage diagnostic.
    pub leakage: f64,
}

/// Condition the atomic mode on the windowed homodyne of the out-coupled
/// light for a pure input state vector.
pub fn upload_oracle_pure(
    input_light: &[C64],
    kind: QndKind,
    kappa: f64,
    b_window: f64,
) -> Result<OracleOutcome> {
    require_positive("B", b_window)?;
    crate::error::require_finite("kappa", kappa)?;
    let nl = input_light.len();
    let na = nl;
    let mut joint = vec![C64::new(0.0, 0.0); nl * na];
    for l in 0..nl {
        joint[l * na] = input_light[l];
    }
    apply_qnd_vec(kind, kappa, nl, na, &mut joint);

    // leakage: mass sitting on the top light level after the coupling
    let mut leakage = 0.0;
    for a in 0..na {
        leakage += joint[(nl - 1) * na + a].norm_sqr();
    }

    let e = window_povm(b_window, nl - 1)?;
    // rho_A[a,b] = sum_{l,l'} E[l,l'] Phi[l',a] conj(Phi[l,b])
    let phi = DMatrix::<C64>::from_fn(nl, na, |l, a| joint[l * na + a]);
    let g = &e * &phi;
    let rho_un = g.transpose() * phi.conjugate();
    let s: f64 = (0..na).map(|i| rho_un[(i, i)].re).sum();
    if s < 1e-14 {
        return Err(CvmemError::DegenerateConditioning(s));
    }
    let rho_m = rho_un.map(|c| c / s);
    let rho_m = (&rho_m + rho_m.adjoint()) * C64::new(0.5, 0.0);
    Ok(OracleOutcome {
        rho: FockDensity::new(rho_m)?,
        success_rate: s,
        leakage,
    })
}

/// Density-matrix front end: decomposes the input into its eigenvectors
/// and runs the pure path per component.
pub fn upload_oracle(
    input_light: &FockDensity,
    kind: QndKind,
    kappa: f64,
    b_window: f64,
) -> Result<OracleOutcome> {
    let dim = input_light.dim();
    let eig = input_light.matrix().clone().symmetric_eigen();
    let mut rho_acc = DMatrix::<C64>::zeros(dim, dim);
    let mut s_acc = 0.0;
    let mut leak_acc = 0.0;
    for (i, lambda) in eig.eigenvalues.iter().enumerate() {
        let w = lambda.max(0.0);
        if w < 1e-14 {
            continue;
        }
        let v: Vec<C64> = (0..dim).map(|r| eig.eigenvectors[(r, i)]).collect();
        let out = upload_oracle_pure(&v, kind, kappa, b_window)?;
        rho_acc += out.rho.matrix() * C64::new(w * out.success_rate, 0.0);
        s_acc += w * out.success_rate;
        leak_acc += w * out.leakage;
    }
    if s_acc < 1e-14 {
        return Err(CvmemError::DegenerateConditioning(s_acc));
    }
    let rho = rho_acc.map(|c| c / s_acc);
    Ok(OracleOutcome {
        rho: FockDensity::new(rho)?,
        success_rate: s_acc,
        leakage: leak_acc,
    })
}
