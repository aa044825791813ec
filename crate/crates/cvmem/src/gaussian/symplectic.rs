//! Linear phase-space maps: QND couplings, squeezers, composition.

use super::state::{symplectic_form, Convention, GaussianState};
use crate::error::{require_positive, CvmemError, Result};
use nalgebra::{DMatrix, DVector};

/// Which of the two QND couplings to build.
///
/// Type 1: X'_L = X_L + k P_A,  X'_A = X_A + k P_L   (P's unchanged)
/// Type 2: X'_L = X_L + k X_A,  P'_A = P_A - k P_L   (others unchanged)
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QndKind {
    Type1,
    Type2,
}

/// Direction of a diagonal single-mode squeezer with factor c:
/// `XDownPUp` maps X -> X/c, P -> c P.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqueezeDirection {
    XDownPUp,
    XUpPDown,
}

/// Linear phase-space map: quadratures' = matrix * quadratures + displacement.
#[derive(Debug, Clone)]
pub struct SymplecticMap {
    pub matrix: DMatrix<f64>,
    pub displacement: DVector<f64>,
    pub label: String,
}

impl SymplecticMap {
    /// Validates the symplectic condition M Omega M^T = Omega to 1e-12.
    pub fn new(matrix: DMatrix<f64>, displacement: DVector<f64>, label: impl Into<String>) -> Result<Self> {
        let dim = matrix.nrows();
        if matrix.ncols() != dim || displacement.len() != dim || dim % 2 != 0 {
            return Err(CvmemError::DimensionMismatch {
                expected: dim,
                got: matrix.ncols().max(displacement.len()),
            });
        }
        let omega = symplectic_form(dim / 2);
        let dev = (&matrix * &omega * matrix.transpose() - &omega).amax();
        if dev > 1e-12 {
            return Err(CvmemError::Domain(format!(
                "matrix is not symplectic (max deviation {dev:.3e})"
            )));
        }
        Ok(Self {
            matrix,
            displacement,
            label: label.into(),
        })
    }

    pub fn identity(n_modes: usize) -> Self {
        Self {
            matrix: DMatrix::identity(2 * n_modes, 2 * n_modes),
            displacement: DVector::zeros(2 * n_modes),
            label: "identity".into(),
        }
    }

    pub fn n_modes(&self) -> usize {
        self.matrix.nrows() / 2
    }

    /// self after other: (self ∘ other)(r) = M_self (M_other r + d_other) + d_self.
    pub fn compose(&self, other: &SymplecticMap) -> Result<SymplecticMap> {
        if self.n_modes() != other.n_modes() {
            return Err(CvmemError::DimensionMismatch {
                expected: self.n_modes(),
                got: other.n_modes(),
            });
        }
        Ok(SymplecticMap {
            matrix: &self.matrix * &other.matrix,
            displacement: &self.matrix * &other.displacement + &self.displacement,
            label: format!("{} . {}", self.label, other.label),
        })
    }
}

/// QND coupling between a light mode (index 0) and an atomic mode (index 1).
pub fn qnd_map(kind: QndKind, kappa: f64) -> Result<SymplecticMap> {
    crate::error::require_finite("kappa", kappa)?;
    // rows/cols: [X_L, P_L, X_A, P_A]
    let mut m = DMatrix::identity(4, 4);
    match kind {
        QndKind::Type1 => {
            m[(0, 3)] = kappa; // X'_L += k P_A
            m[(2, 1)] = kappa; // X'_A += k P_L
        }
        QndKind::Type2 => {
            m[(0, 2)] = kappa; // X'_L += k X_A
            m[(3, 1)] = -kappa; // P'_A -= k P_L
        }
    }
    SymplecticMap::new(m, DVector::zeros(4), format!("qnd-{kind:?}(k={kappa})"))
}

/// Diagonal squeezer on one mode of an n-mode register.
pub fn squeeze_map(
    n_modes: usize,
    mode: usize,
    factor: f64,
    which: SqueezeDirection,
) -> Result<SymplecticMap> {
    require_positive("factor", factor)?;
    if mode >= n_modes {
        return Err(CvmemError::DimensionMismatch {
            expected: n_modes,
            got: mode,
        });
    }
    let mut m = DMatrix::identity(2 * n_modes, 2 * n_modes);
    let (sx, sp) = match which {
        SqueezeDirection::XDownPUp => (1.0 / factor, factor),
        SqueezeDirection::XUpPDown => (factor, 1.0 / factor),
    };
    m[(2 * mode, 2 * mode)] = sx;
    m[(2 * mode + 1, 2 * mode + 1)] = sp;
    SymplecticMap::new(
        m,
        DVector::zeros(2 * n_modes),
        format!("squeeze(mode={mode}, c={factor}, {which:?})"),
    )
}

/// Apply a symplectic map to a Gaussian state.
pub fn apply_map(state: &GaussianState, map: &SymplecticMap) -> Result<GaussianState> {
    if map.n_modes() != state.n_modes() {
        return Err(CvmemError::DimensionMismatch {
            expected: state.n_modes(),
            got: map.n_modes(),
        });
    }
    let mean = &map.matrix * state.mean() + &map.displacement;
    let cov = &map.matrix * state.cov() * map.matrix.transpose();
    // symmetrize against round-off before revalidating
    let cov = (&cov + cov.transpose()) * 0.5;
    GaussianState::new(state.labels().to_vec(), mean, cov, state.convention())
}
