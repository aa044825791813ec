//! Symplectic algebra over Gaussian states: QND maps, squeezers, homodyne
//! conditioning, the deterministic record channel, and entanglement.

pub mod homodyne;
pub mod negativity;
pub mod record;
pub mod state;
pub mod symplectic;

pub use homodyne::{homodyne_condition, Quadrature};
pub use negativity::log_negativity;
pub use record::{
    composed_transmission, matched_kappa_prime, postcorrection_params, record_channel_report,
    record_channel_report_with_gain, solve_record_gains, ChannelReport, PostcorrectionParams,
    RecordGains,
};
pub use state::{convention_convert, symplectic_eigenvalues, symplectic_form, Convention, GaussianState};
pub use symplectic::{apply_map, qnd_map, squeeze_map, QndKind, SqueezeDirection, SymplecticMap};
