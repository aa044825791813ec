//! Non-Gaussian phase-space engine: input states, post-selected uploads
//! (closed forms and the generic numeric path), loss, metrics, and the
//! small-window expansions. Everything here uses the QUARTER convention
//! (vacuum variance 1/4).

pub mod asymptotics;
pub mod closed_form;
pub mod function;
pub mod loss;
pub mod metrics;
pub mod numeric;
pub mod states;

pub use asymptotics::{asymptotics, Asymptotics};
pub use closed_form::{
    cat_success_rate, closed_form_cat_upload, closed_form_photon_upload, photon_f_max,
    photon_success_rate, PostSelectParams, UploadReport,
};
pub use function::{linspace, Rect, WignerFunction};
pub use loss::apply_loss;
pub use metrics::{approx_marginal, fidelity, marginal_p, negativity, Marginal, MarginalForm};
pub use numeric::{postselect_upload_numeric, success_rate_numeric};
pub use states::{
    wigner_cat, wigner_cat_ideal_x, wigner_single_photon, wigner_squeezed_photon, wigner_vacuum,
};
