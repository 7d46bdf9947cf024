//! Pair-correlation statistics: form-factor estimators with explicit window
//! control, density unfolding with normalized gap reports, and a synthetic
//! half-integer spacing process for calibrating both.

mod ah;
mod formfactor;
mod gaps;

pub use ah::{ah_generate, ah_spikes, ah_theory_f, AHProcessSpec, AH_SUPPORT};
pub use formfactor::{
    form_factor, form_factor_normalized, form_factor_raw, neglected_weight_bound, pair_weight,
    sine_kernel_reference, theory_f1, theory_montgomery, FormFactorCurve,
};
pub use gaps::{
    normalize_gaps, normalize_ordinate, unnormalize_ordinate, GapStats, DEFAULT_GAP_THRESHOLDS,
    GAP_MIN_ORDINATE,
};
