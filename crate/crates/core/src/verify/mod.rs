//! Cross-checks tying the other subsystems together: the explicit formula
//! for the derivative's zeros against its Dirichlet-series side, mean
//! values of inverse powers of the envelope L, and the second moment of
//! the leading remainder polynomial.

mod explicit;
mod meanvalue;
mod moment;

pub use explicit::{
    ef_lhs, ef_report, ef_rhs, DirichletSide, EfRequest, EfSample,
    ExplicitFormulaReport, LorentzianSum,
};
pub use meanvalue::{
    mean_value_integral, mean_value_integral_reflected, unit_phase, MeanValue,
};
pub use moment::{r1_moment_check, R1Moment};
