//! Special functions on and near the critical line: gamma-family helpers,
//! zeta with derivative, the Riemann–Siegel theta/Z machinery, and the
//! completed function Ξ with its envelope-scaled variants.

pub mod gamma;
pub mod rs;
pub mod xi;
pub mod zeta;

pub use gamma::{digamma, lngamma, trigamma};
pub use rs::{theta, theta_prime, z_eval, z_func, z_prime, ZEval, Z_T_MAX};
pub use xi::{
    envelope, envelope_ln, envelope_log_deriv, l_func, l_func_prime, xi, xi_prime,
    check_scaled_range, EvalPoint, UNSCALED_T_MAX,
};
pub use zeta::{zeta_em, zeta_eta, ZetaPair};
