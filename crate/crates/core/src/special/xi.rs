//! The completed zeta function on the critical line: Ξ(t) = ξ(1/2 + it),
//! its t-derivative, and the positive envelope used to factor out the
//! exponential decay.
//!
//! Writing s = 1/2 + it, the completed function factors as
//! Ξ(t) = −E(t)·Z(t) where E(t) = ½(t² + ¼)π^{−1/4}|Γ(1/4 + it/2)| > 0.
//! The scaled variants divide E out, so they inherit the sign pattern of Ξ
//! while staying representable out to t = 10⁶.

use num_complex::Complex64;

use super::gamma::{digamma, lngamma, trigamma};
use super::rs::{z_eval, Z_T_MAX};
use crate::{Error, Result};

/// Largest |t| for which the unscaled values stay comfortably inside
/// double range (the envelope is ~e^{−πt/4}).
pub const UNSCALED_T_MAX: f64 = 50.0;

/// One evaluation of Ξ or Ξ'.
#[derive(Debug, Clone, Copy)]
pub struct EvalPoint {
    pub t: f64,
    pub value: f64,
    /// True when the envelope has been divided out.
    pub scaled: bool,
    pub est_abs_error: f64,
}

/// log E(t); finite across the whole validated range even where E itself
/// underflows.
pub fn envelope_ln(t: f64) -> f64 {
    let tt = t.abs();
    let lg = lngamma(Complex64::new(0.25, tt / 2.0))
        .expect("log-gamma is analytic off the real axis");
    (0.5 * (tt * tt + 0.25)).ln() - 0.25 * std::f64::consts::PI.ln() + lg.re
}

/// The envelope E(t) itself. Positive wherever it is representable;
/// underflows to zero near |t| ≈ 2800.
pub fn envelope(t: f64) -> f64 {
    envelope_ln(t).exp()
}

/// E'(t)/E(t) = 2t/(t²+¼) − ½ Im ψ(1/4 + it/2); tends to −π/4.
pub fn envelope_log_deriv(t: f64) -> f64 {
    let dg = digamma(Complex64::new(0.25, t / 2.0))
        .expect("digamma is analytic off the real axis");
    2.0 * t / (t * t + 0.25) - 0.5 * dg.im
}

/// L(s) = 1/s + 1/(s−1) − ½ log π + ½ ψ(s/2); poles at s = 1 and at the
/// even nonpositive integers.
pub fn l_func(s: Complex64) -> Result<Complex64> {
    check_l_pole(s)?;
    let psi = digamma(0.5 * s)?;
    Ok(1.0 / s + 1.0 / (s - 1.0) - 0.5 * std::f64::consts::PI.ln() + 0.5 * psi)
}

/// L'(s) = −1/s² − 1/(s−1)² + ¼ ψ'(s/2).
pub fn l_func_prime(s: Complex64) -> Result<Complex64> {
    check_l_pole(s)?;
    let tri = trigamma(0.5 * s)?;
    Ok(-1.0 / (s * s) - 1.0 / ((s - 1.0) * (s - 1.0)) + 0.25 * tri)
}

fn check_l_pole(s: Complex64) -> Result<()> {
    if s.im == 0.0 {
        let even_nonpositive = s.re <= 0.0 && s.re == s.re.floor() && (s.re as i64) % 2 == 0;
        if s.re == 1.0 || even_nonpositive {
            return Err(Error::domain(format!(
                "L(s) has a pole at s = {}",
                s.re
            )));
        }
    }
    Ok(())
}

/// Ξ(t), unscaled (true value, |t| ≤ 50) or scaled by 1/E(t) (|t| ≤ 10⁶).
pub fn xi(t: f64, scaled: bool) -> Result<EvalPoint> {
    let z = z_eval(t)?;
    if scaled {
        return Ok(EvalPoint {
            t,
            value: -z.z,
            scaled,
            est_abs_error: z.est_abs_error,
        });
    }
    check_unscaled(t)?;
    let env = envelope(t);
    let value = -env * z.z;
    Ok(EvalPoint {
        t,
        value,
        scaled,
        est_abs_error: env * z.est_abs_error + 1e-13 * value.abs(),
    })
}

/// Ξ'(t) by the product rule on Ξ = −E·Z: Ξ' = −(E' Z + E Z'), so the
/// scaled variant is −((E'/E) Z + Z'). Odd in t.
pub fn xi_prime(t: f64, scaled: bool) -> Result<EvalPoint> {
    let tt = t.abs();
    let sign = if t < 0.0 { -1.0 } else { 1.0 };
    let z = z_eval(tt)?;
    let eld = envelope_log_deriv(tt);
    let scaled_value = -(eld * z.z + z.z_prime);
    let scaled_est = eld.abs() * z.est_abs_error + z.est_abs_error_prime;
    if scaled {
        return Ok(EvalPoint {
            t,
            value: sign * scaled_value,
            scaled,
            est_abs_error: scaled_est,
        });
    }
    check_unscaled(t)?;
    let env = envelope(tt);
    Ok(EvalPoint {
        t,
        value: sign * env * scaled_value,
        scaled,
        est_abs_error: env * scaled_est + 1e-13 * (env * scaled_value).abs(),
    })
}

fn check_unscaled(t: f64) -> Result<()> {
    if t.abs() > UNSCALED_T_MAX {
        return Err(Error::accuracy(format!(
            "unscaled values are only kept for |t| <= {UNSCALED_T_MAX} \
             (the envelope decays like e^(-pi t/4)); use the scaled variant"
        )));
    }
    Ok(())
}

/// Convenience guard mirrored by the zero scanners: the scaled range.
pub fn check_scaled_range(t: f64) -> Result<()> {
    if !t.is_finite() || t.abs() > Z_T_MAX {
        return Err(Error::accuracy(format!(
            "scaled evaluation is validated only for |t| <= {Z_T_MAX:.0}, got {t}"
        )));
    }
    Ok(())
}
