//! Pair-correlation form factors: the windowed empirical estimator and the
//! theoretical comparison curves.

use rayon::prelude::*;
use serde::Serialize;

use crate::util::factorial_f64;
use crate::zeros::ZeroSet;
use crate::{Error, Result};

/// Lorentzian pair weight 4/(4+u²).
pub fn pair_weight(u: f64) -> f64 {
    4.0 / (4.0 + u * u)
}

/// Empirical form factor curve with its theoretical companions.
#[derive(Debug, Clone, Serialize)]
pub struct FormFactorCurve {
    pub t: f64,
    pub alphas: Vec<f64>,
    pub empirical: Vec<f64>,
    pub theory_f1: Vec<f64>,
    pub theory_montgomery: Vec<f64>,
    pub sine_ref: Vec<f64>,
    pub k_trunc: u32,
    pub window: f64,
    pub neglected_weight_bound: f64,
}

/// Core pair sum. `scale` is the phase per unit distance per unit alpha:
/// log T for raw ordinates, 2π for normalized ones. For each close pair the
/// cosine is advanced across the alpha grid by complex rotation, so the
/// inner loop is trig-free. Blocks reduce in fixed order; the result is
/// independent of thread count. Alphas enter through |alpha|, making the
/// estimator even by construction.
fn pair_sum(positions: &[f64], scale: f64, alphas: &[f64], window: f64) -> Vec<f64> {
    let n = positions.len();
    let m = alphas.len();
    if n == 0 || m == 0 {
        return vec![0.0; m];
    }
    let a0 = alphas[0].abs();
    let chunk = 512;
    let n_chunks = n.div_ceil(chunk);
    let blocks: Vec<Vec<f64>> = (0..n_chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc = vec![0.0; m];
            for i in (c * chunk)..((c + 1) * chunk).min(n) {
                let gi = positions[i];
                for &gj in &positions[i + 1..] {
                    let d = gj - gi;
                    if d > window {
                        break;
                    }
                    let w = pair_weight(d);
                    let phase = scale * d;
                    let (s0, c0) = (phase * a0).sin_cos();
                    let mut rot = (c0, s0);
                    acc[0] += w * rot.0;
                    for (k, pair) in alphas.windows(2).enumerate() {
                        let (ds, dc) = (phase * (pair[1].abs() - pair[0].abs())).sin_cos();
                        rot = (rot.0 * dc - rot.1 * ds, rot.0 * ds + rot.1 * dc);
                        acc[k + 1] += w * rot.0;
                    }
                }
            }
            acc
        })
        .collect();
    let mut total = vec![0.0; m];
    for block in blocks {
        for (t, b) in total.iter_mut().zip(block) {
            *t += b;
        }
    }
    total
}

fn empirical_curve(positions: &[f64], scale: f64, alphas: &[f64], window: f64) -> Vec<f64> {
    let n = positions.len() as f64;
    pair_sum(positions, scale, alphas, window)
        .into_iter()
        .map(|s| 1.0 + 2.0 * s / n)
        .collect()
}

fn check_alphas(alphas: &[f64]) -> Result<()> {
    if alphas.is_empty() {
        return Err(Error::domain("alpha grid is empty"));
    }
    if alphas.iter().any(|a| !a.is_finite()) {
        return Err(Error::domain("alpha grid contains non-finite values"));
    }
    if alphas.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain("alpha grid must be strictly ascending"));
    }
    Ok(())
}

/// Empirical form factor of raw ordinates at cutoff `t`:
/// N⁻¹ Σ_{0<γ,γ′≤t, |γ−γ′|≤window} cos(α log t (γ−γ′)) · 4/(4+(γ−γ′)²).
/// The diagonal contributes exactly 1. No theory columns are attached, so
/// any finite alpha grid is accepted.
pub fn form_factor_raw(zs: &ZeroSet, t: f64, alphas: &[f64], window: f64) -> Result<Vec<f64>> {
    check_alphas(alphas)?;
    if !(t > 1.0) || window <= 0.0 {
        return Err(Error::domain("need cutoff t > 1 and window > 0"));
    }
    if zs.t_max < t {
        return Err(Error::domain(format!(
            "zero set ends at {} but the estimator needs coverage to {t}",
            zs.t_max
        )));
    }
    let positions = zs.in_range(0.0, t);
    if positions.is_empty() {
        return Err(Error::domain("no ordinates at or below the cutoff"));
    }
    Ok(empirical_curve(positions, t.ln(), alphas, window))
}

/// Form factor of already-normalized positions (mean spacing 1), with the
/// matching kernel cos(2πα·d). Used for lattice oracles and synthetic
/// half-integer processes, where this estimator is periodic in α.
pub fn form_factor_normalized(positions: &[f64], alphas: &[f64], window: f64) -> Result<Vec<f64>> {
    check_alphas(alphas)?;
    if window <= 0.0 {
        return Err(Error::domain("window must be positive"));
    }
    if positions.is_empty() {
        return Err(Error::domain("no positions supplied"));
    }
    if positions.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain("positions must be strictly ascending"));
    }
    Ok(empirical_curve(
        positions,
        std::f64::consts::TAU,
        alphas,
        window,
    ))
}

/// Upper bound on the pair weight dropped beyond the window, per zero:
/// w(u) ≤ 4/u², so the tail mass is at most 2·density·∫_window 4/u² du.
pub fn neglected_weight_bound(count: usize, t: f64, window: f64) -> f64 {
    8.0 * (count as f64 / t) / window
}

/// Full curve: empirical estimator plus the three comparison curves.
/// The theory columns are only defined on |α| ≤ 1, so the grid must stay
/// inside [0, 1]. Errors if the window drops more than 1% of the
/// zero-alpha pair mass.
pub fn form_factor(
    zs: &ZeroSet,
    t: f64,
    alphas: &[f64],
    window: f64,
    k_trunc: u32,
) -> Result<FormFactorCurve> {
    check_alphas(alphas)?;
    if alphas[0] < 0.0 || *alphas.last().unwrap() > 1.0 {
        return Err(Error::domain(
            "theory curves are defined on [0, 1]; use the raw estimator beyond",
        ));
    }
    if k_trunc < 1 {
        return Err(Error::domain("truncation order must be at least 1"));
    }
    let empirical = form_factor_raw(zs, t, alphas, window)?;
    let count = zs.in_range(0.0, t).len();
    let bound = neglected_weight_bound(count, t, window);
    // Scale of the alpha-independent pair mass: the empirical value at 0.
    let zero_alpha = 1.0
        + 2.0 * pair_sum(zs.in_range(0.0, t), 0.0, &[0.0], window)[0] / count as f64;
    if bound > 0.01 * zero_alpha {
        return Err(Error::domain(format!(
            "window {window} drops up to {bound:.3e} of pair weight, over 1% of {zero_alpha:.3}"
        )));
    }
    Ok(FormFactorCurve {
        t,
        alphas: alphas.to_vec(),
        empirical,
        theory_f1: alphas.iter().map(|&a| theory_f1(a, t, k_trunc)).collect(),
        theory_montgomery: alphas.iter().map(|&a| theory_montgomery(a, t)).collect(),
        sine_ref: alphas.iter().map(|&a| sine_kernel_reference(a)).collect(),
        k_trunc,
        window,
        neglected_weight_bound: bound,
    })
}

/// Theoretical form factor of the derivative's zeros, truncation order K:
/// T^{−2|α|} log T + |α| − 4α² + Σ_{k=1}^{K} (k−1)!/(2k)! (2|α|)^{2k+1}.
/// Defined for |α| ≤ 1.
pub fn theory_f1(alpha: f64, t: f64, k_trunc: u32) -> f64 {
    let a = alpha.abs();
    debug_assert!(a <= 1.0 + 1e-12, "theory curve needs |alpha| <= 1");
    let mut sum = 0.0;
    for k in 1..=k_trunc as u64 {
        sum += factorial_f64(k - 1) / factorial_f64(2 * k) * (2.0 * a).powi(2 * k as i32 + 1);
    }
    t.powf(-2.0 * a) * t.ln() + a - 4.0 * a * a + sum
}

/// Montgomery's two-term main expression T^{−2|α|} log T + |α|.
pub fn theory_montgomery(alpha: f64, t: f64) -> f64 {
    let a = alpha.abs();
    t.powf(-2.0 * a) * t.ln() + a
}

/// Random-matrix reference min(|α|, 1).
pub fn sine_kernel_reference(alpha: f64) -> f64 {
    alpha.abs().min(1.0)
}
