//! Numerical check of the explicit formula: a Lorentzian-weighted sum over
//! the derivative's zeros against a truncated Dirichlet-series right side.

use num_complex::Complex64;
use serde::Serialize;

use crate::arith::ArithTable;
use crate::special::l_func;
use crate::zeros::ZeroSet;
use crate::{Error, Result};

/// r^w for real r > 0.
pub(crate) fn rpow(r: f64, w: Complex64) -> Complex64 {
    (w * r.ln()).exp()
}

fn check_hypotheses(x: f64, sigma: f64) -> Result<()> {
    if !(x >= 1.0 && x.is_finite()) {
        return Err(Error::domain(format!("x = {x} outside the hypothesis x >= 1")));
    }
    if !(sigma > 1.25 && sigma < 2.0) {
        return Err(Error::domain(format!(
            "sigma = {sigma} outside the hypothesis 5/4 < sigma < 2"
        )));
    }
    Ok(())
}

/// Left side of the formula near height `t`, windowed to `|gamma - t| <=
/// window`, plus a bound on the dropped Lorentzian tail.
#[derive(Debug, Clone)]
pub struct LorentzianSum {
    pub value: Complex64,
    /// Everything outside the window contributes at most this much in
    /// absolute value (density bound integrated against 1/u^2).
    pub tail_bound: f64,
    /// Number of zero ordinates that entered the sum.
    pub terms: usize,
}

/// (2σ−1) Σ x^{iγ}/((σ−1/2)² + (t−γ)²) over the zero ordinates of the
/// derivative with |γ − t| ≤ window. The ordinate multiset is symmetric —
/// {0} ∪ {±γ_k} — because the derivative of an even function is odd, so
/// the stored positive ordinates enter with both signs plus the origin.
///
/// Preconditions: x ≥ 1, 5/4 < σ < 2, window ≥ 500, and the stored set
/// must reach |t| + window (incomplete-coverage error otherwise).
pub fn ef_lhs(
    x: f64,
    t: f64,
    sigma: f64,
    xip: &ZeroSet,
    window: f64,
) -> Result<LorentzianSum> {
    check_hypotheses(x, sigma)?;
    if !(window >= 500.0) {
        return Err(Error::domain(format!(
            "window {window} below the minimum 500 the tail bound is built for"
        )));
    }
    let ta = t.abs();
    if xip.t_max < ta + window {
        return Err(Error::domain(format!(
            "zero coverage ends at {} but the window needs {}",
            xip.t_max,
            ta + window
        )));
    }
    let c2 = (sigma - 0.5) * (sigma - 0.5);
    let ln_x = x.ln();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut terms = 0usize;
    // Origin zero: x^{i0} = 1.
    if ta <= window {
        acc += Complex64::new(1.0 / (c2 + ta * ta), 0.0);
        terms += 1;
    }
    for &g in &xip.ordinates {
        if g > ta + window {
            break;
        }
        let phase = Complex64::new(0.0, g * ln_x).exp();
        if (g - ta).abs() <= window {
            let d = ta - g;
            acc += phase / (c2 + d * d);
            terms += 1;
        }
        // Mirror ordinate -g: |(-g) - ta| = g + ta.
        if g + ta <= window {
            let d = ta + g;
            acc += phase.conj() / (c2 + d * d);
            terms += 1;
        }
    }
    let mut value = (2.0 * sigma - 1.0) * acc;
    if t < 0.0 {
        // The multiset is symmetric, so the sum at -t is the conjugate.
        value = value.conj();
    }
    // Zero density at height h is ~ ln(h/2pi)/2pi; beyond the window,
    // ln((ta+u)/2pi) <= ln((ta+W)/2pi) + ln(u/W) for u >= W, and
    // integrating both terms against 1/u^2 gives (ln((ta+W)/2pi)+1)/W
    // per side of the window.
    let dens_log = ((ta + window) / std::f64::consts::TAU).ln() + 1.0;
    let tail_bound =
        (2.0 * sigma - 1.0) * 2.0 * dens_log / (std::f64::consts::TAU * window);
    Ok(LorentzianSum { value, tail_bound, terms })
}

/// Right side evaluated with truncation order K.
#[derive(Debug, Clone)]
pub struct DirichletSide {
    pub value: Complex64,
    /// Where the n > x sum was cut and how it was stabilized.
    pub note: String,
}

/// Iterated sliding-window average of the partial-sum sequence in log-n.
/// Each pass integrates over one period 2π/t of the x^{it}-type phases
/// (exactly periodic in ln n), annihilating the leading oscillation; three
/// passes leave only the slowly drifting envelope.
fn averaged_limit(us: &[f64], sums: &[Complex64], delta: f64, passes: u32) -> (Complex64, f64) {
    let mut u = us.to_vec();
    let mut s = sums.to_vec();
    for _ in 0..passes {
        // Prefix trapezoid of s over u.
        let mut pref = Vec::with_capacity(s.len());
        let mut acc = Complex64::new(0.0, 0.0);
        pref.push(acc);
        for i in 1..s.len() {
            acc += 0.5 * (s[i] + s[i - 1]) * (u[i] - u[i - 1]);
            pref.push(acc);
        }
        let interp = |y: f64, idx_hint: usize| -> Complex64 {
            // pref is piecewise quadratic; linear interpolation of the
            // prefix between bracketing samples is second-order accurate.
            let mut j = idx_hint;
            while j + 1 < u.len() && u[j + 1] < y {
                j += 1;
            }
            if j + 1 >= u.len() {
                return pref[u.len() - 1];
            }
            let w = (y - u[j]) / (u[j + 1] - u[j]);
            pref[j] + (pref[j + 1] - pref[j]) * w
        };
        let mut nu = Vec::new();
        let mut ns = Vec::new();
        let mut hint = 0usize;
        for i in 0..u.len() {
            let y = u[i] + delta;
            if y > u[u.len() - 1] + 1e-15 {
                break;
            }
            while hint + 1 < u.len() && u[hint + 1] < y {
                hint += 1;
            }
            nu.push(u[i]);
            ns.push((interp(y, hint) - pref[i]) / delta);
        }
        if ns.len() < 4 {
            break;
        }
        u = nu;
        s = ns;
    }
    // Residual ringing estimate: spread of the fully averaged sequence.
    let first = s[0];
    let spread = s
        .iter()
        .map(|v| (v - first).norm())
        .fold(0.0f64, f64::max);
    (first, spread)
}

/// x^{−1/2}(Σ_{n≤x} a_K(n, 1−s̄)(x/n)^{1−s̄} + Σ_{n>x} a_K(n,s)(x/n)^s)
/// + x^{1/2−s̄} log(τ/2π), with τ = |t| + 2 and s = σ + it. The two O-error
/// terms of the formula are NOT added; they form the comparison budget.
///
/// The n > x series converges too slowly for a literal magnitude cutoff
/// (terms fall below 1e-14 of the sum only near n ~ 1e13), so after the
/// near zone the partial sums are stabilized by the iterated log-window
/// average above; the dropped-tail ringing is reported in `note`.
pub fn ef_rhs(
    x: f64,
    t: f64,
    sigma: f64,
    big_k: u32,
    table: &ArithTable,
) -> Result<DirichletSide> {
    check_hypotheses(x, sigma)?;
    if big_k < 1 || big_k > table.j_max() {
        return Err(Error::domain(format!(
            "truncation order {big_k} not in 1..={}",
            table.j_max()
        )));
    }
    let s = Complex64::new(sigma, t);
    let one_minus_sbar = Complex64::new(1.0 - sigma, t);
    let l_s = l_func(s)?;
    let l_m = l_func(one_minus_sbar)?;

    let xn = x.floor() as u64;
    if table.n_max() < xn {
        return Err(Error::domain(format!(
            "table covers n <= {} but the split point is {xn}",
            table.n_max()
        )));
    }
    let mut sum1 = Complex64::new(0.0, 0.0);
    for n in 1..=xn {
        let a = table.a_coefficient(big_k, n, l_m)?;
        sum1 += a * rpow(x / n as f64, one_minus_sbar);
    }

    // Oscillation period of the n > x terms in ln n is 2pi/|t|; keep the
    // averaging window resolvable even for small |t|. Each averaging pass
    // consumes one period of samples.
    const PASSES: u32 = 5;
    let t_eff = t.abs().max(5.0);
    let n0 = (1000.0 * x.ceil()).max(20_000.0).max(3.0 * t_eff) as u64;
    let delta = std::f64::consts::TAU / t_eff;
    let n3 = ((n0 as f64) * ((PASSES as f64 + 0.2) * delta).exp()).ceil() as u64;
    if table.n_max() < n3 {
        return Err(Error::domain(format!(
            "table covers n <= {} but the tail average needs n <= {n3}",
            table.n_max()
        )));
    }

    let mut sum2 = Complex64::new(0.0, 0.0);
    let mut small_run = 0u32;
    let mut stopped_early = None;
    let mut us: Vec<f64> = Vec::new();
    let mut snaps: Vec<Complex64> = Vec::new();
    for n in (xn + 1)..=n3 {
        let a = table.a_coefficient(big_k, n, l_s)?;
        let term = a * rpow(x / n as f64, s);
        sum2 += term;
        if term.norm() < 1e-14 * sum2.norm() {
            small_run += 1;
            if small_run >= 50 {
                stopped_early = Some(n);
                break;
            }
        } else {
            small_run = 0;
        }
        if n >= n0 {
            us.push((n as f64).ln());
            snaps.push(sum2);
        }
    }

    let note;
    if let Some(n_stop) = stopped_early {
        note = format!("n > x sum converged by the magnitude rule at n = {n_stop}");
    } else {
        let (limit, spread) = averaged_limit(&us, &snaps, delta, PASSES);
        sum2 = limit;
        note = format!(
            "n > x sum cut at n = {n3}; partial sums averaged over log-n \
             windows of one period from n = {n0}; residual ringing <= {spread:.3e}"
        );
    }

    let tau = t.abs() + 2.0;
    let log_term = rpow(x, Complex64::new(0.5 - sigma, t))
        * (tau / std::f64::consts::TAU).ln();
    let value = (sum1 + sum2) / x.sqrt() + log_term;
    Ok(DirichletSide { value, note })
}

/// One evaluated comparison point.
#[derive(Debug, Clone, Serialize)]
pub struct EfSample {
    pub x: f64,
    pub t: f64,
    pub sigma: f64,
    pub k: u32,
    pub lhs_re: f64,
    pub lhs_im: f64,
    pub rhs_re: f64,
    pub rhs_im: f64,
    pub residual: f64,
    pub rel_residual: f64,
    /// Error budget x^{1/2−σ} + x^{1/2} τ^{−1} max(x^{1/10}, log^{2K+2} x).
    pub budget: f64,
    pub truncation_note: String,
}

/// Collected comparison report.
#[derive(Debug, Clone, Serialize)]
pub struct ExplicitFormulaReport {
    pub samples: Vec<EfSample>,
    pub window: f64,
}

/// Parameters for one comparison point.
#[derive(Debug, Clone, Copy)]
pub struct EfRequest {
    pub x: f64,
    pub t: f64,
    pub sigma: f64,
    pub k: u32,
}

/// Evaluates both sides at every request. The exponent in the budget's
/// x^ε factor is fixed at ε = 1/10 (the hypothesis allows 0 < ε < 1/8).
pub fn ef_report(
    requests: &[EfRequest],
    xip: &ZeroSet,
    table: &ArithTable,
    window: f64,
) -> Result<ExplicitFormulaReport> {
    if !(window >= 500.0) {
        return Err(Error::domain(format!(
            "window {window} below the 500 minimum"
        )));
    }
    let mut samples = Vec::with_capacity(requests.len());
    for req in requests {
        let lhs = ef_lhs(req.x, req.t, req.sigma, xip, window)?;
        let rhs = ef_rhs(req.x, req.t, req.sigma, req.k, table)?;
        let residual = (lhs.value - rhs.value).norm();
        let scale = lhs.value.norm().max(rhs.value.norm());
        let tau = req.t.abs() + 2.0;
        let lx = req.x.ln();
        let budget = req.x.powf(0.5 - req.sigma)
            + req.x.sqrt() / tau
                * req.x.powf(0.1).max(lx.powi(2 * req.k as i32 + 2));
        samples.push(EfSample {
            x: req.x,
            t: req.t,
            sigma: req.sigma,
            k: req.k,
            lhs_re: lhs.value.re,
            lhs_im: lhs.value.im,
            rhs_re: rhs.value.re,
            rhs_im: rhs.value.im,
            residual,
            rel_residual: residual / scale,
            budget,
            truncation_note: format!(
                "{} zero terms in window {window}, dropped Lorentzian tail <= {:.3e}; {}",
                lhs.terms, lhs.tail_bound, rhs.note
            ),
        });
    }
    Ok(ExplicitFormulaReport { samples, window })
}
