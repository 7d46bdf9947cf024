//! Mean values of x^{it} against inverse powers of the log-derivative
//! envelope L(s), checked by adaptive quadrature.

use num_complex::Complex64;

use crate::special::l_func;
use crate::verify::explicit::rpow;
use crate::{Error, Result};

/// Outcome of one mean-value quadrature.
#[derive(Debug, Clone)]
pub struct MeanValue {
    pub numeric: Complex64,
    /// T (log(T/2pi)/2)^{-(k+l)} when x = 1, zero otherwise.
    pub predicted: Complex64,
    /// Accumulated quadrature error estimate.
    pub est_error: f64,
    /// Size allowance for the deviation: |predicted|/log T at x = 1,
    /// 1/|log x| otherwise.
    pub budget: f64,
    pub evaluations: u64,
}

struct Quad<'a> {
    f: &'a dyn Fn(f64) -> Complex64,
    evals: u64,
    est: f64,
    max_depth: u32,
}

impl Quad<'_> {
    fn eval(&mut self, t: f64) -> Complex64 {
        self.evals += 1;
        (self.f)(t)
    }

    /// Adaptive Simpson on [a, b] given endpoint/midpoint values; fixed
    /// recursion order keeps the reduction deterministic.
    #[allow(clippy::too_many_arguments)]
    fn simpson(
        &mut self,
        a: f64,
        b: f64,
        fa: Complex64,
        fm: Complex64,
        fb: Complex64,
        whole: Complex64,
        tol: f64,
        depth: u32,
    ) -> Result<Complex64> {
        let m = 0.5 * (a + b);
        let flm = self.eval(0.5 * (a + m));
        let frm = self.eval(0.5 * (m + b));
        let h = b - a;
        let left = h / 12.0 * (fa + 4.0 * flm + fm);
        let right = h / 12.0 * (fm + 4.0 * frm + fb);
        let err = (left + right - whole).norm() / 15.0;
        if err <= tol || h < 1e-9 {
            self.est += err;
            return Ok(left + right + (left + right - whole) / 15.0);
        }
        if depth >= self.max_depth {
            return Err(Error::accuracy(format!(
                "quadrature failed to converge on [{a}, {b}] (err {err:.3e} > tol {tol:.3e})"
            )));
        }
        let l = self.simpson(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)?;
        let r = self.simpson(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1)?;
        Ok(l + r)
    }

    fn integrate(&mut self, a: f64, b: f64, tol: f64) -> Result<Complex64> {
        let fa = self.eval(a);
        let fb = self.eval(b);
        let fm = self.eval(0.5 * (a + b));
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        self.simpson(a, b, fa, fm, fb, whole, tol, 0)
    }
}

fn check_params(x: f64, k: u32, l: u32, sigma: f64, t_cap: f64) -> Result<()> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain(format!("x = {x} must be positive")));
    }
    if k > 8 || l > 8 {
        return Err(Error::domain(format!(
            "powers ({k}, {l}) exceed the supported maximum 8"
        )));
    }
    if sigma != -0.5 && sigma != 1.5 {
        return Err(Error::domain(format!(
            "sigma = {sigma} must be exactly -1/2 or 3/2"
        )));
    }
    if !(10.0 <= t_cap && t_cap <= 1.0e5) {
        return Err(Error::domain(format!("T = {t_cap} outside [10, 1e5]")));
    }
    Ok(())
}

/// Shared panel-by-panel driver over [0, T]; panels are split so each
/// holds only a few oscillations of x^{it}, and are summed in index order.
fn run_quadrature(
    f: &dyn Fn(f64) -> Complex64,
    x: f64,
    k: u32,
    l: u32,
    t_cap: f64,
) -> Result<MeanValue> {
    let mut quad = Quad { f, evals: 0, est: 0.0, max_depth: 40 };
    let periods = t_cap * x.ln().abs() / std::f64::consts::TAU;
    let n_panels = ((periods / 2.0).ceil() as u64).clamp(16, 400_000);
    let tol_total = 2e-7 * t_cap;
    let mut acc = Complex64::new(0.0, 0.0);
    let width = t_cap / n_panels as f64;
    for i in 0..n_panels {
        let a = i as f64 * width;
        let b = if i + 1 == n_panels { t_cap } else { (i + 1) as f64 * width };
        acc += quad.integrate(a, b, tol_total / n_panels as f64)?;
    }
    if quad.est > 1e-6 * t_cap {
        return Err(Error::accuracy(format!(
            "quadrature error estimate {:.3e} exceeds 1e-6 T",
            quad.est
        )));
    }
    let lcap = 0.5 * (t_cap / std::f64::consts::TAU).ln();
    let (predicted, budget) = if x == 1.0 {
        let p = t_cap * lcap.powi(-((k + l) as i32));
        (Complex64::new(p, 0.0), p / (2.0 * lcap))
    } else {
        (Complex64::new(0.0, 0.0), 1.0 / x.ln().abs())
    };
    Ok(MeanValue {
        numeric: acc,
        predicted,
        est_error: quad.est,
        budget,
        evaluations: quad.evals,
    })
}

/// ∫₀^T x^{it} / (conj(L(s))^k L(s)^l) dt at fixed σ ∈ {−1/2, 3/2},
/// s = σ + it, against the prediction T (log(T/2π)/2)^{−(k+l)} for x = 1
/// (zero for x ≠ 1, where the integral is O(1/|log x|)).
///
/// Preconditions: x > 0, k, l ≤ 8, 10 ≤ T ≤ 1e5, σ exactly −1/2 or 3/2.
/// The quadrature keeps its internal error estimate below 1e−6·T or
/// returns an accuracy error.
pub fn mean_value_integral(
    x: f64,
    k: u32,
    l: u32,
    sigma: f64,
    t_cap: f64,
) -> Result<MeanValue> {
    check_params(x, k, l, sigma, t_cap)?;
    let ln_x = x.ln();
    let f = move |t: f64| -> Complex64 {
        let s = Complex64::new(sigma, t);
        // Poles of L sit on the real axis, never on these vertical lines.
        let lv = l_func(s).expect("L regular on the integration line");
        let denom = lv.conj().powu(k) * lv.powu(l);
        Complex64::new(0.0, t * ln_x).exp() / denom
    };
    run_quadrature(&f, x, k, l, t_cap)
}

/// Same integral with the reflected argument conj(L(1−s̄)) in place of
/// conj(L(s)); the leading prediction is identical.
pub fn mean_value_integral_reflected(
    x: f64,
    k: u32,
    l: u32,
    sigma: f64,
    t_cap: f64,
) -> Result<MeanValue> {
    check_params(x, k, l, sigma, t_cap)?;
    let ln_x = x.ln();
    let f = move |t: f64| -> Complex64 {
        let s = Complex64::new(sigma, t);
        let s_refl = Complex64::new(1.0 - sigma, t);
        let lv = l_func(s).expect("L regular on the integration line");
        let lr = l_func(s_refl).expect("L regular on the reflected line");
        let denom = lr.conj().powu(k) * lv.powu(l);
        Complex64::new(0.0, t * ln_x).exp() / denom
    };
    run_quadrature(&f, x, k, l, t_cap)
}

/// x^{it} as a unit complex number.
pub fn unit_phase(x: f64, t: f64) -> Complex64 {
    rpow(x, Complex64::new(0.0, t))
}
