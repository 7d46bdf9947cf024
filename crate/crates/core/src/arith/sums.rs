//! Correlation sums over the convolution tables and their asymptotic
//! main-term comparators.

use super::table::ArithTable;
use crate::util::factorial_f64;
use crate::{Error, Result};

fn check_x(table: &ArithTable, x: f64) -> Result<u64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain("sum cutoff must be finite and nonnegative"));
    }
    if x > table.n_max() as f64 {
        return Err(Error::domain(format!(
            "sum cutoff {x} exceeds table extent {}",
            table.n_max()
        )));
    }
    Ok(x.floor() as u64)
}

fn check_order(table: &ArithTable, j: u32, least: u32) -> Result<()> {
    if j < least || j > table.j_max() {
        return Err(Error::domain(format!(
            "convolution order {j} outside {least}..={}",
            table.j_max()
        )));
    }
    Ok(())
}

/// S_{k,l}(x) = Σ_{n≤x} Λ_k(n) Λ_l(n), exact over the table. Symmetric in
/// (k, l); both orders must be at least 1.
pub fn s_sum(table: &ArithTable, k: u32, l: u32, x: f64) -> Result<f64> {
    check_order(table, k, 1)?;
    check_order(table, l, 1)?;
    let n_hi = check_x(table, x)? as usize;
    let row_k = table.lambda_row(k);
    let row_l = table.lambda_row(l);
    let mut acc = 0.0;
    for n in 2..=n_hi {
        acc += row_k[n] * row_l[n];
    }
    Ok(acc)
}

/// The same sum with Λ_k unfolded one step:
/// Σ_{q=p^a≤x} log p Σ_{m≤x/q} Λ_{k-1}(m) Λ_l(q m).
/// This is an identity, so the result must agree with [`s_sum`] to rounding.
pub fn s_unfold_check(table: &ArithTable, k: u32, l: u32, x: f64) -> Result<f64> {
    check_order(table, k, 1)?;
    check_order(table, l, 1)?;
    let n_hi = check_x(table, x)?;
    let row_l = table.lambda_row(l);
    let mut acc = 0.0;
    for pp in &table.prime_powers {
        if pp.q > n_hi {
            break;
        }
        let m_hi = (n_hi / pp.q) as usize;
        let q = pp.q as usize;
        let mut inner = 0.0;
        if k == 1 {
            // Λ_0 is the convolution unit: only m = 1 survives.
            inner = row_l[q];
        } else {
            let row_prev = table.lambda_row(k - 1);
            for m in 1..=m_hi {
                let v = row_prev[m];
                if v != 0.0 {
                    inner += v * row_l[q * m];
                }
            }
        }
        acc += pp.log_p * inner;
    }
    Ok(acc)
}

/// A_{k,l}(x) = Σ_{n≤x} α_k(n) α_l(n). Orders 0 and 1 use the derived rows.
pub fn a_kl_sum(table: &ArithTable, k: u32, l: u32, x: f64) -> Result<f64> {
    check_order(table, k, 0)?;
    check_order(table, l, 0)?;
    let n_hi = check_x(table, x)?;
    let mut acc = 0.0;
    for n in 2..=n_hi {
        acc += table.alpha(k, n)? * table.alpha(l, n)?;
    }
    Ok(acc)
}

/// A(x) = Σ_{n≤x} (Σ_{k=0}^{K} α_k(n) 𝔏^{-k})² with 𝔏 = ½ log(T/2π).
pub fn a_total(table: &ArithTable, big_k: u32, x: f64, t: f64) -> Result<f64> {
    check_order(table, big_k, 0)?;
    let n_hi = check_x(table, x)?;
    let scale = 0.5 * (t / std::f64::consts::TAU).ln();
    if !scale.is_finite() || scale <= 0.0 {
        return Err(Error::domain(
            "height T must exceed 2π so the log scale is positive",
        ));
    }
    let z = 1.0 / scale;
    let mut acc = 0.0;
    for n in 2..=n_hi {
        let mut inner = table.alpha(big_k, n)?;
        for k in (0..big_k).rev() {
            inner = inner * z + table.alpha(k, n)?;
        }
        acc += inner * inner;
    }
    Ok(acc)
}

/// Main term of S_{k,k}(x): k!/(2k-1)! · x (log x)^{2k-1}.
pub fn theory_s_kk(k: u32, x: f64) -> f64 {
    let c = factorial_f64(k as u64) / factorial_f64(2 * k as u64 - 1);
    c * x * x.ln().powi(2 * k as i32 - 1)
}

/// Main term of A(x) for x = T^a:
/// x log x (1 - 2 r + 2 Σ_{k=1}^{K} (k-1)!/(2k)! r^{2k}), r = log x / 𝔏.
pub fn theory_a_total(big_k: u32, x: f64, t: f64) -> Result<f64> {
    let scale = 0.5 * (t / std::f64::consts::TAU).ln();
    if !(scale > 0.0) || x < 2.0 {
        return Err(Error::domain(
            "main term needs x >= 2 and T > 2π",
        ));
    }
    let r = x.ln() / scale;
    let mut series = 0.0;
    for k in 1..=big_k as u64 {
        series += factorial_f64(k - 1) / factorial_f64(2 * k) * r.powi(2 * k as i32);
    }
    Ok(x * x.ln() * (1.0 - 2.0 * r + 2.0 * series))
}

/// Empirical and main-term sides of Σ_{p≤x} (log p)^u / p · (log x/p)^v.
#[derive(Debug, Clone, Copy)]
pub struct PrimeLogSum {
    pub empirical: f64,
    pub main_term: f64,
}

/// The prime sum above against its main term
/// (u-1)! v! / (u+v)! · (log x)^{u+v}, for u >= 2 and v >= 1.
pub fn prime_log_sum(table: &ArithTable, u: u32, v: u32, x: f64) -> Result<PrimeLogSum> {
    if u < 2 || v < 1 {
        return Err(Error::domain("prime log sum needs u >= 2 and v >= 1"));
    }
    if x < 2.0 {
        return Err(Error::domain("prime log sum needs x >= 2"));
    }
    if x > table.n_max() as f64 {
        return Err(Error::domain(format!(
            "prime log sum cutoff {x} exceeds table extent {}",
            table.n_max()
        )));
    }
    let ln_x = x.ln();
    let mut empirical = 0.0;
    for (i, &p) in table.primes.iter().enumerate() {
        if p as f64 > x {
            break;
        }
        let lp = table.prime_logs[i];
        empirical += lp.powi(u as i32) / p as f64 * (ln_x - lp).powi(v as i32);
    }
    let main_term = factorial_f64(u as u64 - 1) * factorial_f64(v as u64)
        / factorial_f64((u + v) as u64)
        * ln_x.powi((u + v) as i32);
    Ok(PrimeLogSum { empirical, main_term })
}
