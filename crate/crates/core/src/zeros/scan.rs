//! Sign-change scanning and bisection refinement.

use rayon::prelude::*;

use super::types::{GridPolicy, ZeroKind, ZeroSet};
use crate::special::Z_T_MAX;
use crate::{Error, Result};

// Clamp inside log(t) so the base step never exceeds c/2 near t = 0.
const STEP_CLAMP: f64 = 7.389056098930650; // e^2

fn base_step(t: f64, c: f64) -> f64 {
    c / t.max(STEP_CLAMP).ln()
}

/// Midpoint bisection on a bracketing interval. `fa` and `fb` must have
/// opposite signs; the result is within `tol` of a sign change.
fn bisect<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, mut fa: f64, tol: f64) -> f64 {
    for _ in 0..60 {
        if b - a <= tol {
            break;
        }
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fa.signum() * fm.signum() < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    0.5 * (a + b)
}

/// Scan one base cell [a, b] with cached endpoint values. The cell is split
/// `refine`-fold; every sign change is bisected, samples that hit a zero
/// exactly are recorded directly, and a dip in |f| without a crossing is
/// re-scanned at `close_pair_step` so near-tangent pairs are not missed.
fn scan_cell<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fb: f64,
    policy: &GridPolicy,
) -> Result<Vec<f64>> {
    let n = policy.refine.max(1) as usize;
    let mut xs = Vec::with_capacity(n + 1);
    let mut vs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let x = a + (b - a) * k as f64 / n as f64;
        let v = if k == 0 {
            fa
        } else if k == n {
            fb
        } else {
            f(x)
        };
        if !v.is_finite() {
            return Err(Error::accuracy(format!("non-finite sample at t = {x}")));
        }
        xs.push(x);
        vs.push(v);
    }

    let mut found = Vec::new();
    // Exact zeros at samples; the right endpoint belongs to the next cell.
    for k in 0..n {
        if vs[k] == 0.0 && xs[k] > 0.0 {
            found.push(xs[k]);
        }
    }
    // Bracketed sign changes; samples that are exactly zero were already
    // recorded, so both ends must be nonzero for a genuine crossing.
    for k in 0..n {
        if vs[k] != 0.0 && vs[k + 1] != 0.0 && vs[k].signum() * vs[k + 1].signum() < 0.0 {
            found.push(bisect(f, xs[k], xs[k + 1], vs[k], policy.tolerance));
        }
    }
    // Dips: a strict local minimum of |f| that drops well below both
    // neighbors and has no adjacent crossing may hide a close pair.
    for k in 1..n {
        let (lo, mid, hi) = (vs[k - 1].abs(), vs[k].abs(), vs[k + 1].abs());
        let crossing = vs[k - 1].signum() * vs[k].signum() < 0.0
            || vs[k].signum() * vs[k + 1].signum() < 0.0;
        if crossing || mid == 0.0 || 4.0 * mid >= lo.min(hi) {
            continue;
        }
        let (mut x_prev, mut v_prev) = (xs[k - 1], vs[k - 1]);
        let steps = ((xs[k + 1] - xs[k - 1]) / policy.close_pair_step).ceil() as usize;
        for j in 1..=steps {
            let x = xs[k - 1] + (xs[k + 1] - xs[k - 1]) * j as f64 / steps as f64;
            let v = f(x);
            if v == 0.0 && x > 0.0 {
                found.push(x);
            } else if v_prev != 0.0 && v_prev.signum() * v.signum() < 0.0 {
                found.push(bisect(f, x_prev, x, v_prev, policy.tolerance));
            }
            x_prev = x;
            v_prev = v;
        }
    }
    found.sort_by(|p, q| p.partial_cmp(q).unwrap());
    found.retain(|&g| g > 0.0);
    Ok(found)
}

/// Locate all sign changes of the scaled target function on [t_lo, t_hi].
///
/// The base grid steps by c/log t, each cell is refined and scanned as in
/// [`scan_cell`], and brackets are bisected to `policy.tolerance`. Cells are
/// processed in parallel and merged in interval order, so the result does
/// not depend on thread count. Completeness should be confirmed afterwards
/// with [`super::count_audit`].
pub fn find_zeros(kind: ZeroKind, t_lo: f64, t_hi: f64, policy: &GridPolicy) -> Result<ZeroSet> {
    if kind == ZeroKind::Imported {
        return Err(Error::domain("cannot scan for an imported zero set"));
    }
    if !(t_lo >= 0.0 && t_lo < t_hi && t_hi <= Z_T_MAX) {
        return Err(Error::domain(format!(
            "scan range [{t_lo}, {t_hi}] outside validated domain [0, {Z_T_MAX}]"
        )));
    }
    if !(policy.c > 0.0 && policy.tolerance > 0.0 && policy.close_pair_step > 0.0) {
        return Err(Error::domain("grid policy values must be positive"));
    }

    let mut grid = vec![t_lo];
    let mut t = t_lo;
    while t < t_hi {
        t = (t + base_step(t, policy.c)).min(t_hi);
        grid.push(t);
    }

    let f = |x: f64| kind.eval(x).expect("range pre-validated");
    let values: Vec<f64> = crate::util::det_par_map(0..grid.len(), |i| f(grid[i]));

    let cells: Vec<Result<Vec<f64>>> = (0..grid.len() - 1)
        .into_par_iter()
        .map(|i| scan_cell(&f, grid[i], grid[i + 1], values[i], values[i + 1], policy))
        .collect();

    let mut ordinates = Vec::new();
    for cell in cells {
        ordinates.extend(cell?);
    }
    for w in ordinates.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::accuracy(format!(
                "merged scan not strictly ascending near {}",
                w[0]
            )));
        }
    }

    Ok(ZeroSet {
        kind,
        ordinates,
        t_max: t_hi,
        ordinate_tolerance: policy.tolerance,
        source: format!(
            "scan [{t_lo}, {t_hi}], step {}/log t, refine {}",
            policy.c, policy.refine
        ),
    })
}
