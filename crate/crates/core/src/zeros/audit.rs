//! Zero-count accounting, interlacing diagnostics, and zero-list comparison.

use std::f64::consts::TAU;

use super::types::{ZeroKind, ZeroSet};
use crate::{Error, Result};

/// Smooth main term for the number of zeros with ordinate in (0, T]:
/// (T/2π) log(T/2π) − T/2π + 7/8.
pub fn smooth_count(t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    let x = t / TAU;
    x * x.ln() - x + 0.875
}

/// Result of checking a zero list against the smooth count.
#[derive(Debug, Clone)]
pub struct CountAudit {
    pub counted: usize,
    pub smooth: f64,
    /// True when |counted − smooth| > 2, suggesting missed or spurious zeros.
    pub mismatch: bool,
    /// Derivative count minus base count, when both lists are supplied.
    /// The derivative's zero at t = 0 (an odd function) is included, so
    /// this is (stored derivative zeros + 1) − stored base zeros.
    pub n1_minus_n: Option<i64>,
}

/// Compare a zero list against the smooth count at its ceiling, and when a
/// companion list for the other function is supplied, report the count
/// difference between derivative zeros and base zeros on the same range.
pub fn count_audit(primary: &ZeroSet, companion: Option<&ZeroSet>) -> CountAudit {
    let counted = primary.len();
    let smooth = smooth_count(primary.t_max);
    let n1_minus_n = companion.and_then(|other| {
        let (base, deriv) = match (primary.kind, other.kind) {
            (ZeroKind::Xi, ZeroKind::XiPrime) => (primary, other),
            (ZeroKind::XiPrime, ZeroKind::Xi) => (other, primary),
            _ => return None,
        };
        Some(deriv.len() as i64 + 1 - base.len() as i64)
    });
    CountAudit {
        counted,
        smooth,
        mismatch: (counted as f64 - smooth).abs() > 2.0,
        n1_minus_n,
    }
}

/// One gap between consecutive base zeros and the derivative zeros inside.
#[derive(Debug, Clone)]
pub struct GapEntry {
    pub gap: (f64, f64),
    pub inside: usize,
    /// Signed distance of the unique interior zero from the gap midpoint;
    /// present only when `inside == 1`.
    pub offset_from_midpoint: Option<f64>,
}

/// Interlacing diagnostics: how many derivative zeros fall strictly inside
/// each gap between consecutive base zeros.
#[derive(Debug, Clone)]
pub struct InterlacingReport {
    pub pairs: Vec<GapEntry>,
    /// Number of gaps whose interior count differs from one.
    pub violations: usize,
}

pub fn interlacing_report(base: &ZeroSet, deriv: &ZeroSet) -> InterlacingReport {
    let mut pairs = Vec::new();
    let mut violations = 0;
    let mut i = 0;
    for w in base.ordinates.windows(2) {
        let (a, b) = (w[0], w[1]);
        while i < deriv.ordinates.len() && deriv.ordinates[i] <= a {
            i += 1;
        }
        let mut j = i;
        while j < deriv.ordinates.len() && deriv.ordinates[j] < b {
            j += 1;
        }
        let inside = j - i;
        let offset = if inside == 1 {
            Some(deriv.ordinates[i] - 0.5 * (a + b))
        } else {
            None
        };
        if inside != 1 {
            violations += 1;
        }
        pairs.push(GapEntry {
            gap: (a, b),
            inside,
            offset_from_midpoint: offset,
        });
        i = j;
    }
    InterlacingReport { pairs, violations }
}

/// One matched pair of ordinates from two zero lists.
#[derive(Debug, Clone, Copy)]
pub struct ZeroPairDelta {
    /// Ordinate from the first list.
    pub t: f64,
    /// First-list ordinate minus second-list ordinate.
    pub delta: f64,
    /// delta · log²(t), the natural scale on which the gap is expected flat.
    pub normalized: f64,
}

/// Pair the k-th ordinate of `xip` with the k-th of `zp`. The two lists must
/// cover the same range and have equal cardinality; zeros of the two
/// functions then sit in matching gaps and the pairing is meaningful.
pub fn compare_zprime(xip: &ZeroSet, zp: &ZeroSet) -> Result<Vec<ZeroPairDelta>> {
    if xip.len() != zp.len() {
        return Err(Error::domain(format!(
            "cannot pair zero lists of different cardinality: {} vs {}",
            xip.len(),
            zp.len()
        )));
    }
    Ok(xip
        .ordinates
        .iter()
        .zip(&zp.ordinates)
        .map(|(&g, &z)| {
            let delta = g - z;
            ZeroPairDelta {
                t: g,
                delta,
                normalized: delta * g.ln() * g.ln(),
            }
        })
        .collect())
}
