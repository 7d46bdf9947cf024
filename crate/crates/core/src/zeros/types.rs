//! Zero-set containers and scan configuration.

use crate::special::{xi, xi_prime, z_prime};
use crate::{Error, Result};

/// Which real function a set of ordinates belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroKind {
    /// Scaled Xi on the critical line.
    Xi,
    /// Derivative of scaled Xi.
    XiPrime,
    /// Derivative of the rotated zeta function Z.
    ZPrime,
    /// Loaded from a file; not re-verifiable against a target function.
    Imported,
}

impl ZeroKind {
    /// Evaluate the associated scaled function, when there is one.
    pub(crate) fn eval(self, t: f64) -> Result<f64> {
        match self {
            ZeroKind::Xi => Ok(xi(t, true)?.value),
            ZeroKind::XiPrime => Ok(xi_prime(t, true)?.value),
            ZeroKind::ZPrime => z_prime(t),
            ZeroKind::Imported => Err(Error::domain(
                "imported zero sets have no target function to evaluate",
            )),
        }
    }
}

/// An ascending list of positive ordinates where the target function
/// changes sign, together with the search ceiling and refinement tolerance.
#[derive(Debug, Clone)]
pub struct ZeroSet {
    pub kind: ZeroKind,
    /// Strictly ascending, all in (0, t_max].
    pub ordinates: Vec<f64>,
    pub t_max: f64,
    pub ordinate_tolerance: f64,
    /// Where the set came from (scan parameters or file path).
    pub source: String,
}

impl ZeroSet {
    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// Ordinates within [lo, hi], as a slice of the full list.
    pub fn in_range(&self, lo: f64, hi: f64) -> &[f64] {
        let start = self.ordinates.partition_point(|&g| g < lo);
        let end = self.ordinates.partition_point(|&g| g <= hi);
        &self.ordinates[start..end]
    }

    /// A copy restricted to ordinates in [lo, hi], with the ceiling moved in.
    pub fn restrict(&self, lo: f64, hi: f64) -> ZeroSet {
        ZeroSet {
            kind: self.kind,
            ordinates: self.in_range(lo, hi).to_vec(),
            t_max: hi.min(self.t_max),
            ordinate_tolerance: self.ordinate_tolerance,
            source: format!("{} restricted to [{lo}, {hi}]", self.source),
        }
    }

    /// Check the structural invariants: strictly ascending, inside (0, t_max].
    pub fn check_structure(&self) -> Result<()> {
        let mut prev = 0.0;
        for &g in &self.ordinates {
            if g <= prev {
                return Err(Error::domain(format!(
                    "ordinates not strictly ascending near {g}"
                )));
            }
            if g > self.t_max {
                return Err(Error::domain(format!(
                    "ordinate {g} exceeds t_max {}",
                    self.t_max
                )));
            }
            prev = g;
        }
        Ok(())
    }

    /// Re-verify every stored ordinate: the target function must change sign
    /// on [g - tol, g + tol]. Imported sets cannot be re-verified.
    pub fn reverify(&self) -> Result<()> {
        let tol = self.ordinate_tolerance;
        for &g in &self.ordinates {
            let lo = self.kind.eval(g - tol)?;
            let hi = self.kind.eval(g + tol)?;
            if lo == 0.0 || hi == 0.0 {
                continue;
            }
            if lo.signum() == hi.signum() {
                return Err(Error::accuracy(format!(
                    "no sign change within {tol} of stored ordinate {g}"
                )));
            }
        }
        Ok(())
    }
}

/// Scan configuration. The base grid step at height t is `c / log t`
/// (clamped below so the step stays finite near t = 0); each base cell is
/// split `refine`-fold for sign-change detection, and suspicious dips are
/// re-scanned at `close_pair_step` so near-tangent zero pairs are kept.
#[derive(Debug, Clone)]
pub struct GridPolicy {
    pub c: f64,
    pub refine: u32,
    pub close_pair_step: f64,
    pub tolerance: f64,
}

impl Default for GridPolicy {
    fn default() -> Self {
        GridPolicy {
            c: 1.0,
            refine: 8,
            close_pair_step: 1e-4,
            tolerance: 1e-9,
        }
    }
}
