//! Dense tables of the iterated von Mangoldt convolutions and the derived
//! Dirichlet coefficients.
//!
//! `lambda_j` here is the j-fold convolution power of the von Mangoldt
//! function: `lambda_1 = Λ`, and `lambda_j = lambda_{j-1} * Λ`. It vanishes
//! unless the argument has at most j distinct prime factors and at least j
//! prime factors with multiplicity.
//!
//! `alpha_k` for `k >= 2` is `lambda_{k-1} * (Λ·log)`; `alpha_0 = -Λ` and
//! `alpha_1(n) = Λ(n) log n` are derived on the fly rather than stored.

use num_complex::Complex64;

use super::sieve::{sieve, PrimePower, SieveData};
use crate::util::binomial;
use crate::{Error, Result};

#[derive(Debug)]
pub struct ArithTable {
    n_max: u64,
    j_max: u32,
    /// Λ(n), index 0..=n_max.
    lambda: Vec<f64>,
    /// lambda_hi[j - 2] holds Λ_j for j = 2..=j_max.
    lambda_hi: Vec<Vec<f64>>,
    /// alpha_hi[k - 2] holds α_k for k = 2..=j_max.
    alpha_hi: Vec<Vec<f64>>,
    pub(crate) primes: Vec<u64>,
    pub(crate) prime_logs: Vec<f64>,
    pub(crate) prime_powers: Vec<PrimePower>,
}

/// Bytes needed for the dense rows of a `(n_max, j_max)` table, used for the
/// capacity check before any allocation happens.
pub fn table_bytes(n_max: u64, j_max: u32) -> u64 {
    let row = (n_max + 1) * 8;
    // Λ row, (j_max - 1) higher Λ_j rows, (j_max - 1) α_k rows, plus the
    // transient u32 sieve array and the prime-power list (~32 bytes/entry,
    // bounded crudely by primes below n_max via n/ln n * 48).
    let rows = 1 + 2 * (j_max.saturating_sub(1) as u64);
    let sieve_bytes = (n_max + 1) * 4;
    let list_bytes = if n_max > 16 {
        (n_max as f64 / (n_max as f64).ln() * 48.0) as u64
    } else {
        1024
    };
    row * rows + sieve_bytes + list_bytes
}

/// Convolve `prev` with the von Mangoldt function restricted to prime powers:
/// `out[q m] += weight(q) * prev[m]`. Iteration order is fixed (q ascending,
/// then m ascending) so rebuilds are bit-for-bit identical.
fn convolve_with_lambda(
    prev: &[f64],
    prime_powers: &[PrimePower],
    weight: impl Fn(&PrimePower) -> f64,
) -> Vec<f64> {
    let n_max = prev.len() - 1;
    let mut out = vec![0.0f64; n_max + 1];
    for pp in prime_powers {
        let q = pp.q as usize;
        if q > n_max {
            break;
        }
        let w = weight(pp);
        let m_hi = n_max / q;
        for m in 1..=m_hi {
            let v = prev[m];
            if v != 0.0 {
                out[q * m] += w * v;
            }
        }
    }
    out
}

impl ArithTable {
    /// Build all tables up to `n_max` with convolutions up to order `j_max`,
    /// refusing up front if the dense rows would not fit in `budget_bytes`.
    pub fn build(n_max: u64, j_max: u32, budget_bytes: u64) -> Result<ArithTable> {
        if n_max < 2 {
            return Err(Error::domain("table upper bound must be at least 2"));
        }
        if j_max < 1 {
            return Err(Error::domain("convolution order must be at least 1"));
        }
        let required = table_bytes(n_max, j_max);
        if required > budget_bytes {
            return Err(Error::Capacity {
                required_bytes: required,
                budget_bytes,
            });
        }

        let sv: SieveData = sieve(n_max);
        let lambda = sv.lambda_array();

        let mut lambda_hi: Vec<Vec<f64>> = Vec::new();
        for j in 2..=j_max {
            let prev: &[f64] = if j == 2 {
                &lambda
            } else {
                &lambda_hi[(j - 3) as usize]
            };
            lambda_hi.push(convolve_with_lambda(prev, &sv.prime_powers, |pp| pp.log_p));
        }

        // α_k = Λ_{k-1} * (Λ log): the weight at a prime power q is
        // Λ(q) log q = log p * log q.
        let mut alpha_hi: Vec<Vec<f64>> = Vec::new();
        for k in 2..=j_max {
            let prev: &[f64] = if k == 2 {
                &lambda
            } else {
                &lambda_hi[(k - 3) as usize]
            };
            alpha_hi.push(convolve_with_lambda(prev, &sv.prime_powers, |pp| {
                pp.log_p * (pp.q as f64).ln()
            }));
        }

        Ok(ArithTable {
            n_max,
            j_max,
            lambda,
            lambda_hi,
            alpha_hi,
            primes: sv.primes,
            prime_logs: sv.prime_logs,
            prime_powers: sv.prime_powers,
        })
    }

    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    pub fn j_max(&self) -> u32 {
        self.j_max
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn prime_powers(&self) -> &[PrimePower] {
        &self.prime_powers
    }

    fn check_n(&self, n: u64) -> Result<usize> {
        if n == 0 || n > self.n_max {
            return Err(Error::domain(format!(
                "argument {n} outside table range 1..={}",
                self.n_max
            )));
        }
        Ok(n as usize)
    }

    /// Λ(n).
    pub fn lambda(&self, n: u64) -> Result<f64> {
        Ok(self.lambda[self.check_n(n)?])
    }

    /// Λ_j(n). `Λ_0` is the unit of Dirichlet convolution (1 at n = 1).
    pub fn lambda_j(&self, j: u32, n: u64) -> Result<f64> {
        let i = self.check_n(n)?;
        match j {
            0 => Ok(if n == 1 { 1.0 } else { 0.0 }),
            1 => Ok(self.lambda[i]),
            _ if j <= self.j_max => Ok(self.lambda_hi[(j - 2) as usize][i]),
            _ => Err(Error::domain(format!(
                "convolution order {j} exceeds table order {}",
                self.j_max
            ))),
        }
    }

    /// α_k(n): -Λ for k = 0, Λ(n) log n for k = 1, stored rows above.
    pub fn alpha(&self, k: u32, n: u64) -> Result<f64> {
        let i = self.check_n(n)?;
        match k {
            0 => Ok(-self.lambda[i]),
            1 => Ok(self.lambda[i] * (n as f64).ln()),
            _ if k <= self.j_max => Ok(self.alpha_hi[(k - 2) as usize][i]),
            _ => Err(Error::domain(format!(
                "coefficient order {k} exceeds table order {}",
                self.j_max
            ))),
        }
    }

    /// Borrow the Λ_j row for j >= 1 (j = 1 is the Λ row itself).
    pub(crate) fn lambda_row(&self, j: u32) -> &[f64] {
        match j {
            1 => &self.lambda,
            _ => &self.lambda_hi[(j - 2) as usize],
        }
    }

    /// Truncated Dirichlet coefficient a_K(n, s) = Σ_{k=0}^{K} α_k(n) / L(s)^k
    /// given the value `l_value = L(s)`.
    pub fn a_coefficient(&self, big_k: u32, n: u64, l_value: Complex64) -> Result<Complex64> {
        if big_k > self.j_max {
            return Err(Error::domain(format!(
                "truncation order {big_k} exceeds table order {}",
                self.j_max
            )));
        }
        if l_value.norm() == 0.0 {
            return Err(Error::domain(
                "coefficient denominator L(s) vanishes at this point",
            ));
        }
        self.check_n(n)?;
        let z = Complex64::new(1.0, 0.0) / l_value;
        // Horner evaluation in z = 1/L keeps the growth of the α_k in check.
        let mut acc = Complex64::new(self.alpha(big_k, n)?, 0.0);
        for k in (0..big_k).rev() {
            acc = acc * z + self.alpha(k, n)?;
        }
        Ok(acc)
    }

    /// Rebuild the prime lists from a freshly run sieve; used when the dense
    /// rows came from a cache file that stores only floats.
    pub(crate) fn from_rows(
        n_max: u64,
        j_max: u32,
        lambda: Vec<f64>,
        lambda_hi: Vec<Vec<f64>>,
        alpha_hi: Vec<Vec<f64>>,
    ) -> ArithTable {
        let sv = sieve(n_max);
        ArithTable {
            n_max,
            j_max,
            lambda,
            lambda_hi,
            alpha_hi,
            primes: sv.primes,
            prime_logs: sv.prime_logs,
            prime_powers: sv.prime_powers,
        }
    }

    pub(crate) fn rows(&self) -> (&[f64], &[Vec<f64>], &[Vec<f64>]) {
        (&self.lambda, &self.lambda_hi, &self.alpha_hi)
    }
}

/// Closed form Λ_j(p^a) = C(a-1, j-1) (log p)^j for a prime p. Zero when
/// j = 0 or a < j (the convolution needs at least j factors).
pub fn lambda_j_prime_power(j: u32, p: u64, a: u32) -> f64 {
    if j == 0 || a == 0 || a < j {
        return 0.0;
    }
    let c = binomial((a - 1) as u64, (j - 1) as u64) as f64;
    c * (p as f64).ln().powi(j as i32)
}
