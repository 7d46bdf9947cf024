//! Sieve-backed arithmetic tables: the von Mangoldt function, its
//! convolution powers, the derived Dirichlet coefficients, and the
//! correlation sums built from them.

pub mod cache;
pub mod psi;
pub mod sieve;
pub mod sums;
pub mod table;

pub use psi::{psi, psi_variance, PsiVarianceReport};
pub use sieve::{sieve, PrimePower, SieveData};
pub use sums::{
    a_kl_sum, a_total, prime_log_sum, s_sum, s_unfold_check, theory_a_total, theory_s_kk,
    PrimeLogSum,
};
pub use table::{lambda_j_prime_power, table_bytes, ArithTable};
