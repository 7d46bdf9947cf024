//! Linear sieve and the prime / prime-power lists derived from it.

/// One prime power `q = p^a` with its prime logarithm.
#[derive(Debug, Clone, Copy)]
pub struct PrimePower {
    pub q: u64,
    pub p: u64,
    pub a: u32,
    /// ln p, shared by every power of p so closed forms and table entries
    /// start from the same value.
    pub log_p: f64,
}

/// Output of [`sieve`]: enough factorization structure for every table build.
pub struct SieveData {
    pub n_max: u64,
    /// Smallest prime factor; `spf[n] == 0` marks 0, 1, and primes.
    pub spf: Vec<u32>,
    pub primes: Vec<u64>,
    /// ln p for `primes`, index-aligned.
    pub prime_logs: Vec<f64>,
    /// All prime powers `<= n_max`, ascending by `q`.
    pub prime_powers: Vec<PrimePower>,
}

/// Linear sieve up to `n_max` (inclusive). Each composite is crossed off
/// exactly once by its smallest prime factor.
pub fn sieve(n_max: u64) -> SieveData {
    let n = n_max as usize;
    let mut spf = vec![0u32; n + 1];
    let mut primes: Vec<u64> = Vec::new();
    for i in 2..=n {
        if spf[i] == 0 {
            primes.push(i as u64);
        }
        let limit = n / i;
        for &p in &primes {
            if p as usize > limit {
                break;
            }
            spf[i * p as usize] = p as u32;
            if i % p as usize == 0 {
                break;
            }
        }
    }

    let prime_logs: Vec<f64> = primes.iter().map(|&p| (p as f64).ln()).collect();

    let mut prime_powers: Vec<PrimePower> = Vec::new();
    for (idx, &p) in primes.iter().enumerate() {
        let lp = prime_logs[idx];
        let mut q = p;
        let mut a = 1u32;
        loop {
            prime_powers.push(PrimePower { q, p, a, log_p: lp });
            if q > n_max / p {
                break;
            }
            q *= p;
            a += 1;
        }
    }
    prime_powers.sort_unstable_by_key(|pp| pp.q);

    SieveData {
        n_max,
        spf,
        primes,
        prime_logs,
        prime_powers,
    }
}

impl SieveData {
    /// The von Mangoldt function as a dense array: `ln p` at prime powers,
    /// zero elsewhere.
    pub fn lambda_array(&self) -> Vec<f64> {
        let mut lambda = vec![0.0f64; self.n_max as usize + 1];
        for pp in &self.prime_powers {
            lambda[pp.q as usize] = pp.log_p;
        }
        lambda
    }
}
