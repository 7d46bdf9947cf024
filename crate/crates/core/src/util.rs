//! Small shared numeric helpers.

use rayon::prelude::*;

/// Sum `f(i)` over `range`, in parallel, with a reduction order that does not
/// depend on the number of worker threads: the range is cut into fixed-size
/// chunks, each chunk is summed sequentially, and the chunk totals are added
/// in chunk order.
pub fn det_par_sum<F>(range: std::ops::Range<usize>, chunk: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    assert!(chunk > 0);
    let start = range.start;
    let len = range.end.saturating_sub(start);
    let n_chunks = len.div_ceil(chunk);
    let partials: Vec<f64> = (0..n_chunks)
        .into_par_iter()
        .map(|c| {
            let lo = start + c * chunk;
            let hi = (lo + chunk).min(start + len);
            let mut acc = 0.0;
            for i in lo..hi {
                acc += f(i);
            }
            acc
        })
        .collect();
    partials.iter().sum()
}

/// Map each index of `range` through `f` in parallel, preserving index order
/// in the returned vector.
pub fn det_par_map<T, F>(range: std::ops::Range<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    range.into_par_iter().map(f).collect()
}

/// Binomial coefficient as an exact integer, panicking on overflow.
/// Arguments stay tiny here (n below ~70), so u128 is plenty.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    for i in 0..k {
        num = num
            .checked_mul((n - i) as u128)
            .expect("binomial overflow");
        num /= (i + 1) as u128;
    }
    num
}

/// n! as f64; exact for n <= 20 and within one ulp far beyond any use here.
pub fn factorial_f64(n: u64) -> f64 {
    let mut acc = 1.0f64;
    for i in 2..=n {
        acc *= i as f64;
    }
    acc
}
