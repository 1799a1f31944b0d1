//! Data-parallel helpers with a sequential fallback.
//!
//! Grid scans, Monte Carlo rounds, and parameter sweeps are embarrassingly
//! parallel. With the `parallel` feature (default) these run on rayon;
//! without it they run sequentially with identical results. Reductions over
//! the returned vectors stay sequential so witness tie-breaking and float
//! accumulation order do not depend on thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n`, in parallel when the `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn map_range<U: Send>(n: usize, f: impl Fn(usize) -> U + Sync) -> Vec<U> {
    (0..n).into_par_iter().map(f).collect()
}

/// Maps `f` over `0..n`, in parallel when the `parallel` feature is enabled.
#[cfg(not(feature = "parallel"))]
pub fn map_range<U: Send>(n: usize, f: impl Fn(usize) -> U + Sync) -> Vec<U> {
    (0..n).map(f).collect()
}

/// Always-sequential counterpart of [`map_range`], kept for benchmarks that
/// compare the two execution modes in one binary.
pub fn map_range_seq<U: Send>(n: usize, f: impl Fn(usize) -> U + Sync) -> Vec<U> {
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let f = |i: usize| (i as f64).sqrt();
        assert_eq!(map_range(1000, f), map_range_seq(1000, f));
    }
}
