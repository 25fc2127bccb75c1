//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) the helpers run on rayon; without
//! it they compile to plain loops. [`run_sequential`] forces the sequential
//! path inside a closure even when the feature is on, so benchmarks can
//! compare both code paths in one binary.
//!
//! Floating-point reductions use fixed chunking with an ordered final pass,
//! so results are bit-identical regardless of thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
use std::cell::Cell;

#[cfg(feature = "parallel")]
thread_local! {
    static FORCE_SEQUENTIAL: Cell<bool> = const { Cell::new(false) };
}

/// Runs `f` with parallel execution disabled on this thread.
pub fn run_sequential<R>(f: impl FnOnce() -> R) -> R {
    #[cfg(feature = "parallel")]
    {
        let prev = FORCE_SEQUENTIAL.with(|c| c.replace(true));
        let out = f();
        FORCE_SEQUENTIAL.with(|c| c.set(prev));
        out
    }
    #[cfg(not(feature = "parallel"))]
    f()
}

#[cfg(feature = "parallel")]
fn sequential_forced() -> bool {
    FORCE_SEQUENTIAL.with(|c| c.get())
}

/// `(start..end).map(f).collect()`, parallel when enabled.
pub fn map_range<T, F>(start: usize, end: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if !sequential_forced() {
        return (start..end).into_par_iter().map(f).collect();
    }
    (start..end).map(f).collect()
}

const CHUNK: usize = 4096;

/// Deterministic f64 sum of `f(start..end)`: fixed-size chunks are summed
/// independently (possibly in parallel) and combined in order.
pub fn sum_range<F>(start: usize, end: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Send + Sync,
{
    if end <= start {
        return 0.0;
    }
    let chunk_sums = |lo: usize, hi: usize| (lo..hi).map(&f).sum::<f64>();
    let bounds: Vec<(usize, usize)> = (start..end)
        .step_by(CHUNK)
        .map(|lo| (lo, (lo + CHUNK).min(end)))
        .collect();

    #[cfg(feature = "parallel")]
    if !sequential_forced() {
        let partials: Vec<f64> = bounds
            .par_iter()
            .map(|&(lo, hi)| chunk_sums(lo, hi))
            .collect();
        return partials.iter().sum();
    }
    bounds.iter().map(|&(lo, hi)| chunk_sums(lo, hi)).sum()
}
