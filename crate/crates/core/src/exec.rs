//! Stratum execution: maps a pure task over stratum indices, in parallel
//! when the `parallel` feature is enabled, sequentially otherwise. Results
//! come back indexed by stratum so callers can aggregate in fixed order;
//! outputs are bit-identical regardless of thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_strata<T, F>(strata: u32, task: F) -> Vec<T>
where
    T: Send,
    F: Fn(u32) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..strata).into_par_iter().map(task).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_strata_sequential(strata, task)
    }
}

/// Always-sequential fallback; the benches compare this against the
/// parallel path on the same workloads.
pub fn map_strata_sequential<T, F>(strata: u32, task: F) -> Vec<T>
where
    F: Fn(u32) -> T,
{
    (0..strata).map(task).collect()
}
