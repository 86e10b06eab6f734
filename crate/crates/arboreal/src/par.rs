//! Deterministic data-parallel helpers.
//!
//! Work is split into a fixed number of jobs that does not depend on the
//! thread count, and results come back in job order, so any aggregation over
//! them is identical whatever pool size was used.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Runs `job(i)` for `i in 0..jobs` on `threads` workers (0 means rayon's
/// default) and returns the results in order.
pub fn map_ordered<T, F>(jobs: usize, threads: usize, job: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    if threads == 1 {
        return (0..jobs).map(job).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("failed to build thread pool");
    pool.install(|| (0..jobs).into_par_iter().map(&job).collect())
}

/// Like [`map_ordered`] over the items of a slice.
pub fn map_slice<I, T, F>(items: &[I], threads: usize, f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    map_ordered(items.len(), threads, |i| f(&items[i]))
}

/// The random stream used by job `stream` of a run seeded with `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
