use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::element::WreathElement;
use super::index::SphericalIndex;
use crate::par;

/// Samples are drawn in jobs of this size, one random stream per job.
pub const SAMPLE_CHUNK: u64 = 1 << 14;

/// Draws a uniformly random element of `W_n`.
///
/// As a set `W_n` is the product of one independent `S_d` label per internal
/// vertex, so shuffling every label uniformly gives the uniform distribution.
pub fn sample_uniform<R: Rng + ?Sized>(index: &SphericalIndex, rng: &mut R) -> WreathElement {
    let levels = (0..index.depth())
        .map(|i| {
            let d = index.degrees()[i];
            let mut flat = Vec::with_capacity(index.partial_product(i) * d);
            for _ in 0..index.partial_product(i) {
                let start = flat.len();
                flat.extend(0..d);
                flat[start..].shuffle(rng);
            }
            flat
        })
        .collect();
    WreathElement::from_flat_unchecked(index.clone(), levels)
}

/// Monte Carlo estimate of the full-cycle proportion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioEstimate {
    pub hits: u64,
    pub samples: u64,
    pub ratio: f64,
    pub stderr: f64,
}

impl RatioEstimate {
    pub fn from_counts(hits: u64, samples: u64) -> Self {
        let ratio = hits as f64 / samples as f64;
        let stderr = (ratio * (1.0 - ratio) / samples as f64).sqrt();
        RatioEstimate { hits, samples, ratio, stderr }
    }

    /// `|ratio - target|` measured in standard errors; a zero stderr counts
    /// as exact agreement only when the difference is zero.
    pub fn z_score(&self, target: f64) -> f64 {
        let diff = (self.ratio - target).abs();
        if self.stderr == 0.0 {
            if diff == 0.0 { 0.0 } else { f64::INFINITY }
        } else {
            diff / self.stderr
        }
    }
}

/// Fraction of `samples` uniform elements that are full cycles, with its
/// binomial standard error.
pub fn estimate_full_cycle_ratio<R: Rng + ?Sized>(
    index: &SphericalIndex,
    samples: u64,
    rng: &mut R,
) -> RatioEstimate {
    assert!(samples >= 1, "need at least one sample");
    let hits = (0..samples).filter(|_| sample_uniform(index, rng).is_full_cycle_recursive()).count() as u64;
    RatioEstimate::from_counts(hits, samples)
}

/// Seeded, multi-threaded variant of [`estimate_full_cycle_ratio`]; the result
/// depends only on `seed`, not on `threads`.
pub fn estimate_full_cycle_ratio_seeded(
    index: &SphericalIndex,
    samples: u64,
    seed: u64,
    threads: usize,
) -> RatioEstimate {
    assert!(samples >= 1, "need at least one sample");
    let jobs = samples.div_ceil(SAMPLE_CHUNK) as usize;
    let hits: u64 = par::map_ordered(jobs, threads, |j| {
        let n = SAMPLE_CHUNK.min(samples - j as u64 * SAMPLE_CHUNK);
        let mut rng = par::stream_rng(seed, j as u64);
        estimate_full_cycle_ratio(index, n, &mut rng).hits
    })
    .into_iter()
    .sum();
    RatioEstimate::from_counts(hits, samples)
}
