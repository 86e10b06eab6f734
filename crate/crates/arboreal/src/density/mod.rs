//! Prime scans over iterated compositions: stable primes per level,
//! decomposition-type histograms, and their comparison with the cycle-type
//! statistics of the wreath product.
//!
//! Densities are natural densities over the odd primes up to `X`. Primes at
//! which `f^(n)` is not squarefree mod `p` are left out of numerators and
//! denominators alike.

mod hist;
mod primes;
mod scan;

pub use hist::{
    exact_wreath_type_distribution, frobenius_histogram, surjectivity_score, wreath_type_distribution,
    wreath_type_distribution_seeded, FrobHistogram, SurjectivityScore, TypeDistribution,
};
pub use primes::{sieve_primes, PrimeRange};
pub use scan::{level_profile, stable_scan, LevelStat, PrimeOutcome, ScanReport};
