use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::primes::PrimeRange;
use crate::error::{Error, Result};
use crate::ffpoly::PrimeModulus;
use crate::par;
use crate::partition::{CycleType, Partition};
use crate::polyseq::{IntPolySeqSpec, PrefixesModP};
use crate::wreath::{enumerate, sample_uniform, SphericalIndex, SAMPLE_CHUNK};

/// Counts of partitions of a fixed degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RawDistribution", try_from = "RawDistribution")]
pub struct TypeDistribution {
    degree: usize,
    counts: BTreeMap<Partition, u64>,
    total: u64,
}

#[derive(Serialize, Deserialize)]
struct RawDistribution {
    degree: usize,
    total: u64,
    types: Vec<TypeCount>,
}

#[derive(Serialize, Deserialize)]
struct TypeCount {
    #[serde(rename = "type")]
    cycle_type: Partition,
    count: u64,
    frequency: f64,
}

impl From<TypeDistribution> for RawDistribution {
    fn from(d: TypeDistribution) -> Self {
        let types = d
            .counts
            .iter()
            .rev()
            .map(|(t, &c)| TypeCount { cycle_type: t.clone(), count: c, frequency: d.freq_of(c) })
            .collect();
        RawDistribution { degree: d.degree, total: d.total, types }
    }
}

impl TryFrom<RawDistribution> for TypeDistribution {
    type Error = Error;
    fn try_from(raw: RawDistribution) -> Result<Self> {
        let mut d = TypeDistribution::new(raw.degree);
        for t in raw.types {
            d.add_count(t.cycle_type, t.count)?;
        }
        if d.total != raw.total {
            return Err(Error::InvalidArgument("type counts do not sum to the total".into()));
        }
        Ok(d)
    }
}

impl TypeDistribution {
    pub fn new(degree: usize) -> Self {
        TypeDistribution { degree, counts: BTreeMap::new(), total: 0 }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn add(&mut self, t: Partition) -> Result<()> {
        self.add_count(t, 1)
    }

    pub fn add_count(&mut self, t: Partition, count: u64) -> Result<()> {
        if t.size() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: t.size() });
        }
        *self.counts.entry(t).or_default() += count;
        self.total += count;
        Ok(())
    }

    pub fn merge(&mut self, other: &TypeDistribution) -> Result<()> {
        for (t, &c) in &other.counts {
            self.add_count(t.clone(), c)?;
        }
        Ok(())
    }

    pub fn count(&self, t: &Partition) -> u64 {
        self.counts.get(t).copied().unwrap_or(0)
    }

    fn freq_of(&self, c: u64) -> f64 {
        if self.total == 0 { 0.0 } else { c as f64 / self.total as f64 }
    }

    pub fn frequency(&self, t: &Partition) -> f64 {
        self.freq_of(self.count(t))
    }

    /// Frequency of the single-part type `(degree)`.
    pub fn full_cycle_frequency(&self) -> f64 {
        self.frequency(&Partition::single(self.degree))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.counts.iter().map(|(t, &c)| (t, c))
    }

    /// Half the L1 distance between the two normalized distributions.
    pub fn tv_distance(&self, other: &TypeDistribution) -> Result<f64> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let keys: std::collections::BTreeSet<&Partition> = self.counts.keys().chain(other.counts.keys()).collect();
        Ok(0.5 * keys.into_iter().map(|t| (self.frequency(t) - other.frequency(t)).abs()).sum::<f64>())
    }
}

/// Decomposition types of `f^(n) mod p` over a prime range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrobHistogram {
    pub spec: String,
    pub n: usize,
    pub bound: u64,
    pub scanned: u64,
    /// Primes where `f^(n) mod p` is not squarefree.
    pub skipped: u64,
    pub distribution: TypeDistribution,
}

impl FrobHistogram {
    pub fn degree(&self) -> usize {
        self.distribution.degree()
    }

    pub fn frequency(&self, t: &Partition) -> f64 {
        self.distribution.frequency(t)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))
    }
}

/// Tallies the decomposition type of `f^(n) mod p` over the good primes of
/// `range`.
pub fn frobenius_histogram(spec: &IntPolySeqSpec, n: usize, range: &PrimeRange, threads: usize) -> Result<FrobHistogram> {
    if n == 0 {
        return Err(Error::InvalidArgument("level must be at least 1".into()));
    }
    let members = spec.first(n)?;
    let degree = spec.spherical_index(n)?.leaf_count();
    let moduli: Vec<PrimeModulus> = range.moduli().collect();
    let types = par::map_slice(&moduli, threads, |&p| -> Result<Option<CycleType>> {
        let f = PrefixesModP::new(&members, p).last().expect("n >= 1");
        if !f.is_squarefree() {
            return Ok(None);
        }
        f.ddf_type().map(Some)
    });
    let mut distribution = TypeDistribution::new(degree);
    let mut skipped = 0;
    for t in types {
        match t? {
            Some(t) => distribution.add(t)?,
            None => skipped += 1,
        }
    }
    Ok(FrobHistogram { spec: spec.to_string(), n, bound: range.bound(), scanned: moduli.len() as u64, skipped, distribution })
}

/// Empirical distribution of leaf cycle types of uniform elements of `W_n`.
pub fn wreath_type_distribution<R: Rng + ?Sized>(index: &SphericalIndex, samples: u64, rng: &mut R) -> TypeDistribution {
    let mut d = TypeDistribution::new(index.leaf_count());
    for _ in 0..samples {
        d.add(sample_uniform(index, rng).leaf_cycle_type()).expect("cycle type sums to the leaf count");
    }
    d
}

/// Seeded multi-threaded [`wreath_type_distribution`]; independent of `threads`.
pub fn wreath_type_distribution_seeded(index: &SphericalIndex, samples: u64, seed: u64, threads: usize) -> TypeDistribution {
    let jobs = samples.div_ceil(SAMPLE_CHUNK) as usize;
    let parts = par::map_ordered(jobs, threads, |j| {
        let n = SAMPLE_CHUNK.min(samples - j as u64 * SAMPLE_CHUNK);
        wreath_type_distribution(index, n, &mut par::stream_rng(seed, j as u64))
    });
    let mut d = TypeDistribution::new(index.leaf_count());
    for p in &parts {
        d.merge(p).expect("same degree");
    }
    d
}

/// Exact cycle-type distribution of `W_n`, by enumeration.
pub fn exact_wreath_type_distribution(index: &SphericalIndex, limit: u64) -> Result<TypeDistribution> {
    let mut d = TypeDistribution::new(index.leaf_count());
    for a in enumerate(index, limit)? {
        d.add(a.leaf_cycle_type())?;
    }
    Ok(d)
}

/// How closely Frobenius statistics follow the wreath-product prediction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurjectivityScore {
    pub tv_distance: f64,
    pub full_cycle_frequency: f64,
    /// `1 / d^(n)`.
    pub predicted_full_cycle: f64,
    /// `|observed - predicted|` in binomial standard errors of the histogram.
    pub full_cycle_z: f64,
}

/// Compares a histogram with a reference (typically wreath) distribution.
/// Evidence only: a small distance is what a surjective image would produce.
pub fn surjectivity_score(hist: &FrobHistogram, reference: &TypeDistribution) -> Result<SurjectivityScore> {
    let tv_distance = hist.distribution.tv_distance(reference)?;
    let degree = hist.degree();
    let predicted = 1.0 / degree as f64;
    let observed = hist.distribution.full_cycle_frequency();
    let n = hist.distribution.total().max(1) as f64;
    let sigma = (predicted * (1.0 - predicted) / n).sqrt();
    let diff = (observed - predicted).abs();
    let full_cycle_z = match (sigma == 0.0, diff == 0.0) {
        (_, true) => 0.0,
        (true, false) => f64::INFINITY,
        (false, false) => diff / sigma,
    };
    Ok(SurjectivityScore { tv_distance, full_cycle_frequency: observed, predicted_full_cycle: predicted, full_cycle_z })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::sieve_primes;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn tv_distance_basics() {
        let mut a = TypeDistribution::new(2);
        a.add_count(part(&[2]), 3).unwrap();
        a.add_count(part(&[1, 1]), 1).unwrap();
        assert_eq!(a.tv_distance(&a).unwrap(), 0.0);
        let mut b = TypeDistribution::new(2);
        b.add_count(part(&[2]), 1).unwrap();
        assert!((a.tv_distance(&b).unwrap() - 0.25).abs() < 1e-12);
        assert!(a.add(part(&[3])).is_err());
        assert!(a.tv_distance(&TypeDistribution::new(4)).is_err());
    }

    #[test]
    fn exact_d4_distribution() {
        let d = exact_wreath_type_distribution(&SphericalIndex::new(vec![2, 2]).unwrap(), 100).unwrap();
        assert_eq!(d.count(&part(&[1, 1, 1, 1])), 1);
        assert_eq!(d.count(&part(&[2, 1, 1])), 2);
        assert_eq!(d.count(&part(&[2, 2])), 3);
        assert_eq!(d.count(&part(&[4])), 2);
    }

    #[test]
    fn s2_sampled_distribution() {
        let idx = SphericalIndex::new(vec![2]).unwrap();
        let d = wreath_type_distribution(&idx, 10_000, &mut ChaCha8Rng::seed_from_u64(1));
        assert!((d.frequency(&part(&[2])) - 0.5).abs() < 0.02);
        assert!((d.frequency(&part(&[1, 1])) - 0.5).abs() < 0.02);
    }

    #[test]
    fn histogram_counts_sum() {
        let spec: IntPolySeqSpec = "fmf:3".parse().unwrap();
        let h = frobenius_histogram(&spec, 2, &sieve_primes(500).unwrap(), 1).unwrap();
        assert_eq!(h.distribution.total(), h.scanned - h.skipped);
        assert_eq!(h.skipped, 1);
        for (t, _) in h.distribution.iter() {
            assert_eq!(t.size(), 4);
        }
        let back: FrobHistogram = serde_json::from_str(&h.to_json().unwrap()).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn score_against_self_is_zero() {
        let spec: IntPolySeqSpec = "const:x^2-2".parse().unwrap();
        let h = frobenius_histogram(&spec, 1, &sieve_primes(1000).unwrap(), 1).unwrap();
        let s = surjectivity_score(&h, &h.distribution).unwrap();
        assert_eq!(s.tv_distance, 0.0);
        assert_eq!(s.predicted_full_cycle, 0.5);
        let wrong = TypeDistribution::new(4);
        assert!(surjectivity_score(&h, &wrong).is_err());
    }
}
