use std::io::Write;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::One;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::galois::QuarticGaloisLabel;
use super::prefilter::classify_composition;
use crate::density::{
    exact_wreath_type_distribution, frobenius_histogram, sieve_primes, surjectivity_score,
    wreath_type_distribution_seeded, PrimeRange, TypeDistribution,
};
use crate::error::{Error, Result};
use crate::par;
use crate::polyseq::{IntPoly, IntPolySeqSpec};
use crate::wreath::{group_order_u64, SphericalIndex};

/// Samples per random stream.
const BOX_CHUNK: u64 = 1 << 12;

/// Largest box half-width accepted by the exact samplers.
pub const MAX_EXACT_BOUND: u64 = 1_000_000_000;

/// Largest box half-width accepted by the exhaustive count.
pub const MAX_EXHAUSTIVE_BOUND: u64 = 10_000;

/// Wreath references up to this order are enumerated, larger ones sampled.
const EXACT_REFERENCE_ORDER: u64 = 50_000;
const REFERENCE_SAMPLES: u64 = 200_000;

/// How a sampled sequence is judged to have the maximal Galois image.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum ClassifierMode {
    /// Exact classification; indices `(2)` and `(2,2)` only.
    Exact,
    /// Level `i` passes when its Frobenius histogram over the odd primes up
    /// to `prime_bound` is within `tolerance` total variation of `W_i`.
    Heuristic { prime_bound: u64, tolerance: f64 },
}

impl ClassifierMode {
    pub const DEFAULT_PRIME_BOUND: u64 = 3_000;
    pub const DEFAULT_TOLERANCE: f64 = 0.15;

    pub fn heuristic() -> Self {
        ClassifierMode::Heuristic { prime_bound: Self::DEFAULT_PRIME_BOUND, tolerance: Self::DEFAULT_TOLERANCE }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ClassifierMode::Exact => "exact",
            ClassifierMode::Heuristic { .. } => "heuristic",
        }
    }
}

/// Outcome of sampling sequences from the coefficient box `{-N, .., N}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoxSampleReport {
    pub index: SphericalIndex,
    /// Box half-width `N`.
    pub bound: u64,
    pub mode: ClassifierMode,
    pub samples: u64,
    /// `level_successes[i - 1]` counts samples with `Gal(f^(i)) = W_i`.
    pub level_successes: Vec<u64>,
    /// Samples maximal at every level.
    pub successes: u64,
    pub fraction: f64,
    pub stderr: f64,
}

#[derive(Serialize)]
struct ReportRow<'a> {
    index: String,
    #[serde(rename = "N")]
    bound: u64,
    mode: &'a str,
    samples: u64,
    successes: u64,
    fraction: f64,
    stderr: f64,
}

impl BoxSampleReport {
    fn new(index: SphericalIndex, bound: u64, mode: ClassifierMode, samples: u64, level_successes: Vec<u64>, successes: u64) -> Self {
        let fraction = if samples == 0 { 0.0 } else { successes as f64 / samples as f64 };
        let stderr = if samples == 0 { 0.0 } else { (fraction * (1.0 - fraction) / samples as f64).sqrt() };
        BoxSampleReport { index, bound, mode, samples, level_successes, successes, fraction, stderr }
    }
}

/// One CSV row per report: `index,N,mode,samples,successes,fraction,stderr`.
pub fn write_reports_csv<W: Write>(reports: &[BoxSampleReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in reports {
        w.serialize(ReportRow {
            index: r.index.to_string(),
            bound: r.bound,
            mode: r.mode.name(),
            samples: r.samples,
            successes: r.successes,
            fraction: r.fraction,
            stderr: r.stderr,
        })
        .map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

fn exact_shape(index: &SphericalIndex) -> Result<usize> {
    match index.degrees() {
        [2] => Ok(1),
        [2, 2] => Ok(2),
        other => Err(Error::UnsupportedIndexExactMode(other.to_vec())),
    }
}

fn is_square_i64(n: i64) -> bool {
    n >= 0 && {
        let r = n.sqrt();
        r * r == n
    }
}

/// Per-level maximality of `x^2 + c1 x + c0` and, if given, its composition
/// with `x^2 + b1 x + b0`.
fn exact_levels(c0: i64, c1: i64, inner: Option<(i64, i64)>) -> [bool; 2] {
    let first = !is_square_i64(c1 * c1 - 4 * c0);
    let second = match inner {
        Some((b0, b1)) if first => classify_composition(c0, c1, b0, b1) == QuarticGaloisLabel::D4,
        _ => false,
    };
    [first, second]
}

struct Tally {
    levels: Vec<u64>,
    all: u64,
}

impl Tally {
    fn new(n: usize) -> Self {
        Tally { levels: vec![0; n], all: 0 }
    }

    fn record(&mut self, passed: &[bool]) {
        for (c, &ok) in self.levels.iter_mut().zip(passed) {
            *c += ok as u64;
        }
        self.all += passed.iter().all(|&ok| ok) as u64;
    }

    fn merge(&mut self, other: Tally) {
        for (a, b) in self.levels.iter_mut().zip(other.levels) {
            *a += b;
        }
        self.all += other.all;
    }
}

fn draw_members<R: Rng + ?Sized>(index: &SphericalIndex, bound: i64, rng: &mut R) -> Vec<IntPoly> {
    index
        .degrees()
        .iter()
        .map(|&d| {
            let mut c: Vec<BigInt> = (0..d).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
            c.push(BigInt::one());
            IntPoly::new(c)
        })
        .collect()
}

struct Heuristic {
    range: PrimeRange,
    tolerance: f64,
    references: Vec<TypeDistribution>,
}

impl Heuristic {
    fn new(index: &SphericalIndex, prime_bound: u64, tolerance: f64, seed: u64, threads: usize) -> Result<Self> {
        if !(0.0..=1.0).contains(&tolerance) {
            return Err(Error::InvalidArgument(format!("tolerance {tolerance} outside [0, 1]")));
        }
        let references = (1..=index.depth())
            .map(|i| {
                let sub = index.prefix(i);
                match group_order_u64(&sub) {
                    Some(order) if order <= EXACT_REFERENCE_ORDER => exact_wreath_type_distribution(&sub, order),
                    _ => Ok(wreath_type_distribution_seeded(&sub, REFERENCE_SAMPLES, seed ^ (i as u64) << 56, threads)),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Heuristic { range: sieve_primes(prime_bound)?, tolerance, references })
    }

    fn levels(&self, members: &[IntPoly]) -> Result<Vec<bool>> {
        let spec = IntPolySeqSpec::explicit(members.to_vec())?;
        (1..=members.len())
            .map(|i| {
                let hist = frobenius_histogram(&spec, i, &self.range, 1)?;
                Ok(surjectivity_score(&hist, &self.references[i - 1])?.tv_distance <= self.tolerance)
            })
            .collect()
    }
}

fn check_bound(bound: u64) -> Result<i64> {
    if bound > MAX_EXACT_BOUND {
        return Err(Error::InvalidArgument(format!("box bound {bound} exceeds {MAX_EXACT_BOUND}")));
    }
    Ok(bound as i64)
}

fn sample_chunk<R: Rng + ?Sized>(
    index: &SphericalIndex,
    bound: i64,
    samples: u64,
    heuristic: Option<&Heuristic>,
    rng: &mut R,
) -> Result<Tally> {
    let mut tally = Tally::new(index.depth());
    for _ in 0..samples {
        match heuristic {
            None => {
                let mut draw = || rng.gen_range(-bound..=bound);
                let (c0, c1) = (draw(), draw());
                let levels = if index.depth() == 1 {
                    exact_levels(c0, c1, None)
                } else {
                    let (b0, b1) = (draw(), draw());
                    exact_levels(c0, c1, Some((b0, b1)))
                };
                tally.record(&levels[..index.depth()]);
            }
            Some(h) => {
                let members = draw_members(index, bound, rng);
                tally.record(&h.levels(&members)?);
            }
        }
    }
    Ok(tally)
}

/// Draws `samples` sequences `f_1, .., f_n` with every non-leading
/// coefficient uniform in `{-N, .., N}` and reports how many have the full
/// wreath product as Galois group at every level.
pub fn sample_generic_density<R: Rng + ?Sized>(
    index: &SphericalIndex,
    bound: u64,
    samples: u64,
    mode: ClassifierMode,
    rng: &mut R,
) -> Result<BoxSampleReport> {
    let b = check_bound(bound)?;
    let heuristic = prepare(index, mode, rng.gen(), 1)?;
    let t = sample_chunk(index, b, samples, heuristic.as_ref(), rng)?;
    Ok(BoxSampleReport::new(index.clone(), bound, mode, samples, t.levels, t.all))
}

fn prepare(index: &SphericalIndex, mode: ClassifierMode, seed: u64, threads: usize) -> Result<Option<Heuristic>> {
    if index.depth() == 0 {
        return Err(Error::InvalidIndex("box sampling needs a nonempty index".into()));
    }
    match mode {
        ClassifierMode::Exact => {
            exact_shape(index)?;
            Ok(None)
        }
        ClassifierMode::Heuristic { prime_bound, tolerance } => {
            Heuristic::new(index, prime_bound, tolerance, seed, threads).map(Some)
        }
    }
}

/// Seeded multi-threaded [`sample_generic_density`]; independent of `threads`.
pub fn sample_generic_density_seeded(
    index: &SphericalIndex,
    bound: u64,
    samples: u64,
    mode: ClassifierMode,
    seed: u64,
    threads: usize,
) -> Result<BoxSampleReport> {
    let b = check_bound(bound)?;
    let heuristic = prepare(index, mode, seed, threads)?;
    let jobs = samples.div_ceil(BOX_CHUNK) as usize;
    let parts = par::map_ordered(jobs, threads, |j| {
        let n = BOX_CHUNK.min(samples - j as u64 * BOX_CHUNK);
        sample_chunk(index, b, n, heuristic.as_ref(), &mut par::stream_rng(seed, j as u64))
    });
    let mut tally = Tally::new(index.depth());
    for p in parts {
        tally.merge(p?);
    }
    Ok(BoxSampleReport::new(index.clone(), bound, mode, samples, tally.levels, tally.all))
}

/// Exhaustive count of non-maximal tuples in one box.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GrowthPoint {
    #[serde(rename = "N")]
    pub bound: u64,
    pub exceptional: u64,
    /// `(2N+1)^D`, the number of coefficient tuples.
    pub denominator: u64,
    pub exceptional_fraction: f64,
    /// `1 - exceptional_fraction`.
    pub fraction: f64,
    /// Binomial standard error of `fraction` at this box size.
    pub stderr: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthCurve {
    pub index: SphericalIndex,
    pub points: Vec<GrowthPoint>,
    /// Least-squares slope of `ln(exceptional)` against `ln(N)`.
    pub slope: Option<f64>,
    /// `D - 1/2` for `D` coefficients, the exponent in Cohen's bound.
    pub cohen_exponent: f64,
}

impl GrowthCurve {
    /// One row per box size: `N,exceptional,denominator,exceptional_fraction,fraction,stderr`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for p in &self.points {
            w.serialize(p).map_err(|e| Error::Io(e.to_string()))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn point(&self, bound: u64) -> Option<&GrowthPoint> {
        self.points.iter().find(|p| p.bound == bound)
    }
}

/// Number of tuples in `{-k, .., k}^2` with max-norm exactly `k`.
fn shell2(k: u64) -> u64 {
    if k == 0 { 1 } else { 8 * k }
}

/// `by_norm[k]` counts the exceptional tuples of max-norm exactly `k`.
fn exceptional_by_norm(levels: usize, n: u64, threads: usize) -> Vec<u64> {
    let ni = n as i64;
    let rows = par::map_ordered(2 * n as usize + 1, threads, |j| {
        let c1 = j as i64 - ni;
        let mut by_norm = vec![0u64; n as usize + 1];
        for c0 in -ni..=ni {
            let outer = c0.unsigned_abs().max(c1.unsigned_abs());
            let reducible = is_square_i64(c1 * c1 - 4 * c0);
            if levels == 1 {
                by_norm[outer as usize] += reducible as u64;
                continue;
            }
            if reducible {
                for k in 0..=n {
                    by_norm[outer.max(k) as usize] += shell2(k);
                }
                continue;
            }
            for b0 in -ni..=ni {
                for b1 in -ni..=ni {
                    if classify_composition(c0, c1, b0, b1) != QuarticGaloisLabel::D4 {
                        let norm = outer.max(b0.unsigned_abs()).max(b1.unsigned_abs());
                        by_norm[norm as usize] += 1;
                    }
                }
            }
        }
        by_norm
    });
    let mut total = vec![0u64; n as usize + 1];
    for r in rows {
        for (t, c) in total.iter_mut().zip(r) {
            *t += c;
        }
    }
    total
}

/// Exhaustively counts, for every `N` in `bounds`, the coefficient tuples in
/// `{-N, .., N}^D` whose composition does not have the full wreath product as
/// Galois group. One pass over the largest box serves every `N`.
pub fn exceptional_growth_curve(index: &SphericalIndex, bounds: &[u64], threads: usize) -> Result<GrowthCurve> {
    let levels = exact_shape(index)?;
    let max = bounds.iter().copied().max().ok_or_else(|| Error::InvalidArgument("no box sizes given".into()))?;
    if max > MAX_EXHAUSTIVE_BOUND {
        return Err(Error::InvalidArgument(format!("box bound {max} exceeds {MAX_EXHAUSTIVE_BOUND}")));
    }
    let dim = 2 * levels as u32;
    let by_norm = exceptional_by_norm(levels, max, threads);
    let points: Vec<GrowthPoint> = bounds
        .iter()
        .map(|&n| {
            let exceptional: u64 = by_norm[..=n as usize].iter().sum();
            let denominator = (2 * n + 1).pow(dim);
            let exceptional_fraction = exceptional as f64 / denominator as f64;
            let fraction = 1.0 - exceptional_fraction;
            GrowthPoint {
                bound: n,
                exceptional,
                denominator,
                exceptional_fraction,
                fraction,
                stderr: (fraction * exceptional_fraction / denominator as f64).sqrt(),
            }
        })
        .collect();
    let fit: Vec<(f64, f64)> = points
        .iter()
        .filter(|p| p.bound > 0 && p.exceptional > 0)
        .map(|p| ((p.bound as f64).ln(), (p.exceptional as f64).ln()))
        .collect();
    Ok(GrowthCurve { index: index.clone(), points, slope: least_squares_slope(&fit), cohen_exponent: dim as f64 - 0.5 })
}

fn least_squares_slope(pts: &[(f64, f64)]) -> Option<f64> {
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (pts.len() >= 2 && sxx > 0.0).then(|| sxy / sxx)
}
