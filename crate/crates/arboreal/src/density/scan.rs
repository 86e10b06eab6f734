use std::io::Write;

use serde::{Deserialize, Serialize};

use super::primes::PrimeRange;
use crate::error::{Error, Result};
use crate::ffpoly::PrimeModulus;
use crate::par;
use crate::polyseq::{IntPoly, IntPolySeqSpec, PrefixesModP};

/// What a scan learned about one prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeOutcome {
    pub p: u64,
    /// Largest `n <= n_max` with `f^(n)` irreducible mod `p` (0 if `f_1` is
    /// already reducible).
    pub max_level: usize,
    /// `f^(n_max) mod p` is not squarefree; the prime is left out of every
    /// density numerator and denominator.
    pub skipped: bool,
}

/// Stable-prime counts per level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelStat {
    pub n: usize,
    /// Good primes with `f^(n)` irreducible.
    pub count: u64,
    pub density: f64,
    /// `1 / d^(n)`, the full-cycle proportion of the whole wreath product.
    pub predicted: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub spec: String,
    pub n_max: usize,
    pub bound: u64,
    pub scanned: u64,
    pub skipped: u64,
    pub levels: Vec<LevelStat>,
    pub outcomes: Vec<PrimeOutcome>,
}

#[derive(Serialize)]
struct LevelRow {
    n: usize,
    #[serde(rename = "X")]
    x: u64,
    count: u64,
    density: f64,
    predicted: f64,
}

impl ScanReport {
    /// Primes entering the denominators.
    pub fn good(&self) -> u64 {
        self.scanned - self.skipped
    }

    pub fn level(&self, n: usize) -> &LevelStat {
        &self.levels[n - 1]
    }

    /// Good primes `p` with `f^(n)` irreducible mod `p`.
    pub fn stable_set(&self, n: usize) -> Vec<u64> {
        self.outcomes.iter().filter(|o| !o.skipped && o.max_level >= n).map(|o| o.p).collect()
    }

    pub fn skipped_primes(&self) -> Vec<u64> {
        self.outcomes.iter().filter(|o| o.skipped).map(|o| o.p).collect()
    }

    /// One row per level: `n,X,count,density,predicted`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for l in &self.levels {
            w.serialize(LevelRow { n: l.n, x: self.bound, count: l.count, density: l.density, predicted: l.predicted })
                .map_err(|e| Error::Io(e.to_string()))?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Irreducibility of `f^(1), .., f^(n)` mod `p`, every level tested.
pub fn level_profile(members: &[IntPoly], p: PrimeModulus) -> Result<Vec<bool>> {
    PrefixesModP::new(members, p).map(|f| f.is_irreducible()).collect()
}

fn scan_prime(members: &[IntPoly], p: PrimeModulus) -> Result<PrimeOutcome> {
    let mut max_level = 0;
    let mut climbing = true;
    let mut last = None;
    for (i, f) in PrefixesModP::new(members, p).enumerate() {
        // irreducibility at level n forces it at every lower level
        if climbing {
            if f.is_irreducible()? {
                max_level = i + 1;
            } else {
                climbing = false;
            }
        }
        last = Some(f);
    }
    let skipped = !last.expect("n_max >= 1").is_squarefree();
    Ok(PrimeOutcome { p: p.get(), max_level: if skipped { 0 } else { max_level }, skipped })
}

/// For every odd prime `p <= X`, the deepest level at which the composition
/// stays irreducible mod `p`, and the resulting per-level densities.
pub fn stable_scan(spec: &IntPolySeqSpec, n_max: usize, range: &PrimeRange, threads: usize) -> Result<ScanReport> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    let members = spec.first(n_max)?;
    let index = spec.spherical_index(n_max)?;
    let moduli: Vec<PrimeModulus> = range.moduli().collect();
    let outcomes = par::map_slice(&moduli, threads, |&p| scan_prime(&members, p))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;

    let scanned = outcomes.len() as u64;
    let skipped = outcomes.iter().filter(|o| o.skipped).count() as u64;
    let good = scanned - skipped;
    let levels = (1..=n_max)
        .map(|n| {
            let count = outcomes.iter().filter(|o| !o.skipped && o.max_level >= n).count() as u64;
            LevelStat {
                n,
                count,
                density: if good == 0 { 0.0 } else { count as f64 / good as f64 },
                predicted: 1.0 / index.partial_product(n) as f64,
            }
        })
        .collect();
    Ok(ScanReport { spec: spec.to_string(), n_max, bound: range.bound(), scanned, skipped, levels, outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::sieve_primes;

    #[test]
    fn x2_minus_2_small_scan() {
        let spec: IntPolySeqSpec = "const:x^2-2".parse().unwrap();
        let r = stable_scan(&spec, 4, &sieve_primes(2_000).unwrap(), 1).unwrap();
        assert_eq!(r.skipped, 0);
        let expect: Vec<u64> =
            sieve_primes(2_000).unwrap().primes().iter().copied().filter(|p| p % 8 == 3 || p % 8 == 5).collect();
        assert_eq!(r.stable_set(4), expect);
        for w in r.levels.windows(2) {
            assert!(w[1].count <= w[0].count);
        }
        // level 1 irreducibility is exactly p = 3, 5 mod 8 as well
        assert_eq!(r.stable_set(1), expect);
    }

    #[test]
    fn fm_family_skips_its_base_prime() {
        let spec = IntPolySeqSpec::fm_family(3).unwrap();
        let r = stable_scan(&spec, 3, &sieve_primes(200).unwrap(), 1).unwrap();
        assert_eq!(r.skipped_primes(), vec![3]);
        assert_eq!(r.good(), r.scanned - 1);
    }

    #[test]
    fn csv_layout() {
        let spec: IntPolySeqSpec = "const:x^2-2".parse().unwrap();
        let r = stable_scan(&spec, 2, &sieve_primes(50).unwrap(), 1).unwrap();
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "n,X,count,density,predicted");
        assert!(lines.next().unwrap().starts_with("1,50,"));
    }

    #[test]
    fn rejects_zero_levels() {
        let spec: IntPolySeqSpec = "const:x^2-2".parse().unwrap();
        assert!(stable_scan(&spec, 0, &sieve_primes(50).unwrap(), 1).is_err());
    }
}
