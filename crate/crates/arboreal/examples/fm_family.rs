//! Density scan for the family (x - p^k)^2 + p, whose iterates stay
//! irreducible at about a quarter of the primes.

use arboreal::density::{sieve_primes, stable_scan};
use arboreal::polyseq::IntPolySeqSpec;

fn main() -> arboreal::Result<()> {
    let range = sieve_primes(50_000)?;
    for p in [3, 5, 7] {
        let report = stable_scan(&IntPolySeqSpec::fm_family(p)?, 5, &range, 0)?;
        let densities: Vec<String> = report.levels.iter().map(|l| format!("{:.4}", l.density)).collect();
        println!("fmf:{p}  skipped {:?}  densities by level: {}", report.skipped_primes(), densities.join(" "));
    }
    Ok(())
}
