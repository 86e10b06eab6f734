//! Compares factorization-type statistics of a composed polynomial with
//! the cycle types of the full wreath product.

use arboreal::density::{exact_wreath_type_distribution, frobenius_histogram, sieve_primes, surjectivity_score};
use arboreal::polyseq::IntPolySeqSpec;
use arboreal::wreath::SphericalIndex;

fn main() -> arboreal::Result<()> {
    let index = SphericalIndex::new(vec![2, 2])?;
    let reference = exact_wreath_type_distribution(&index, 8)?;
    let range = sieve_primes(30_000)?;
    let specs = ["const:x^2-2".parse()?, "fmf:3".parse()?, IntPolySeqSpec::random_box(index.clone(), 20, 4)?];
    println!("{:<24} {:>8} {:>8} {:>8}", "sequence", "tv", "(4)", "z");
    for spec in specs {
        let hist = frobenius_histogram(&spec, 2, &range, 0)?;
        let score = surjectivity_score(&hist, &reference)?;
        println!(
            "{:<24} {:>8.4} {:>8.4} {:>8.2}",
            spec.to_string(),
            score.tv_distance,
            score.full_cycle_frequency,
            score.full_cycle_z
        );
    }
    println!("\nwreath product (2,2):");
    for (t, c) in reference.iter() {
        println!("  {t:<10} {:.4}", c as f64 / reference.total() as f64);
    }
    Ok(())
}
