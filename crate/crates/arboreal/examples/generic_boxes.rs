//! How often a random composition of quadratics with coefficients in
//! [-N, N] has the largest possible Galois group, sampled and exhaustive.

use arboreal::generic::{exceptional_growth_curve, sample_generic_density_seeded, ClassifierMode};
use arboreal::wreath::SphericalIndex;

fn main() -> arboreal::Result<()> {
    let index = SphericalIndex::new(vec![2, 2])?;
    for n in [5, 25, 100, 1_000] {
        let r = sample_generic_density_seeded(&index, n, 20_000, ClassifierMode::Exact, 1, 0)?;
        println!("N = {n:>5}  sampled fraction {:.4} +/- {:.4}", r.fraction, r.stderr);
    }

    let curve = exceptional_growth_curve(&index, &[5, 10, 15, 20], 0)?;
    println!("\nexhaustive count of non-generic tuples:");
    for p in &curve.points {
        println!("N = {:>3}  {:>7} of {:>7}  fraction generic {:.4}", p.bound, p.exceptional, p.denominator, p.fraction);
    }
    if let Some(slope) = curve.slope {
        println!("log-log slope {slope:.2} (compare D - 1/2 = {})", curve.cohen_exponent);
    }
    Ok(())
}
