//! Monte Carlo estimate of the full-cycle fraction with uniform sampling.
//!
//! Usage: `cargo run --release --example full_cycle_sampling -- [index] [samples]`

use arboreal::wreath::{estimate_full_cycle_ratio_seeded, SphericalIndex};

fn main() -> arboreal::Result<()> {
    let mut args = std::env::args().skip(1);
    let index: SphericalIndex = args.next().as_deref().unwrap_or("3,3,2").parse()?;
    let samples = args.next().and_then(|s| s.parse().ok()).unwrap_or(1_000_000);
    let est = estimate_full_cycle_ratio_seeded(&index, samples, 1, 0);
    let target = 1.0 / index.leaf_count() as f64;
    println!("index {index}, {samples} samples");
    println!("estimate {:.6} +/- {:.6}", est.ratio, est.stderr);
    println!("1/d      {target:.6}  (z = {:.2})", est.z_score(target));
    Ok(())
}
