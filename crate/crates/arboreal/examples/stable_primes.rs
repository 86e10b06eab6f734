//! Stable primes of the iterates of x^2 - 2: those where every iterate
//! stays irreducible. They should be exactly the primes 3 and 5 mod 8.

use arboreal::density::{sieve_primes, stable_scan};

fn main() -> arboreal::Result<()> {
    let bound = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20_000);
    let range = sieve_primes(bound)?;
    let report = stable_scan(&"const:x^2-2".parse()?, 8, &range, 0)?;
    for level in &report.levels {
        println!("n = {}  irreducible at {:>5} primes  density {:.4}", level.n, level.count, level.density);
    }
    let stable = report.stable_set(8);
    let wrong = stable.iter().filter(|&&p| p % 8 != 3 && p % 8 != 5).count();
    println!("{} stable primes below {bound}, {wrong} outside 3,5 mod 8", stable.len());
    println!("first few: {:?}", &stable[..stable.len().min(12)]);
    Ok(())
}
