//! Irreducibility and factorization types over prime fields.

use arboreal::ffpoly::{FpPoly, PrimeModulus};

fn main() -> arboreal::Result<()> {
    let cases: [(u64, &[i64]); 5] = [
        (7, &[1, 0, 1]),
        (5, &[2, 0, 0, 0, 1]),
        (3, &[1, -1, 0, 1]),
        (101, &[-1, -1, 0, 1]),
        (1_000_000_007, &[3, 0, 0, 0, 0, 1]),
    ];
    for (p, coeffs) in cases {
        let p = PrimeModulus::new(p)?;
        let f = FpPoly::from_i64s(p, coeffs);
        println!("{:<20} mod {:<10}  irreducible: {:<5}  type {}", f.to_string(), p.to_string(), f.is_irreducible()?, f.ddf_type()?);
    }

    // counting monic irreducible quadratics mod small primes
    for p in [3u64, 5, 7, 11, 13] {
        let m = PrimeModulus::new(p)?;
        let mut count = 0;
        for b in 0..p {
            for c in 0..p {
                let f = FpPoly::new(m, vec![c, b, 1]);
                count += f.is_irreducible()? as u64;
            }
        }
        println!("p = {p:>2}: {count:>2} irreducible monic quadratics (p(p-1)/2 = {})", p * (p - 1) / 2);
    }
    Ok(())
}
