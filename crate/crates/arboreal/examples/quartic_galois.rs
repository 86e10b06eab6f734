//! Galois groups of monic integer quartics from the resolvent cubic.

use arboreal::generic::{galois_quartic, quartic_discriminant, quartic_resolvent};
use arboreal::polyseq::IntPoly;

fn main() -> arboreal::Result<()> {
    for s in ["x^4-4x^2+2", "x^4-2", "x^4+1", "x^4+8x+12", "x^4+x+1", "x^4-5x^2+6"] {
        let f: IntPoly = s.parse()?;
        println!(
            "{s:<14} disc {:>10}  resolvent {:<28} group {:?}",
            quartic_discriminant(&f)?,
            quartic_resolvent(&f)?.to_string(),
            galois_quartic(&f)?
        );
    }
    Ok(())
}
