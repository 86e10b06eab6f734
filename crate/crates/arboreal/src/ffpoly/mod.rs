//! Dense polynomials over prime fields.
//!
//! Irreducibility is decided with Rabin's test and decomposition types come
//! from distinct-degree factorization alone; equal-degree splitting is never
//! needed because only the factor degrees matter.

mod factor;
mod modulus;
mod poly;

pub use factor::ModRing;
pub use modulus::{is_prime, PrimeModulus};
pub use poly::FpPoly;
