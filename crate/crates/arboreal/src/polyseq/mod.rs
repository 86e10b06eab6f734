//! Sequences of monic integer polynomials and their iterated compositions
//! `f^(n) = f_1 ∘ .. ∘ f_n`.
//!
//! Scans never build exact `f^(n)` for large `n`: reduction mod `p` commutes
//! with composition of monic integer polynomials, so compositions are formed
//! directly over `F_p`.

mod compose;
mod intpoly;
mod spec;

pub use compose::{compose_prefix_exact, compose_prefix_mod_p, CompositionCache, PrefixesModP};
pub use intpoly::IntPoly;
pub use spec::IntPolySeqSpec;
