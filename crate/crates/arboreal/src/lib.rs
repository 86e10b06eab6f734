//! Wreath-product cycle combinatorics and Frobenius density experiments for
//! iterated compositions of monic integer polynomials.
//!
//! * [`wreath`]: the tree automorphism group `S_{d_1} ≀ .. ≀ S_{d_n}`, its
//!   action on leaves, full-cycle counting, enumeration and sampling.
//! * [`ffpoly`]: dense polynomials over `F_p`, Rabin irreducibility and
//!   distinct-degree factorization types.
//! * [`polyseq`]: integer polynomial sequences and their compositions, exact
//!   and modulo `p`.
//! * [`density`]: stable-prime scans, Frobenius type histograms and their
//!   comparison with wreath-product predictions.
//! * [`generic`]: exact Galois groups of quadratics and quartics over `Q` and
//!   the coefficient-box genericity experiment.
//! * [`cli`]: the `arboreal` command-line front end.
//!
//! See the `examples/` directory of the crate for one runnable program per
//! capability.

pub mod cli;
pub mod density;
pub mod error;
pub mod ffpoly;
pub mod generic;
mod par;
pub mod partition;
pub mod polyseq;
pub mod wreath;

pub use error::{Error, Result};
pub use partition::{CycleType, FactorizationType, Partition};
