//! Galois groups of quadratics and quartics over `Q`, and the experiment
//! measuring how often random compositions from a coefficient box have the
//! whole wreath product as Galois group.
//!
//! For a monic quadratic the group is `S_2` exactly when the discriminant is
//! not a square. For a monic quartic the resolvent cubic decides between
//! `S_4`, `A_4`, `V_4` and the pair `{D_4, C_4}`, which is then split by
//! testing whether the two associated quadratics both split over
//! `Q(sqrt(disc))`. The index `(2,2)` target `S_2 ≀ S_2` is `D_4`.
//!
//! Other indices have no exact classifier here; they are judged by how far
//! Frobenius statistics sit from the wreath-product cycle-type distribution.

mod boxes;
mod galois;
mod prefilter;
mod roots;

pub use boxes::{
    exceptional_growth_curve, sample_generic_density, sample_generic_density_seeded, write_reports_csv,
    BoxSampleReport, ClassifierMode, GrowthCurve, GrowthPoint, MAX_EXACT_BOUND, MAX_EXHAUSTIVE_BOUND,
};
pub use galois::{
    galois_quadratic, galois_quartic, is_irreducible_quartic_q, quartic_discriminant, quartic_resolvent,
    QuadraticGaloisLabel, QuarticGaloisLabel,
};
