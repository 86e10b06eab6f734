//! The automorphism group `W_n = S_{d_1} ≀ .. ≀ S_{d_n}` of a truncated
//! spherically homogeneous rooted tree.
//!
//! Elements carry one permutation label per internal vertex and act on leaf
//! addresses level by level from the root. The module counts full cycles both
//! in closed form and by enumeration, and tests the full-cycle property in two
//! independent ways (orbit walk and label-product recursion).

mod count;
mod element;
mod enumerate;
mod index;
mod perm;
mod sample;

pub use count::{full_cycle_count, group_order, group_order_u64};
pub use element::WreathElement;
pub use enumerate::{enumerate, Elements};
pub use index::{LeafAddress, SphericalIndex};
pub use perm::Permutation;
pub use sample::{
    estimate_full_cycle_ratio, estimate_full_cycle_ratio_seeded, sample_uniform, RatioEstimate, SAMPLE_CHUNK,
};
