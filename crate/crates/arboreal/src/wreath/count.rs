use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::index::SphericalIndex;

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `|W_n| = ∏ (d_i!)^(d^(i-1))`.
pub fn group_order(index: &SphericalIndex) -> BigUint {
    index.degrees().iter().enumerate().fold(BigUint::one(), |acc, (i, &d)| {
        acc * num_traits::pow(factorial(d), index.partial_product(i))
    })
}

/// Number of elements acting as a single `d^(n)`-cycle on leaves:
/// `∏ (d_i - 1)! (d_i!)^(d^(i-1) - 1)`.
pub fn full_cycle_count(index: &SphericalIndex) -> BigUint {
    index.degrees().iter().enumerate().fold(BigUint::one(), |acc, (i, &d)| {
        acc * factorial(d - 1) * num_traits::pow(factorial(d), index.partial_product(i) - 1)
    })
}

/// `|W_n|` as a `u64`, if it fits.
pub fn group_order_u64(index: &SphericalIndex) -> Option<u64> {
    group_order(index).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(d: &[usize]) -> SphericalIndex {
        SphericalIndex::new(d.to_vec()).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(group_order(&idx(&[2, 2])), BigUint::from(8u32));
        assert_eq!(group_order(&idx(&[2, 3])), BigUint::from(72u32));
        assert_eq!(group_order(&idx(&[5])), BigUint::from(120u32));
        assert_eq!(full_cycle_count(&idx(&[5])), BigUint::from(24u32));
        assert_eq!(full_cycle_count(&idx(&[2, 3])), BigUint::from(12u32));
        assert_eq!(full_cycle_count(&idx(&[2, 2, 2])), BigUint::from(16u32));
    }

    #[test]
    fn trivial_and_degenerate_levels() {
        assert_eq!(group_order(&idx(&[])), BigUint::one());
        assert_eq!(full_cycle_count(&idx(&[])), BigUint::one());
        assert_eq!(group_order(&idx(&[1, 2, 1])), BigUint::from(2u32));
        assert_eq!(full_cycle_count(&idx(&[1, 2, 1])), BigUint::one());
    }

    #[test]
    fn ratio_identity_on_large_index() {
        let i = idx(&[3, 4, 2, 5]);
        assert_eq!(full_cycle_count(&i) * BigUint::from(i.leaf_count()), group_order(&i));
    }
}
