use itertools::Itertools;
use num_bigint::BigUint;

use super::count::group_order;
use super::element::WreathElement;
use super::index::SphericalIndex;
use crate::error::{Error, Result};

/// Iterator over every element of `W_n`.
///
/// Elements come in lexicographic order of their label slots (level 1 first,
/// then vertices in address order), each slot running through `S_d` in
/// lexicographic order of images.
#[derive(Debug, Clone)]
pub struct Elements {
    index: SphericalIndex,
    // per level: all permutations of S_{d} in lexicographic order
    perms: Vec<Vec<Vec<usize>>>,
    // (level, vertex) of each slot
    slots: Vec<(usize, usize)>,
    counters: Vec<usize>,
    done: bool,
}

/// Enumerates `W_n`, refusing when `|W_n| > limit`.
pub fn enumerate(index: &SphericalIndex, limit: u64) -> Result<Elements> {
    let order = group_order(index);
    if order > BigUint::from(limit) {
        return Err(Error::OrderExceedsLimit { order: order.to_string(), limit });
    }
    let perms = index
        .degrees()
        .iter()
        .map(|&d| (0..d).permutations(d).collect::<Vec<_>>())
        .collect();
    let slots: Vec<(usize, usize)> = (0..index.depth())
        .flat_map(|i| (0..index.partial_product(i)).map(move |v| (i, v)))
        .collect();
    let counters = vec![0; slots.len()];
    Ok(Elements { index: index.clone(), perms, slots, counters, done: false })
}

impl Iterator for Elements {
    type Item = WreathElement;

    fn next(&mut self) -> Option<WreathElement> {
        if self.done {
            return None;
        }
        let levels = (0..self.index.depth())
            .map(|i| {
                let start = self.slots.iter().position(|&(l, _)| l == i).unwrap();
                (0..self.index.partial_product(i))
                    .flat_map(|v| self.perms[i][self.counters[start + v]].iter().copied())
                    .collect()
            })
            .collect();
        let element = WreathElement::from_flat_unchecked(self.index.clone(), levels);

        // odometer, last slot fastest
        let mut k = self.slots.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            let level = self.slots[k].0;
            self.counters[k] += 1;
            if self.counters[k] < self.perms[level].len() {
                break;
            }
            self.counters[k] = 0;
        }
        Some(element)
    }
}
