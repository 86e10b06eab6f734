use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Branching degrees `(d_1, .., d_n)` of a truncated spherically homogeneous tree.
///
/// The empty index describes the one-vertex tree and is accepted as the base
/// case of the recursive construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct SphericalIndex {
    degrees: Vec<usize>,
    // partial[i] = d_1 * .. * d_i, partial[0] = 1
    partial: Vec<usize>,
}

impl SphericalIndex {
    /// Every degree must be at least 1 and the leaf count must fit in a `u64`.
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        if let Some(pos) = degrees.iter().position(|&d| d == 0) {
            return Err(Error::InvalidIndex(format!("degree at level {} is 0", pos + 1)));
        }
        let mut partial = Vec::with_capacity(degrees.len() + 1);
        partial.push(1usize);
        for &d in &degrees {
            let prev = *partial.last().unwrap();
            let next = prev
                .checked_mul(d)
                .filter(|&x| x as u128 <= u64::MAX as u128)
                .ok_or_else(|| Error::InvalidIndex(format!("leaf count of {degrees:?} overflows")))?;
            partial.push(next);
        }
        Ok(SphericalIndex { degrees, partial })
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Number of levels `n`.
    pub fn depth(&self) -> usize {
        self.degrees.len()
    }

    /// `d_i` for `1 <= i <= n`.
    pub fn degree(&self, level: usize) -> usize {
        self.degrees[level - 1]
    }

    /// `d^(i) = d_1 .. d_i`, with `d^(0) = 1`.
    pub fn partial_product(&self, i: usize) -> usize {
        self.partial[i]
    }

    /// `d^(n)`, the number of leaves.
    pub fn leaf_count(&self) -> usize {
        self.partial[self.depth()]
    }

    /// The index `(d_1, .., d_k)`.
    pub fn prefix(&self, k: usize) -> SphericalIndex {
        SphericalIndex { degrees: self.degrees[..k].to_vec(), partial: self.partial[..=k].to_vec() }
    }

    pub(crate) fn check_same(&self, other: &SphericalIndex) -> Result<()> {
        if self.degrees != other.degrees {
            return Err(Error::IndexMismatch { left: self.degrees.clone(), right: other.degrees.clone() });
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for SphericalIndex {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        SphericalIndex::new(v)
    }
}

impl From<SphericalIndex> for Vec<usize> {
    fn from(idx: SphericalIndex) -> Vec<usize> {
        idx.degrees
    }
}

impl fmt::Display for SphericalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses `"2,3,2"` (parentheses optional).
impl FromStr for SphericalIndex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Err(Error::InvalidIndex(format!("empty index {s:?}")));
        }
        let degrees = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidIndex(format!("cannot parse {s:?}")))?;
        SphericalIndex::new(degrees)
    }
}

/// A leaf of the truncated tree, as the path `(t_1, .., t_n)` from the root.
///
/// Coordinates are zero based: `t_i` ranges over `0..d_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LeafAddress {
    path: Vec<usize>,
}

impl LeafAddress {
    pub fn new(idx: &SphericalIndex, path: Vec<usize>) -> Result<Self> {
        if path.len() != idx.depth() {
            return Err(Error::InvalidIndex(format!(
                "address {path:?} has length {}, index has depth {}",
                path.len(),
                idx.depth()
            )));
        }
        if let Some(i) = path.iter().zip(idx.degrees()).position(|(&t, &d)| t >= d) {
            return Err(Error::InvalidIndex(format!(
                "coordinate {} of {path:?} out of range 0..{}",
                i + 1,
                idx.degrees()[i]
            )));
        }
        Ok(LeafAddress { path })
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    /// Mixed-radix position with `t_1` most significant.
    pub fn to_linear(&self, idx: &SphericalIndex) -> usize {
        self.path.iter().zip(idx.degrees()).fold(0, |acc, (&t, &d)| acc * d + t)
    }

    pub fn from_linear(idx: &SphericalIndex, mut linear: usize) -> LeafAddress {
        debug_assert!(linear < idx.leaf_count());
        let mut path = vec![0; idx.depth()];
        for (slot, &d) in path.iter_mut().zip(idx.degrees()).rev() {
            *slot = linear % d;
            linear /= d;
        }
        LeafAddress { path }
    }

    /// All `d^(n)` addresses in lexicographic order.
    pub fn all(idx: &SphericalIndex) -> impl Iterator<Item = LeafAddress> + '_ {
        (0..idx.leaf_count()).map(move |i| LeafAddress::from_linear(idx, i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_products() {
        let idx = SphericalIndex::new(vec![2, 3, 2]).unwrap();
        assert_eq!(idx.partial_product(0), 1);
        assert_eq!(idx.partial_product(2), 6);
        assert_eq!(idx.leaf_count(), 12);
        for i in 1..=3 {
            assert_eq!(idx.partial_product(i), idx.partial_product(i - 1) * idx.degree(i));
        }
    }

    #[test]
    fn rejects_zero_degree() {
        assert!(SphericalIndex::new(vec![2, 0]).is_err());
        assert!("2,0".parse::<SphericalIndex>().is_err());
        assert!("".parse::<SphericalIndex>().is_err());
        assert_eq!("(2, 3)".parse::<SphericalIndex>().unwrap().degrees(), &[2, 3]);
    }

    #[test]
    fn degree_one_levels_are_allowed() {
        let idx = SphericalIndex::new(vec![1, 2, 1]).unwrap();
        assert_eq!(idx.leaf_count(), 2);
    }

    #[test]
    fn address_count_and_linear_roundtrip() {
        let idx = SphericalIndex::new(vec![2, 3, 2]).unwrap();
        let all: Vec<_> = LeafAddress::all(&idx).collect();
        assert_eq!(all.len(), 12);
        for (i, a) in all.iter().enumerate() {
            assert_eq!(a.to_linear(&idx), i);
        }
        assert!(LeafAddress::new(&idx, vec![1, 3, 0]).is_err());
        assert!(LeafAddress::new(&idx, vec![1, 2]).is_err());
    }
}
