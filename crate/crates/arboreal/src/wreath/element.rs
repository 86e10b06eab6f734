use serde::{Deserialize, Serialize};

use super::index::{LeafAddress, SphericalIndex};
use super::perm::{self, Permutation};
use crate::error::{Error, Result};
use crate::partition::CycleType;

/// An automorphism of the truncated tree `T_n`, i.e. an element of
/// `S_{d_1} ≀ .. ≀ S_{d_n}` in wreath coordinates.
///
/// Level `i` (zero based) carries one permutation of `0..d_{i+1}` per vertex at
/// depth `i`. A label is indexed by the *image* vertex: the element sends vertex
/// `u` to `σ(u)` and the child `t` of `u` to the child `L[σ(u)](t)` of `σ(u)`.
/// Dropping the last level gives the `upper` element of the recursive pair
/// `(upper, labels)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawElement", into = "RawElement")]
pub struct WreathElement {
    index: SphericalIndex,
    // levels[i] holds d^(i) labels of degree d_{i+1}, flattened with stride d_{i+1}.
    levels: Vec<Vec<usize>>,
}

/// JSON form: the index and, per level, the list of label images.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawElement {
    index: Vec<usize>,
    labels: Vec<Vec<Vec<usize>>>,
}

impl TryFrom<RawElement> for WreathElement {
    type Error = Error;
    fn try_from(raw: RawElement) -> Result<Self> {
        let index = SphericalIndex::new(raw.index)?;
        let labels = raw
            .labels
            .into_iter()
            .map(|lvl| lvl.into_iter().map(Permutation::from_images).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        WreathElement::from_labels(index, labels)
    }
}

impl From<WreathElement> for RawElement {
    fn from(a: WreathElement) -> RawElement {
        let labels = (0..a.index.depth())
            .map(|i| {
                let d = a.index.degrees()[i];
                a.levels[i].chunks(d).map(|c| c.to_vec()).collect()
            })
            .collect();
        RawElement { index: a.index.degrees().to_vec(), labels }
    }
}

impl WreathElement {
    pub fn identity(index: &SphericalIndex) -> Self {
        let levels = (0..index.depth())
            .map(|i| {
                let d = index.degrees()[i];
                (0..index.partial_product(i)).flat_map(|_| 0..d).collect()
            })
            .collect();
        WreathElement { index: index.clone(), levels }
    }

    /// Builds an element from per-level label lists; level `i` must hold
    /// `d^(i)` permutations of degree `d_{i+1}`.
    pub fn from_labels(index: SphericalIndex, labels: Vec<Vec<Permutation>>) -> Result<Self> {
        if labels.len() != index.depth() {
            return Err(Error::InvalidElement(format!(
                "expected {} levels of labels, got {}",
                index.depth(),
                labels.len()
            )));
        }
        let mut levels = Vec::with_capacity(labels.len());
        for (i, lvl) in labels.into_iter().enumerate() {
            let d = index.degrees()[i];
            if lvl.len() != index.partial_product(i) {
                return Err(Error::InvalidElement(format!(
                    "level {} needs {} labels, got {}",
                    i + 1,
                    index.partial_product(i),
                    lvl.len()
                )));
            }
            let mut flat = Vec::with_capacity(lvl.len() * d);
            for p in lvl {
                if p.degree() != d {
                    return Err(Error::InvalidElement(format!(
                        "label of degree {} at level {} (expected {d})",
                        p.degree(),
                        i + 1
                    )));
                }
                flat.extend_from_slice(p.images());
            }
            levels.push(flat);
        }
        Ok(WreathElement { index, levels })
    }

    pub(crate) fn from_flat_unchecked(index: SphericalIndex, levels: Vec<Vec<usize>>) -> Self {
        WreathElement { index, levels }
    }

    pub fn index(&self) -> &SphericalIndex {
        &self.index
    }

    /// Label at zero-based `level` for the vertex with linear address `vertex`.
    pub fn label(&self, level: usize, vertex: usize) -> Permutation {
        Permutation::from_images_unchecked(self.label_slice(level, vertex).to_vec())
    }

    #[inline]
    fn label_slice(&self, level: usize, vertex: usize) -> &[usize] {
        let d = self.index.degrees()[level];
        &self.levels[level][vertex * d..(vertex + 1) * d]
    }

    /// The element induced on `T_{n-1}`.
    pub fn upper(&self) -> WreathElement {
        let n = self.index.depth();
        assert!(n > 0, "the trivial tree has no upper level");
        WreathElement { index: self.index.prefix(n - 1), levels: self.levels[..n - 1].to_vec() }
    }

    /// Labels of the deepest level, one per vertex at depth `n-1`.
    pub fn top_labels(&self) -> Vec<Permutation> {
        let n = self.index.depth();
        assert!(n > 0, "the trivial tree has no labels");
        (0..self.index.partial_product(n - 1)).map(|r| self.label(n - 1, r)).collect()
    }

    /// Image of a leaf.
    pub fn act(&self, leaf: &LeafAddress) -> Result<LeafAddress> {
        if leaf.path().len() != self.index.depth() {
            return Err(Error::IndexMismatch {
                left: self.index.degrees().to_vec(),
                right: vec![leaf.path().len()],
            });
        }
        let linear = LeafAddress::new(&self.index, leaf.path().to_vec())?.to_linear(&self.index);
        Ok(LeafAddress::from_linear(&self.index, self.act_linear(linear)))
    }

    /// Image of a leaf given by its mixed-radix position.
    pub fn act_linear(&self, leaf: usize) -> usize {
        let n = self.index.depth();
        let mut image = 0;
        for i in 0..n {
            let d = self.index.degrees()[i];
            let t = (leaf / (self.index.leaf_count() / self.index.partial_product(i + 1))) % d;
            image = image * d + self.label_slice(i, image)[t];
        }
        image
    }

    /// The permutation this element induces on the `d^(depth)` vertices at `depth`.
    pub fn level_map(&self, depth: usize) -> Vec<usize> {
        let mut map = vec![0usize];
        for i in 0..depth {
            map = self.extend_map(i, &map);
        }
        map
    }

    fn extend_map(&self, level: usize, map: &[usize]) -> Vec<usize> {
        let d = self.index.degrees()[level];
        let mut next = Vec::with_capacity(map.len() * d);
        for &img in map {
            let lab = self.label_slice(level, img);
            next.extend(lab.iter().map(|&t| img * d + t));
        }
        next
    }

    /// The permutation of leaves.
    pub fn leaf_permutation(&self) -> Vec<usize> {
        self.level_map(self.index.depth())
    }

    /// `self ∘ other`, acting as `v ↦ self·(other·v)`.
    pub fn compose(&self, other: &WreathElement) -> Result<WreathElement> {
        self.index.check_same(&other.index)?;
        let mut levels = Vec::with_capacity(self.index.depth());
        let mut bmap = vec![0usize];
        let mut cmap = vec![0usize];
        for i in 0..self.index.depth() {
            let d = self.index.degrees()[i];
            let mut flat = vec![0usize; self.levels[i].len()];
            for (&bu, &cu) in bmap.iter().zip(&cmap) {
                let la = self.label_slice(i, cu);
                let lb = other.label_slice(i, bu);
                for t in 0..d {
                    flat[cu * d + t] = la[lb[t]];
                }
            }
            let mut nb = Vec::with_capacity(bmap.len() * d);
            let mut nc = Vec::with_capacity(cmap.len() * d);
            for (&bu, &cu) in bmap.iter().zip(&cmap) {
                let lb = other.label_slice(i, bu);
                for t in 0..d {
                    nb.push(bu * d + lb[t]);
                    nc.push(cu * d + flat[cu * d + t]);
                }
            }
            levels.push(flat);
            bmap = nb;
            cmap = nc;
        }
        Ok(WreathElement { index: self.index.clone(), levels })
    }

    pub fn inverse(&self) -> WreathElement {
        let mut levels = Vec::with_capacity(self.index.depth());
        let mut map = vec![0usize];
        for i in 0..self.index.depth() {
            let d = self.index.degrees()[i];
            let mut flat = vec![0usize; self.levels[i].len()];
            for (u, &img) in map.iter().enumerate() {
                let inv = perm::invert(self.label_slice(i, img));
                flat[u * d..(u + 1) * d].copy_from_slice(&inv);
            }
            map = self.extend_map(i, &map);
            levels.push(flat);
        }
        WreathElement { index: self.index.clone(), levels }
    }

    pub fn is_identity(&self) -> bool {
        *self == WreathElement::identity(&self.index)
    }

    /// Partition of `d^(n)` given by the orbit sizes on leaves.
    pub fn leaf_cycle_type(&self) -> CycleType {
        perm::cycle_type_of(&self.leaf_permutation())
    }

    /// Full-cycle test by following the orbit of one leaf.
    pub fn is_full_cycle_orbit(&self) -> bool {
        let total = self.index.leaf_count();
        let mut x = self.act_linear(0);
        let mut len = 1;
        while x != 0 {
            if len >= total {
                return false;
            }
            x = self.act_linear(x);
            len += 1;
        }
        len == total
    }

    /// Full-cycle test through the level recursion: the element is a full cycle
    /// iff its upper part is, and the product of the deepest labels met while
    /// going once around the upper cycle is a `d_n`-cycle.
    ///
    /// The product is taken at the first vertex only; products at other
    /// vertices are conjugate to it.
    pub fn is_full_cycle_recursive(&self) -> bool {
        let mut map = vec![0usize];
        for i in 0..self.index.depth() {
            let d = self.index.degrees()[i];
            if !perm::is_full_cycle_slice(&self.around_cycle_product(i, &map, 0)) {
                return false;
            }
            if cfg!(debug_assertions) {
                for r in 1..map.len() {
                    debug_assert!(
                        perm::is_full_cycle_slice(&self.around_cycle_product(i, &map, r)),
                        "conjugate label product at vertex {r} is not a {d}-cycle"
                    );
                }
            }
            map = self.extend_map(i, &map);
        }
        true
    }

    fn around_cycle_product(&self, level: usize, map: &[usize], start: usize) -> Vec<usize> {
        let d = self.index.degrees()[level];
        let mut acc: Vec<usize> = (0..d).collect();
        let mut cur = start;
        for _ in 0..map.len() {
            cur = map[cur];
            let lab = self.label_slice(level, cur);
            for x in acc.iter_mut() {
                *x = lab[*x];
            }
        }
        acc
    }
}
