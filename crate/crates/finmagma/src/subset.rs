use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of element indices of one magma.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubSet {
    bits: FixedBitSet,
}

impl SubSet {
    pub fn empty(order: usize) -> Self {
        SubSet { bits: FixedBitSet::with_capacity(order) }
    }

    pub fn full(order: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(order);
        bits.insert_range(..);
        SubSet { bits }
    }

    pub fn singleton(order: usize, x: usize) -> Self {
        let mut s = Self::empty(order);
        s.insert(x);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(order: usize, items: I) -> Self {
        let mut s = Self::empty(order);
        for x in items {
            s.insert(x);
        }
        s
    }

    /// Size of the ambient element registry.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn insert(&mut self, x: usize) {
        self.bits.insert(x);
    }

    pub fn remove(&mut self, x: usize) {
        self.bits.set(x, false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn union(&self, other: &SubSet) -> SubSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        SubSet { bits }
    }

    pub fn intersection(&self, other: &SubSet) -> SubSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        SubSet { bits }
    }

    pub fn difference(&self, other: &SubSet) -> SubSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        SubSet { bits }
    }

    pub fn is_subset(&self, other: &SubSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &SubSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    /// Deterministic ordering key: size first, then members in index order.
    pub fn sort_key(&self) -> (usize, Vec<usize>) {
        (self.len(), self.to_vec())
    }
}

impl fmt::Debug for SubSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub(crate) fn sort_subsets(v: &mut [SubSet]) {
    v.sort_by_cached_key(|s| s.sort_key());
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_algebra() {
        let a = SubSet::from_indices(8, [0, 2, 4]);
        let b = SubSet::from_indices(8, [2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 4]);
        assert!(SubSet::from_indices(8, [2]).is_subset(&a));
        assert_eq!(SubSet::full(5).len(), 5);
        assert!(SubSet::empty(5).is_empty());
    }

    #[test]
    fn ordering_is_by_size_then_members() {
        let mut v = vec![
            SubSet::from_indices(4, [0, 1, 2]),
            SubSet::from_indices(4, [3]),
            SubSet::from_indices(4, [0, 3]),
            SubSet::from_indices(4, [0, 1]),
        ];
        sort_subsets(&mut v);
        let got: Vec<Vec<usize>> = v.iter().map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![3], vec![0, 1], vec![0, 3], vec![0, 1, 2]]);
    }
}
