//! Fixed-width bitsets over node indices.
//!
//! Position sets (the δ values) and adjacency masks are bitsets so that a
//! tracking step reduces to OR-ing per-node successor masks.

/// A set of node indices `0..n` backed by 64-bit words.
///
/// The width is fixed at construction; all operations combining two sets
/// require equal widths. Trailing bits beyond `n` are kept zero so that
/// equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NodeSet {
    n: u32,
    words: Box<[u64]>,
}

impl NodeSet {
    pub fn empty(n: usize) -> Self {
        let words = vec![0u64; n.div_ceil(64)].into_boxed_slice();
        NodeSet { n: n as u32, words }
    }

    pub fn full(n: usize) -> Self {
        let mut set = Self::empty(n);
        for w in set.words.iter_mut() {
            *w = u64::MAX;
        }
        set.mask_tail();
        set
    }

    pub fn singleton(n: usize, i: usize) -> Self {
        let mut set = Self::empty(n);
        set.insert(i);
        set
    }

    fn mask_tail(&mut self) {
        let n = self.n as usize;
        if !n.is_multiple_of(64) {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << (n % 64)) - 1;
            }
        }
    }

    /// Width of the set (number of addressable indices).
    pub fn width(&self) -> usize {
        self.n as usize
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.n as usize);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.n as usize);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        if i >= self.n as usize {
            return false;
        }
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn union_with(&mut self, other: &NodeSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    pub fn is_subset_of(&self, other: &NodeSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Iterate set members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(n);
        for i in indices {
            set.insert(i);
        }
        set
    }
}

impl std::fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_iter() {
        let mut s = NodeSet::empty(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert!(s.contains(0) && s.contains(64) && s.contains(129));
        assert!(!s.contains(1));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn full_masks_tail() {
        let s = NodeSet::full(70);
        assert_eq!(s.len(), 70);
        assert_eq!(s, NodeSet::from_indices(70, 0..70));
        assert!(NodeSet::full(0).is_empty());
    }

    #[test]
    fn union_and_subset() {
        let a = NodeSet::from_indices(10, [1, 3]);
        let mut b = NodeSet::from_indices(10, [3, 7]);
        assert!(!a.is_subset_of(&b));
        b.union_with(&a);
        assert_eq!(b, NodeSet::from_indices(10, [1, 3, 7]));
        assert!(a.is_subset_of(&b));
    }

    #[test]
    fn remove_clears_bit() {
        let mut s = NodeSet::full(5);
        s.remove(2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 1, 3, 4]);
    }
}
