//! Compact vertex sets over ground-set positions.
//!
//! Faces are sets of positions into a [`crate::complex::GroundSet`]. Most
//! complexes here fit in one machine word; products and subdivisions can
//! exceed 64 vertices, so the set spills to further words on demand.

use smallvec::SmallVec;
use std::fmt;

const WORD_BITS: usize = 64;

/// A set of ground-set positions, stored as a bitset.
///
/// The word vector never has trailing zero words, so `Eq`/`Hash` agree with
/// set equality regardless of how a value was built.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: SmallVec<[u64; 1]>,
}

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet { words: SmallVec::new() }
    }

    pub fn singleton(pos: usize) -> Self {
        let mut s = VertexSet::empty();
        s.insert(pos);
        s
    }

    pub fn from_positions<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for p in iter {
            s.insert(p);
        }
        s
    }

    /// The full set {0, .., n-1}.
    pub fn full(n: usize) -> Self {
        VertexSet::from_positions(0..n)
    }

    fn trim(&mut self) {
        while let Some(&w) = self.words.last() {
            if w == 0 {
                self.words.pop();
            } else {
                break;
            }
        }
    }

    pub fn insert(&mut self, pos: usize) {
        let (w, b) = (pos / WORD_BITS, pos % WORD_BITS);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << b;
    }

    pub fn remove(&mut self, pos: usize) {
        let (w, b) = (pos / WORD_BITS, pos % WORD_BITS);
        if w < self.words.len() {
            self.words[w] &= !(1u64 << b);
            self.trim();
        }
    }

    pub fn contains(&self, pos: usize) -> bool {
        let (w, b) = (pos / WORD_BITS, pos % WORD_BITS);
        w < self.words.len() && self.words[w] & (1u64 << b) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        if self.words.len() > other.words.len() {
            return false;
        }
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (short, long) = if self.words.len() <= other.words.len() {
            (&self.words, &other.words)
        } else {
            (&other.words, &self.words)
        };
        let mut words = long.clone();
        for (i, w) in short.iter().enumerate() {
            words[i] |= w;
        }
        VertexSet { words }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let n = self.words.len().min(other.words.len());
        let mut s = VertexSet {
            words: self.words[..n]
                .iter()
                .zip(&other.words[..n])
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = VertexSet {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
                .collect(),
        };
        s.trim();
        s
    }

    /// Complement inside the ground set {0, .., n-1}.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet::full(n).difference(self)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD_BITS + b)
                }
            })
        })
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn max(&self) -> Option<usize> {
        let (i, &w) = self.words.iter().enumerate().rev().find(|(_, &w)| w != 0)?;
        Some(i * WORD_BITS + (63 - w.leading_zeros() as usize))
    }

    /// Positions as a sorted vector.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, the empty set first, `self` last.
    ///
    /// Uses the carry-rippler walk on the position list, so it works for
    /// sets wider than one word.
    pub fn subsets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        let positions = self.to_vec();
        let n = positions.len();
        assert!(n < 63, "subset enumeration over {n} elements");
        let mut mask: u64 = 0;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let set = VertexSet::from_positions(
                (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| positions[i]),
            );
            if mask == (1u64 << n) - 1 {
                done = true;
            } else {
                mask += 1;
            }
            Some(set)
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    /// Lexicographic order on the ascending position sequences, so faces sort
    /// the way the ground set orders them: {0,3} < {1,2} < {1,2,4}.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_positions(iter)
    }
}

/// Subsets of {0, .., m-1} in binary-reflected Gray-code order.
///
/// Each step flips a single element, which lets callers maintain incremental
/// state across the 2^m scan. The first subset is empty.
pub struct GraySubsets {
    m: usize,
    k: u64,
    total: u64,
}

impl GraySubsets {
    pub fn new(m: usize) -> Self {
        assert!(m < 63, "Gray scan over {m} elements");
        GraySubsets { m, k: 0, total: 1u64 << m }
    }
}

impl Iterator for GraySubsets {
    /// (current subset mask, flipped position, now-present flag); the first
    /// item reports a flip of position 0 into the empty set and should be
    /// ignored by incremental consumers.
    type Item = (u64, usize, bool);

    fn next(&mut self) -> Option<Self::Item> {
        if self.k >= self.total {
            return None;
        }
        let g = self.k ^ (self.k >> 1);
        let item = if self.k == 0 {
            (0, 0, false)
        } else {
            let prev = (self.k - 1) ^ ((self.k - 1) >> 1);
            let flipped = (g ^ prev).trailing_zeros() as usize;
            (g, flipped, g & (1 << flipped) != 0)
        };
        self.k += 1;
        let _ = self.m;
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_trim() {
        let mut s = VertexSet::empty();
        s.insert(100);
        assert!(s.contains(100));
        assert_eq!(s.len(), 1);
        s.remove(100);
        assert_eq!(s, VertexSet::empty());
        assert!(s.words.is_empty());
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_positions([0, 2, 70]);
        let b = VertexSet::from_positions([2, 3]);
        assert_eq!(a.intersection(&b), VertexSet::singleton(2));
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.difference(&b), VertexSet::from_positions([0, 70]));
        assert!(VertexSet::singleton(2).is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.complement(71).len(), 68);
    }

    #[test]
    fn canonical_order_is_lex_on_sequences() {
        let a = VertexSet::from_positions([0, 3]);
        let b = VertexSet::from_positions([1, 2]);
        assert!(a < b);
        assert!(VertexSet::empty() < a);
    }

    #[test]
    fn subsets_count() {
        let s = VertexSet::from_positions([1, 4, 9]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], VertexSet::empty());
        assert_eq!(subs[7], s);
    }

    #[test]
    fn gray_walk_flips_one_bit() {
        let mut seen = std::collections::HashSet::new();
        let mut prev = 0u64;
        for (i, (mask, flip, on)) in GraySubsets::new(5).enumerate() {
            if i > 0 {
                assert_eq!(prev ^ mask, 1 << flip);
                assert_eq!(mask & (1 << flip) != 0, on);
            }
            seen.insert(mask);
            prev = mask;
        }
        assert_eq!(seen.len(), 32);
    }
}
