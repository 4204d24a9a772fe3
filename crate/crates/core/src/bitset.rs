//! Vertex subsets as multi-word bitmasks.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub};

use smallvec::SmallVec;

const WORD: usize = 64;

/// A set of vertex indices stored as a bitmask.
///
/// Trailing zero words are never stored, so two sets with the same members
/// compare equal regardless of the graph they were built for. Up to 128
/// vertices fit inline without allocating.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { words: SmallVec::new_const() }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words: SmallVec<[u64; 2]> = SmallVec::from_elem(u64::MAX, n / WORD);
        if n % WORD != 0 {
            words.push((1u64 << (n % WORD)) - 1);
        }
        VertexSet { words }
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut s = Self::new();
        if mask != 0 {
            s.words.push(mask);
        }
        s
    }

    /// Lowest 64 bits. Callers use this only when every member is below 64.
    pub fn to_mask(&self) -> u64 {
        debug_assert!(self.words.len() <= 1, "set has members >= 64");
        self.words.first().copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        while let Some(&0) = self.words.last() {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: usize) {
        let (w, b) = (v / WORD, v % WORD);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn remove(&mut self, v: usize) {
        let (w, b) = (v / WORD, v % WORD);
        if w < self.words.len() {
            self.words[w] &= !(1 << b);
            self.trim();
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        w < self.words.len() && self.words[w] >> b & 1 == 1
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// One past the largest member, or 0 for the empty set.
    pub fn bound(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(&w) => (self.words.len() - 1) * WORD + (WORD - w.leading_zeros() as usize),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.words.truncate(other.words.len());
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
        self.trim();
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        self.trim();
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    /// `{0..n} \ self`.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet::full(n).difference(self)
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> alloc::vec::Vec<usize> {
        self.iter().collect()
    }

    /// Position of `v` among the members in ascending order.
    pub fn rank_of(&self, v: usize) -> usize {
        let (w, b) = (v / WORD, v % WORD);
        let mut r: usize = self.words.iter().take(w).map(|x| x.count_ones() as usize).sum();
        if w < self.words.len() {
            r += (self.words[w] & ((1u64 << b) - 1)).count_ones() as usize;
        }
        r
    }
}

impl Ord for VertexSet {
    /// Orders by the members read as a binary number (colexicographic).
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl BitAnd for &VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: &VertexSet) -> VertexSet {
        self.intersection(rhs)
    }
}

impl BitOr for &VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: &VertexSet) -> VertexSet {
        self.union(rhs)
    }
}

impl Sub for &VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: &VertexSet) -> VertexSet {
        self.difference(rhs)
    }
}

impl BitAndAssign<&VertexSet> for VertexSet {
    fn bitand_assign(&mut self, rhs: &VertexSet) {
        self.intersect_with(rhs);
    }
}

impl BitOrAssign<&VertexSet> for VertexSet {
    fn bitor_assign(&mut self, rhs: &VertexSet) {
        self.union_with(rhs);
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let b = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + b);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn trailing_words_do_not_affect_equality() {
        let mut a = VertexSet::singleton(130);
        a.remove(130);
        a.insert(3);
        assert_eq!(a, VertexSet::singleton(3));
        assert_eq!(a.bound(), 4);
    }

    #[test]
    fn full_and_complement() {
        let f = VertexSet::full(70);
        assert_eq!(f.len(), 70);
        assert!(f.contains(69) && !f.contains(70));
        let c = VertexSet::from_iter([0, 65]).complement(70);
        assert_eq!(c.len(), 68);
        assert!(!c.contains(0) && !c.contains(65));
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn iteration_is_ascending_across_words() {
        let s: VertexSet = [200, 1, 64, 63].into_iter().collect();
        assert_eq!(s.to_vec(), vec![1, 63, 64, 200]);
        assert_eq!(s.rank_of(64), 2);
        assert_eq!(s.first(), Some(1));
    }

    #[test]
    fn subset_and_set_algebra() {
        let a: VertexSet = [1, 2, 3].into_iter().collect();
        let b: VertexSet = [2, 3, 100].into_iter().collect();
        assert_eq!((&a & &b).to_vec(), vec![2, 3]);
        assert_eq!((&a | &b).len(), 4);
        assert_eq!((&b - &a).to_vec(), vec![100]);
        assert!((&a & &b).is_subset(&a));
        assert!(!b.is_subset(&a));
        assert!(VertexSet::new().is_subset(&a));
    }
}
