//! Small sets of element labels, stored as a 64-bit mask.

use std::cmp::Ordering;
use std::fmt;

/// Largest label space an [`ElementSet`] can address.
pub const MAX_LABELS: usize = 64;

/// A subset of `0..64`.
///
/// Ordering is the deterministic enumeration order used throughout the
/// crate: by cardinality first, then lexicographically on the sorted
/// member list.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_LABELS);
        if n == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        ElementSet(1u64 << x)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, x: usize) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    pub fn with(self, x: usize) -> Self {
        ElementSet(self.0 | 1u64 << x)
    }

    pub fn without(self, x: usize) -> Self {
        ElementSet(self.0 & !(1u64 << x))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Exclusive upper bound on the members (0 for the empty set).
    pub fn label_bound(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// All subsets of `self`, including `∅` and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Relabel every member through `map` (member `x` becomes `map[x]`).
    pub fn map(self, map: &[usize]) -> Self {
        self.iter().map(|x| map[x]).collect()
    }

    /// Shift every label up by `offset`.
    pub fn shifted(self, offset: usize) -> Self {
        if self.is_empty() {
            return self;
        }
        assert!(self.label_bound() + offset <= MAX_LABELS);
        ElementSet(self.0 << offset)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for x in iter {
            assert!(x < MAX_LABELS, "label {x} does not fit in an ElementSet");
            s.insert(x);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Gray-free subset walk: `next = (next - mask) & mask`.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;
    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(ElementSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_size_then_lex() {
        let mut v: Vec<ElementSet> = vec![
            [0, 2].iter().collect(),
            [1].iter().collect(),
            ElementSet::EMPTY,
            [0, 1].iter().collect(),
            [0].iter().collect(),
        ];
        v.sort();
        let got: Vec<Vec<usize>> = v.iter().map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![], vec![0], vec![1], vec![0, 1], vec![0, 2]]);
    }

    #[test]
    fn subsets_cover_power_set() {
        let s: ElementSet = [1, 3, 4].iter().collect();
        let subs: Vec<ElementSet> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(ElementSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn full_and_bounds() {
        assert_eq!(ElementSet::full(0), ElementSet::EMPTY);
        assert_eq!(ElementSet::full(3).to_vec(), vec![0, 1, 2]);
        assert_eq!(ElementSet::full(64).len(), 64);
        assert_eq!(ElementSet::singleton(5).label_bound(), 6);
        assert_eq!(ElementSet::singleton(2).shifted(3), ElementSet::singleton(5));
    }
}
