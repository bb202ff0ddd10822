//! Posets with inconsistent pairs.
//!
//! A PIP is a finite poset `(P, ≤)` together with a symmetric, irreflexive
//! relation `↔` that is inherited upwards: if `a ↔ b`, `a ≤ a'` and
//! `b ≤ b'` then `a' ↔ b'`. Elements are labelled `0..n`.
//!
//! Relations are stored closed, one bitset row per element. Constructors
//! accept the Hasse diagram plus any generating set of inconsistent pairs
//! and compute the closures.

mod chains;
mod iso;
mod random;

pub use chains::ChainCover;
pub use random::random_pip;

use crate::error::{Error, Result};
use crate::limits;
use crate::set::{ElementSet, MAX_LABELS};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Down,
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremal {
    Max,
    Min,
}

/// How the two halves of [`Pip::combine`] relate across the seam.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    /// Cross pairs are incomparable and consistent.
    Consistent,
    /// Cross pairs are incomparable and inconsistent.
    Inconsistent,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pip {
    n: usize,
    /// `up[a] = {b : a ≤ b}`
    up: Vec<ElementSet>,
    /// `down[a] = {b : b ≤ a}`
    down: Vec<ElementSet>,
    incons: Vec<ElementSet>,
}

/// An induced sub-PIP together with its labels in the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubPip {
    pub pip: Pip,
    /// `labels[i]` is the parent label of sub-element `i`; increasing.
    pub labels: Vec<usize>,
}

impl SubPip {
    pub fn parent_set(&self, s: ElementSet) -> ElementSet {
        s.map(&self.labels)
    }

    pub fn members(&self) -> ElementSet {
        self.labels.iter().collect()
    }

    /// Sub-labels of the parent elements of `s` that lie in the sub-PIP.
    pub fn local_set(&self, s: ElementSet) -> ElementSet {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &x)| s.contains(x))
            .map(|(i, _)| i)
            .collect()
    }
}

fn check_label(label: usize, n: usize) -> Result<()> {
    if label >= n {
        Err(Error::Index { label, n })
    } else {
        Ok(())
    }
}

impl Pip {
    /// Build a PIP from order relations and generating inconsistent pairs.
    ///
    /// `covers` may be any set of strict relations `a < b`; the order is
    /// their reflexive-transitive closure. `incons` is closed upwards and
    /// symmetrised.
    pub fn new(n: usize, covers: &[(usize, usize)], incons: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_LABELS {
            return Err(Error::CapExceeded {
                what: "PIP ground set",
                size: n as u128,
                cap: MAX_LABELS as u128,
            });
        }
        let mut up: Vec<ElementSet> = (0..n).map(ElementSet::singleton).collect();
        for &(a, b) in covers {
            check_label(a, n)?;
            check_label(b, n)?;
            if a == b {
                return Err(Error::Cycle(a, b));
            }
            up[a].insert(b);
        }
        // Warshall on bit rows.
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if row.contains(k) {
                    *row = row.union(row_k);
                }
            }
        }
        for a in 0..n {
            for b in up[a].without(a) {
                if up[b].contains(a) {
                    return Err(Error::Cycle(a.min(b), a.max(b)));
                }
            }
        }
        let mut down = vec![ElementSet::EMPTY; n];
        for a in 0..n {
            for b in up[a] {
                down[b].insert(a);
            }
        }

        let mut rows = vec![ElementSet::EMPTY; n];
        for &(a, b) in incons {
            check_label(a, n)?;
            check_label(b, n)?;
            for a2 in up[a] {
                rows[a2] = rows[a2].union(up[b]);
            }
            for b2 in up[b] {
                rows[b2] = rows[b2].union(up[a]);
            }
        }
        if let Some(x) = (0..n).find(|&x| rows[x].contains(x)) {
            return Err(Error::SelfInconsistent(x));
        }
        Ok(Pip {
            n,
            up,
            down,
            incons: rows,
        })
    }

    /// The PIP on `n` elements with no relations at all.
    pub fn antichain(n: usize) -> Self {
        Pip::new(n, &[], &[]).expect("antichain is always a PIP")
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Pip::new(n, &covers, &[]).expect("chain is always a PIP")
    }

    /// The PIP of a graph: no order, one inconsistent pair per edge.
    pub fn from_graph(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Pip::new(n, &[], edges)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn inconsistent(&self, a: usize, b: usize) -> bool {
        self.incons[a].contains(b)
    }

    /// `{b : a ≤ b}`
    pub fn above(&self, a: usize) -> ElementSet {
        self.up[a]
    }

    /// `{b : b ≤ a}`
    pub fn below(&self, a: usize) -> ElementSet {
        self.down[a]
    }

    /// Elements inconsistent with `a`.
    pub fn inconsistent_with(&self, a: usize) -> ElementSet {
        self.incons[a]
    }

    /// Elements comparable with `a` (including `a`).
    pub fn comparable_with(&self, a: usize) -> ElementSet {
        self.up[a].union(self.down[a])
    }

    /// Number of pairs `(a, b)` with `a ≤ b`, reflexive pairs included.
    pub fn order_relation_count(&self) -> usize {
        self.up.iter().map(|s| s.len()).sum()
    }

    /// Number of unordered inconsistent pairs.
    pub fn inconsistent_pair_count(&self) -> usize {
        self.incons.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn has_inconsistent_pairs(&self) -> bool {
        self.incons.iter().any(|s| !s.is_empty())
    }

    pub fn has_strict_order(&self) -> bool {
        self.up.iter().any(|s| s.len() > 1)
    }

    /// `↓S` or `↑S`.
    pub fn closure(&self, s: ElementSet, direction: Direction) -> ElementSet {
        let rows = match direction {
            Direction::Down => &self.down,
            Direction::Up => &self.up,
        };
        s.iter().fold(ElementSet::EMPTY, |acc, x| acc.union(rows[x]))
    }

    pub fn down_closure(&self, s: ElementSet) -> ElementSet {
        self.closure(s, Direction::Down)
    }

    pub fn up_closure(&self, s: ElementSet) -> ElementSet {
        self.closure(s, Direction::Up)
    }

    /// `max S` or `min S`.
    pub fn extremal(&self, s: ElementSet, which: Extremal) -> ElementSet {
        s.iter()
            .filter(|&x| {
                let strict = match which {
                    Extremal::Max => self.up[x],
                    Extremal::Min => self.down[x],
                }
                .without(x);
                strict.is_disjoint(s)
            })
            .collect()
    }

    pub fn maximal(&self, s: ElementSet) -> ElementSet {
        self.extremal(s, Extremal::Max)
    }

    pub fn minimal(&self, s: ElementSet) -> ElementSet {
        self.extremal(s, Extremal::Min)
    }

    pub fn is_consistent(&self, s: ElementSet) -> bool {
        s.iter().all(|x| self.incons[x].is_disjoint(s))
    }

    pub fn is_antichain(&self, s: ElementSet) -> bool {
        s.iter().all(|x| self.up[x].without(x).is_disjoint(s))
    }

    pub fn is_downset(&self, s: ElementSet) -> bool {
        s.iter().all(|x| self.down[x].is_subset(s))
    }

    pub fn is_consistent_downset(&self, s: ElementSet) -> bool {
        self.is_downset(s) && self.is_consistent(s)
    }

    pub fn is_consistent_antichain(&self, s: ElementSet) -> bool {
        self.is_antichain(s) && self.is_consistent(s)
    }

    /// All consistent antichains, ordered by size then lexicographically.
    pub fn consistent_antichains(&self) -> Result<Vec<ElementSet>> {
        limits::check_elements("PIP ground set", self.n)?;
        let mut out = Vec::new();
        // blocked[x]: everything comparable or inconsistent with x
        let blocked: Vec<ElementSet> = (0..self.n)
            .map(|x| self.comparable_with(x).union(self.incons[x]))
            .collect();
        let mut stack = vec![(ElementSet::EMPTY, self.ground())];
        while let Some((current, candidates)) = stack.pop() {
            out.push(current);
            for x in candidates {
                let rest = ElementSet::from_bits(candidates.bits() & !((2u64 << x) - 1));
                stack.push((current.with(x), rest.difference(blocked[x])));
            }
        }
        out.sort();
        Ok(out)
    }

    /// All consistent downsets, ordered by size then lexicographically.
    pub fn consistent_downsets(&self) -> Result<Vec<ElementSet>> {
        let mut out: Vec<ElementSet> = self
            .consistent_antichains()?
            .into_iter()
            .map(|a| self.down_closure(a))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Consistent antichains that are maximal under inclusion.
    pub fn maximal_consistent_antichains(&self) -> Result<Vec<ElementSet>> {
        let all = self.consistent_antichains()?;
        Ok(all
            .iter()
            .copied()
            .filter(|&a| {
                !(0..self.n).any(|x| !a.contains(x) && self.is_consistent_antichain(a.with(x)))
            })
            .collect())
    }

    /// `I ↦ max I` (forward) or `A ↦ ↓A` (back).
    pub fn antichain_downset_bijection(&self, x: ElementSet, direction: Direction) -> Result<ElementSet> {
        self.check_subset(x)?;
        match direction {
            // forward: downset to antichain
            Direction::Up => {
                if !self.is_consistent_downset(x) {
                    return Err(Error::Precondition(format!("{x} is not a consistent downset")));
                }
                Ok(self.maximal(x))
            }
            Direction::Down => {
                if !self.is_consistent_antichain(x) {
                    return Err(Error::Precondition(format!("{x} is not a consistent antichain")));
                }
                Ok(self.down_closure(x))
            }
        }
    }

    fn check_subset(&self, s: ElementSet) -> Result<()> {
        if let Some(label) = s.difference(self.ground()).first() {
            return Err(Error::Index { label, n: self.n });
        }
        Ok(())
    }

    /// Disjoint union with `other` relabelled by `+self.len()`.
    pub fn combine(&self, other: &Pip, mode: CombineMode) -> Result<Pip> {
        let n = self.n + other.n;
        limits::check_elements("combined PIP", n)?;
        let shift = self.n;
        let mut up = self.up.clone();
        up.extend(other.up.iter().map(|s| s.shifted(shift)));
        let mut down = self.down.clone();
        down.extend(other.down.iter().map(|s| s.shifted(shift)));
        let mut incons = self.incons.clone();
        incons.extend(other.incons.iter().map(|s| s.shifted(shift)));
        if mode == CombineMode::Inconsistent {
            let left = self.ground();
            let right = other.ground().shifted(shift);
            for (x, row) in incons.iter_mut().enumerate() {
                *row = row.union(if x < shift { right } else { left });
            }
        }
        Ok(Pip { n, up, down, incons })
    }

    /// The sub-PIP induced on `s`, relabelled `0..|s|` in increasing order.
    pub fn induced(&self, s: ElementSet) -> SubPip {
        let labels = s.intersection(self.ground()).to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in labels.iter().enumerate() {
            index[x] = i;
        }
        let restrict = |row: ElementSet| -> ElementSet {
            row.intersection(s).iter().map(|y| index[y]).collect()
        };
        let up = labels.iter().map(|&x| restrict(self.up[x])).collect();
        let down = labels.iter().map(|&x| restrict(self.down[x])).collect();
        let incons = labels.iter().map(|&x| restrict(self.incons[x])).collect();
        SubPip {
            pip: Pip {
                n: labels.len(),
                up,
                down,
                incons,
            },
            labels,
        }
    }

    /// Elements consistent and incomparable with `x`.
    pub fn crossing_set(&self, x: usize) -> ElementSet {
        self.ground()
            .difference(self.comparable_with(x))
            .difference(self.incons[x])
    }

    /// The sub-PIP of elements consistent and incomparable with `x`.
    pub fn crossing_neighborhood(&self, x: usize) -> Result<SubPip> {
        check_label(x, self.n)?;
        Ok(self.induced(self.crossing_set(x)))
    }

    /// Covering pairs `(a, b)` with `a ⋖ b`, sorted.
    pub fn hasse_covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let strict_up = self.up[a].without(a);
            for b in strict_up {
                let between = strict_up.intersection(self.down[b].without(b));
                if between.is_empty() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Inconsistent pairs `(c, d)`, `c < d`, with no other inconsistent
    /// pair below them.
    pub fn minimal_inconsistent_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for c in 0..self.n {
            for d in self.incons[c].iter().filter(|&d| d > c) {
                let dominated = self.down[c].iter().any(|c2| {
                    self.incons[c2]
                        .intersection(self.down[d])
                        .iter()
                        .any(|d2| (c2, d2) != (c, d))
                });
                if !dominated {
                    out.push((c, d));
                }
            }
        }
        out
    }

    /// All unordered inconsistent pairs `(c, d)` with `c < d`.
    pub fn inconsistent_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|c| self.incons[c].iter().filter(move |&d| d > c).map(move |d| (c, d)))
            .collect()
    }

    /// The same poset with every inconsistency dropped.
    pub fn without_inconsistencies(&self) -> Pip {
        Pip {
            n: self.n,
            up: self.up.clone(),
            down: self.down.clone(),
            incons: vec![ElementSet::EMPTY; self.n],
        }
    }

    /// Relabel element `x` as `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Pip> {
        if perm.len() != self.n {
            return Err(Error::Precondition("permutation length mismatch".into()));
        }
        let covers: Vec<_> = self.hasse_covers().into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
        let incons: Vec<_> = self
            .minimal_inconsistent_pairs()
            .into_iter()
            .map(|(a, b)| (perm[a], perm[b]))
            .collect();
        Pip::new(self.n, &covers, &incons)
    }
}

impl std::fmt::Debug for Pip {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Pip")
            .field("n", &self.n)
            .field("covers", &self.hasse_covers())
            .field("incons", &self.minimal_inconsistent_pairs())
            .finish()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().collect()
    }

    /// The running seven-element example, shifted to 0-based labels.
    pub(crate) fn p7() -> Pip {
        let covers = [(1, 3), (3, 6), (1, 4), (2, 4), (2, 5), (5, 7), (4, 7)];
        let incons = [(3, 7), (4, 6), (5, 6)];
        let shift = |(a, b): (usize, usize)| (a - 1, b - 1);
        let covers: Vec<_> = covers.into_iter().map(shift).collect();
        let incons: Vec<_> = incons.into_iter().map(shift).collect();
        Pip::new(7, &covers, &incons).unwrap()
    }

    /// 1-based labels to a 0-based set.
    fn s1(xs: &[usize]) -> ElementSet {
        xs.iter().map(|x| x - 1).collect()
    }

    #[test]
    fn p7_inconsistency_closure() {
        let p = p7();
        let pairs: Vec<_> = p.inconsistent_pairs().into_iter().map(|(a, b)| (a + 1, b + 1)).collect();
        assert_eq!(pairs, vec![(3, 7), (4, 6), (5, 6), (6, 7)]);
    }

    #[test]
    fn singleton_pip() {
        let p = Pip::new(1, &[], &[]).unwrap();
        assert_eq!(p.order_relation_count(), 1);
        assert!(p.leq(0, 0));
    }

    #[test]
    fn comparable_inconsistent_pair_is_rejected() {
        assert_eq!(Pip::new(2, &[(0, 1)], &[(0, 1)]), Err(Error::SelfInconsistent(1)));
    }

    #[test]
    fn cycles_and_bad_labels() {
        assert!(matches!(Pip::new(3, &[(0, 1), (1, 2), (2, 0)], &[]), Err(Error::Cycle(..))));
        assert_eq!(Pip::new(2, &[(0, 2)], &[]), Err(Error::Index { label: 2, n: 2 }));
        assert_eq!(Pip::new(2, &[], &[(1, 1)]), Err(Error::SelfInconsistent(1)));
    }

    #[test]
    fn closures_on_p7() {
        let p = p7();
        assert_eq!(p.down_closure(s1(&[6])), s1(&[1, 3, 6]));
        assert_eq!(p.up_closure(s1(&[4])), s1(&[4, 7]));
        assert_eq!(p.down_closure(ElementSet::EMPTY), ElementSet::EMPTY);
    }

    #[test]
    fn extremal_elements_on_p7() {
        let p = p7();
        assert_eq!(p.maximal(s1(&[1, 2, 3, 6])), s1(&[2, 6]));
        assert_eq!(p.minimal(p.ground()), s1(&[1, 2]));
        assert_eq!(p.maximal(s1(&[5])), s1(&[5]));
    }

    #[test]
    fn predicates() {
        let p = p7();
        let s = s1(&[3, 4, 5]);
        assert!(p.is_consistent(s) && p.is_antichain(s) && !p.is_downset(s));
        let e = ElementSet::EMPTY;
        assert!(p.is_consistent(e) && p.is_antichain(e) && p.is_downset(e));
        assert!(!p.is_consistent(s1(&[5, 6])));
    }

    #[test]
    fn p7_antichains_match_listed_faces() {
        let p = p7();
        let got = p.consistent_antichains().unwrap();
        let mut expected = vec![ElementSet::EMPTY];
        expected.extend((1..=7).map(|x| s1(&[x])));
        for f in [[1, 2], [1, 5], [2, 3], [2, 6], [3, 4], [3, 5], [4, 5]] {
            expected.push(s1(&f));
        }
        expected.push(s1(&[3, 4, 5]));
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn downsets_agree_with_brute_force() {
        let p = p7();
        let brute: Vec<ElementSet> = {
            let mut v: Vec<_> = p
                .ground()
                .subsets()
                .filter(|&s| p.is_downset(s) && p.is_consistent(s))
                .collect();
            v.sort();
            v
        };
        let got = p.consistent_downsets().unwrap();
        assert_eq!(got, brute);
        assert_eq!(got.len(), 16);
        assert!(got.contains(&s1(&[1, 2, 3, 6])));
        assert!(got.contains(&s1(&[1, 2, 4, 5, 7])));
    }

    #[test]
    fn antichain_and_chain_enumeration() {
        assert_eq!(Pip::antichain(3).consistent_antichains().unwrap().len(), 8);
        assert_eq!(Pip::antichain(3).consistent_downsets().unwrap().len(), 8);
        let chain = Pip::chain(3).consistent_antichains().unwrap();
        assert_eq!(chain, vec![ElementSet::EMPTY, set(&[0]), set(&[1]), set(&[2])]);
    }

    #[test]
    fn graph_pip_downsets_are_independent_sets() {
        let edges: Vec<_> = [(1, 5), (1, 2), (2, 5), (3, 5), (3, 4)]
            .into_iter()
            .map(|(a, b)| (a - 1, b - 1))
            .collect();
        let g5 = Pip::from_graph(5, &edges).unwrap();
        let got = g5.consistent_downsets().unwrap();
        let independent: Vec<_> = {
            let mut v: Vec<_> = ElementSet::full(5)
                .subsets()
                .filter(|s| !edges.iter().any(|&(a, b)| s.contains(a) && s.contains(b)))
                .collect();
            v.sort();
            v
        };
        assert_eq!(got, independent);
    }

    #[test]
    fn enumeration_respects_cap() {
        let p = Pip::antichain(21);
        assert!(matches!(p.consistent_antichains(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn bijection_examples() {
        let p = p7();
        let i = s1(&[1, 2, 3, 6]);
        assert_eq!(p.antichain_downset_bijection(i, Direction::Up).unwrap(), s1(&[2, 6]));
        assert_eq!(p.antichain_downset_bijection(s1(&[2, 6]), Direction::Down).unwrap(), i);
        assert_eq!(
            p.antichain_downset_bijection(s1(&[3, 4, 5]), Direction::Down).unwrap(),
            s1(&[1, 2, 3, 4, 5])
        );
        let e = ElementSet::EMPTY;
        assert_eq!(p.antichain_downset_bijection(e, Direction::Up).unwrap(), e);
        assert!(matches!(
            p.antichain_downset_bijection(s1(&[3]), Direction::Up),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            p.antichain_downset_bijection(s1(&[5, 6]), Direction::Down),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn combine_modes() {
        let one = Pip::antichain(1);
        let a3 = one
            .combine(&one, CombineMode::Consistent)
            .unwrap()
            .combine(&one, CombineMode::Consistent)
            .unwrap();
        assert_eq!(a3, Pip::antichain(3));

        let c2 = Pip::chain(2);
        let w = c2.combine(&c2, CombineMode::Inconsistent).unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.inconsistent_pairs(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        // the same thing via closure of the minimal pair
        assert_eq!(w, Pip::new(4, &[(0, 1), (2, 3)], &[(0, 2)]).unwrap());
        assert_eq!(p7().combine(&c2, CombineMode::Consistent).unwrap().len(), 9);
    }

    #[test]
    fn crossing_neighborhoods() {
        let p = p7();
        let sub = p.crossing_neighborhood(3).unwrap();
        assert_eq!(sub.labels, vec![2, 4]);
        assert_eq!(sub.pip, Pip::antichain(2));
        assert!(Pip::chain(3).crossing_neighborhood(1).unwrap().pip.is_empty());
        assert_eq!(Pip::antichain(3).crossing_neighborhood(0).unwrap().pip, Pip::antichain(2));
    }

    #[test]
    fn hasse_and_minimal_pairs_roundtrip() {
        let p = p7();
        assert_eq!(p.hasse_covers().len(), 7);
        let mins: Vec<_> = p.minimal_inconsistent_pairs().into_iter().map(|(a, b)| (a + 1, b + 1)).collect();
        assert_eq!(mins, vec![(3, 7), (4, 6), (5, 6)]);
        let again = Pip::new(7, &p.hasse_covers(), &p.minimal_inconsistent_pairs()).unwrap();
        assert_eq!(again, p);
    }
}
