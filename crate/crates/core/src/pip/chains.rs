//! Minimum chain covers by bipartite matching.

use super::Pip;
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// A partition of the ground set into chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCover {
    pub chains: Vec<ElementSet>,
}

impl ChainCover {
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Index of the chain containing `x`.
    pub fn chain_of(&self, x: usize) -> Option<usize> {
        self.chains.iter().position(|c| c.contains(x))
    }
}

impl Pip {
    /// A chain partition of minimum size.
    ///
    /// Matches each element to a strict successor (left copy to right
    /// copy of the comparability graph); unmatched chains are read off the
    /// successor links. Only defined for PIPs without inconsistent pairs.
    pub fn min_chain_cover(&self) -> Result<ChainCover> {
        if self.has_inconsistent_pairs() {
            return Err(Error::Precondition(
                "chain covers need a PIP without inconsistent pairs".into(),
            ));
        }
        let n = self.n;
        let mut pred: Vec<Option<usize>> = vec![None; n];
        for x in 0..n {
            let mut seen = ElementSet::EMPTY;
            self.augment(x, &mut pred, &mut seen);
        }
        let mut succ = vec![None; n];
        for (y, p) in pred.iter().enumerate() {
            if let Some(x) = *p {
                succ[x] = Some(y);
            }
        }
        let mut chains = Vec::new();
        for start in (0..n).filter(|&y| pred[y].is_none()) {
            let mut chain = ElementSet::EMPTY;
            let mut cur = Some(start);
            while let Some(x) = cur {
                chain.insert(x);
                cur = succ[x];
            }
            chains.push(chain);
        }
        Ok(ChainCover { chains })
    }

    fn augment(&self, x: usize, pred: &mut [Option<usize>], seen: &mut ElementSet) -> bool {
        for y in self.up[x].without(x) {
            if seen.contains(y) {
                continue;
            }
            seen.insert(y);
            let free = match pred[y] {
                None => true,
                Some(other) => self.augment(other, pred, seen),
            };
            if free {
                pred[y] = Some(x);
                return true;
            }
        }
        false
    }

    /// Size of the largest antichain, by exhaustive search.
    pub fn max_antichain_width(&self) -> usize {
        let mut best = 0;
        let mut stack = vec![(0usize, self.ground())];
        while let Some((size, candidates)) = stack.pop() {
            best = best.max(size);
            if size + candidates.len() <= best {
                continue;
            }
            for x in candidates {
                let rest = ElementSet::from_bits(candidates.bits() & !((2u64 << x) - 1));
                stack.push((size + 1, rest.difference(self.comparable_with(x))));
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_cover(p: &Pip, cover: &ChainCover) {
        let mut union = ElementSet::EMPTY;
        for c in &cover.chains {
            assert!(c.is_disjoint(union));
            union = union.union(*c);
            for a in c.iter() {
                for b in c.iter() {
                    assert!(p.comparable(a, b));
                }
            }
        }
        assert_eq!(union, p.ground());
    }

    #[test]
    fn chain_is_one_chain() {
        let p = Pip::chain(3);
        let c = p.min_chain_cover().unwrap();
        assert_eq!(c.len(), 1);
        check_cover(&p, &c);
    }

    #[test]
    fn antichain_needs_one_chain_each() {
        let p = Pip::antichain(3);
        assert_eq!(p.min_chain_cover().unwrap().len(), 3);
        assert_eq!(p.max_antichain_width(), 3);
    }

    #[test]
    fn parallel_chains() {
        let p = Pip::new(4, &[(0, 1), (2, 3)], &[]).unwrap();
        let c = p.min_chain_cover().unwrap();
        check_cover(&p, &c);
        assert_eq!(c.len(), 2);
        assert_eq!(p.max_antichain_width(), 2);
    }

    #[test]
    fn needs_augmenting_path() {
        // 0<2, 0<3, 1<2: greedy 0->2 would strand 1
        let p = Pip::new(4, &[(0, 2), (0, 3), (1, 2)], &[]).unwrap();
        let c = p.min_chain_cover().unwrap();
        check_cover(&p, &c);
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn rejects_inconsistency() {
        let p = Pip::from_graph(2, &[(0, 1)]).unwrap();
        assert!(matches!(p.min_chain_cover(), Err(Error::Precondition(_))));
    }

    #[test]
    fn empty_pip() {
        let p = Pip::antichain(0);
        assert!(p.min_chain_cover().unwrap().is_empty());
        assert_eq!(p.max_antichain_width(), 0);
    }
}
