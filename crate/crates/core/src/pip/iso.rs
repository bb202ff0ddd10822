//! Isomorphism search for small PIPs.

use super::Pip;
use crate::error::{Error, Result};
use crate::limits::ISOMORPHISM_CAP;
use crate::set::ElementSet;

type Signature = (usize, usize, usize, usize, usize);

fn signatures(p: &Pip) -> Vec<Signature> {
    let covers = p.hasse_covers();
    (0..p.n)
        .map(|x| {
            let hasse_in = covers.iter().filter(|&&(_, b)| b == x).count();
            let hasse_out = covers.iter().filter(|&&(a, _)| a == x).count();
            (
                p.down[x].len(),
                p.up[x].len(),
                hasse_in,
                hasse_out,
                p.incons[x].len(),
            )
        })
        .collect()
}

impl Pip {
    /// A bijection `f` with `f[x]` in `other` preserving `≤` and `↔`
    /// in both directions, if one exists.
    pub fn isomorphism(&self, other: &Pip) -> Result<Option<Vec<usize>>> {
        let n = self.n.max(other.n);
        if n > ISOMORPHISM_CAP {
            return Err(Error::CapExceeded {
                what: "isomorphism search",
                size: n as u128,
                cap: ISOMORPHISM_CAP as u128,
            });
        }
        if self.n != other.n
            || self.order_relation_count() != other.order_relation_count()
            || self.inconsistent_pair_count() != other.inconsistent_pair_count()
        {
            return Ok(None);
        }
        let sig_p = signatures(self);
        let sig_q = signatures(other);
        let mut sorted_p = sig_p.clone();
        let mut sorted_q = sig_q.clone();
        sorted_p.sort();
        sorted_q.sort();
        if sorted_p != sorted_q {
            return Ok(None);
        }
        // Most constrained first: rarest signature.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&x| (sig_p.iter().filter(|&&s| s == sig_p[x]).count(), x));
        let candidates: Vec<ElementSet> = (0..self.n)
            .map(|x| (0..other.n).filter(|&y| sig_q[y] == sig_p[x]).collect())
            .collect();
        let mut map = vec![usize::MAX; self.n];
        let found = self.extend(other, &order, 0, &candidates, &mut map, ElementSet::EMPTY);
        Ok(found.then_some(map))
    }

    fn extend(
        &self,
        other: &Pip,
        order: &[usize],
        depth: usize,
        candidates: &[ElementSet],
        map: &mut [usize],
        used: ElementSet,
    ) -> bool {
        let Some(&x) = order.get(depth) else {
            return true;
        };
        for y in candidates[x].difference(used) {
            let compatible = order[..depth].iter().all(|&a| {
                let b = map[a];
                self.leq(a, x) == other.leq(b, y)
                    && self.leq(x, a) == other.leq(y, b)
                    && self.inconsistent(a, x) == other.inconsistent(b, y)
            });
            if compatible {
                map[x] = y;
                if self.extend(other, order, depth + 1, candidates, map, used.with(y)) {
                    return true;
                }
            }
        }
        map[x] = usize::MAX;
        false
    }

    /// Whether `map` is an isomorphism from `self` onto `other`.
    pub fn is_isomorphism(&self, other: &Pip, map: &[usize]) -> bool {
        if self.n != other.n || map.len() != self.n {
            return false;
        }
        let image: ElementSet = map.iter().filter(|&&y| y < other.n).collect();
        if image != other.ground() {
            return false;
        }
        (0..self.n).all(|a| {
            (0..self.n).all(|b| {
                self.leq(a, b) == other.leq(map[a], map[b])
                    && self.inconsistent(a, b) == other.inconsistent(map[a], map[b])
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pip::tests::p7;

    #[test]
    fn reversed_p7_is_isomorphic() {
        let p = p7();
        let perm: Vec<usize> = (0..7).rev().collect();
        let q = p.relabel(&perm).unwrap();
        assert_ne!(p, q);
        let f = p.isomorphism(&q).unwrap().unwrap();
        assert!(p.is_isomorphism(&q, &f));
        let g = q.isomorphism(&p).unwrap().unwrap();
        assert!(q.is_isomorphism(&p, &g));
    }

    #[test]
    fn chain_vs_antichain() {
        assert_eq!(Pip::chain(2).isomorphism(&Pip::antichain(2)).unwrap(), None);
    }

    #[test]
    fn dropping_a_generator_breaks_isomorphism() {
        let covers: Vec<_> = p7().hasse_covers();
        let q = Pip::new(7, &covers, &[(3, 5), (4, 5)]).unwrap();
        assert_eq!(p7().isomorphism(&q).unwrap(), None);
    }

    #[test]
    fn same_invariants_different_structure() {
        // two 2-chains, inconsistent across at the bottom vs at the top
        let a = Pip::new(4, &[(0, 1), (2, 3)], &[(0, 2)]).unwrap();
        let b = Pip::new(4, &[(0, 1), (2, 3)], &[(1, 3)]).unwrap();
        assert_eq!(a.isomorphism(&b).unwrap(), None);
        assert!(a.isomorphism(&a).unwrap().is_some());
    }

    #[test]
    fn cap() {
        let p = Pip::antichain(13);
        assert!(matches!(p.isomorphism(&p), Err(Error::CapExceeded { .. })));
    }
}
