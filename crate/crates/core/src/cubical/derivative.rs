//! The derivative complex: pairs of opposite facets of a cube.
//!
//! Its elements are the unordered pairs `{b, c}` of faces that have no
//! meet but share a cover, ordered by `{b, c} ⪯ {b', c'}` when `b ⊆ b'`
//! and `c ⊆ c'` (or crosswise).

use std::collections::HashSet;

use super::{CubicalComplexP, CubicalFace, HyperplaneComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DerivativeElement {
    /// The two faces, smaller index first.
    pub faces: (usize, usize),
    /// Their common cover.
    pub cover: usize,
    /// The direction of the cover the two faces are opposite in.
    pub direction: usize,
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct DerivativeComplex {
    pub elements: Vec<DerivativeElement>,
    /// `partners[f]`: `(g, e)` with element `e = {f, g}`.
    partners: Vec<Vec<(usize, usize)>>,
    /// Element indices per connected component, ordered by least member.
    pub components: Vec<Vec<usize>>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Every subface `C(I ∖ N, K)` with `N, K` disjoint subsets of `M`.
fn subfaces(face: &CubicalFace) -> impl Iterator<Item = CubicalFace> + '_ {
    face.span.subsets().flat_map(move |k| {
        face.span
            .difference(k)
            .subsets()
            .map(move |n| CubicalFace::new(face.downset.difference(n), k))
    })
}

impl DerivativeComplex {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `f[i]` counts elements of dimension `i`.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for e in &self.elements {
            if f.len() <= e.dim {
                f.resize(e.dim + 1, 0);
            }
            f[e.dim] += 1;
        }
        f
    }

    /// The order relation, straight from its definition.
    pub fn precedes(&self, x: &CubicalComplexP, small: usize, big: usize) -> bool {
        let f = |k: usize| &x.faces()[k];
        let (b, c) = self.elements[small].faces;
        let (b2, c2) = self.elements[big].faces;
        (f(b2).contains(f(b)) && f(c2).contains(f(c))) || (f(c2).contains(f(b)) && f(b2).contains(f(c)))
    }

    /// All elements `⪯ e`, found through the subfaces of one side of `e`.
    pub fn elements_below(&self, x: &CubicalComplexP, e: usize) -> Vec<usize> {
        let (p, q) = self.elements[e].faces;
        let big_q = &x.faces()[q];
        let mut out = Vec::new();
        for s in subfaces(&x.faces()[p]) {
            let s = x.face_id(&s).expect("subface of a face is a face");
            for &(t, d) in &self.partners[s] {
                if big_q.contains(&x.faces()[t]) {
                    out.push(d);
                }
            }
        }
        out
    }

    /// Check that the direct complex is the disjoint union of the
    /// hyperplane complexes, via the midcube of each element's cover.
    ///
    /// Returns, per element, `(direction, face index in that hyperplane)`.
    pub fn match_hyperplanes(
        &self,
        x: &CubicalComplexP,
        hyperplanes: &[HyperplaneComplex],
    ) -> Result<Vec<(usize, usize)>, String> {
        let mut image = Vec::with_capacity(self.len());
        let mut used = HashSet::new();
        for (k, e) in self.elements.iter().enumerate() {
            let h = &hyperplanes[e.direction];
            let cover = x.faces()[e.cover];
            let local = h
                .midcube(x, &cover)
                .ok_or_else(|| format!("element {k}: midcube of {cover} is not in hyperplane {}", e.direction))?;
            let id = h.complex.face_id(&local).expect("midcube checked");
            if local.dim() != e.dim {
                return Err(format!("element {k}: dimension {} maps to {}", e.dim, local.dim()));
            }
            if !used.insert((e.direction, id)) {
                return Err(format!("element {k}: image {local} in hyperplane {} hit twice", e.direction));
            }
            image.push((e.direction, id));
        }
        let total: usize = hyperplanes.iter().map(|h| h.complex.faces().len()).sum();
        if total != self.len() {
            return Err(format!("{} elements but {total} hyperplane faces", self.len()));
        }
        for big in 0..self.len() {
            let below = self.elements_below(x, big);
            let expected = 3usize.pow(self.elements[big].dim as u32);
            if below.len() != expected {
                return Err(format!(
                    "element {big}: {} elements below, a {}-cube has {expected} faces",
                    below.len(),
                    self.elements[big].dim
                ));
            }
            let (hx, hid) = image[big];
            let target = hyperplanes[hx].complex.faces()[hid];
            for d in below {
                let (dx, did) = image[d];
                if dx != hx || !target.contains(&hyperplanes[dx].complex.faces()[did]) {
                    return Err(format!("order not preserved between elements {d} and {big}"));
                }
            }
        }
        let live = hyperplanes.iter().filter(|h| !h.complex.faces().is_empty()).count();
        if self.components.len() != live {
            return Err(format!("{} components but {live} hyperplanes", self.components.len()));
        }
        for comp in &self.components {
            let dir = self.elements[comp[0]].direction;
            if comp.iter().any(|&e| self.elements[e].direction != dir) {
                return Err(format!("component of element {} mixes directions", comp[0]));
            }
            if comp.len() != hyperplanes[dir].complex.faces().len() {
                return Err(format!("component for direction {dir} has the wrong size"));
            }
        }
        Ok(image)
    }
}

impl CubicalComplexP {
    /// Builds the derivative complex from its definition: for every face,
    /// the pairs of covered faces without a meet.
    pub fn derivative_direct(&self) -> DerivativeComplex {
        let mut elements = Vec::new();
        let mut partners = vec![Vec::new(); self.faces().len()];
        let mut seen = HashSet::new();
        for (k, f) in self.faces().iter().enumerate() {
            let covered = f.lower_covers();
            for i in 0..covered.len() {
                for j in i + 1..covered.len() {
                    let (a, b) = (covered[i], covered[j]);
                    if a.meet(&b).is_some() {
                        continue;
                    }
                    let (ia, ib) = (self.face_id(&a).expect("face"), self.face_id(&b).expect("face"));
                    let pair = (ia.min(ib), ia.max(ib));
                    if !seen.insert(pair) {
                        continue;
                    }
                    let direction = f.span.difference(a.span).first().expect("covered face drops a direction");
                    let e = elements.len();
                    elements.push(DerivativeElement {
                        faces: pair,
                        cover: k,
                        direction,
                        dim: a.dim(),
                    });
                    partners[pair.0].push((pair.1, e));
                    partners[pair.1].push((pair.0, e));
                }
            }
        }
        let mut d = DerivativeComplex {
            elements,
            partners,
            components: Vec::new(),
        };
        // components through covering relations only
        let mut uf = UnionFind((0..d.len()).collect());
        for big in 0..d.len() {
            let (p, q) = d.elements[big].faces;
            let big_q = self.faces()[q];
            for s in self.faces()[p].lower_covers() {
                let s = self.face_id(&s).expect("face");
                for &(t, small) in &d.partners[s] {
                    if big_q.contains(&self.faces()[t]) {
                        uf.union(small, big);
                    }
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; d.len()];
        for e in 0..d.len() {
            let r = uf.find(e);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(e);
        }
        d.components = groups;
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pip::tests::p7;
    use crate::pip::Pip;

    #[test]
    fn p7_derivative_is_derivative_of_f() {
        let c = CubicalComplexP::build(&p7()).unwrap();
        let d = c.derivative_direct();
        assert_eq!(d.face_counts(), vec![24, 20, 3]);
        assert_eq!(d.components.len(), 7);
        let h = c.hyperplane_complexes().unwrap();
        d.match_hyperplanes(&c, &h).unwrap();
    }

    #[test]
    fn below_agrees_with_definition() {
        let c = CubicalComplexP::build(&p7()).unwrap();
        let d = c.derivative_direct();
        for big in 0..d.len() {
            let mut fast = d.elements_below(&c, big);
            fast.sort();
            let slow: Vec<usize> = (0..d.len()).filter(|&s| d.precedes(&c, s, big)).collect();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn single_edge() {
        let c = CubicalComplexP::build(&Pip::antichain(1)).unwrap();
        let d = c.derivative_direct();
        assert_eq!(d.face_counts(), vec![1]);
        assert_eq!(d.components.len(), 1);
    }

    #[test]
    fn small_example_components() {
        // A<D, B<D, C free; labels A=0, B=1, C=2, D=3
        let p = Pip::new(4, &[(0, 3), (1, 3)], &[]).unwrap();
        let c = CubicalComplexP::build(&p).unwrap();
        assert_eq!(c.vertex_count(), 10);
        let d = c.derivative_direct();
        let mut sizes: Vec<Vec<usize>> = d
            .components
            .iter()
            .map(|comp| {
                let mut f = vec![0; 3];
                for &e in comp {
                    f[d.elements[e].dim] += 1;
                }
                while f.last() == Some(&0) {
                    f.pop();
                }
                f
            })
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![vec![2, 1], vec![4, 4, 1], vec![4, 4, 1], vec![5, 5, 1]]);
    }
}
