//! The rooted CAT(0) cubical complex of a PIP.
//!
//! Vertices are the consistent downsets `I`; faces are the cubes
//! `C(I, M) = {I ∖ N : N ⊆ M}` for `M ⊆ max I`. The root is `∅`.

mod abstract_complex;
mod derivative;
mod hyperplane;

pub use abstract_complex::{AbstractCubicalComplex, Extraction, Hyperplane};
pub use derivative::{DerivativeComplex, DerivativeElement};
pub use hyperplane::HyperplaneComplex;

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::limits::{self, CUBICAL_FACE_CAP};
use crate::pip::{CombineMode, Pip};
use crate::set::ElementSet;
use crate::simplicial::SimplicialComplex;

/// The cube `C(I, M)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CubicalFace {
    /// `I`, a consistent downset.
    pub downset: ElementSet,
    /// `M ⊆ max I`, the directions the face spans.
    pub span: ElementSet,
}

impl Ord for CubicalFace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.span.len(), self.downset, self.span).cmp(&(other.span.len(), other.downset, other.span))
    }
}

impl PartialOrd for CubicalFace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CubicalFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({}, {})", self.downset, self.span)
    }
}

impl CubicalFace {
    pub fn new(downset: ElementSet, span: ElementSet) -> Self {
        CubicalFace { downset, span }
    }

    pub fn vertex(downset: ElementSet) -> Self {
        CubicalFace::new(downset, ElementSet::EMPTY)
    }

    pub fn dim(&self) -> usize {
        self.span.len()
    }

    /// `I ∖ M`, the vertex of the face closest to the root.
    pub fn base(&self) -> ElementSet {
        self.downset.difference(self.span)
    }

    /// The downsets `I ∖ N`, `N ⊆ M`.
    pub fn vertex_sets(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.span.subsets().map(move |n| self.downset.difference(n))
    }

    pub fn has_vertex(&self, j: ElementSet) -> bool {
        j.is_subset(self.downset) && self.downset.difference(j).is_subset(self.span)
    }

    /// `other ⊆ self`, i.e. `M' ⊆ M` and `I ∖ M ⊆ I' ⊆ I`.
    pub fn contains(&self, other: &CubicalFace) -> bool {
        other.span.is_subset(self.span) && self.base().is_subset(other.downset) && other.downset.is_subset(self.downset)
    }

    /// The greatest common subface, if the two faces intersect.
    pub fn meet(&self, other: &CubicalFace) -> Option<CubicalFace> {
        let common = self.downset.intersection(other.downset);
        if self.base().union(other.base()).is_subset(common) {
            Some(CubicalFace::new(common, self.span.intersection(other.span)))
        } else {
            None
        }
    }

    /// The `2·dim` faces covered by this one: `C(I, M∖x)` and
    /// `C(I∖x, M∖x)` for `x ∈ M`.
    pub fn lower_covers(&self) -> Vec<CubicalFace> {
        self.span
            .iter()
            .flat_map(|x| {
                let m = self.span.without(x);
                [CubicalFace::new(self.downset, m), CubicalFace::new(self.downset.without(x), m)]
            })
            .collect()
    }
}

/// A facet `C(↓A, A)` and its antichain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Facet {
    pub antichain: ElementSet,
    pub face: usize,
}

#[derive(Clone, Debug)]
pub struct CubicalComplexP {
    pip: Pip,
    downsets: Vec<ElementSet>,
    vertex_index: HashMap<ElementSet, usize>,
    /// Sorted so that face `v` is vertex `v` for `v < downsets.len()`.
    faces: Vec<CubicalFace>,
    face_index: HashMap<CubicalFace, usize>,
    /// `(lower vertex, upper vertex, direction)`.
    edges: Vec<(usize, usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl CubicalComplexP {
    pub fn build(pip: &Pip) -> Result<Self> {
        limits::check_elements("PIP ground set", pip.len())?;
        let antichains = pip.consistent_antichains()?;
        let total: u128 = antichains.iter().map(|a| 1u128 << a.len()).sum();
        if total > CUBICAL_FACE_CAP {
            return Err(Error::CapExceeded {
                what: "cubical face count",
                size: total,
                cap: CUBICAL_FACE_CAP,
            });
        }
        let mut faces = Vec::with_capacity(total as usize);
        for &a in &antichains {
            let i = pip.down_closure(a);
            faces.extend(a.subsets().map(|m| CubicalFace::new(i, m)));
        }
        faces.sort();
        let downsets: Vec<ElementSet> = faces.iter().take_while(|f| f.dim() == 0).map(|f| f.downset).collect();
        let vertex_index: HashMap<ElementSet, usize> = downsets.iter().enumerate().map(|(k, &d)| (d, k)).collect();
        let face_index: HashMap<CubicalFace, usize> = faces.iter().enumerate().map(|(k, &f)| (f, k)).collect();
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); downsets.len()];
        for f in faces.iter().filter(|f| f.dim() == 1) {
            let x = f.span.first().expect("edge has a direction");
            let lo = vertex_index[&f.downset.without(x)];
            let hi = vertex_index[&f.downset];
            edges.push((lo, hi, x));
            adjacency[lo].push(hi);
            adjacency[hi].push(lo);
        }
        Ok(CubicalComplexP {
            pip: pip.clone(),
            downsets,
            vertex_index,
            faces,
            face_index,
            edges,
            adjacency,
        })
    }

    pub fn pip(&self) -> &Pip {
        &self.pip
    }

    /// The vertex of the empty downset.
    pub fn root(&self) -> usize {
        0
    }

    pub fn vertex_count(&self) -> usize {
        self.downsets.len()
    }

    pub fn downsets(&self) -> &[ElementSet] {
        &self.downsets
    }

    pub fn downset(&self, v: usize) -> ElementSet {
        self.downsets[v]
    }

    pub fn vertex_of(&self, downset: ElementSet) -> Option<usize> {
        self.vertex_index.get(&downset).copied()
    }

    pub fn faces(&self) -> &[CubicalFace] {
        &self.faces
    }

    pub fn face_id(&self, face: &CubicalFace) -> Option<usize> {
        self.face_index.get(face).copied()
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn dim(&self) -> usize {
        self.faces.last().map_or(0, |f| f.dim())
    }

    /// `f[i]` counts the `i`-dimensional faces.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim() + 1];
        for face in &self.faces {
            f[face.dim()] += 1;
        }
        f
    }

    /// Indicator vector of the downset of `v`, in label order.
    pub fn embed_coordinates(&self, v: usize) -> Vec<u8> {
        let d = self.downsets[v];
        (0..self.pip.len()).map(|x| d.contains(x) as u8).collect()
    }

    /// Vertex indices of a face, in vertex order.
    pub fn face_vertices(&self, face: &CubicalFace) -> Vec<usize> {
        let mut v: Vec<usize> = face.vertex_sets().map(|d| self.vertex_index[&d]).collect();
        v.sort_unstable();
        v
    }

    pub fn face_contains(&self, big: &CubicalFace, small: &CubicalFace) -> bool {
        big.contains(small)
    }

    pub fn face_meet(&self, a: &CubicalFace, b: &CubicalFace) -> Option<CubicalFace> {
        a.meet(b)
    }

    /// All covering pairs `(smaller, larger)` as face indices.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (k, f) in self.faces.iter().enumerate() {
            for g in f.lower_covers() {
                out.push((self.face_index[&g], k));
            }
        }
        out.sort_unstable();
        out
    }

    /// Faces covering `face`: `C(I, M+x)` for `x ∈ max I ∖ M`, and
    /// `C(I+x, M+x)` when `I+x` is a vertex and `x` lies above no element of `M`.
    pub fn upper_covers(&self, face: &CubicalFace) -> Vec<CubicalFace> {
        let p = &self.pip;
        let mut out = Vec::new();
        for x in p.maximal(face.downset).difference(face.span) {
            out.push(CubicalFace::new(face.downset, face.span.with(x)));
        }
        for x in p.ground().difference(face.downset) {
            let up = face.downset.with(x);
            let above_span = face.span.iter().any(|m| p.lt(m, x));
            if !above_span && self.vertex_index.contains_key(&up) {
                out.push(CubicalFace::new(up, face.span.with(x)));
            }
        }
        out
    }

    /// Maximal faces, each recorded with its antichain `M`.
    pub fn facets(&self) -> Vec<Facet> {
        self.faces
            .iter()
            .enumerate()
            .filter(|(_, f)| self.upper_covers(f).is_empty())
            .map(|(k, f)| Facet {
                antichain: f.span,
                face: k,
            })
            .collect()
    }

    /// The sub-PIP whose crossing complex is the link of `v`:
    /// `max J ∪ min{x ∉ J : x consistent with J}`.
    pub fn link_elements(&self, v: usize) -> ElementSet {
        let p = &self.pip;
        let j = self.downsets[v];
        let compatible: ElementSet = p
            .ground()
            .difference(j)
            .iter()
            .filter(|&x| p.inconsistent_with(x).is_disjoint(j))
            .collect();
        p.maximal(j).union(p.minimal(compatible))
    }

    /// Link of `v` as a crossing complex, on the element labels.
    pub fn vertex_link(&self, v: usize) -> Result<SimplicialComplex> {
        let sub = self.pip.induced(self.link_elements(v));
        SimplicialComplex::crossing_complex(&sub.pip)?.relabel(self.pip.len(), &sub.labels)
    }

    /// Link of `v` read off the faces containing it: one simplex `M` per
    /// face `C(I, M)` through `v`.
    pub fn vertex_link_direct(&self, v: usize) -> SimplicialComplex {
        let j = self.downsets[v];
        let spans: Vec<ElementSet> = self.faces.iter().filter(|f| f.has_vertex(j)).map(|f| f.span).collect();
        SimplicialComplex::from_closed_faces(self.pip.len(), spans)
    }

    /// Direct links of every vertex, in one pass over the faces.
    pub fn vertex_links_direct(&self) -> Vec<SimplicialComplex> {
        let mut spans = vec![Vec::new(); self.vertex_count()];
        for f in &self.faces {
            for d in f.vertex_sets() {
                spans[self.vertex_index[&d]].push(f.span);
            }
        }
        spans
            .into_iter()
            .map(|s| SimplicialComplex::from_closed_faces(self.pip.len(), s))
            .collect()
    }

    /// Whether the 1-skeleton stays connected after deleting `v` and every
    /// face through it.
    fn connected_without(&self, removed: Option<usize>) -> bool {
        let n = self.vertex_count();
        let Some(start) = (0..n).find(|&u| Some(u) != removed) else {
            return true;
        };
        let mut seen = vec![false; n];
        if let Some(r) = removed {
            seen[r] = true;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n - removed.is_some() as usize
    }

    pub fn cut_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| !self.connected_without(Some(v))).collect()
    }

    /// Breadth-first distances along edges.
    pub fn distances_from(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn geodesic_distance(&self, u: usize, v: usize) -> usize {
        self.distances_from(u)[v]
    }

    /// A vertex `w∞` with every vertex on some shortest path from the root to it.
    pub fn interval_witness(&self) -> Option<usize> {
        let d0 = self.distances_from(self.root());
        let far = *d0.iter().max()?;
        (0..self.vertex_count()).filter(|&v| d0[v] == far).find(|&v| {
            let dv = self.distances_from(v);
            (0..self.vertex_count()).all(|w| d0[w] + dv[w] == far)
        })
    }

    /// Whether every facet contains the root.
    pub fn is_closed_star_of_root(&self) -> bool {
        self.facets().iter().all(|f| {
            let face = self.faces[f.face];
            face.downset == face.span
        })
    }

    /// Whether the hyperplanes of the elements in `s` share a point, i.e.
    /// some face spans all of them.
    pub fn hyperplanes_commonly_intersect(&self, s: ElementSet) -> bool {
        self.faces.iter().any(|f| s.is_subset(f.span))
    }

    /// `ℂ_P × ℂ_Q`, as the complex of the consistent combination.
    pub fn product(&self, other: &Self) -> Result<Self> {
        Self::build(&self.pip.combine(&other.pip, CombineMode::Consistent)?)
    }

    /// The two complexes glued at their roots, as the complex of the
    /// inconsistent combination.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        Self::build(&self.pip.combine(&other.pip, CombineMode::Inconsistent)?)
    }

    /// Forget the PIP: faces become vertex index sets.
    pub fn to_abstract(&self) -> AbstractCubicalComplex {
        let faces = self.faces.iter().map(|f| self.face_vertices(f)).collect();
        AbstractCubicalComplex::new(self.vertex_count(), faces, self.root())
            .expect("complex of a PIP is well formed")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pip::tests::p7;

    fn s1(xs: &[usize]) -> ElementSet {
        xs.iter().map(|x| x - 1).collect()
    }

    #[test]
    fn p7_face_counts() {
        let c = CubicalComplexP::build(&p7()).unwrap();
        assert_eq!(c.face_counts(), vec![16, 24, 10, 1]);
        assert_eq!(c.downset(c.root()), ElementSet::EMPTY);
    }

    #[test]
    fn antichain_is_solid_cube() {
        let c = CubicalComplexP::build(&Pip::antichain(3)).unwrap();
        assert_eq!(c.face_counts(), vec![8, 12, 6, 1]);
        assert_eq!(c.facets().len(), 1);
        let empty = CubicalComplexP::build(&Pip::antichain(0)).unwrap();
        assert_eq!(empty.face_counts(), vec![1]);
    }

    #[test]
    fn coordinates() {
        let c = CubicalComplexP::build(&p7()).unwrap();
        let v = c.vertex_of(s1(&[1, 2, 3, 6])).unwrap();
        assert_eq!(c.embed_coordinates(v), vec![1, 1, 1, 0, 0, 1, 0]);
        assert_eq!(c.embed_coordinates(c.root()), vec![0; 7]);
        for &(lo, hi, x) in c.edges() {
            let a = c.embed_coordinates(lo);
            let b = c.embed_coordinates(hi);
            let diff: Vec<usize> = (0..7).filter(|&i| a[i] != b[i]).collect();
            assert_eq!(diff, vec![x]);
        }
    }

    #[test]
    fn containment_formula_matches_vertex_sets() {
        let c = CubicalComplexP::build(&p7()).unwrap();
        let i = s1(&[1, 2, 3, 6]);
        let edge = CubicalFace::new(i, s1(&[2]));
        let square = CubicalFace::new(i, s1(&[2, 6]));
        assert!(square.contains(&edge));
        assert!(square.contains(&square));
        for a in c.faces() {
            let va: Vec<_> = a.vertex_sets().collect();
            for b in c.faces() {
                let inside = b.vertex_sets().all(|d| va.contains(&d));
                assert_eq!(a.contains(b), inside, "{a} vs {b}");
                let common: Vec<_> = b.vertex_sets().filter(|d| va.contains(d)).collect();
                match a.meet(b) {
                    Some(m) => {
                        let mut got: Vec<_> = m.vertex_sets().collect();
                        let mut want = common.clone();
                        got.sort();
                        want.sort();
                        assert_eq!(got, want);
                    }
                    None => assert!(common.is_empty()),
                }
            }
        }
    }

    #[test]
    fn covers_match_rank_one_containments() {
        let c = CubicalComplexP::build(&p7()).unwrap();
        let mut expected = Vec::new();
        for (i, a) in c.faces().iter().enumerate() {
            for (j, b) in c.faces().iter().enumerate() {
                if b.contains(a) && b.dim() == a.dim() + 1 {
                    expected.push((i, j));
                }
            }
        }
        expected.sort();
        assert_eq!(c.covering_pairs(), expected);
        let cube = c.faces().last().unwrap();
        assert_eq!(cube.lower_covers().len(), 6);
        for (lo, hi) in c.covering_pairs() {
            assert!(c.upper_covers(&c.faces()[lo]).contains(&c.faces()[hi]));
        }
    }

    #[test]
    fn facets_are_maximal_antichains() {
        let p = p7();
        let c = CubicalComplexP::build(&p).unwrap();
        let mut got: Vec<_> = c.facets().iter().map(|f| f.antichain).collect();
        got.sort();
        assert_eq!(got, p.maximal_consistent_antichains().unwrap());
        for f in c.facets() {
            assert_eq!(c.faces()[f.face].downset, p.down_closure(f.antichain));
        }
    }

    #[test]
    fn root_links() {
        let c = CubicalComplexP::build(&p7()).unwrap();
        let link = c.vertex_link(c.root()).unwrap();
        assert_eq!(link.facets(), &[s1(&[1, 2])]);
        let links = c.vertex_links_direct();
        for v in 0..c.vertex_count() {
            let formula = c.vertex_link(v).unwrap();
            assert_eq!(formula, links[v]);
            assert_eq!(formula, c.vertex_link_direct(v));
            assert!(formula.is_flag());
        }
        let a3 = CubicalComplexP::build(&Pip::antichain(3)).unwrap();
        assert_eq!(a3.vertex_link(0).unwrap().face_counts(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn cut_vertex_at_pendant_edge() {
        let c = CubicalComplexP::build(&p7()).unwrap();
        let cut: Vec<_> = c.cut_vertices().into_iter().map(|v| c.downset(v)).collect();
        assert_eq!(cut, vec![s1(&[1, 2, 4, 5])]);
        let wedge = CubicalComplexP::build(&Pip::from_graph(2, &[(0, 1)]).unwrap()).unwrap();
        assert_eq!(wedge.cut_vertices(), vec![wedge.root()]);
        assert!(CubicalComplexP::build(&Pip::antichain(2)).unwrap().cut_vertices().is_empty());
    }

    #[test]
    fn interval_and_star() {
        let chain = CubicalComplexP::build(&Pip::chain(3)).unwrap();
        let w = chain.interval_witness().unwrap();
        assert_eq!(chain.downset(w), ElementSet::full(3));
        assert_eq!(chain.geodesic_distance(chain.root(), w), 3);
        assert!(!chain.is_closed_star_of_root());
        let g5 = Pip::from_graph(5, &[(0, 4), (0, 1), (1, 4), (2, 4), (2, 3)]).unwrap();
        let g = CubicalComplexP::build(&g5).unwrap();
        assert_eq!(g.interval_witness(), None);
        assert!(g.is_closed_star_of_root());
        assert!(CubicalComplexP::build(&Pip::antichain(3)).unwrap().is_closed_star_of_root());
    }

    #[test]
    fn nerve_examples() {
        let c = CubicalComplexP::build(&p7()).unwrap();
        assert!(c.hyperplanes_commonly_intersect(s1(&[3, 4, 5])));
        assert!(!c.hyperplanes_commonly_intersect(s1(&[1, 3])));
        assert!(c.hyperplanes_commonly_intersect(ElementSet::EMPTY));
    }

    #[test]
    fn product_and_wedge() {
        let edge = CubicalComplexP::build(&Pip::antichain(1)).unwrap();
        assert_eq!(edge.product(&edge).unwrap().face_counts(), vec![4, 4, 1]);
        let w = edge.wedge(&edge).unwrap();
        assert_eq!(w.vertex_count(), 3);
    }
}
