//! Finite abstract simplicial complexes on labels `0..n`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::limits::{self, SIMPLICIAL_FACE_CAP};
use crate::pip::Pip;
use crate::set::{ElementSet, MAX_LABELS};

/// A simple graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<ElementSet>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_LABELS {
            return Err(Error::CapExceeded {
                what: "graph vertex count",
                size: n as u128,
                cap: MAX_LABELS as u128,
            });
        }
        let mut adj = vec![ElementSet::EMPTY; n];
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::Index { label: x, n });
                }
            }
            if a == b {
                return Err(Error::Precondition(format!("loop at vertex {a}")));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(Graph { n, adj })
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle edges are in range")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn neighbors(&self, v: usize) -> ElementSet {
        self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| self.adj[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let full = ElementSet::full(self.n);
        let adj = (0..self.n).map(|v| full.difference(self.adj[v]).without(v)).collect();
        Graph { n: self.n, adj }
    }

    /// The inconsistency graph of a PIP.
    pub fn inconsistency_graph(p: &Pip) -> Graph {
        let adj = (0..p.len()).map(|x| p.inconsistent_with(x)).collect();
        Graph { n: p.len(), adj }
    }
}

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    n: usize,
    vertices: ElementSet,
    /// All faces, `∅` included, in enumeration order.
    faces: Vec<ElementSet>,
    index: HashSet<ElementSet>,
    facets: Vec<ElementSet>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.vertices == other.vertices && self.faces == other.faces
    }
}

impl Eq for SimplicialComplex {}

fn cap_exceeded(size: u128) -> Error {
    Error::CapExceeded {
        what: "simplicial face count",
        size,
        cap: SIMPLICIAL_FACE_CAP,
    }
}

/// Enumerate all `S ⊆ candidates` with `S ∪ {x}` allowed whenever `x` is
/// not in `blocked[y]` for every `y` already chosen.
fn enumerate_compatible(candidates: ElementSet, blocked: &[ElementSet]) -> Result<Vec<ElementSet>> {
    let mut out = Vec::new();
    let mut stack = vec![(ElementSet::EMPTY, candidates)];
    while let Some((current, cands)) = stack.pop() {
        out.push(current);
        if out.len() as u128 > SIMPLICIAL_FACE_CAP {
            return Err(cap_exceeded(out.len() as u128));
        }
        for x in cands {
            let rest = ElementSet::from_bits(cands.bits() & !((2u64 << x) - 1));
            stack.push((current.with(x), rest.difference(blocked[x])));
        }
    }
    Ok(out)
}

impl SimplicialComplex {
    /// Build from a face list that is already closed under subsets.
    fn from_closed(n: usize, vertices: ElementSet, mut faces: Vec<ElementSet>) -> Self {
        faces.sort();
        faces.dedup();
        let index: HashSet<ElementSet> = faces.iter().copied().collect();
        let mut facets: Vec<ElementSet> = faces
            .iter()
            .copied()
            .filter(|f| !vertices.difference(*f).iter().any(|v| index.contains(&f.with(v))))
            .collect();
        facets.sort();
        SimplicialComplex {
            n,
            vertices,
            faces,
            index,
            facets,
        }
    }

    /// Faces already closed under subsets; the vertex set is their union.
    pub(crate) fn from_closed_faces(n: usize, faces: Vec<ElementSet>) -> Self {
        let vertices = faces.iter().fold(ElementSet::EMPTY, |acc, f| acc.union(*f));
        Self::from_closed(n, vertices, faces)
    }

    /// The downward closure of `facets` on vertex set `0..n`.
    ///
    /// Every label below `n` is a vertex, so isolated vertices need not
    /// be listed.
    pub fn from_facets(n: usize, facets: &[ElementSet]) -> Result<Self> {
        if n > MAX_LABELS {
            return Err(Error::CapExceeded {
                what: "simplicial vertex count",
                size: n as u128,
                cap: MAX_LABELS as u128,
            });
        }
        let vertices = ElementSet::full(n);
        let mut total: u128 = n as u128 + 1;
        for f in facets {
            if let Some(label) = f.difference(vertices).first() {
                return Err(Error::Index { label, n });
            }
            total += 1u128 << f.len();
        }
        if total > SIMPLICIAL_FACE_CAP {
            return Err(cap_exceeded(total));
        }
        let mut set: HashSet<ElementSet> = HashSet::new();
        set.insert(ElementSet::EMPTY);
        set.extend(vertices.iter().map(ElementSet::singleton));
        for f in facets {
            set.extend(f.subsets());
        }
        Ok(Self::from_closed(n, vertices, set.into_iter().collect()))
    }

    /// The complex whose faces are the consistent antichains of `p`.
    pub fn crossing_complex(p: &Pip) -> Result<Self> {
        limits::check_elements("PIP ground set", p.len())?;
        let blocked: Vec<ElementSet> = (0..p.len())
            .map(|x| p.comparable_with(x).union(p.inconsistent_with(x)))
            .collect();
        let faces = enumerate_compatible(p.ground(), &blocked)?;
        Ok(Self::from_closed(p.len(), p.ground(), faces))
    }

    /// Faces are the cliques of `g`.
    pub fn clique_complex(g: &Graph) -> Result<Self> {
        let full = ElementSet::full(g.n);
        let blocked: Vec<ElementSet> = (0..g.n).map(|v| full.difference(g.adj[v])).collect();
        let faces = enumerate_compatible(full, &blocked)?;
        Ok(Self::from_closed(g.n, full, faces))
    }

    /// Faces are the independent sets of `g`.
    pub fn anticlique_complex(g: &Graph) -> Result<Self> {
        Self::clique_complex(&g.complement())
    }

    /// Exclusive bound on the vertex labels.
    pub fn label_bound(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> ElementSet {
        self.vertices
    }

    pub fn faces(&self) -> &[ElementSet] {
        &self.faces
    }

    pub fn facets(&self) -> &[ElementSet] {
        &self.facets
    }

    pub fn contains(&self, face: ElementSet) -> bool {
        self.index.contains(&face)
    }

    /// Largest face size minus one; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.faces.last().map_or(-1, |f| f.len() as isize - 1)
    }

    /// `f[i]` counts faces with `i` vertices, so `f[0] = 1` for `∅`.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut f = vec![0; (self.dim() + 2) as usize];
        for face in &self.faces {
            f[face.len()] += 1;
        }
        f
    }

    /// The 1-skeleton, on labels `0..n`.
    pub fn graph(&self) -> Graph {
        let mut adj = vec![ElementSet::EMPTY; self.n];
        for f in self.faces.iter().filter(|f| f.len() == 2) {
            let v = f.to_vec();
            adj[v[0]].insert(v[1]);
            adj[v[1]].insert(v[0]);
        }
        Graph { n: self.n, adj }
    }

    /// Minimal non-faces on the vertex set.
    pub fn missing_faces(&self) -> Vec<ElementSet> {
        let mut out: HashSet<ElementSet> = HashSet::new();
        for &f in &self.faces {
            for v in self.vertices.difference(f) {
                let s = f.with(v);
                if !self.contains(s) && s.iter().all(|x| self.contains(s.without(x))) {
                    out.insert(s);
                }
            }
        }
        let mut out: Vec<_> = out.into_iter().collect();
        out.sort();
        out
    }

    pub fn is_flag(&self) -> bool {
        self.missing_faces().iter().all(|m| m.len() == 2)
    }

    fn require_face(&self, sigma: ElementSet) -> Result<()> {
        if self.contains(sigma) {
            Ok(())
        } else {
            Err(Error::NotAFace(sigma.to_string()))
        }
    }

    /// `{τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`.
    pub fn link(&self, sigma: ElementSet) -> Result<Self> {
        self.require_face(sigma)?;
        let faces: Vec<ElementSet> = self
            .faces
            .iter()
            .copied()
            .filter(|t| t.is_disjoint(sigma) && self.contains(t.union(sigma)))
            .collect();
        let vertices = faces.iter().fold(ElementSet::EMPTY, |acc, f| acc.union(*f));
        Ok(Self::from_closed(self.n, vertices, faces))
    }

    /// `{τ : τ ∪ σ ∈ K}`.
    pub fn closed_star(&self, sigma: ElementSet) -> Result<Self> {
        self.require_face(sigma)?;
        let faces: Vec<ElementSet> = self
            .faces
            .iter()
            .copied()
            .filter(|t| self.contains(t.union(sigma)))
            .collect();
        let vertices = faces.iter().fold(ElementSet::EMPTY, |acc, f| acc.union(*f));
        Ok(Self::from_closed(self.n, vertices, faces))
    }

    fn combined_bound(&self, other: &Self) -> Result<usize> {
        let n = self.n + other.n;
        if n > MAX_LABELS {
            return Err(Error::CapExceeded {
                what: "simplicial vertex count",
                size: n as u128,
                cap: MAX_LABELS as u128,
            });
        }
        Ok(n)
    }

    /// Faces `σ1 ⊔ σ2`; labels of `other` are shifted by `self.label_bound()`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let n = self.combined_bound(other)?;
        let total = self.faces.len() as u128 * other.faces.len() as u128;
        if total > SIMPLICIAL_FACE_CAP {
            return Err(cap_exceeded(total));
        }
        let mut faces = Vec::with_capacity(total as usize);
        for &a in &self.faces {
            for &b in &other.faces {
                faces.push(a.union(b.shifted(self.n)));
            }
        }
        let vertices = self.vertices.union(other.vertices.shifted(self.n));
        Ok(Self::from_closed(n, vertices, faces))
    }

    /// Union of the face sets, `other` shifted by `self.label_bound()`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let n = self.combined_bound(other)?;
        let mut faces = self.faces.clone();
        faces.extend(other.faces.iter().map(|f| f.shifted(self.n)));
        let vertices = self.vertices.union(other.vertices.shifted(self.n));
        Ok(Self::from_closed(n, vertices, faces))
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<ElementSet> {
        let g = self.graph();
        let mut remaining = self.vertices;
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = ElementSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = frontier
                    .iter()
                    .fold(ElementSet::EMPTY, |acc, v| acc.union(g.adj[v]))
                    .difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Rename vertex `v` to `map[v]`, on label bound `n`.
    pub fn relabel(&self, n: usize, map: &[usize]) -> Result<Self> {
        if let Some(&label) = self.vertices.iter().map(|v| &map[v]).find(|&&m| m >= n) {
            return Err(Error::Index { label, n });
        }
        let faces: Vec<_> = self.faces.iter().map(|f| f.map(map)).collect();
        let vertices = self.vertices.map(map);
        if vertices.len() != self.vertices.len() {
            return Err(Error::Precondition("relabelling is not injective".into()));
        }
        Ok(Self::from_closed(n, vertices, faces))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pip::tests::p7;

    fn s(xs: &[usize]) -> ElementSet {
        xs.iter().collect()
    }

    fn s1(xs: &[usize]) -> ElementSet {
        xs.iter().map(|x| x - 1).collect()
    }

    #[test]
    fn p7_from_facets_matches_crossing_complex() {
        let facets: Vec<_> = [&[3, 4, 5][..], &[1, 2], &[1, 5], &[2, 3], &[2, 6]]
            .iter()
            .map(|f| s1(f))
            .collect();
        let k = SimplicialComplex::from_facets(7, &facets).unwrap();
        assert_eq!(k.faces().len(), 16);
        let delta = SimplicialComplex::crossing_complex(&p7()).unwrap();
        assert_eq!(k, delta);
        assert_eq!(delta.face_counts(), vec![1, 7, 7, 1]);
        assert!(delta.facets().contains(&s1(&[7])));
        assert!(delta.is_flag());
        // 7 is comparable or inconsistent with everything else
        assert_eq!(delta.connected_components(), vec![s1(&[1, 2, 3, 4, 5, 6]), s1(&[7])]);
    }

    #[test]
    fn void_and_simplex() {
        let k = SimplicialComplex::from_facets(0, &[]).unwrap();
        assert_eq!(k.faces(), &[ElementSet::EMPTY]);
        assert_eq!(k.dim(), -1);
        assert_eq!(k.facets(), &[ElementSet::EMPTY]);
        let t = SimplicialComplex::from_facets(3, &[s(&[0, 1, 2])]).unwrap();
        assert_eq!(t.faces().len(), 8);
        assert!(SimplicialComplex::from_facets(2, &[s(&[0, 2])]).is_err());
    }

    #[test]
    fn triangle_boundary_is_not_flag() {
        let k = SimplicialComplex::from_facets(3, &[s(&[0, 1]), s(&[1, 2]), s(&[0, 2])]).unwrap();
        assert_eq!(k.missing_faces(), vec![s(&[0, 1, 2])]);
        assert!(!k.is_flag());
    }

    #[test]
    fn clique_and_anticlique() {
        let empty = Graph::new(3, &[]).unwrap();
        assert_eq!(SimplicialComplex::clique_complex(&empty).unwrap().face_counts(), vec![1, 3]);
        assert_eq!(
            SimplicialComplex::anticlique_complex(&empty).unwrap().face_counts(),
            vec![1, 3, 3, 1]
        );
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let tet = SimplicialComplex::clique_complex(&k4).unwrap();
        assert_eq!(tet.face_counts(), vec![1, 4, 6, 4, 1]);
        assert!(tet.is_flag());
    }

    #[test]
    fn graph_pip_is_anticlique() {
        let edges: Vec<_> = [(1, 5), (1, 2), (2, 5), (3, 5), (3, 4)]
            .into_iter()
            .map(|(a, b)| (a - 1, b - 1))
            .collect();
        let g = Graph::new(5, &edges).unwrap();
        let p = Pip::from_graph(5, &edges).unwrap();
        let a = SimplicialComplex::anticlique_complex(&g).unwrap();
        assert_eq!(a, SimplicialComplex::crossing_complex(&p).unwrap());
        let expected: Vec<_> = [(5, 4), (4, 1), (1, 3), (3, 2), (2, 4)]
            .into_iter()
            .map(|(a, b)| s1(&[a, b]))
            .collect();
        let mut edges_of_a: Vec<_> = a.faces().iter().copied().filter(|f| f.len() == 2).collect();
        let mut expected = expected;
        edges_of_a.sort();
        expected.sort();
        assert_eq!(edges_of_a, expected);
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn links_and_stars() {
        let delta = SimplicialComplex::crossing_complex(&p7()).unwrap();
        let lk = delta.link(s1(&[4])).unwrap();
        assert_eq!(lk.vertices(), s1(&[3, 5]));
        assert_eq!(lk.facets(), &[s1(&[3, 5])]);
        let facet = s1(&[3, 4, 5]);
        assert_eq!(delta.link(facet).unwrap().faces(), &[ElementSet::EMPTY]);
        let star = delta.closed_star(s1(&[7])).unwrap();
        assert_eq!(star.faces(), &[ElementSet::EMPTY, s1(&[7])]);
        assert!(matches!(delta.link(s1(&[5, 6])), Err(Error::NotAFace(_))));
    }

    #[test]
    fn join_and_union() {
        let pt = SimplicialComplex::from_facets(1, &[]).unwrap();
        let edge = pt.join(&pt).unwrap();
        assert_eq!(edge.face_counts(), vec![1, 2, 1]);
        let tri = SimplicialComplex::from_facets(3, &[s(&[0, 1, 2])]).unwrap();
        assert_eq!(tri.join(&pt).unwrap().face_counts(), vec![1, 4, 6, 4, 1]);
        let u = tri.disjoint_union(&pt).unwrap();
        assert_eq!(u.faces().len(), 8 + 2 - 1);
        assert_eq!(u.connected_components(), vec![s(&[0, 1, 2]), s(&[3])]);
    }

    #[test]
    fn tree_pip_gives_isolated_points() {
        let covers: Vec<_> = [(1, 4), (4, 7), (1, 5), (5, 8), (5, 9), (2, 6)]
            .into_iter()
            .map(|(a, b)| (a - 1, b - 1))
            .collect();
        let incons: Vec<_> = [(1, 2), (2, 3), (1, 3), (4, 5), (8, 9)]
            .into_iter()
            .map(|(a, b)| (a - 1, b - 1))
            .collect();
        let p = Pip::new(9, &covers, &incons).unwrap();
        let k = SimplicialComplex::crossing_complex(&p).unwrap();
        assert_eq!(k.face_counts(), vec![1, 9]);
        assert_eq!(k.connected_components().len(), 9);
    }

    #[test]
    fn relabel_roundtrip() {
        let delta = SimplicialComplex::crossing_complex(&p7()).unwrap();
        let perm: Vec<usize> = (0..7).rev().collect();
        let back = delta.relabel(7, &perm).unwrap().relabel(7, &perm).unwrap();
        assert_eq!(back, delta);
        assert!(delta.relabel(7, &[0; 7]).is_err());
    }
}
