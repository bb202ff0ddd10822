//! Rooted cubical complexes given only by their vertex sets, and the
//! recovery of a PIP from them.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pip::Pip;
use crate::set::MAX_LABELS;

/// Faces are sorted vertex index lists; singletons are always present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbstractCubicalComplex {
    #[serde(rename = "n")]
    pub n_vertices: usize,
    pub faces: Vec<Vec<usize>>,
    pub root: usize,
}

/// A hyperplane class found by [`AbstractCubicalComplex::extract_pip`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    /// Edges `(u, v)`, `u < v`, crossing the hyperplane.
    pub edges: Vec<(usize, usize)>,
    /// Vertices on the side away from the root.
    pub far_side: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Extraction {
    pub pip: Pip,
    /// Element `i` of `pip` is `hyperplanes[i]`.
    pub hyperplanes: Vec<Hyperplane>,
}

fn log2_exact(n: usize) -> Option<usize> {
    n.is_power_of_two().then(|| n.trailing_zeros() as usize)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn is_subset_sorted(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

impl AbstractCubicalComplex {
    /// Normalises the face list (sorted, deduplicated, singletons added)
    /// and checks labels. Cube structure is checked by [`Self::validate`].
    pub fn new(n_vertices: usize, faces: Vec<Vec<usize>>, root: usize) -> Result<Self> {
        if root >= n_vertices {
            return Err(Error::Index {
                label: root,
                n: n_vertices,
            });
        }
        let mut set: HashSet<Vec<usize>> = (0..n_vertices).map(|v| vec![v]).collect();
        for mut f in faces {
            if let Some(&label) = f.iter().find(|&&v| v >= n_vertices) {
                return Err(Error::Index { label, n: n_vertices });
            }
            f.sort_unstable();
            f.dedup();
            if f.is_empty() {
                return Err(Error::Validation("empty face".into()));
            }
            set.insert(f);
        }
        let mut faces: Vec<Vec<usize>> = set.into_iter().collect();
        faces.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        Ok(AbstractCubicalComplex {
            n_vertices,
            faces,
            root,
        })
    }

    pub fn with_root(&self, root: usize) -> Result<Self> {
        Self::new(self.n_vertices, self.faces.clone(), root)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.faces.iter().filter(|f| f.len() == 2).map(|f| (f[0], f[1])).collect()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_vertices];
        for (u, v) in self.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// `f[i]` counts faces with `2^i` vertices.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for face in &self.faces {
            let d = log2_exact(face.len()).unwrap_or(usize::MAX);
            if d == usize::MAX {
                continue;
            }
            if f.len() <= d {
                f.resize(d + 1, 0);
            }
            f[d] += 1;
        }
        f
    }

    /// Structural checks: faces have `2^k` vertices, each `k`-face has
    /// exactly `2k` faces of half its size inside it and carries a
    /// `k`-cube graph, and facets meeting at a vertex intersect in a face.
    pub fn validate(&self) -> Result<()> {
        let index: HashSet<&[usize]> = self.faces.iter().map(|f| f.as_slice()).collect();
        let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); self.n_vertices];
        for (k, f) in self.faces.iter().enumerate() {
            if log2_exact(f.len()).is_none() {
                return Err(Error::Validation(format!("face {f:?} has {} vertices", f.len())));
            }
            for &v in f {
                incidence[v].push(k);
            }
        }
        let adj = self.adjacency();

        let mut subface_count = vec![0usize; self.faces.len()];
        for g in &self.faces {
            for &k in &incidence[g[0]] {
                let f = &self.faces[k];
                if f.len() == 2 * g.len() && is_subset_sorted(g, f) {
                    subface_count[k] += 1;
                }
            }
        }
        let mut has_superface = vec![false; self.faces.len()];
        for (k, f) in self.faces.iter().enumerate() {
            let dim = log2_exact(f.len()).expect("checked");
            if dim > 0 && subface_count[k] != 2 * dim {
                return Err(Error::Validation(format!(
                    "face {f:?} has {} subfaces of half size, a {dim}-cube has {}",
                    subface_count[k],
                    2 * dim
                )));
            }
            self.check_cube_graph(f, dim, &adj)?;
            for &v in &f[..1] {
                for &j in &incidence[v] {
                    let g = &self.faces[j];
                    if g.len() > f.len() && is_subset_sorted(f, g) {
                        has_superface[k] = true;
                    }
                }
            }
        }

        let facets: Vec<usize> = (0..self.faces.len()).filter(|&k| !has_superface[k]).collect();
        let is_facet: HashSet<usize> = facets.iter().copied().collect();
        for v in 0..self.n_vertices {
            let here: Vec<usize> = incidence[v].iter().copied().filter(|k| is_facet.contains(k)).collect();
            for (i, &a) in here.iter().enumerate() {
                for &b in &here[i + 1..] {
                    let common: Vec<usize> =
                        self.faces[a].iter().copied().filter(|x| self.faces[b].binary_search(x).is_ok()).collect();
                    if common[0] == v && !index.contains(common.as_slice()) {
                        return Err(Error::Validation(format!(
                            "faces {:?} and {:?} meet in {common:?}, which is not a face",
                            self.faces[a], self.faces[b]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_cube_graph(&self, f: &[usize], dim: usize, adj: &[Vec<usize>]) -> Result<()> {
        let local: HashMap<usize, usize> = f.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let inner: Vec<Vec<usize>> = f
            .iter()
            .map(|v| adj[*v].iter().filter_map(|w| local.get(w).copied()).collect())
            .collect();
        if inner.iter().any(|n| n.len() != dim) {
            return Err(Error::Validation(format!("face {f:?} is not {dim}-regular")));
        }
        let mut dist = vec![usize::MAX; f.len()];
        dist[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &w in &inner[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        for d in 0..=dim {
            if dist.iter().filter(|&&x| x == d).count() != binomial(dim, d) {
                return Err(Error::Validation(format!("face {f:?} does not carry a {dim}-cube graph")));
            }
        }
        Ok(())
    }

    /// Recover the PIP: hyperplanes are classes of edges under "opposite
    /// in a square"; `H ≤ H'` when the far side of `H` contains that of
    /// `H'`, and the two are inconsistent when their far sides are disjoint.
    pub fn extract_pip(&self) -> Result<Extraction> {
        self.validate()?;
        let edges = self.edges();
        let edge_id: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        let mut parent: Vec<usize> = (0..edges.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for sq in self.faces.iter().filter(|f| f.len() == 4) {
            let inside: Vec<usize> = (0..4)
                .flat_map(|i| (i + 1..4).map(move |j| (sq[i], sq[j])))
                .filter_map(|e| edge_id.get(&e).copied())
                .collect();
            for (i, &a) in inside.iter().enumerate() {
                for &b in &inside[i + 1..] {
                    let (ea, eb) = (edges[a], edges[b]);
                    let disjoint = ea.0 != eb.0 && ea.0 != eb.1 && ea.1 != eb.0 && ea.1 != eb.1;
                    if disjoint {
                        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                        parent[ra.max(rb)] = ra.min(rb);
                    }
                }
            }
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for k in 0..edges.len() {
            let r = find(&mut parent, k);
            let s = *slot.entry(r).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[s].push(k);
        }
        if classes.len() > MAX_LABELS {
            return Err(Error::CapExceeded {
                what: "hyperplane count",
                size: classes.len() as u128,
                cap: MAX_LABELS as u128,
            });
        }

        let adj = self.adjacency();
        let mut hyperplanes = Vec::new();
        let mut far: Vec<Vec<bool>> = Vec::new();
        for class in &classes {
            let cut: HashSet<(usize, usize)> = class.iter().map(|&k| edges[k]).collect();
            let mut comp = vec![usize::MAX; self.n_vertices];
            let mut count = 0;
            for start in 0..self.n_vertices {
                if comp[start] != usize::MAX {
                    continue;
                }
                comp[start] = count;
                let mut queue = VecDeque::from([start]);
                while let Some(u) = queue.pop_front() {
                    for &w in &adj[u] {
                        if comp[w] == usize::MAX && !cut.contains(&(u.min(w), u.max(w))) {
                            comp[w] = count;
                            queue.push_back(w);
                        }
                    }
                }
                count += 1;
            }
            if count != 2 || cut.iter().any(|&(u, v)| comp[u] == comp[v]) {
                return Err(Error::Validation(format!(
                    "hyperplane through edge {:?} does not split the complex in two",
                    edges[class[0]]
                )));
            }
            let root_side = comp[self.root];
            let side: Vec<bool> = comp.iter().map(|&c| c != root_side).collect();
            hyperplanes.push(Hyperplane {
                edges: class.iter().map(|&k| edges[k]).collect(),
                far_side: (0..self.n_vertices).filter(|&v| side[v]).collect(),
            });
            far.push(side);
        }

        let n = hyperplanes.len();
        let mut relations = Vec::new();
        let mut incons = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let contains = (0..self.n_vertices).all(|v| !far[b][v] || far[a][v]);
                if contains {
                    relations.push((a, b));
                }
                let disjoint = (0..self.n_vertices).all(|v| !(far[a][v] && far[b][v]));
                if a < b && disjoint {
                    incons.push((a, b));
                }
            }
        }
        let pip = Pip::new(n, &relations, &incons).map_err(|e| Error::Validation(format!("hyperplanes do not form a PIP: {e}")))?;
        Ok(Extraction { pip, hyperplanes })
    }

    /// Cartesian product; vertex `(u, v)` becomes `u * other.n_vertices + v`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let m = other.n_vertices;
        let mut faces = Vec::with_capacity(self.faces.len() * other.faces.len());
        for f in &self.faces {
            for g in &other.faces {
                faces.push(f.iter().flat_map(|&u| g.iter().map(move |&v| u * m + v)).collect());
            }
        }
        Self::new(self.n_vertices * m, faces, self.root * m + other.root)
    }

    /// Glue the roots together. Vertices of `self` keep their indices; the
    /// other vertices follow in order, skipping `other.root`.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        let offset = self.n_vertices;
        let map = |v: usize| match v.cmp(&other.root) {
            std::cmp::Ordering::Equal => self.root,
            std::cmp::Ordering::Less => offset + v,
            std::cmp::Ordering::Greater => offset + v - 1,
        };
        let mut faces = self.faces.clone();
        faces.extend(other.faces.iter().map(|f| f.iter().map(|&v| map(v)).collect()));
        Self::new(self.n_vertices + other.n_vertices - 1, faces, self.root)
    }

    /// Rename vertex `v` to `map[v]`; faces come back normalised.
    pub fn relabel(&self, map: &[usize]) -> Result<Self> {
        let faces = self.faces.iter().map(|f| f.iter().map(|&v| map[v]).collect()).collect();
        Self::new(self.n_vertices, faces, map[self.root])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::CubicalComplexP;
    use crate::pip::tests::p7;

    fn square() -> AbstractCubicalComplex {
        let faces = vec![vec![0, 1], vec![1, 3], vec![2, 3], vec![0, 2], vec![0, 1, 2, 3]];
        AbstractCubicalComplex::new(4, faces, 0).unwrap()
    }

    #[test]
    fn square_gives_two_antichain() {
        for root in 0..4 {
            let e = square().with_root(root).unwrap().extract_pip().unwrap();
            assert_eq!(e.pip, Pip::antichain(2));
        }
    }

    #[test]
    fn path_gives_chain() {
        let path = AbstractCubicalComplex::new(3, vec![vec![0, 1], vec![1, 2]], 0).unwrap();
        let e = path.extract_pip().unwrap();
        assert_eq!(e.pip, Pip::chain(2));
        assert_eq!(e.hyperplanes[0].edges, vec![(0, 1)]);
        let mid = path.with_root(1).unwrap().extract_pip().unwrap();
        assert_eq!(mid.pip, Pip::from_graph(2, &[(0, 1)]).unwrap());
    }

    #[test]
    fn p7_roundtrip() {
        let p = p7();
        let a = CubicalComplexP::build(&p).unwrap().to_abstract();
        a.validate().unwrap();
        let q = a.extract_pip().unwrap().pip;
        assert!(p.isomorphism(&q).unwrap().is_some());
    }

    #[test]
    fn rejects_bad_faces() {
        let tri = AbstractCubicalComplex::new(3, vec![vec![0, 1, 2]], 0).unwrap();
        assert!(matches!(tri.validate(), Err(Error::Validation(_))));
        // four vertices claimed as a square with no edges
        let bare = AbstractCubicalComplex::new(4, vec![vec![0, 1, 2, 3]], 0).unwrap();
        assert!(bare.validate().is_err());
        // a 4-cycle of edges without the square is not CAT(0)-like: its
        // hyperplanes do not separate
        let cycle = AbstractCubicalComplex::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]], 0).unwrap();
        cycle.validate().unwrap();
        assert!(matches!(cycle.extract_pip(), Err(Error::Validation(_))));
        assert!(AbstractCubicalComplex::new(2, vec![vec![0, 2]], 0).is_err());
        assert!(AbstractCubicalComplex::new(2, vec![], 2).is_err());
    }

    #[test]
    fn two_squares_meeting_in_a_vertex_pair() {
        // two squares sharing two opposite corners but no edge
        let faces = vec![
            vec![0, 1],
            vec![1, 3],
            vec![2, 3],
            vec![0, 2],
            vec![0, 1, 2, 3],
            vec![0, 4],
            vec![4, 3],
            vec![3, 5],
            vec![0, 5],
            vec![0, 3, 4, 5],
        ];
        let a = AbstractCubicalComplex::new(6, faces, 0).unwrap();
        assert!(a.validate().is_err());
    }

    #[test]
    fn product_and_wedge_counts() {
        let edge = AbstractCubicalComplex::new(2, vec![vec![0, 1]], 0).unwrap();
        let sq = edge.product(&edge).unwrap();
        assert_eq!(sq.face_counts(), vec![4, 4, 1]);
        sq.validate().unwrap();
        let w = edge.wedge(&edge).unwrap();
        assert_eq!(w.face_counts(), vec![3, 2]);
    }
}
