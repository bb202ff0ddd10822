//! Colourings of crossing complexes and of cubical complexes.
//!
//! Colours are `0..r` internally. A cubical colouring sends each vertex to
//! an `r`-bit label so that every face maps bijectively onto a face of the
//! `r`-cube.

use crate::cubical::{AbstractCubicalComplex, CubicalComplexP};
use crate::error::{Error, Result};
use crate::pip::Pip;
use crate::simplicial::{Graph, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialColoring {
    pub r: usize,
    /// Colour of each label; labels outside the complex are ignored.
    pub assignment: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicalColoring {
    pub r: usize,
    /// Label of each vertex; bit `j` is coordinate `j`.
    pub assignment: Vec<u64>,
}

impl SimplicialColoring {
    pub fn validate(&self, k: &SimplicialComplex) -> Result<()> {
        if self.assignment.len() < k.label_bound() {
            return Err(Error::InvalidColoring(format!(
                "{} colours for {} labels",
                self.assignment.len(),
                k.label_bound()
            )));
        }
        for v in k.vertices() {
            if self.assignment[v] >= self.r {
                return Err(Error::InvalidColoring(format!("vertex {v} has colour {} of {}", self.assignment[v], self.r)));
            }
        }
        for (a, b) in k.graph().edges() {
            if self.assignment[a] == self.assignment[b] {
                return Err(Error::InvalidColoring(format!("edge {{{a},{b}}} is monochromatic")));
            }
        }
        Ok(())
    }
}

/// Vertices ordered by repeatedly removing one of least remaining degree
/// (lowest label on ties), then reversed.
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.len();
    let mut removed = vec![false; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.neighbors(v).len()).collect();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (degree[v], v)).expect("vertex left");
        removed[v] = true;
        for w in g.neighbors(v) {
            degree[w] = degree[w].saturating_sub(1);
        }
        order.push(v);
    }
    order.reverse();
    order
}

fn colour_backtrack(g: &Graph, order: &[usize], depth: usize, r: usize, colour: &mut [usize], used: usize) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    // colours are interchangeable, so never open more than one new one
    for c in 0..r.min(used + 1) {
        if g.neighbors(v).iter().all(|w| colour[w] != c) {
            colour[v] = c;
            if colour_backtrack(g, order, depth + 1, r, colour, used.max(c + 1)) {
                return true;
            }
        }
    }
    colour[v] = usize::MAX;
    false
}

/// A proper colouring of the 1-skeleton with at most `r` colours.
pub fn find_r_coloring(k: &SimplicialComplex, r: usize) -> Option<SimplicialColoring> {
    let g = k.graph();
    let order: Vec<usize> = degeneracy_order(&g).into_iter().filter(|&v| k.vertices().contains(v)).collect();
    let mut colour = vec![usize::MAX; k.label_bound()];
    if !colour_backtrack(&g, &order, 0, r, &mut colour, 0) {
        return None;
    }
    colour.iter_mut().filter(|c| **c == usize::MAX).for_each(|c| *c = 0);
    Some(SimplicialColoring { r, assignment: colour })
}

pub fn chromatic_number(k: &SimplicialComplex) -> usize {
    (0..).find(|&r| find_r_coloring(k, r).is_some()).expect("n colours always suffice")
}

/// Whether a `d`-dimensional complex can be coloured with `d + 1` colours.
pub fn is_balanced_simplicial(k: &SimplicialComplex) -> bool {
    find_r_coloring(k, (k.dim() + 1) as usize).is_some()
}

/// Checks every face: distinct labels, and exactly `dim` varying bits.
fn check_cubical_faces<'a>(faces: impl Iterator<Item = &'a [usize]>, labels: &[u64], r: usize) -> Result<()> {
    let mask = if r >= 64 { u64::MAX } else { (1u64 << r) - 1 };
    if let Some((v, _)) = labels.iter().enumerate().find(|(_, &l)| l & !mask != 0) {
        return Err(Error::InvalidColoring(format!("vertex {v} has a label outside {r} bits")));
    }
    for f in faces {
        let dim = f.len().trailing_zeros();
        let and = f.iter().fold(u64::MAX, |acc, &v| acc & labels[v]);
        let or = f.iter().fold(0, |acc, &v| acc | labels[v]);
        let mut images: Vec<u64> = f.iter().map(|&v| labels[v]).collect();
        images.sort_unstable();
        images.dedup();
        if (and ^ or).count_ones() != dim || images.len() != f.len() {
            return Err(Error::InvalidColoring(format!("face {f:?} is not mapped onto a {dim}-face of the cube")));
        }
    }
    Ok(())
}

impl CubicalColoring {
    pub fn validate(&self, x: &CubicalComplexP) -> Result<()> {
        if self.assignment.len() != x.vertex_count() {
            return Err(Error::InvalidColoring(format!(
                "{} labels for {} vertices",
                self.assignment.len(),
                x.vertex_count()
            )));
        }
        let faces: Vec<Vec<usize>> = x.faces().iter().map(|f| x.face_vertices(f)).collect();
        check_cubical_faces(faces.iter().map(|f| f.as_slice()), &self.assignment, self.r)
    }

    pub fn validate_abstract(&self, a: &AbstractCubicalComplex) -> Result<()> {
        if self.assignment.len() != a.n_vertices {
            return Err(Error::InvalidColoring(format!(
                "{} labels for {} vertices",
                self.assignment.len(),
                a.n_vertices
            )));
        }
        check_cubical_faces(a.faces.iter().map(|f| f.as_slice()), &self.assignment, self.r)
    }

    /// The label as a bit string, coordinate 1 first.
    pub fn bits(&self, v: usize) -> String {
        (0..self.r).map(|j| if self.assignment[v] >> j & 1 == 1 { '1' } else { '0' }).collect()
    }
}

/// Coordinate `j` of vertex `I` is the parity of the number of elements
/// of `I` with colour `j`.
pub fn lift_coloring(x: &CubicalComplexP, kappa: &SimplicialColoring) -> Result<CubicalColoring> {
    let delta = SimplicialComplex::crossing_complex(x.pip())?;
    kappa.validate(&delta)?;
    let assignment = x
        .downsets()
        .iter()
        .map(|i| i.iter().fold(0u64, |acc, e| acc ^ (1u64 << kappa.assignment[e])))
        .collect();
    let lifted = CubicalColoring { r: kappa.r, assignment };
    lifted.validate(x)?;
    Ok(lifted)
}

/// Colour each element by the coordinate its edges flip.
pub fn project_coloring(x: &CubicalComplexP, kappa: &CubicalColoring) -> Result<SimplicialColoring> {
    kappa.validate(x)?;
    let mut colour = vec![usize::MAX; x.pip().len()];
    for &(lo, hi, e) in x.edges() {
        let diff = kappa.assignment[lo] ^ kappa.assignment[hi];
        let j = diff.trailing_zeros() as usize;
        if diff.count_ones() != 1 {
            return Err(Error::InvalidColoring(format!("edge {lo}-{hi} flips {} coordinates", diff.count_ones())));
        }
        if colour[e] != usize::MAX && colour[e] != j {
            return Err(Error::InvalidColoring(format!(
                "hyperplane {e} flips coordinate {} and coordinate {j}",
                colour[e]
            )));
        }
        colour[e] = j;
    }
    Ok(SimplicialColoring {
        r: kappa.r,
        assignment: colour,
    })
}

/// Exhaustive search for a cubical colouring with `r` coordinates.
///
/// Vertices are labelled in breadth-first order from the root (label 0),
/// each by flipping one bit of its parent's label; a face is checked as
/// soon as all its vertices are labelled. Returns `None` when more than
/// `budget` labels are tried without a verdict.
pub fn exhaustive_cubical_coloring(x: &CubicalComplexP, r: usize, budget: u64) -> Option<Option<CubicalColoring>> {
    let n = x.vertex_count();
    let dist = x.distances_from(x.root());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (dist[v], v));
    let mut position = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        position[v] = k;
    }
    let parent: Vec<usize> = order
        .iter()
        .map(|&v| {
            x.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| position[w] < position[v])
                .min_by_key(|&w| position[w])
                .unwrap_or(v)
        })
        .collect();
    // faces of dimension >= 1, keyed by their last vertex in the order
    let mut closing: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    for f in x.faces().iter().filter(|f| f.dim() > 0) {
        let verts = x.face_vertices(f);
        let last = *verts.iter().max_by_key(|&&v| position[v]).expect("nonempty");
        closing[position[last]].push(verts);
    }
    let mut search = Exhaustive {
        order: &order,
        parent: &parent,
        closing: &closing,
        r,
        labels: vec![0; n],
        nodes: 0,
        budget,
    };
    if r == 0 && n > 1 {
        return Some(None);
    }
    match search.extend(1, 0) {
        Verdict::Found => Some(Some(CubicalColoring {
            r,
            assignment: search.labels,
        })),
        Verdict::Exhausted => Some(None),
        Verdict::OutOfBudget => None,
    }
}

enum Verdict {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Exhaustive<'a> {
    order: &'a [usize],
    parent: &'a [usize],
    closing: &'a [Vec<Vec<usize>>],
    r: usize,
    labels: Vec<u64>,
    nodes: u64,
    budget: u64,
}

impl Exhaustive<'_> {
    fn extend(&mut self, depth: usize, used_bits: usize) -> Verdict {
        if depth == self.order.len() {
            return Verdict::Found;
        }
        let v = self.order[depth];
        let base = self.labels[self.parent[depth]];
        // bits are interchangeable until first used
        for j in 0..self.r.min(used_bits + 1) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Verdict::OutOfBudget;
            }
            self.labels[v] = base ^ (1u64 << j);
            let ok = check_cubical_faces(self.closing[depth].iter().map(|f| f.as_slice()), &self.labels, self.r).is_ok();
            if ok {
                match self.extend(depth + 1, used_bits.max(j + 1)) {
                    Verdict::Exhausted => {}
                    other => return other,
                }
            }
        }
        Verdict::Exhausted
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubicalMethod {
    Exhaustive,
    Lift,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedReport {
    pub simplicial: bool,
    pub cubical: bool,
    pub cubical_method: CubicalMethod,
}

/// Default label budget for the exhaustive cubical search.
pub const EXHAUSTIVE_BUDGET: u64 = 2_000_000;

/// Balancedness of the crossing complex and of the cubical complex,
/// decided separately. The cubical side uses exhaustive search on small
/// complexes and a lifted colouring otherwise.
pub fn is_balanced_pair(p: &Pip) -> Result<BalancedReport> {
    let delta = SimplicialComplex::crossing_complex(p)?;
    let x = CubicalComplexP::build(p)?;
    let simplicial = is_balanced_simplicial(&delta);
    let r = x.dim();
    if x.vertex_count() <= 128 {
        if let Some(found) = exhaustive_cubical_coloring(&x, r, EXHAUSTIVE_BUDGET) {
            return Ok(BalancedReport {
                simplicial,
                cubical: found.is_some(),
                cubical_method: CubicalMethod::Exhaustive,
            });
        }
    }
    let cubical = match find_r_coloring(&delta, r) {
        Some(kappa) => lift_coloring(&x, &kappa).is_ok(),
        None => false,
    };
    Ok(BalancedReport {
        simplicial,
        cubical,
        cubical_method: CubicalMethod::Lift,
    })
}

/// Colour `i` for the `i`-th chain of a minimum chain cover.
pub fn dilworth_coloring(p: &Pip) -> Result<SimplicialColoring> {
    let cover = p.min_chain_cover()?;
    let mut assignment = vec![0; p.len()];
    for (i, chain) in cover.chains.iter().enumerate() {
        for x in chain.iter() {
            assignment[x] = i;
        }
    }
    Ok(SimplicialColoring {
        r: cover.len(),
        assignment,
    })
}
