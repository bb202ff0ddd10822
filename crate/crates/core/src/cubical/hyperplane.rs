//! Hyperplanes of `ℂ_P` as complexes in their own right.

use super::{CubicalComplexP, CubicalFace};
use crate::error::{Error, Result};
use crate::pip::SubPip;

/// The hyperplane of element `x`: the complex of the elements consistent
/// and incomparable with `x`, plus the faces of the ambient complex it cuts.
#[derive(Clone, Debug)]
pub struct HyperplaneComplex {
    pub element: usize,
    pub sub: SubPip,
    pub complex: CubicalComplexP,
    /// Ambient faces `C(I, M)` with `x ∈ M`, in face order.
    pub realizing_faces: Vec<usize>,
}

impl HyperplaneComplex {
    /// The face of this hyperplane cut out of ambient face `face` (which
    /// must span `x`): `C(I ∖ ↓x, M ∖ x)` in local labels.
    pub fn midcube(&self, ambient: &CubicalComplexP, face: &CubicalFace) -> Option<CubicalFace> {
        let x = self.element;
        if !face.span.contains(x) {
            return None;
        }
        let below = ambient.pip().below(x);
        let downset = self.sub.local_set(face.downset.difference(below));
        let span = self.sub.local_set(face.span.without(x));
        let local = CubicalFace::new(downset, span);
        self.complex.face_id(&local).map(|_| local)
    }

    /// The ambient face whose midcube is `local`.
    pub fn lift(&self, ambient: &CubicalComplexP, local: &CubicalFace) -> CubicalFace {
        let x = self.element;
        let downset = self.sub.parent_set(local.downset).union(ambient.pip().below(x));
        CubicalFace::new(downset, self.sub.parent_set(local.span).with(x))
    }

    /// For each realizing face, the index of its midcube in `complex`.
    pub fn midcube_map(&self, ambient: &CubicalComplexP) -> Result<Vec<usize>> {
        self.realizing_faces
            .iter()
            .map(|&k| {
                let face = ambient.faces()[k];
                self.midcube(ambient, &face)
                    .and_then(|m| self.complex.face_id(&m))
                    .ok_or_else(|| Error::NotAFace(format!("midcube of {face}")))
            })
            .collect()
    }
}

impl CubicalComplexP {
    pub fn hyperplane_complex(&self, x: usize) -> Result<HyperplaneComplex> {
        let sub = self.pip().crossing_neighborhood(x)?;
        let complex = CubicalComplexP::build(&sub.pip)?;
        let realizing_faces = (0..self.faces().len()).filter(|&k| self.faces()[k].span.contains(x)).collect();
        Ok(HyperplaneComplex {
            element: x,
            sub,
            complex,
            realizing_faces,
        })
    }

    pub fn hyperplane_complexes(&self) -> Result<Vec<HyperplaneComplex>> {
        (0..self.pip().len()).map(|x| self.hyperplane_complex(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pip::tests::p7;
    use crate::pip::Pip;
    use crate::set::ElementSet;
    use crate::simplicial::SimplicialComplex;

    #[test]
    fn p7_hyperplanes() {
        let c = CubicalComplexP::build(&p7()).unwrap();
        let h4 = c.hyperplane_complex(3).unwrap();
        assert_eq!(h4.sub.pip, Pip::antichain(2));
        assert_eq!(h4.sub.labels, vec![2, 4]);
        assert_eq!(h4.complex.face_counts(), vec![4, 4, 1]);
        let h7 = c.hyperplane_complex(6).unwrap();
        assert_eq!(h7.complex.face_counts(), vec![1]);
    }

    #[test]
    fn midcubes_biject() {
        let c = CubicalComplexP::build(&p7()).unwrap();
        for h in c.hyperplane_complexes().unwrap() {
            let map = h.midcube_map(&c).unwrap();
            let mut sorted = map.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, (0..h.complex.faces().len()).collect::<Vec<_>>());
            for (&k, &m) in h.realizing_faces.iter().zip(&map) {
                assert_eq!(h.lift(&c, &h.complex.faces()[m]), c.faces()[k]);
            }
        }
    }

    #[test]
    fn crossing_complex_of_hyperplane_is_link() {
        let p = p7();
        let c = CubicalComplexP::build(&p).unwrap();
        let delta = SimplicialComplex::crossing_complex(&p).unwrap();
        for x in 0..7 {
            let h = c.hyperplane_complex(x).unwrap();
            let local = SimplicialComplex::crossing_complex(&h.sub.pip).unwrap();
            let lifted = local.relabel(7, &h.sub.labels).unwrap();
            let link = delta.link(ElementSet::singleton(x)).unwrap();
            assert_eq!(lifted.faces(), link.faces());
        }
    }
}
