//! Independent reconstructions used as references by the suites.

use crate::cubical::CubicalComplexP;
use crate::set::ElementSet;

/// Splits a downset of a combination into its two halves.
fn halves(d: ElementSet, left_len: usize) -> (ElementSet, ElementSet) {
    (
        d.intersection(ElementSet::full(left_len)),
        ElementSet::from_bits(d.bits() >> left_len),
    )
}

fn check_bijection(map: &[usize], size: usize) -> Result<(), String> {
    let mut seen = vec![false; size];
    for (v, &w) in map.iter().enumerate() {
        if w >= size || std::mem::replace(&mut seen[w], true) {
            return Err(format!("vertex {v} maps to {w}, which is out of range or already used"));
        }
    }
    if map.len() != size {
        return Err(format!("{} vertices against {size}", map.len()));
    }
    Ok(())
}

/// Vertex `I` of the consistent combination goes to the pair
/// `(I ∩ P, I ∩ Q)`, numbered as in the abstract product.
pub(crate) fn product_vertex_map(
    z: &CubicalComplexP,
    x: &CubicalComplexP,
    y: &CubicalComplexP,
) -> Result<Vec<usize>, String> {
    let np = x.pip().len();
    let m = y.vertex_count();
    let map = z
        .downsets()
        .iter()
        .map(|&d| {
            let (l, r) = halves(d, np);
            match (x.vertex_of(l), y.vertex_of(r)) {
                (Some(u), Some(v)) => Ok(u * m + v),
                _ => Err(format!("downset {d} does not split into vertices")),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    check_bijection(&map, x.vertex_count() * m)?;
    Ok(map)
}

/// Vertex `I` of the inconsistent combination lies entirely in one side;
/// numbered as in the abstract wedge (roots glued, `y`'s root dropped).
pub(crate) fn wedge_vertex_map(
    z: &CubicalComplexP,
    x: &CubicalComplexP,
    y: &CubicalComplexP,
) -> Result<Vec<usize>, String> {
    let np = x.pip().len();
    let offset = x.vertex_count();
    let map = z
        .downsets()
        .iter()
        .map(|&d| {
            let (l, r) = halves(d, np);
            if r.is_empty() {
                x.vertex_of(l).ok_or_else(|| format!("{l} is not a vertex of the left side"))
            } else if l.is_empty() {
                let v = y.vertex_of(r).ok_or_else(|| format!("{r} is not a vertex of the right side"))?;
                Ok(offset + v - 1)
            } else {
                Err(format!("downset {d} meets both sides"))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    check_bijection(&map, offset + y.vertex_count() - 1)?;
    Ok(map)
}

/// Vertex sets of all faces as bit rows over the vertex indices.
pub(crate) struct FaceBits {
    words: usize,
    bits: Vec<u64>,
}

impl FaceBits {
    pub fn new(x: &CubicalComplexP) -> Self {
        let words = x.vertex_count().div_ceil(64);
        let mut bits = vec![0u64; words * x.faces().len()];
        for (k, f) in x.faces().iter().enumerate() {
            for v in x.face_vertices(f) {
                bits[k * words + v / 64] |= 1 << (v % 64);
            }
        }
        FaceBits { words, bits }
    }

    pub fn row(&self, k: usize) -> &[u64] {
        &self.bits[k * self.words..(k + 1) * self.words]
    }

    pub fn subset(&self, small: usize, big: usize) -> bool {
        self.row(small).iter().zip(self.row(big)).all(|(a, b)| a & !b == 0)
    }

    /// Whether the vertex sets of `a` and `b` meet.
    pub fn meets(&self, a: usize, b: usize) -> bool {
        self.row(a).iter().zip(self.row(b)).any(|(x, y)| x & y != 0)
    }

    /// Whether the common vertices of `a` and `b` are exactly face `c`.
    pub fn intersection_is(&self, a: usize, b: usize, c: usize) -> bool {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .zip(self.row(c))
            .all(|((x, y), z)| x & y == *z)
    }

    pub fn size(&self, k: usize) -> usize {
        self.row(k).iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pip::{CombineMode, Pip};

    #[test]
    fn maps_are_bijections() {
        let p = Pip::chain(2);
        let q = Pip::antichain(2);
        let (x, y) = (CubicalComplexP::build(&p).unwrap(), CubicalComplexP::build(&q).unwrap());
        let prod = CubicalComplexP::build(&p.combine(&q, CombineMode::Consistent).unwrap()).unwrap();
        assert_eq!(product_vertex_map(&prod, &x, &y).unwrap().len(), 12);
        let wedge = CubicalComplexP::build(&p.combine(&q, CombineMode::Inconsistent).unwrap()).unwrap();
        let map = wedge_vertex_map(&wedge, &x, &y).unwrap();
        assert_eq!(map.len(), 6);
        assert_eq!(map[0], 0);
        assert!(check_bijection(&[0, 0], 2).is_err());
    }

    #[test]
    fn face_bits_agree_with_vertex_lists() {
        let x = CubicalComplexP::build(&Pip::antichain(2)).unwrap();
        let bits = FaceBits::new(&x);
        let square = x.faces().len() - 1;
        for k in 0..x.faces().len() {
            assert!(bits.subset(k, square));
            assert_eq!(bits.size(k), x.face_vertices(&x.faces()[k]).len());
        }
        assert!(!bits.meets(0, 3));
    }
}
