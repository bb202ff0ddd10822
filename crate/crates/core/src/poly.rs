//! Exact f-polynomials.
//!
//! A simplicial f-polynomial counts faces by vertex count, so its constant
//! term is the empty face. A cubical one counts faces by dimension, so its
//! constant term is the vertex count.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, One};

use crate::cubical::{CubicalComplexP, DerivativeComplex};
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// A univariate polynomial; `coeffs[i]` is the coefficient of `t^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

pub type IntPolynomial = Polynomial<BigInt>;

impl<C: Num + Clone> Polynomial<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![C::one()] }
    }

    /// `t + a`
    pub fn linear(a: C) -> Self {
        Self::new(vec![a, C::one()])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    /// `p(t + a)`, expanded by Horner's rule.
    pub fn shift(&self, a: C) -> Self {
        let lin = Self::linear(a);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::new(vec![c.clone()]))
    }
}

impl<C: Num + Clone + FromPrimitive> Polynomial<C> {
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * C::from_usize(i).expect("degree fits the scalar"))
                .collect(),
        )
    }

    /// Polynomial from unsigned counts.
    pub fn from_counts(counts: &[usize]) -> Self {
        Self::new(counts.iter().map(|&c| C::from_usize(c).expect("count fits the scalar")).collect())
    }
}

impl<C: Num + Clone> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: Self) -> Polynomial<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<C: Num + Clone> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: Self) -> Polynomial<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<C: Num + Clone> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Self) -> Polynomial<C> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<C: Num + Clone + fmt::Display + PartialOrd> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < C::zero();
            let abs = if negative { C::zero() - c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let unit = abs.is_one();
            match i {
                0 => write!(f, "{abs}")?,
                _ if unit => {}
                _ => write!(f, "{abs}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// A polynomial in `x_1..x_r, y_1..y_r`; keys are exponent vectors of
/// length `2r`, x exponents first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPolynomial<C> {
    r: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

pub type IntMultiPolynomial = MultiPolynomial<BigInt>;

impl<C: Num + Clone> MultiPolynomial<C> {
    pub fn zero(r: usize) -> Self {
        MultiPolynomial { r, terms: BTreeMap::new() }
    }

    /// Colour count; there are `2r` variables.
    pub fn colours(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, C> {
        &self.terms
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: C) {
        assert_eq!(exponents.len(), 2 * self.r);
        let slot = self.terms.entry(exponents.clone()).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn coeff(&self, exponents: &[u32]) -> C {
        self.terms.get(exponents).cloned().unwrap_or_else(C::zero)
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.r);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Set every `y_j` to 1.
    pub fn y_to_one(&self) -> Self {
        let mut out = Self::zero(self.r);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e[self.r..].iter_mut().for_each(|v| *v = 0);
            out.add_term(e, c.clone());
        }
        out
    }

    /// Substitute `x_j → 1 + x_j` for every `j`.
    pub fn shift_x_by_one(&self) -> Self {
        let mut out = Self::zero(self.r);
        for (e, c) in &self.terms {
            let mut term = Self::zero(self.r);
            term.add_term(e[..].iter().enumerate().map(|(k, &v)| if k < self.r { 0 } else { v }).collect(), c.clone());
            for j in 0..self.r {
                let mut one_plus = Self::zero(self.r);
                one_plus.add_term(vec![0; 2 * self.r], C::one());
                let mut xj = vec![0; 2 * self.r];
                xj[j] = 1;
                one_plus.add_term(xj, C::one());
                for _ in 0..e[j] {
                    term = term.mul(&one_plus);
                }
            }
            for (e2, c2) in term.terms {
                out.add_term(e2, c2);
            }
        }
        out
    }

    /// Set every `x_j` to `t` and every `y_j` to 1.
    pub fn specialize(&self) -> Polynomial<C> {
        let mut coeffs: Vec<C> = Vec::new();
        for (e, c) in &self.terms {
            let d = e[..self.r].iter().sum::<u32>() as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, C::zero());
            }
            coeffs[d] = coeffs[d].clone() + c.clone();
        }
        Polynomial::new(coeffs)
    }
}

impl<C: Num + Clone + fmt::Display> fmt::Display for MultiPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // ascending total degree, then exponent order
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(e, _)| (e.iter().sum::<u32>(), e.iter().map(|&v| std::cmp::Reverse(v)).collect::<Vec<_>>()));
        for (k, (e, c)) in terms.into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &v)| v > 0)
                .map(|(i, &v)| {
                    let name = if i < self.r { format!("x{}", i + 1) } else { format!("y{}", i - self.r + 1) };
                    if v == 1 {
                        name
                    } else {
                        format!("{name}^{v}")
                    }
                })
                .collect();
            match (vars.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{c}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// `Σ f_{i-1} t^i`.
pub fn f_poly_simplicial(k: &SimplicialComplex) -> IntPolynomial {
    IntPolynomial::from_counts(&k.face_counts())
}

/// `Σ f_i t^i`.
pub fn f_poly_cubical(x: &CubicalComplexP) -> IntPolynomial {
    IntPolynomial::from_counts(&x.face_counts())
}

/// f-polynomial of a derivative complex, counted by element dimension.
pub fn f_poly_derivative(d: &DerivativeComplex) -> IntPolynomial {
    IntPolynomial::from_counts(&d.face_counts())
}

/// `χ = p(−1)`.
pub fn euler_characteristic<C: Num + Clone + Neg<Output = C>>(p: &Polynomial<C>) -> C {
    p.eval(&-C::one())
}

/// `Σ (−1)^{i−1} i f_i`, which is `p'(−1)`.
pub fn hyperplane_count<C: Num + Clone + Neg<Output = C> + FromPrimitive>(p: &Polynomial<C>) -> C {
    p.derivative().eval(&-C::one())
}

/// Multiply a simplicial f-vector by the matrix with entries `C(j, i)`.
pub fn transform_t(f: &[BigInt]) -> Vec<BigInt> {
    (0..f.len())
        .map(|i| (i..f.len()).map(|j| binomial(j, i) * &f[j]).sum())
        .collect()
}

/// The inverse, with entries `(−1)^{j−i} C(j, i)`.
pub fn transform_t_inverse(f: &[BigInt]) -> Vec<BigInt> {
    (0..f.len())
        .map(|i| {
            (i..f.len())
                .map(|j| {
                    let b = binomial(j, i) * &f[j];
                    if (j - i) % 2 == 0 {
                        b
                    } else {
                        -b
                    }
                })
                .sum()
        })
        .collect()
}

/// `Σ_F ∏_{v ∈ F} x_{c(v)}` with `colour[v] < r`.
pub fn coloured_f_simplicial(k: &SimplicialComplex, colour: &[usize], r: usize) -> Result<IntMultiPolynomial> {
    let mut out = IntMultiPolynomial::zero(r);
    for face in k.faces() {
        let mut e = vec![0u32; 2 * r];
        for v in face.iter() {
            let c = *colour
                .get(v)
                .filter(|&&c| c < r)
                .ok_or_else(|| Error::InvalidColoring(format!("vertex {v} has no colour below {r}")))?;
            e[c] += 1;
        }
        out.add_term(e, BigInt::one());
    }
    Ok(out)
}

/// `Σ_F ∏_{j varying on F} x_j ∏_{j constantly 1 on F} y_j`, where
/// `image[v]` is the `r`-bit label of vertex `v`.
pub fn coloured_f_cubical(x: &CubicalComplexP, image: &[u64], r: usize) -> Result<IntMultiPolynomial> {
    if image.len() != x.vertex_count() {
        return Err(Error::InvalidColoring(format!(
            "{} labels for {} vertices",
            image.len(),
            x.vertex_count()
        )));
    }
    let mut out = IntMultiPolynomial::zero(r);
    for face in x.faces() {
        let verts = x.face_vertices(face);
        let all_and = verts.iter().fold(u64::MAX, |acc, &v| acc & image[v]);
        let all_or = verts.iter().fold(0, |acc, &v| acc | image[v]);
        let mut e = vec![0u32; 2 * r];
        for j in 0..r {
            let varying = (all_and ^ all_or) >> j & 1 == 1;
            if varying {
                e[j] = 1;
            } else if all_and >> j & 1 == 1 {
                e[r + j] = 1;
            }
        }
        out.add_term(e, BigInt::one());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pip::tests::p7;
    use crate::pip::Pip;
    use num_traits::Zero;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn p7_polynomials() {
        let p = p7();
        let delta = f_poly_simplicial(&SimplicialComplex::crossing_complex(&p).unwrap());
        let cube = f_poly_cubical(&CubicalComplexP::build(&p).unwrap());
        assert_eq!(delta.to_string(), "1 + 7*t + 7*t^2 + t^3");
        assert_eq!(cube.to_string(), "16 + 24*t + 10*t^2 + t^3");
        assert_eq!(delta.shift(BigInt::one()), cube);
        assert_eq!(euler_characteristic(&cube), BigInt::one());
        assert_eq!(hyperplane_count(&cube), BigInt::from(7));
        assert_eq!(cube.derivative().to_string(), "24 + 20*t + 3*t^2");
    }

    #[test]
    fn small_cases() {
        let a3 = f_poly_cubical(&CubicalComplexP::build(&Pip::antichain(3)).unwrap());
        let two_plus_t = IntPolynomial::new(ints(&[2, 1]));
        assert_eq!(a3, &(&two_plus_t * &two_plus_t) * &two_plus_t);
        assert_eq!(hyperplane_count(&a3), BigInt::from(3));
        let pt = IntPolynomial::one();
        assert_eq!(euler_characteristic(&pt), BigInt::one());
        assert_eq!(hyperplane_count(&pt), BigInt::zero());
        assert_eq!(a3.shift(BigInt::zero()), a3);
        assert_eq!(a3.shift(BigInt::from(5)).degree(), Some(3));
    }

    #[test]
    fn display_signs() {
        assert_eq!(IntPolynomial::new(ints(&[0, -1, 0, 2])).to_string(), "-t + 2*t^3");
        assert_eq!(IntPolynomial::new(ints(&[3, 0, -1])).to_string(), "3 - t^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::new(ints(&[0, 0, 0])), IntPolynomial::zero());
    }

    #[test]
    fn transform_matrices() {
        assert_eq!(transform_t(&ints(&[1, 7, 7, 1])), ints(&[16, 24, 10, 1]));
        assert_eq!(transform_t_inverse(&ints(&[16, 24, 10, 1])), ints(&[1, 7, 7, 1]));
        assert_eq!(transform_t(&ints(&[1])), ints(&[1]));
    }

    #[test]
    fn generic_over_scalar() {
        let p: Polynomial<i64> = Polynomial::new(vec![1, 7, 7, 1]);
        assert_eq!(p.shift(1).coeffs(), &[16, 24, 10, 1]);
        assert_eq!(euler_characteristic(&p.shift(1)), 1);
    }

    #[test]
    fn coloured_single_vertex() {
        let k = SimplicialComplex::from_facets(1, &[]).unwrap();
        let m = coloured_f_simplicial(&k, &[1], 2).unwrap();
        assert_eq!(m.to_string(), "1 + x2");
        assert!(coloured_f_simplicial(&k, &[2], 2).is_err());
    }

    #[test]
    fn shift_x_matches_substitution() {
        // 1 + x1*x2 -> 1 + (1+x1)(1+x2)
        let mut m = IntMultiPolynomial::zero(2);
        m.add_term(vec![0, 0, 0, 0], BigInt::one());
        m.add_term(vec![1, 1, 0, 0], BigInt::one());
        assert_eq!(m.shift_x_by_one().to_string(), "2 + x1 + x2 + x1*x2");
    }
}
