//! Text, JSON and DOT formats.
//!
//! Labels are 0-based unless a format says otherwise; `base` shifts every
//! label on the way in and out.

mod dot;
mod pip_text;

pub use dot::{crossing_dot, hasse_dot, skeleton_dot};
pub use pip_text::{parse_pip, write_pip};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coloring::{CubicalColoring, SimplicialColoring};
use crate::cubical::{CubicalComplexP, CubicalFace};
use crate::error::{Error, Result};
use crate::pip::Pip;
use crate::poly::{IntMultiPolynomial, IntPolynomial};
use crate::set::ElementSet;
use crate::simplicial::SimplicialComplex;

/// `{1,3}` style rendering with labels shifted by `base`.
pub fn fmt_set(s: ElementSet, base: usize) -> String {
    let items: Vec<String> = s.iter().map(|x| (x + base).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Compact rendering for vertex names: `1236`, or `∅`. Labels above 9
/// are separated by dots.
pub fn fmt_downset(s: ElementSet, base: usize) -> String {
    if s.is_empty() {
        return "∅".into();
    }
    let items: Vec<String> = s.iter().map(|x| (x + base).to_string()).collect();
    if s.iter().all(|x| x + base < 10) {
        items.concat()
    } else {
        items.join(".")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub base: usize,
    pub covers: Vec<[usize; 2]>,
    pub incons: Vec<[usize; 2]>,
}

fn is_zero(x: &usize) -> bool {
    *x == 0
}

impl PipJson {
    pub fn from_pip(p: &Pip, base: usize) -> Self {
        let shift = |(a, b): (usize, usize)| [a + base, b + base];
        PipJson {
            n: p.len(),
            base,
            covers: p.hasse_covers().into_iter().map(shift).collect(),
            incons: p.minimal_inconsistent_pairs().into_iter().map(shift).collect(),
        }
    }

    pub fn to_pip(&self) -> Result<Pip> {
        let unshift = |pairs: &[[usize; 2]]| -> Result<Vec<(usize, usize)>> {
            pairs
                .iter()
                .map(|&[a, b]| {
                    let a2 = a.checked_sub(self.base).ok_or(Error::Index { label: a, n: self.n })?;
                    let b2 = b.checked_sub(self.base).ok_or(Error::Index { label: b, n: self.n })?;
                    Ok((a2, b2))
                })
                .collect()
        };
        Pip::new(self.n, &unshift(&self.covers)?, &unshift(&self.incons)?)
    }
}

pub fn pip_from_json(text: &str) -> Result<Pip> {
    let j: PipJson = serde_json::from_str(text).map_err(json_error)?;
    j.to_pip()
}

pub fn pip_to_json(p: &Pip, base: usize) -> String {
    serde_json::to_string_pretty(&PipJson::from_pip(p, base)).expect("serialisable")
}

/// Parse a PIP from either format, sniffing for a leading `{`.
pub fn parse_pip_any(text: &str, base: usize) -> Result<Pip> {
    if text.trim_start().starts_with('{') {
        let mut j: PipJson = serde_json::from_str(text).map_err(json_error)?;
        if j.base == 0 {
            j.base = base;
        }
        j.to_pip()
    } else {
        parse_pip(text, base)
    }
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl SimplicialJson {
    pub fn from_complex(k: &SimplicialComplex, base: usize) -> Self {
        SimplicialJson {
            n: k.label_bound(),
            facets: k.facets().iter().map(|f| f.iter().map(|x| x + base).collect()).collect(),
        }
    }

    pub fn to_complex(&self, base: usize) -> Result<SimplicialComplex> {
        let facets: Vec<ElementSet> = self
            .facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|&x| x.checked_sub(base).filter(|&y| y < self.n).ok_or(Error::Index { label: x, n: self.n }))
                    .collect::<Result<ElementSet>>()
            })
            .collect::<Result<_>>()?;
        SimplicialComplex::from_facets(self.n, &facets)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub r: usize,
    pub assignment: Vec<Value>,
}

/// Simplicial colours print 1-based; cubical labels print as bit strings.
pub fn simplicial_coloring_json(c: &SimplicialColoring) -> Value {
    serde_json::json!({ "r": c.r, "assignment": c.assignment.iter().map(|x| x + 1).collect::<Vec<_>>() })
}

pub fn cubical_coloring_json(c: &CubicalColoring) -> Value {
    let labels: Vec<String> = (0..c.assignment.len()).map(|v| c.bits(v)).collect();
    serde_json::json!({ "r": c.r, "assignment": labels })
}

/// Coefficients as JSON integers, or strings when beyond 64 bits.
pub fn poly_json(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(bigint_json).collect())
}

fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(c.to_string()),
    }
}

pub fn multi_poly_json(m: &IntMultiPolynomial) -> Value {
    let terms: Vec<Value> = m
        .terms()
        .iter()
        .map(|(e, c)| serde_json::json!({ "x": e[..m.colours()], "y": e[m.colours()..], "coeff": bigint_json(c) }))
        .collect();
    serde_json::json!({ "r": m.colours(), "terms": terms })
}

/// One face per line.
pub fn simplicial_faces_dump(k: &SimplicialComplex, base: usize) -> String {
    k.faces().iter().map(|f| fmt_set(*f, base) + "\n").collect()
}

/// One face `C(I, M)` per line.
pub fn cubical_faces_dump(x: &CubicalComplexP, base: usize) -> String {
    x.faces().iter().map(|f| format_face(f, base) + "\n").collect()
}

pub fn format_face(f: &CubicalFace, base: usize) -> String {
    format!("C({}, {})", fmt_set(f.downset, base), fmt_set(f.span, base))
}
