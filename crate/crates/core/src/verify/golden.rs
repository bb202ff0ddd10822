//! Fixed instances with hand-checked data. Each fixture file is parsed
//! and compared against a reference PIP written out here, then checked
//! against exact counts and face lists computed by hand.

use serde::Deserialize;

use super::Outcome;
use crate::coloring::{
    chromatic_number, exhaustive_cubical_coloring, is_balanced_pair, lift_coloring, CubicalColoring,
    SimplicialColoring, EXHAUSTIVE_BUDGET,
};
use crate::cubical::{AbstractCubicalComplex, CubicalComplexP, CubicalFace};
use crate::error::{Error, Result};
use crate::io::{json_error, parse_pip};
use crate::pip::Pip;
use crate::poly::{euler_characteristic, f_poly_cubical, f_poly_derivative, f_poly_simplicial, hyperplane_count, IntPolynomial};
use crate::set::ElementSet;
use crate::simplicial::SimplicialComplex;

pub const GOLDEN_NAMES: &[&str] = &[
    "A3",
    "G5",
    "P7",
    "cut_vertex",
    "derivative",
    "five_cycle_star",
    "hexagon_star",
    "tree",
];

/// Cut vertices of the cut-vertex instance: where the solid part meets
/// the squares, and where the pendant edge of element 8 attaches.
const CUT_VERTEX_DOWNSETS: &[&[usize]] = &[&[1, 2], &[1, 2, 5, 6, 7]];

pub struct Golden {
    pub name: &'static str,
    pub fixture: &'static str,
    pub reference: fn() -> Pip,
}

impl Golden {
    pub fn fixture_pip(&self) -> Result<Pip> {
        parse_pip(self.fixture, 0)
    }
}

/// Labels in the reference data are 1-based.
fn one_based(n: usize, covers: &[(usize, usize)], incons: &[(usize, usize)]) -> Pip {
    let shift = |v: &[(usize, usize)]| v.iter().map(|&(a, b)| (a - 1, b - 1)).collect::<Vec<_>>();
    Pip::new(n, &shift(covers), &shift(incons)).expect("reference data is a PIP")
}

fn set1(labels: &[usize]) -> ElementSet {
    labels.iter().map(|x| x - 1).collect()
}

fn p7() -> Pip {
    one_based(
        7,
        &[(1, 3), (3, 6), (1, 4), (2, 4), (2, 5), (5, 7), (4, 7)],
        &[(3, 7), (4, 6), (5, 6)],
    )
}

fn a3() -> Pip {
    Pip::antichain(3)
}

fn g5() -> Pip {
    one_based(5, &[], &[(1, 5), (1, 2), (2, 5), (3, 5), (3, 4)])
}

fn cut_vertex() -> Pip {
    one_based(
        8,
        &[(1, 6), (6, 7), (7, 8), (5, 8), (1, 5), (2, 5), (2, 6), (3, 4)],
        &[(2, 4), (3, 5), (3, 6)],
    )
}

fn derivative() -> Pip {
    one_based(4, &[(1, 4), (2, 4)], &[])
}

fn five_cycle_star() -> Pip {
    one_based(5, &[], &[(1, 3), (2, 4), (3, 5), (4, 1), (5, 2)])
}

fn hexagon_star() -> Pip {
    let pairs: Vec<(usize, usize)> = (1..=6)
        .flat_map(|a| (a + 1..=6).map(move |b| (a, b)))
        .filter(|&(a, b)| b - a != 1 && b - a != 5)
        .collect();
    one_based(6, &[], &pairs)
}

fn tree() -> Pip {
    let pairs: Vec<(usize, usize)> = (1..=9).flat_map(|a| (a + 1..=9).map(move |b| (a, b))).collect();
    one_based(9, &[], &pairs)
}

pub fn golden_instance(name: &str) -> Option<Golden> {
    let (fixture, reference): (&'static str, fn() -> Pip) = match name {
        "P7" => (include_str!("../../fixtures/p7.pip"), p7),
        "A3" => (include_str!("../../fixtures/a3.pip"), a3),
        "G5" => (include_str!("../../fixtures/g5.pip"), g5),
        "cut_vertex" => (include_str!("../../fixtures/cut_vertex.pip"), cut_vertex),
        "derivative" => (include_str!("../../fixtures/derivative.pip"), derivative),
        "five_cycle_star" => (include_str!("../../fixtures/five_cycle_star.pip"), five_cycle_star),
        "hexagon_star" => (include_str!("../../fixtures/hexagon_star.pip"), hexagon_star),
        "tree" => (include_str!("../../fixtures/tree.pip"), tree),
        _ => return None,
    };
    let name = GOLDEN_NAMES.iter().find(|&&n| n == name)?;
    Some(Golden {
        name,
        fixture,
        reference,
    })
}

/// The fixture text with its first `incons` record removed.
pub fn mutate_fixture(text: &str) -> Result<String> {
    let mut dropped = false;
    let lines: Vec<&str> = text
        .lines()
        .filter(|line| {
            let record = line.split('#').next().unwrap_or("").trim_start();
            if !dropped && record.starts_with("incons") {
                dropped = true;
                return false;
            }
            true
        })
        .collect();
    if !dropped {
        return Err(Error::Precondition("fixture has no inconsistency to drop".into()));
    }
    Ok(lines.join("\n") + "\n")
}

type Check = (&'static str, fn(&Pip) -> std::result::Result<(), String>);

fn expect(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn complexes(p: &Pip) -> std::result::Result<(SimplicialComplex, CubicalComplexP), String> {
    let delta = SimplicialComplex::crossing_complex(p).map_err(|e| e.to_string())?;
    let cube = CubicalComplexP::build(p).map_err(|e| e.to_string())?;
    Ok((delta, cube))
}

fn coeffs(p: &IntPolynomial) -> Vec<i64> {
    p.coeffs().iter().map(|c| c.try_into().unwrap_or(i64::MAX)).collect()
}

fn sorted(mut v: Vec<ElementSet>) -> Vec<ElementSet> {
    v.sort();
    v
}

fn facets_are(delta: &SimplicialComplex, want: &[&[usize]]) -> std::result::Result<(), String> {
    let want = sorted(want.iter().map(|f| set1(f)).collect());
    let got = sorted(delta.facets().to_vec());
    expect(got == want, || format!("facets {got:?}, expected {want:?}"))
}

fn p7_faces(p: &Pip) -> std::result::Result<(), String> {
    let (delta, _) = complexes(p)?;
    let listed: &[&[usize]] = &[
        &[],
        &[1],
        &[2],
        &[3],
        &[4],
        &[5],
        &[6],
        &[7],
        &[1, 2],
        &[1, 5],
        &[2, 3],
        &[2, 6],
        &[3, 4],
        &[3, 5],
        &[4, 5],
        &[3, 4, 5],
    ];
    let want = sorted(listed.iter().map(|f| set1(f)).collect());
    let got = sorted(delta.faces().to_vec());
    expect(got == want, || format!("crossing faces {got:?}"))
}

fn p7_counts(p: &Pip) -> std::result::Result<(), String> {
    let (delta, cube) = complexes(p)?;
    let (fd, fc) = (f_poly_simplicial(&delta), f_poly_cubical(&cube));
    expect(coeffs(&fd) == [1, 7, 7, 1], || format!("f(Δ) = {fd}"))?;
    expect(coeffs(&fc) == [16, 24, 10, 1], || format!("f(ℂ) = {fc}"))?;
    expect(fd.shift(1.into()) == fc, || "f(ℂ, t) ≠ f(Δ, 1+t)".into())?;
    expect(p.len() == 7, || format!("{} elements", p.len()))?;
    expect(hyperplane_count(&fc) == 7.into(), || format!("alternating sum {}", hyperplane_count(&fc)))?;
    expect(euler_characteristic(&fc) == 1.into(), || "χ ≠ 1".into())
}

/// Vertex `1236` has maxima `{2, 6}`; the square `C(1236, {2,6})` and its
/// edge `C(1236, {2})` have the listed vertex sets.
fn p7_vertices(p: &Pip) -> std::result::Result<(), String> {
    let (_, cube) = complexes(p)?;
    let i = set1(&[1, 2, 3, 6]);
    expect(cube.vertex_of(i).is_some(), || "1236 is not a vertex".into())?;
    expect(p.maximal(i) == set1(&[2, 6]), || format!("max 1236 = {}", p.maximal(i)))?;
    let vertex_sets = |face: CubicalFace| -> std::result::Result<Vec<ElementSet>, String> {
        cube.face_id(&face).ok_or_else(|| format!("{face} is not a face"))?;
        Ok(sorted(face.vertex_sets().collect()))
    };
    let square = vertex_sets(CubicalFace::new(i, set1(&[2, 6])))?;
    let want = sorted(vec![i, set1(&[1, 2, 3]), set1(&[1, 3, 6]), set1(&[1, 3])]);
    expect(square == want, || format!("square vertices {square:?}"))?;
    let edge = vertex_sets(CubicalFace::new(i, set1(&[2])))?;
    expect(edge == sorted(vec![i, set1(&[1, 3, 6])]), || format!("edge vertices {edge:?}"))?;
    let coords: String = cube.embed_coordinates(cube.vertex_of(i).unwrap()).iter().map(|c| c.to_string()).collect();
    expect(coords == "1110010", || format!("coordinates {coords}"))
}

fn p7_derivative(p: &Pip) -> std::result::Result<(), String> {
    let (_, cube) = complexes(p)?;
    let fd = f_poly_derivative(&cube.derivative_direct());
    expect(coeffs(&fd) == [24, 20, 3], || format!("f(D) = {fd}"))
}

/// Element 7 is isolated in the crossing complex, so the pendant edge
/// into `{1,2,4,5,7}` hangs off a cut vertex.
fn p7_cut_vertex(p: &Pip) -> std::result::Result<(), String> {
    let (delta, cube) = complexes(p)?;
    let comps = delta.connected_components();
    expect(comps == [set1(&[1, 2, 3, 4, 5, 6]), set1(&[7])], || format!("components {comps:?}"))?;
    let cuts: Vec<ElementSet> = cube.cut_vertices().iter().map(|&v| cube.downset(v)).collect();
    expect(cuts == [set1(&[1, 2, 4, 5])], || format!("cut vertices {cuts:?}"))
}

fn a3_cube(p: &Pip) -> std::result::Result<(), String> {
    let (delta, cube) = complexes(p)?;
    let fc = f_poly_cubical(&cube);
    let two_plus_t = IntPolynomial::new(vec![2.into(), 1.into()]);
    let cubed = &(&two_plus_t * &two_plus_t) * &two_plus_t;
    expect(coeffs(&fc) == [8, 12, 6, 1] && fc == cubed, || format!("f(ℂ) = {fc}"))?;
    facets_are(&delta, &[&[1, 2, 3]])?;
    expect(delta.faces().len() == 8, || "triangle is not full".into())
}

fn g5_star(p: &Pip) -> std::result::Result<(), String> {
    let (delta, cube) = complexes(p)?;
    facets_are(&delta, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4], &[4, 5]])?;
    expect(coeffs(&f_poly_simplicial(&delta)) == [1, 5, 5], || "f(Δ)".into())?;
    expect(cube.is_closed_star_of_root(), || "not a closed star".into())?;
    expect(cube.interval_witness().is_none(), || "unexpected interval witness".into())?;
    let link = cube.vertex_link(cube.root()).map_err(|e| e.to_string())?;
    expect(link.faces() == delta.faces(), || "root link is not Δ".into())
}

fn cut_vertex_components(p: &Pip) -> std::result::Result<(), String> {
    let (delta, cube) = complexes(p)?;
    facets_are(&delta, &[&[1, 2, 3], &[1, 4], &[5, 6], &[5, 7], &[8]])?;
    let comps = delta.connected_components();
    let want = [set1(&[1, 2, 3, 4]), set1(&[5, 6, 7]), set1(&[8])];
    expect(comps == want, || format!("components {comps:?}"))?;
    let cuts: Vec<ElementSet> = cube.cut_vertices().iter().map(|&v| cube.downset(v)).collect();
    let want: Vec<ElementSet> = CUT_VERTEX_DOWNSETS.iter().map(|d| set1(d)).collect();
    expect(cuts == want, || format!("cut vertices {cuts:?}"))
}

fn derivative_components(p: &Pip) -> std::result::Result<(), String> {
    let (delta, cube) = complexes(p)?;
    facets_are(&delta, &[&[1, 2, 3], &[3, 4]])?;
    expect(cube.vertex_count() == 10, || format!("{} vertices", cube.vertex_count()))?;
    let d = cube.derivative_direct();
    let mut shapes: Vec<Vec<usize>> = d
        .components
        .iter()
        .map(|comp| {
            let mut f = Vec::new();
            for &e in comp {
                let k = d.elements[e].dim;
                if f.len() <= k {
                    f.resize(k + 1, 0);
                }
                f[k] += 1;
            }
            f
        })
        .collect();
    shapes.sort();
    let want = vec![vec![2, 1], vec![4, 4, 1], vec![4, 4, 1], vec![5, 5, 1]];
    expect(shapes == want, || format!("component f-vectors {shapes:?}"))
}

fn five_cycle_unbalanced(p: &Pip) -> std::result::Result<(), String> {
    let (delta, cube) = complexes(p)?;
    facets_are(&delta, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]])?;
    let chi = chromatic_number(&delta);
    expect(chi == 3 && cube.dim() == 2, || format!("chromatic number {chi}, dim {}", cube.dim()))?;
    let report = is_balanced_pair(p).map_err(|e| e.to_string())?;
    expect(!report.simplicial && !report.cubical, || format!("{report:?}"))?;
    let search = exhaustive_cubical_coloring(&cube, 2, EXHAUSTIVE_BUDGET);
    expect(search == Some(None), || format!("exhaustive 2-colouring search gave {search:?}"))
}

/// Alternating colours around the hexagon lift to `00` at the root, one
/// bit on the singletons and `11` on the edges.
fn hexagon_lift(p: &Pip) -> std::result::Result<(), String> {
    let (delta, cube) = complexes(p)?;
    facets_are(&delta, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6], &[1, 6]])?;
    let kappa = SimplicialColoring {
        r: 2,
        assignment: (0..6).map(|x| x % 2).collect(),
    };
    let lifted = lift_coloring(&cube, &kappa).map_err(|e| e.to_string())?;
    lifted.validate(&cube).map_err(|e| e.to_string())?;
    expect(cube.vertex_count() == 13, || format!("{} vertices", cube.vertex_count()))?;
    for (v, d) in cube.downsets().iter().enumerate() {
        let want = match d.len() {
            0 => 0,
            1 => 1 << (d.first().unwrap() % 2),
            _ => 3,
        };
        expect(lifted.assignment[v] == want, || format!("label {} at {d}", lifted.bits(v)))?;
    }
    let report = is_balanced_pair(p).map_err(|e| e.to_string())?;
    expect(report.simplicial && report.cubical, || format!("{report:?}"))
}

fn tree_star(p: &Pip) -> std::result::Result<(), String> {
    let (delta, cube) = complexes(p)?;
    let points: Vec<Vec<usize>> = (1..=9).map(|x| vec![x]).collect();
    let points: Vec<&[usize]> = points.iter().map(|v| v.as_slice()).collect();
    facets_are(&delta, &points)?;
    expect(coeffs(&f_poly_cubical(&cube)) == [10, 9], || "f(ℂ)".into())?;
    expect(cube.cut_vertices() == [cube.root()], || "root is not the only cut vertex".into())
}

fn checks_for(name: &str) -> &'static [Check] {
    match name {
        "P7" => &[
            ("golden_faces", p7_faces),
            ("golden_counts", p7_counts),
            ("golden_vertices", p7_vertices),
            ("golden_derivative", p7_derivative),
            ("golden_cut_vertex", p7_cut_vertex),
        ],
        "A3" => &[("golden_cube", a3_cube)],
        "G5" => &[("golden_star", g5_star)],
        "cut_vertex" => &[("golden_cut_vertex", cut_vertex_components)],
        "derivative" => &[("golden_derivative", derivative_components)],
        "five_cycle_star" => &[("golden_unbalanced", five_cycle_unbalanced)],
        "hexagon_star" => &[("golden_lift", hexagon_lift)],
        "tree" => &[("golden_star", tree_star)],
        _ => &[],
    }
}

pub(crate) fn golden_checks(name: &str, pip: &Pip, reference: &Pip) -> Vec<(&'static str, Outcome)> {
    let fixture = if pip == reference {
        Outcome::Pass
    } else {
        Outcome::fail(format!("fixture gives {pip:?}, reference is {reference:?}"))
    };
    let mut out = vec![("fixture", fixture)];
    for (suite, check) in checks_for(name) {
        let outcome = match check(pip) {
            Ok(()) => Outcome::Pass,
            Err(msg) => Outcome::fail(msg),
        };
        out.push((suite, outcome));
    }
    out
}

type Point = [i64; 3];

#[derive(Deserialize)]
struct BalancedJson {
    cubes: Vec<[Point; 2]>,
    labels: Vec<(Point, String)>,
    hidden_labels: Vec<(Point, String)>,
    drawn_squares: Vec<Vec<Point>>,
}

/// A three-dimensional complex of unit cubes in the grid, with a 3-bit
/// colouring. Vertices are the labelled points, visible ones first.
#[derive(Clone, Debug)]
pub struct BalancedFixture {
    pub coordinates: Vec<Point>,
    /// Vertices with an explicit label in the fixture.
    pub visible: usize,
    pub complex: AbstractCubicalComplex,
    pub colouring: CubicalColoring,
    pub drawn_squares: Vec<Vec<usize>>,
}

fn parse_label(s: &str) -> Result<u64> {
    s.chars().enumerate().try_fold(0u64, |acc, (j, ch)| match ch {
        '0' => Ok(acc),
        '1' => Ok(acc | 1 << j),
        _ => Err(Error::Validation(format!("bad label `{s}`"))),
    })
}

/// Every face of the box `[lo, hi]`: each axis is fixed at one end or spans.
fn box_faces(lo: Point, hi: Point) -> Vec<Vec<Point>> {
    let mut faces: Vec<Vec<Point>> = vec![vec![lo]];
    for axis in 0..3 {
        let mut next = Vec::new();
        for f in &faces {
            let moved = |value: i64| -> Vec<Point> {
                f.iter()
                    .map(|p| {
                        let mut q = *p;
                        q[axis] = value;
                        q
                    })
                    .collect()
            };
            next.push(moved(lo[axis]));
            if hi[axis] != lo[axis] {
                next.push(moved(hi[axis]));
                let mut both = moved(lo[axis]);
                both.extend(moved(hi[axis]));
                next.push(both);
            }
        }
        faces = next;
    }
    faces
}

impl BalancedFixture {
    pub const TEXT: &'static str = include_str!("../../fixtures/balanced_cubical.json");

    pub fn load() -> Result<Self> {
        let raw: BalancedJson = serde_json::from_str(Self::TEXT).map_err(json_error)?;
        let all: Vec<&(Point, String)> = raw.labels.iter().chain(&raw.hidden_labels).collect();
        let coordinates: Vec<Point> = all.iter().map(|(p, _)| *p).collect();
        let index = |c: &Point| {
            coordinates
                .iter()
                .position(|v| v == c)
                .ok_or_else(|| Error::Validation(format!("corner {c:?} has no label")))
        };
        let mut faces = Vec::new();
        for [lo, hi] in &raw.cubes {
            for f in box_faces(*lo, *hi) {
                faces.push(f.iter().map(index).collect::<Result<Vec<_>>>()?);
            }
        }
        let drawn_squares = raw
            .drawn_squares
            .iter()
            .map(|sq| {
                let mut v = sq.iter().map(index).collect::<Result<Vec<_>>>()?;
                v.sort_unstable();
                Ok(v)
            })
            .collect::<Result<_>>()?;
        let assignment = all.iter().map(|(_, s)| parse_label(s)).collect::<Result<_>>()?;
        Ok(BalancedFixture {
            complex: AbstractCubicalComplex::new(coordinates.len(), faces, 0)?,
            coordinates,
            visible: raw.labels.len(),
            colouring: CubicalColoring { r: 3, assignment },
            drawn_squares,
        })
    }
}

fn balanced_structure(f: &BalancedFixture) -> std::result::Result<(), String> {
    f.complex.validate().map_err(|e| e.to_string())?;
    let counts = f.complex.face_counts();
    expect(counts == [16, 28, 16, 3], || format!("face counts {counts:?}"))?;
    expect(f.visible == 13, || format!("{} printed labels", f.visible))?;
    for sq in &f.drawn_squares {
        expect(f.complex.faces.contains(sq), || format!("drawn square {sq:?} is not a face"))?;
    }
    Ok(())
}

/// The labels give a 3-colouring of a 3-dimensional complex.
fn balanced_colouring(f: &BalancedFixture) -> std::result::Result<(), String> {
    f.colouring.validate_abstract(&f.complex).map_err(|e| e.to_string())?;
    let dim = f.complex.face_counts().len() - 1;
    expect(dim == f.colouring.r, || format!("dimension {dim} with {} colours", f.colouring.r))
}

/// The extracted PIP rebuilds the same complex, and both of its complexes
/// are balanced.
fn balanced_extraction(f: &BalancedFixture) -> std::result::Result<(), String> {
    let ext = f.complex.extract_pip().map_err(|e| e.to_string())?;
    let cube = CubicalComplexP::build(&ext.pip).map_err(|e| e.to_string())?;
    let map = (0..f.complex.n_vertices)
        .map(|v| {
            let d: ElementSet = (0..ext.hyperplanes.len())
                .filter(|&i| ext.hyperplanes[i].far_side.contains(&v))
                .collect();
            cube.vertex_of(d).ok_or_else(|| format!("vertex {v} gives non-vertex {d}"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let relabelled = f.complex.relabel(&map).map_err(|e| e.to_string())?;
    expect(relabelled == cube.to_abstract(), || "rebuilt complex differs".into())?;
    let delta = SimplicialComplex::crossing_complex(&ext.pip).map_err(|e| e.to_string())?;
    let chi = chromatic_number(&delta);
    expect(chi == 3 && delta.dim() == 2, || format!("chromatic number {chi}, dim Δ {}", delta.dim()))?;
    let report = is_balanced_pair(&ext.pip).map_err(|e| e.to_string())?;
    expect(report.simplicial && report.cubical, || format!("{report:?}"))
}

pub(crate) fn balanced_fixture_checks() -> Vec<(&'static str, Outcome)> {
    let fixture = match BalancedFixture::load() {
        Ok(f) => f,
        Err(e) => return vec![("fixture", Outcome::fail(e.to_string()))],
    };
    let checks: [(&'static str, fn(&BalancedFixture) -> std::result::Result<(), String>); 3] = [
        ("golden_structure", balanced_structure),
        ("golden_colouring", balanced_colouring),
        ("golden_balanced", balanced_extraction),
    ];
    checks
        .iter()
        .map(|(name, check)| {
            let outcome = match check(&fixture) {
                Ok(()) => Outcome::Pass,
                Err(msg) => Outcome::fail(msg),
            };
            (*name, outcome)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_match_references() {
        for name in GOLDEN_NAMES {
            let g = golden_instance(name).unwrap();
            assert_eq!(g.fixture_pip().unwrap(), (g.reference)(), "{name}");
        }
        assert!(golden_instance("P8").is_none());
    }

    #[test]
    fn every_golden_check_passes() {
        for name in GOLDEN_NAMES {
            let p = (golden_instance(name).unwrap().reference)();
            for (suite, outcome) in golden_checks(name, &p, &p) {
                assert_eq!(outcome, Outcome::Pass, "{name} {suite}");
            }
        }
        for (suite, outcome) in balanced_fixture_checks() {
            assert_eq!(outcome, Outcome::Pass, "balanced {suite}");
        }
    }

    #[test]
    fn mutation_drops_first_inconsistency() {
        let g = golden_instance("P7").unwrap();
        let mutated = parse_pip(&mutate_fixture(g.fixture).unwrap(), 0).unwrap();
        assert_eq!(mutated.minimal_inconsistent_pairs(), vec![(3, 5), (4, 5)]);
        assert!(mutate_fixture(golden_instance("A3").unwrap().fixture).is_err());
    }
}
