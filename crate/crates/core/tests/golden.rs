//! Worked examples with hand-computed values, loaded from the fixture files.

use crosscube::coloring::{chromatic_number, is_balanced_pair};
use crosscube::io::parse_pip;
use crosscube::poly::{f_poly_cubical, f_poly_simplicial};
use crosscube::{CubicalComplexP, ElementSet, IntPolynomial, Pip, SimplicialComplex};

fn load(name: &str) -> Pip {
    let path = format!("{}/fixtures/{name}.pip", env!("CARGO_MANIFEST_DIR"));
    parse_pip(&std::fs::read_to_string(path).unwrap(), 0).unwrap()
}

fn set1(labels: &[usize]) -> ElementSet {
    labels.iter().map(|x| x - 1).collect()
}

fn ints(p: &IntPolynomial) -> Vec<i64> {
    p.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
}

fn sorted(mut v: Vec<ElementSet>) -> Vec<ElementSet> {
    v.sort();
    v
}

#[test]
fn p7_vertices_are_the_sixteen_consistent_downsets() {
    let p = load("p7");
    let x = CubicalComplexP::build(&p).unwrap();
    let expected: &[&[usize]] = &[
        &[],
        &[1],
        &[2],
        &[1, 2],
        &[1, 3],
        &[2, 5],
        &[1, 2, 3],
        &[1, 2, 4],
        &[1, 2, 5],
        &[1, 3, 6],
        &[1, 2, 3, 4],
        &[1, 2, 3, 6],
        &[1, 2, 3, 5],
        &[1, 2, 4, 5],
        &[1, 2, 3, 4, 5],
        &[1, 2, 4, 5, 7],
    ];
    let expected = sorted(expected.iter().map(|s| set1(s)).collect());
    assert_eq!(sorted(x.downsets().to_vec()), expected);
    assert_eq!(x.dim(), 3);
}

#[test]
fn p7_crossing_complex_facets() {
    let k = SimplicialComplex::crossing_complex(&load("p7")).unwrap();
    let expected = sorted([&[1, 5][..], &[2, 3], &[2, 6], &[1, 2], &[3, 4, 5], &[7]].iter().map(|s| set1(s)).collect());
    assert_eq!(sorted(k.facets().to_vec()), expected);
}

#[test]
fn antichain_gives_the_solid_cube() {
    let p = load("a3");
    let fc = f_poly_cubical(&CubicalComplexP::build(&p).unwrap());
    assert_eq!(ints(&fc), [8, 12, 6, 1]);
    let fd = f_poly_simplicial(&SimplicialComplex::crossing_complex(&p).unwrap());
    assert_eq!(ints(&fd), [1, 3, 3, 1]);
}

#[test]
fn five_cycle_star_is_unbalanced() {
    let p = load("five_cycle_star");
    let k = SimplicialComplex::crossing_complex(&p).unwrap();
    assert_eq!(k.facets().len(), 5);
    assert!(k.facets().iter().all(|f| f.len() == 2));
    assert_eq!(chromatic_number(&k), 3);
    let report = is_balanced_pair(&p).unwrap();
    assert!(!report.simplicial && !report.cubical);
}

#[test]
fn hexagon_star_is_balanced() {
    let p = load("hexagon_star");
    let k = SimplicialComplex::crossing_complex(&p).unwrap();
    assert_eq!(chromatic_number(&k), 2);
    assert_eq!(CubicalComplexP::build(&p).unwrap().vertex_count(), 13);
    let report = is_balanced_pair(&p).unwrap();
    assert!(report.simplicial && report.cubical);
}

#[test]
fn tree_of_nine_leaves() {
    let p = load("tree");
    let x = CubicalComplexP::build(&p).unwrap();
    assert_eq!(x.face_counts(), [10, 9]);
    assert_eq!(x.cut_vertices(), [x.root()]);
}

#[test]
fn every_fixture_parses_and_satisfies_the_identity() {
    let dir = format!("{}/fixtures", env!("CARGO_MANIFEST_DIR"));
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "pip") {
            let p = parse_pip(&std::fs::read_to_string(&path).unwrap(), 0).unwrap();
            let fd = f_poly_simplicial(&SimplicialComplex::crossing_complex(&p).unwrap());
            let fc = f_poly_cubical(&CubicalComplexP::build(&p).unwrap());
            assert_eq!(fd.shift(1.into()), fc, "{}", path.display());
            seen += 1;
        }
    }
    assert_eq!(seen, 8);
}
