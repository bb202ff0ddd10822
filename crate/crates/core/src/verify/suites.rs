//! The generic suites. Each returns `None` when it does not apply to the
//! instance (size gates), otherwise an outcome.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::oracles::{self, FaceBits};
use super::{Ctx, Outcome};
use crate::coloring::{
    chromatic_number, dilworth_coloring, exhaustive_cubical_coloring, find_r_coloring, is_balanced_pair,
    lift_coloring, project_coloring, SimplicialColoring, EXHAUSTIVE_BUDGET,
};
use crate::cubical::{CubicalComplexP, CubicalFace, Extraction};
use crate::pip::{random_pip, CombineMode, Direction, Pip};
use crate::poly::{
    coloured_f_cubical, coloured_f_simplicial, euler_characteristic, f_poly_cubical, f_poly_derivative,
    f_poly_simplicial, hyperplane_count, transform_t, transform_t_inverse, IntPolynomial,
};
use crate::set::ElementSet;
use crate::simplicial::SimplicialComplex;

pub(crate) const ROUNDTRIP_MAX: usize = 9;
pub(crate) const REROOT_MAX: usize = 7;
pub(crate) const FACE_POSET_MAX: usize = 8;
pub(crate) const MIN_R_MAX: usize = 7;
const COMBINED_MAX: usize = 12;
const NERVE_SET_MAX: usize = 4;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Some(Outcome::fail(format!($($fmt)+)));
        }
    };
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return Some(Outcome::fail(e.to_string())),
        }
    };
}

type Suite = fn(&Ctx) -> Option<Outcome>;

pub(crate) const SUITES: &[(&str, Suite)] = &[
    ("bijection", bijection),
    ("normal_form", normal_form),
    ("isomorphism", isomorphism),
    ("chain_cover", chain_cover),
    ("f_polynomial", f_polynomial),
    ("combine_consistent", combine_consistent),
    ("combine_inconsistent", combine_inconsistent),
    ("vertex_links", vertex_links),
    ("derivative", derivative),
    ("hyperplane_links", hyperplane_links),
    ("hyperplanes", hyperplanes),
    ("facets", facets),
    ("nerve", nerve),
    ("cut_vertex", cut_vertex),
    ("roundtrip", roundtrip),
    ("reroot", reroot),
    ("interval", interval),
    ("star", star),
    ("face_poset", face_poset),
    ("colouring_lift", colouring_lift),
    ("colouring_min_r", colouring_min_r),
    ("balanced", balanced),
    ("dilworth", dilworth),
    ("coloured_identity", coloured_identity),
];

fn pass() -> Option<Outcome> {
    Some(Outcome::Pass)
}

fn rng(c: &Ctx, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(c.seed ^ salt)
}

/// `I ↦ max I` and `A ↦ ↓A` are inverse bijections.
fn bijection(c: &Ctx) -> Option<Outcome> {
    let p = c.pip;
    let downsets = tri!(p.consistent_downsets());
    let antichains = tri!(p.consistent_antichains());
    ensure!(
        downsets.len() == antichains.len() && downsets.len() == c.cube.vertex_count(),
        "{} downsets, {} antichains, {} vertices",
        downsets.len(),
        antichains.len(),
        c.cube.vertex_count()
    );
    let mut images = BTreeSet::new();
    for &i in &downsets {
        let a = tri!(p.antichain_downset_bijection(i, Direction::Up));
        ensure!(p.is_consistent_antichain(a), "max {i} = {a} is not a consistent antichain");
        let back = tri!(p.antichain_downset_bijection(a, Direction::Down));
        ensure!(back == i, "↓max {i} = {back}");
        images.insert(a);
    }
    ensure!(
        images == antichains.iter().copied().collect(),
        "max is not onto the consistent antichains"
    );
    pass()
}

/// Closing the Hasse covers and minimal inconsistent pairs again gives
/// the same PIP, and both text and JSON serialisations round-trip.
fn normal_form(c: &Ctx) -> Option<Outcome> {
    let p = c.pip;
    let again = tri!(Pip::new(p.len(), &p.hasse_covers(), &p.minimal_inconsistent_pairs()));
    ensure!(&again == p, "re-closing gives {again:?}");
    for base in [0, 1] {
        let text = crate::io::write_pip(p, base);
        ensure!(&tri!(crate::io::parse_pip(&text, 0)) == p, "text round trip with base {base}");
        let json = crate::io::pip_to_json(p, base);
        ensure!(&tri!(crate::io::parse_pip_any(&json, 0)) == p, "JSON round trip with base {base}");
    }
    pass()
}

/// A random relabelling is recognised as isomorphic, with a valid witness.
fn isomorphism(c: &Ctx) -> Option<Outcome> {
    let p = c.pip;
    if p.len() > crate::limits::ISOMORPHISM_CAP {
        return None;
    }
    let mut perm: Vec<usize> = (0..p.len()).collect();
    perm.shuffle(&mut rng(c, 0x150));
    let q = tri!(p.relabel(&perm));
    ensure!(p.is_isomorphism(&q, &perm), "the relabelling itself is not accepted");
    match tri!(p.isomorphism(&q)) {
        Some(map) => ensure!(p.is_isomorphism(&q, &map), "returned map {map:?} is not an isomorphism"),
        None => return Some(Outcome::fail(format!("no isomorphism to relabelling {perm:?}"))),
    }
    ensure!(tri!(q.isomorphism(p)).is_some(), "isomorphism is not symmetric");
    pass()
}

/// On the order alone: a minimum chain cover has as many chains as the
/// largest antichain has elements.
fn chain_cover(c: &Ctx) -> Option<Outcome> {
    let r = c.pip.without_inconsistencies();
    let cover = tri!(r.min_chain_cover());
    let width = r.max_antichain_width();
    ensure!(cover.len() == width, "{} chains against width {width}", cover.len());
    let mut seen = ElementSet::EMPTY;
    for chain in &cover.chains {
        ensure!(chain.is_disjoint(seen), "chains overlap at {chain}");
        seen = seen.union(*chain);
        for a in chain.iter() {
            for b in chain.iter() {
                ensure!(r.comparable(a, b), "{a} and {b} share chain {chain} but are incomparable");
            }
        }
    }
    ensure!(seen == r.ground(), "chains cover only {seen}");
    pass()
}

fn f_polynomial(c: &Ctx) -> Option<Outcome> {
    let fd = f_poly_simplicial(&c.delta);
    let fc = f_poly_cubical(&c.cube);
    ensure!(fd.shift(BigInt::from(1)) == fc, "f(ℂ) = {fc} but f(Δ, 1+t) = {}", fd.shift(BigInt::from(1)));
    ensure!(transform_t(fd.coeffs()) == fc.coeffs(), "T f(Δ) ≠ f(ℂ)");
    ensure!(transform_t_inverse(fc.coeffs()) == fd.coeffs(), "T⁻¹ f(ℂ) ≠ f(Δ)");
    ensure!(
        c.cube.dim() as isize == c.delta.dim() + 1,
        "dim ℂ = {}, dim Δ = {}",
        c.cube.dim(),
        c.delta.dim()
    );
    ensure!(fc.degree() == Some(c.cube.dim()), "deg f(ℂ) ≠ dim ℂ");
    let chi = euler_characteristic(&fc);
    ensure!(chi == BigInt::from(1), "χ(ℂ) = {chi}");
    let h = hyperplane_count(&fc);
    ensure!(h == BigInt::from(c.pip.len()), "alternating sum gives {h} hyperplanes, |P| = {}", c.pip.len());
    pass()
}

fn partner(c: &Ctx) -> Option<Pip> {
    let room = COMBINED_MAX.checked_sub(c.pip.len())?.min(4);
    if room == 0 {
        return None;
    }
    let mut r = rng(c, 0xc0b1);
    let m = r.gen_range(1..=room);
    random_pip(r.gen(), m, r.gen_range(0.0..=0.6), r.gen_range(0.0..=0.6)).ok()
}

/// The combination's complexes against the abstract product / wedge and
/// the join / disjoint union, built independently from the two parts.
fn combine(c: &Ctx, mode: CombineMode) -> Option<Outcome> {
    let q = partner(c)?;
    let z = tri!(c.pip.combine(&q, mode));
    let zc = tri!(CubicalComplexP::build(&z));
    let y = tri!(CubicalComplexP::build(&q));
    let dz = tri!(SimplicialComplex::crossing_complex(&z));
    let dq = tri!(SimplicialComplex::crossing_complex(&q));
    let (a, b) = (c.cube.to_abstract(), y.to_abstract());
    let (delta, map, oracle) = match mode {
        CombineMode::Consistent => (
            tri!(c.delta.join(&dq)),
            oracles::product_vertex_map(&zc, &c.cube, &y),
            tri!(a.product(&b)),
        ),
        CombineMode::Inconsistent => (
            tri!(c.delta.disjoint_union(&dq)),
            oracles::wedge_vertex_map(&zc, &c.cube, &y),
            tri!(a.wedge(&b)),
        ),
    };
    ensure!(dz == delta, "crossing complex with Q = {q:?} differs from the oracle");
    let map = tri!(map);
    let relabelled = tri!(zc.to_abstract().relabel(&map));
    ensure!(relabelled == oracle, "complex with Q = {q:?} differs from the oracle under the vertex map");
    let (fx, fy, fz) = (f_poly_cubical(&c.cube), f_poly_cubical(&y), f_poly_cubical(&zc));
    let (gx, gy, gz) = (f_poly_simplicial(&c.delta), f_poly_simplicial(&dq), f_poly_simplicial(&dz));
    let one = IntPolynomial::one();
    let (want_c, want_d) = match mode {
        CombineMode::Consistent => (&fx * &fy, &gx * &gy),
        CombineMode::Inconsistent => (&(&fx + &fy) - &one, &(&gx + &gy) - &one),
    };
    ensure!(fz == want_c, "f(ℂ) of the combination is {fz}, expected {want_c}");
    ensure!(gz == want_d, "f(Δ) of the combination is {gz}, expected {want_d}");
    pass()
}

fn combine_consistent(c: &Ctx) -> Option<Outcome> {
    combine(c, CombineMode::Consistent)
}

fn combine_inconsistent(c: &Ctx) -> Option<Outcome> {
    combine(c, CombineMode::Inconsistent)
}

/// Link at every vertex: crossing complex of the formula's elements
/// against the link read off the faces; all links flag.
fn vertex_links(c: &Ctx) -> Option<Outcome> {
    ensure!(c.delta.is_flag(), "crossing complex is not flag: missing {:?}", c.delta.missing_faces());
    let direct = c.cube.vertex_links_direct();
    for (v, link) in direct.iter().enumerate() {
        let formula = tri!(c.cube.vertex_link(v));
        ensure!(
            formula.faces() == link.faces(),
            "link at {} differs: formula {:?}, direct {:?}",
            c.cube.downset(v),
            formula.facets(),
            link.facets()
        );
        ensure!(link.is_flag(), "link at {} is not flag", c.cube.downset(v));
    }
    pass()
}

fn derivative(c: &Ctx) -> Option<Outcome> {
    let hs = tri!(c.hyperplanes());
    let d = c.cube.derivative_direct();
    tri!(d.match_hyperplanes(&c.cube, hs));
    ensure!(
        d.components.len() == c.pip.len(),
        "{} components for {} elements",
        d.components.len(),
        c.pip.len()
    );
    let fd = f_poly_derivative(&d);
    let want = f_poly_cubical(&c.cube).derivative();
    ensure!(fd == want, "f(D) = {fd}, f′ = {want}");
    pass()
}

/// The crossing complex of `H_x` is the link of `x` in `Δ_P`.
fn hyperplane_links(c: &Ctx) -> Option<Outcome> {
    let hs = tri!(c.hyperplanes());
    for h in hs {
        let local = tri!(SimplicialComplex::crossing_complex(&h.sub.pip));
        let lifted = tri!(local.relabel(c.pip.len(), &h.sub.labels));
        let link = tri!(c.delta.link(ElementSet::singleton(h.element)));
        ensure!(
            lifted.faces() == link.faces(),
            "element {}: crossing complex of H_x {:?}, link {:?}",
            h.element,
            lifted.facets(),
            link.facets()
        );
    }
    pass()
}

/// Each hyperplane complex is a well-formed complex with flag links, and
/// its faces are exactly the midcubes of the faces crossing `x`.
fn hyperplanes(c: &Ctx) -> Option<Outcome> {
    let hs = tri!(c.hyperplanes());
    for h in hs {
        let map = tri!(h.midcube_map(&c.cube));
        let distinct: BTreeSet<usize> = map.iter().copied().collect();
        ensure!(
            distinct.len() == map.len() && map.len() == h.complex.faces().len(),
            "element {}: {} crossing faces, {} midcubes, {} faces in H_x",
            h.element,
            map.len(),
            distinct.len(),
            h.complex.faces().len()
        );
        for &k in &h.realizing_faces {
            let face = c.cube.faces()[k];
            let mid = h.midcube(&c.cube, &face).expect("mapped above");
            ensure!(h.lift(&c.cube, &mid) == face, "element {}: lift of midcube of {face}", h.element);
        }
        tri!(h.complex.to_abstract().validate());
        for (v, link) in h.complex.vertex_links_direct().iter().enumerate() {
            ensure!(link.is_flag(), "element {}: link at local vertex {v} not flag", h.element);
        }
    }
    pass()
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect()
}

/// Facets are `C(↓A, A)` for maximal consistent antichains `A`; two facets
/// that share a vertex meet in a face of dimension `|A ∩ B|`.
fn facets(c: &Ctx) -> Option<Outcome> {
    let facets = c.cube.facets();
    let mut found: Vec<ElementSet> = facets.iter().map(|f| f.antichain).collect();
    found.sort();
    let mut want = tri!(c.pip.maximal_consistent_antichains());
    want.sort();
    ensure!(found == want, "facet antichains {found:?}, maximal consistent antichains {want:?}");
    let faces = c.cube.faces();
    let mut verts = Vec::with_capacity(facets.len());
    for f in &facets {
        let face = faces[f.face];
        ensure!(
            face == CubicalFace::new(c.pip.down_closure(f.antichain), f.antichain),
            "facet {face} is not C(↓A, A) for A = {}",
            f.antichain
        );
        ensure!(c.cube.upper_covers(&face).is_empty(), "facet {face} has a cover");
        verts.push(c.cube.face_vertices(&face));
    }
    for i in 0..facets.len() {
        for j in i + 1..facets.len() {
            let common = sorted_intersection(&verts[i], &verts[j]);
            if common.is_empty() {
                continue;
            }
            let (a, b) = (facets[i].antichain, facets[j].antichain);
            let k = a.intersection(b).len();
            ensure!(
                common.len() == 1 << k,
                "facets {a} and {b} share {} vertices, expected 2^{k}",
                common.len()
            );
            let meet = c.cube.face_meet(&faces[facets[i].face], &faces[facets[j].face]);
            ensure!(
                meet.is_some_and(|m| m.dim() == k && c.cube.face_vertices(&m) == common),
                "facets {a} and {b}: meet {meet:?} is not their common face"
            );
        }
    }
    pass()
}

/// Sets of at most four hyperplanes share a point exactly when they form
/// a consistent antichain.
fn nerve(c: &Ctx) -> Option<Outcome> {
    for s in c.pip.ground().subsets().filter(|s| s.len() <= NERVE_SET_MAX) {
        let meet = c.cube.hyperplanes_commonly_intersect(s);
        let face = c.pip.is_consistent_antichain(s);
        ensure!(meet == face, "{s}: hyperplanes intersect = {meet}, consistent antichain = {face}");
    }
    pass()
}

fn cut_vertex(c: &Ctx) -> Option<Outcome> {
    let cuts = c.cube.cut_vertices();
    let comps = c.delta.connected_components();
    ensure!(
        cuts.is_empty() == (comps.len() <= 1),
        "{} cut vertices, {} crossing components",
        cuts.len(),
        comps.len()
    );
    pass()
}

/// Which element each extracted hyperplane crosses, read from the
/// downsets at the ends of its edges.
fn class_elements(x: &CubicalComplexP, ext: &Extraction) -> Result<Vec<usize>, String> {
    let mut map = Vec::with_capacity(ext.hyperplanes.len());
    for (i, h) in ext.hyperplanes.iter().enumerate() {
        let mut elems = h.edges.iter().map(|&(u, v)| {
            let (du, dv) = (x.downset(u), x.downset(v));
            du.union(dv).difference(du.intersection(dv))
        });
        let first = elems.next().ok_or_else(|| format!("hyperplane {i} has no edges"))?;
        if first.len() != 1 || elems.any(|e| e != first) {
            return Err(format!("hyperplane {i} crosses more than one element"));
        }
        map.push(first.first().expect("singleton"));
    }
    let distinct: BTreeSet<usize> = map.iter().copied().collect();
    if distinct.len() != x.pip().len() || map.len() != x.pip().len() {
        return Err(format!("hyperplanes map to elements {map:?}"));
    }
    Ok(map)
}

/// Extracting the PIP of `ℂ_P` rooted at `∅` gives back `P`.
fn roundtrip(c: &Ctx) -> Option<Outcome> {
    if c.pip.len() > ROUNDTRIP_MAX {
        return None;
    }
    let a = c.cube.to_abstract();
    tri!(a.validate());
    let ext = tri!(a.extract_pip());
    if tri!(ext.pip.isomorphism(c.reference)).is_none() {
        return Some(Outcome::fail(format!(
            "extracted {:?} is not isomorphic to the reference {:?}",
            ext.pip, c.reference
        )));
    }
    let map = tri!(class_elements(&c.cube, &ext));
    let relabelled = tri!(ext.pip.relabel(&map));
    ensure!(&relabelled == c.pip, "extracted PIP under edge directions is {relabelled:?}");
    pass()
}

/// The crossing complex of the extracted PIP does not depend on the root.
fn reroot(c: &Ctx) -> Option<Outcome> {
    if c.pip.len() > REROOT_MAX {
        return None;
    }
    let a = c.cube.to_abstract();
    for root in 0..c.cube.vertex_count() {
        let ext = tri!(tri!(a.with_root(root)).extract_pip());
        let map = tri!(class_elements(&c.cube, &ext));
        let delta = tri!(tri!(SimplicialComplex::crossing_complex(&ext.pip)).relabel(c.pip.len(), &map));
        ensure!(
            delta.faces() == c.delta.faces(),
            "rooted at {}: crossing complex {:?}",
            c.cube.downset(root),
            delta.facets()
        );
    }
    pass()
}

/// A vertex with every vertex on a geodesic to it exists exactly for
/// posets (no inconsistent pairs); it is then the full ground set.
fn interval(c: &Ctx) -> Option<Outcome> {
    let witness = c.cube.interval_witness();
    let poset = !c.pip.has_inconsistent_pairs();
    ensure!(witness.is_some() == poset, "interval witness {witness:?}, poset = {poset}");
    if let Some(w) = witness {
        ensure!(c.cube.downset(w) == c.pip.ground(), "witness is {}", c.cube.downset(w));
        let dist = c.cube.distances_from(c.cube.root());
        for (v, &d) in c.cube.downsets().iter().enumerate() {
            ensure!(dist[v] == d.len(), "distance to {d} is {}", dist[v]);
        }
    }
    pass()
}

/// `ℂ_P` is the closed star of the root exactly when `P` has no strict
/// order relations.
fn star(c: &Ctx) -> Option<Outcome> {
    let is_star = c.cube.is_closed_star_of_root();
    let flat = !c.pip.has_strict_order();
    ensure!(is_star == flat, "closed star = {is_star}, no order relations = {flat}");
    if flat {
        let link = tri!(c.cube.vertex_link(c.cube.root()));
        ensure!(link.faces() == c.delta.faces(), "root link is not the crossing complex");
    }
    pass()
}

/// Containment and meet formulas against vertex sets, on all face pairs.
fn face_poset(c: &Ctx) -> Option<Outcome> {
    if c.pip.len() > FACE_POSET_MAX {
        return None;
    }
    let faces = c.cube.faces();
    let bits = FaceBits::new(&c.cube);
    let mut covers = Vec::new();
    for (i, fi) in faces.iter().enumerate() {
        ensure!(bits.size(i) == 1 << fi.dim(), "{fi} has {} vertices", bits.size(i));
        for (j, fj) in faces.iter().enumerate() {
            let formula = fi.contains(fj);
            ensure!(formula == bits.subset(j, i), "{fj} ⊆ {fi}: formula says {formula}");
            if formula && fi.dim() == fj.dim() + 1 {
                covers.push((j, i));
            }
            if j <= i {
                continue;
            }
            match fi.meet(fj) {
                Some(m) => {
                    let Some(k) = c.cube.face_id(&m) else {
                        return Some(Outcome::fail(format!("meet of {fi} and {fj} is {m}, not a face")));
                    };
                    ensure!(bits.intersection_is(i, j, k), "meet of {fi} and {fj} is not {m}");
                }
                None => ensure!(!bits.meets(i, j), "{fi} and {fj} share a vertex but have no meet"),
            }
        }
    }
    covers.sort_unstable();
    ensure!(c.cube.covering_pairs() == covers, "covering pairs differ from rank-one containments");
    for (k, f) in faces.iter().enumerate() {
        let mut ups: Vec<usize> = c
            .cube
            .upper_covers(f)
            .iter()
            .map(|g| c.cube.face_id(g).expect("upper cover is a face"))
            .collect();
        ups.sort_unstable();
        let want: Vec<usize> = covers.iter().filter(|&&(s, _)| s == k).map(|&(_, b)| b).collect();
        ensure!(ups == want, "upper covers of {f}");
    }
    pass()
}

fn minimum_colouring(c: &Ctx) -> Result<SimplicialColoring, String> {
    let chi = chromatic_number(&c.delta);
    let kappa = find_r_coloring(&c.delta, chi).ok_or_else(|| format!("no colouring with {chi} colours"))?;
    if chi > 0 && find_r_coloring(&c.delta, chi - 1).is_some() {
        return Err(format!("chromatic number {chi} is not minimal"));
    }
    kappa.validate(&c.delta).map_err(|e| e.to_string())?;
    Ok(kappa)
}

/// Lifting a minimum colouring of `Δ_P` gives a valid colouring of `ℂ_P`
/// that projects back to it.
fn colouring_lift(c: &Ctx) -> Option<Outcome> {
    let kappa = tri!(minimum_colouring(c));
    let lifted = tri!(lift_coloring(&c.cube, &kappa));
    tri!(lifted.validate(&c.cube));
    tri!(lifted.validate_abstract(&c.cube.to_abstract()));
    ensure!(lifted.assignment[c.cube.root()] == 0, "root label is not zero");
    let back = tri!(project_coloring(&c.cube, &lifted));
    ensure!(
        back.assignment[..c.pip.len()] == kappa.assignment[..c.pip.len()],
        "projection {:?} of the lift of {:?}",
        back.assignment,
        kappa.assignment
    );
    pass()
}

/// The least `r` for an `r`-colouring of `ℂ_P`, by exhaustive search,
/// equals the chromatic number of `Δ_P`.
fn colouring_min_r(c: &Ctx) -> Option<Outcome> {
    if c.pip.len() > MIN_R_MAX {
        return None;
    }
    let chi = chromatic_number(&c.delta);
    if chi > 0 {
        match exhaustive_cubical_coloring(&c.cube, chi - 1, EXHAUSTIVE_BUDGET) {
            None => return Some(Outcome::skip(format!("search budget exhausted at r = {}", chi - 1))),
            Some(Some(k)) => return Some(Outcome::fail(format!("cubical {}-colouring {:?}", chi - 1, k.assignment))),
            Some(None) => {}
        }
    }
    let found = match exhaustive_cubical_coloring(&c.cube, chi, EXHAUSTIVE_BUDGET) {
        None => return Some(Outcome::skip(format!("search budget exhausted at r = {chi}"))),
        Some(None) => return Some(Outcome::fail(format!("no cubical {chi}-colouring"))),
        Some(Some(k)) => k,
    };
    tri!(found.validate(&c.cube));
    let projected = tri!(project_coloring(&c.cube, &found));
    tri!(projected.validate(&c.delta));
    ensure!(projected.r == chi, "projection uses {} colours", projected.r);
    identity_holds(c, &projected, &found.assignment)
}

fn balanced(c: &Ctx) -> Option<Outcome> {
    let report = tri!(is_balanced_pair(c.pip));
    ensure!(
        report.simplicial == report.cubical,
        "Δ balanced = {}, ℂ balanced = {} ({:?})",
        report.simplicial,
        report.cubical,
        report.cubical_method
    );
    let by_number = chromatic_number(&c.delta) as isize == c.delta.dim() + 1;
    ensure!(report.simplicial == by_number, "balancedness disagrees with the chromatic number");
    pass()
}

/// On the order alone, the chain-cover colouring is proper and uses as
/// many colours as the largest face has vertices.
fn dilworth(c: &Ctx) -> Option<Outcome> {
    let r = c.pip.without_inconsistencies();
    let delta = tri!(SimplicialComplex::crossing_complex(&r));
    let kappa = tri!(dilworth_coloring(&r));
    tri!(kappa.validate(&delta));
    let width = r.max_antichain_width();
    ensure!(kappa.r == width, "{} colours, width {width}", kappa.r);
    ensure!(delta.dim() + 1 == width as isize, "dim Δ = {}, width {width}", delta.dim());
    ensure!(chromatic_number(&delta) == width, "chromatic number is not the width");
    pass()
}

/// `f(ℂ_P; x, 1) = f(Δ_P; 1 + x)` for a colouring and the cubical
/// colouring over it; both specialise to the plain f-polynomials.
fn identity_holds(c: &Ctx, kappa: &SimplicialColoring, labels: &[u64]) -> Option<Outcome> {
    let cub = tri!(coloured_f_cubical(&c.cube, labels, kappa.r));
    let simp = tri!(coloured_f_simplicial(&c.delta, &kappa.assignment, kappa.r));
    ensure!(
        cub.y_to_one() == simp.shift_x_by_one(),
        "coloured identity fails for colouring {:?}",
        kappa.assignment
    );
    ensure!(cub.specialize() == f_poly_cubical(&c.cube), "cubical specialisation");
    ensure!(simp.specialize() == f_poly_simplicial(&c.delta), "simplicial specialisation");
    pass()
}

fn coloured_identity(c: &Ctx) -> Option<Outcome> {
    let n = c.pip.len();
    let discrete = SimplicialColoring {
        r: n,
        assignment: (0..n).collect(),
    };
    for kappa in [tri!(minimum_colouring(c)), discrete] {
        let lifted = tri!(lift_coloring(&c.cube, &kappa));
        if let Some(o @ Outcome::Fail { .. }) = identity_holds(c, &kappa, &lifted.assignment) {
            return Some(o);
        }
        // The discrete colouring lifts to the embedding into the cube.
        if kappa.r == n && kappa.assignment.iter().enumerate().all(|(x, &k)| x == k) {
            for (v, &d) in c.cube.downsets().iter().enumerate() {
                ensure!(lifted.assignment[v] == d.bits(), "discrete lift at {d}");
            }
        }
    }
    pass()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pip::tests::p7;

    #[test]
    fn every_suite_passes_on_p7() {
        let p = p7();
        let c = Ctx::new(&p, &p, 9).unwrap();
        for (name, suite) in SUITES {
            let outcome = suite(&c).unwrap_or(Outcome::Pass);
            assert_eq!(outcome, Outcome::Pass, "{name}");
        }
    }

    #[test]
    fn roundtrip_catches_wrong_reference() {
        let p = p7();
        let q = Pip::antichain(7);
        let c = Ctx::new(&p, &q, 0).unwrap();
        assert!(roundtrip(&c).unwrap().is_fail());
    }

    #[test]
    fn empty_and_single_element() {
        for p in [Pip::antichain(0), Pip::antichain(1), Pip::chain(3)] {
            let c = Ctx::new(&p, &p, 1).unwrap();
            for (name, suite) in SUITES {
                let outcome = suite(&c).unwrap_or(Outcome::Pass);
                assert_eq!(outcome, Outcome::Pass, "{name} on {p:?}");
            }
        }
    }
}
