//! Graphviz renderings.

use std::fmt::Write;

use super::fmt_downset;
use crate::cubical::CubicalComplexP;
use crate::pip::Pip;
use crate::simplicial::SimplicialComplex;

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
];

/// Hasse diagram drawn bottom-up: solid arrows for covers, dashed
/// undirected edges for minimal inconsistent pairs.
pub fn hasse_dot(p: &Pip, base: usize) -> String {
    let mut out = String::from("digraph pip {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in 0..p.len() {
        writeln!(out, "  \"{}\";", x + base).unwrap();
    }
    for (a, b) in p.hasse_covers() {
        writeln!(out, "  \"{}\" -> \"{}\";", a + base, b + base).unwrap();
    }
    for (a, b) in p.minimal_inconsistent_pairs() {
        writeln!(out, "  \"{}\" -> \"{}\" [style=dashed, dir=none, constraint=false];", a + base, b + base).unwrap();
    }
    out.push_str("}\n");
    out
}

/// The 1-skeleton of a simplicial complex.
pub fn crossing_dot(k: &SimplicialComplex, base: usize) -> String {
    let mut out = String::from("graph crossing {\n  node [shape=circle];\n");
    for v in k.vertices() {
        writeln!(out, "  \"{}\";", v + base).unwrap();
    }
    for (a, b) in k.graph().edges() {
        writeln!(out, "  \"{}\" -- \"{}\";", a + base, b + base).unwrap();
    }
    out.push_str("}\n");
    out
}

/// The 1-skeleton of `ℂ_P`, vertices named by their downsets and edges
/// coloured by the element (hyperplane) they cross.
pub fn skeleton_dot(x: &CubicalComplexP, base: usize) -> String {
    let mut out = String::from("graph skeleton {\n  node [shape=box, fontsize=10];\n");
    for (v, &d) in x.downsets().iter().enumerate() {
        let extra = if v == x.root() { ", style=bold" } else { "" };
        writeln!(out, "  v{v} [label=\"{}\"{extra}];", fmt_downset(d, base)).unwrap();
    }
    for &(lo, hi, e) in x.edges() {
        writeln!(
            out,
            "  v{lo} -- v{hi} [color=\"{}\", label=\"{}\"];",
            PALETTE[e % PALETTE.len()],
            e + base
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pip::tests::p7;

    #[test]
    fn p7_hasse_counts() {
        let dot = hasse_dot(&p7(), 1);
        let nodes = dot.lines().filter(|l| l.trim_end().ends_with("\";") && !l.contains("->")).count();
        let solid = dot.lines().filter(|l| l.contains("->") && !l.contains("dashed")).count();
        let dashed = dot.lines().filter(|l| l.contains("dashed")).count();
        assert_eq!((nodes, solid, dashed), (7, 7, 3));
        assert!(dot.contains("\"3\" -> \"7\" [style=dashed"));
    }

    #[test]
    fn single_vertex_skeleton() {
        let x = CubicalComplexP::build(&Pip::antichain(0)).unwrap();
        let dot = skeleton_dot(&x, 1);
        assert_eq!(dot.matches("[label=").count(), 1);
        assert!(!dot.contains("--"));
    }

    #[test]
    fn g5_crossing_graph() {
        let g5 = Pip::from_graph(5, &[(0, 4), (0, 1), (1, 4), (2, 4), (2, 3)]).unwrap();
        let dot = crossing_dot(&SimplicialComplex::crossing_complex(&g5).unwrap(), 1);
        assert_eq!(dot.matches(" -- ").count(), 5);
    }
}
