//! Built-in example graphs.

use crate::graph::{MixedSignGraph, Sign};

use Sign::{Minus as M, Plus as P};

pub const NAMES: [&str; 6] = ["a2", "p3-alt", "paper-5", "p5", "k33", "e10-classical"];

pub fn by_name(name: &str) -> Option<MixedSignGraph> {
    Some(match name {
        "a2" => a2(),
        "p3-alt" => p3_alt(),
        "paper-5" => five_vertex(),
        "p5" => p5(),
        "k33" => k33(),
        "e10-classical" => e10_classical(),
        _ => return None,
    })
}

pub fn all() -> Vec<(&'static str, MixedSignGraph)> {
    NAMES.iter().map(|&n| (n, by_name(n).unwrap())).collect()
}

/// Alternating-sign A₂: one edge between a `+` and a `-` vertex.
pub fn a2() -> MixedSignGraph {
    MixedSignGraph::from_names(&[("a", P), ("b", M)], &[("a", "b")]).unwrap()
}

/// Alternating path on three vertices; a vertex extension of [`a2`].
pub fn p3_alt() -> MixedSignGraph {
    MixedSignGraph::from_names(&[("a", P), ("b", M), ("c", P)], &[("a", "b"), ("b", "c")]).unwrap()
}

/// The five-vertex alternating graph whose positives-first adjacency block is
/// `X = [[1,1],[1,1],[0,1]]`.
pub fn five_vertex() -> MixedSignGraph {
    MixedSignGraph::from_names(
        &[("p1", P), ("p2", P), ("p3", P), ("n1", M), ("n2", M)],
        &[
            ("p1", "n1"),
            ("p1", "n2"),
            ("p2", "n1"),
            ("p2", "n2"),
            ("p3", "n2"),
        ],
    )
    .unwrap()
}

/// Alternating path on five vertices, labeled so that it sits inside [`k33`].
pub fn p5() -> MixedSignGraph {
    MixedSignGraph::from_names(
        &[("a1", P), ("b1", M), ("a2", P), ("b2", M), ("a3", P)],
        &[("a1", "b1"), ("b1", "a2"), ("a2", "b2"), ("b2", "a3")],
    )
    .unwrap()
}

/// Complete bipartite K₃,₃ with sides `a*` (+) and `b*` (-).
pub fn k33() -> MixedSignGraph {
    let a = ["a1", "a2", "a3"];
    let b = ["b1", "b2", "b3"];
    let vertices: Vec<(&str, Sign)> = a
        .iter()
        .map(|&n| (n, P))
        .chain(b.iter().map(|&n| (n, M)))
        .collect();
    let edges: Vec<(&str, &str)> = a
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .collect();
    MixedSignGraph::from_names(&vertices, &edges).unwrap()
}

/// The (2,3,7) star-like tree E₁₀ with every sign positive: arms of 1, 2 and 6
/// edges from the center `c`.
pub fn e10_classical() -> MixedSignGraph {
    let names = ["c", "x1", "y1", "y2", "z1", "z2", "z3", "z4", "z5", "z6"];
    let vertices: Vec<(&str, Sign)> = names.iter().map(|&n| (n, P)).collect();
    let edges = [
        ("c", "x1"),
        ("c", "y1"),
        ("y1", "y2"),
        ("c", "z1"),
        ("z1", "z2"),
        ("z2", "z3"),
        ("z3", "z4"),
        ("z4", "z5"),
        ("z5", "z6"),
    ];
    MixedSignGraph::from_names(&vertices, &edges).unwrap()
}
