//! Mixed-sign Coxeter graphs: a finite connected simple graph with a sign on
//! every vertex.

mod format;
mod trees;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numeric::IntMatrix;

pub use format::{parse_graph, ParseError, ParseErrorKind};
pub use trees::{
    canonical_tree_form, enumerate_alternating_trees, labeled_tree_count, tree_from_prufer,
    AlternatingTrees,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `+1` or `-1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub name: String,
    pub sign: Sign,
}

impl Vertex {
    pub fn new(name: impl Into<String>, sign: Sign) -> Self {
        Self {
            name: name.into(),
            sign,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("duplicate vertex name {0:?}")]
    DuplicateVertex(String),
    #[error("edge endpoint {0} out of range")]
    UnknownVertex(usize),
    #[error("self-edge at vertex {0:?}")]
    SelfEdge(String),
    #[error("repeated edge {0:?} -- {1:?}")]
    RepeatedEdge(String, String),
    #[error("graph is disconnected: vertex {0:?} is unreachable from the first vertex")]
    Disconnected(String),
    #[error("graph is not bipartite (odd cycle through vertex {0:?})")]
    OddCycle(String),
    #[error("vertex extension needs at least one neighbor")]
    NoNeighbors,
    #[error("new vertex sign conflicts with alternation at neighbor {0:?}")]
    SignConflict(String),
    #[error("bipartition does not match the graph: {0}")]
    InvalidBipartition(String),
}

/// A finite connected simple graph with a `±` label per vertex.
///
/// Vertex order is significant: it fixes matrix indexing everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedSignGraph {
    vertices: Vec<Vertex>,
    adjacency: Vec<Vec<usize>>,
}

impl MixedSignGraph {
    pub fn new(vertices: Vec<Vertex>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut names = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if names.insert(v.name.as_str(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.name.clone()));
            }
        }
        let n = vertices.len();
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::UnknownVertex(a));
            }
            if b >= n {
                return Err(GraphError::UnknownVertex(b));
            }
            if a == b {
                return Err(GraphError::SelfEdge(vertices[a].name.clone()));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(GraphError::RepeatedEdge(
                    vertices[a].name.clone(),
                    vertices[b].name.clone(),
                ));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let g = Self {
            vertices,
            adjacency,
        };
        if let Some(v) = g.first_unreachable() {
            return Err(GraphError::Disconnected(g.vertices[v].name.clone()));
        }
        Ok(g)
    }

    /// Builds from `(name, sign)` pairs and name-based edges.
    pub fn from_names(
        vertices: &[(&str, Sign)],
        edges: &[(&str, &str)],
    ) -> Result<Self, GraphError> {
        let vs: Vec<Vertex> = vertices.iter().map(|&(n, s)| Vertex::new(n, s)).collect();
        let index: HashMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, &(n, _))| (n, i))
            .collect();
        let es = edges
            .iter()
            .map(|(a, b)| {
                let ia = *index.get(a).ok_or(GraphError::UnknownVertex(usize::MAX))?;
                let ib = *index.get(b).ok_or(GraphError::UnknownVertex(usize::MAX))?;
                Ok((ia, ib))
            })
            .collect::<Result<Vec<_>, GraphError>>()?;
        Self::new(vs, &es)
    }

    fn first_unreachable(&self) -> Option<usize> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().position(|s| !s)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn sign(&self, i: usize) -> Sign {
        self.vertices[i].sign
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vertices[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.vertex_count()
    }

    /// Same graph with every sign flipped.
    pub fn sign_flipped(&self) -> Self {
        let mut g = self.clone();
        for v in &mut g.vertices {
            v.sign = v.sign.flip();
        }
        g
    }

    /// Same graph with new signs (length must match).
    pub fn with_signs(&self, signs: &[Sign]) -> Self {
        assert_eq!(signs.len(), self.vertex_count());
        let mut g = self.clone();
        for (v, &s) in g.vertices.iter_mut().zip(signs) {
            v.sign = s;
        }
        g
    }

    /// Reorders vertices so that `order[k]` becomes vertex `k`.
    pub fn reordered(&self, order: &[usize]) -> Self {
        let n = self.vertex_count();
        assert_eq!(order.len(), n);
        let mut pos = vec![usize::MAX; n];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        let vertices = order.iter().map(|&v| self.vertices[v].clone()).collect();
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(a, b)| (pos[a], pos[b]))
            .collect();
        Self::new(vertices, &edges).expect("reordering preserves validity")
    }

    /// Vertex indices with `+` first, then `-`, each in declaration order.
    pub fn positives_first_order(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut order: Vec<usize> = (0..n).filter(|&i| self.sign(i) == Sign::Plus).collect();
        order.extend((0..n).filter(|&i| self.sign(i) == Sign::Minus));
        order
    }

    /// Removes a set of edges; `None` if the result would be disconnected.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Option<Self> {
        let drop: BTreeSet<(usize, usize)> =
            removed.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|e| !drop.contains(e))
            .collect();
        Self::new(self.vertices.clone(), &edges).ok()
    }

    /// Removes one vertex; `None` if the result would be empty or disconnected.
    pub fn without_vertex(&self, v: usize) -> Option<Self> {
        let n = self.vertex_count();
        let keep: Vec<usize> = (0..n).filter(|&i| i != v).collect();
        let mut pos = vec![usize::MAX; n];
        for (k, &i) in keep.iter().enumerate() {
            pos[i] = k;
        }
        let vertices = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| a != v && b != v)
            .map(|(a, b)| (pos[a], pos[b]))
            .collect();
        Self::new(vertices, &edges).ok()
    }

    /// Adds edges among existing vertices; errors on repeats.
    pub fn with_extra_edges(&self, extra: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = self.edges();
        edges.extend_from_slice(extra);
        Self::new(self.vertices.clone(), &edges)
    }

    /// Serializes to the line-oriented graph file format.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for MixedSignGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            writeln!(f, "vertex {} {}", v.name, v.sign)?;
        }
        for (a, b) in self.edges() {
            writeln!(
                f,
                "edge {} {}",
                self.vertices[a].name, self.vertices[b].name
            )?;
        }
        Ok(())
    }
}

/// A partition of the vertex indices with no edge inside either part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub part_plus: Vec<usize>,
    pub part_minus: Vec<usize>,
}

impl Bipartition {
    pub fn new(mut part_plus: Vec<usize>, mut part_minus: Vec<usize>) -> Self {
        part_plus.sort_unstable();
        part_minus.sort_unstable();
        Self {
            part_plus,
            part_minus,
        }
    }

    pub fn swapped(&self) -> Self {
        Self {
            part_plus: self.part_minus.clone(),
            part_minus: self.part_plus.clone(),
        }
    }

    pub fn validate(&self, g: &MixedSignGraph) -> Result<(), GraphError> {
        let n = g.vertex_count();
        let mut side = vec![None; n];
        for (part, label) in [(&self.part_plus, true), (&self.part_minus, false)] {
            for &v in part {
                if v >= n {
                    return Err(GraphError::InvalidBipartition(format!(
                        "index {v} out of range"
                    )));
                }
                if side[v].replace(label).is_some() {
                    return Err(GraphError::InvalidBipartition(format!(
                        "vertex {:?} appears twice",
                        g.name(v)
                    )));
                }
            }
        }
        if let Some(v) = side.iter().position(Option::is_none) {
            return Err(GraphError::InvalidBipartition(format!(
                "vertex {:?} is in neither part",
                g.name(v)
            )));
        }
        for (a, b) in g.edges() {
            if side[a] == side[b] {
                return Err(GraphError::InvalidBipartition(format!(
                    "edge {:?} -- {:?} lies inside one part",
                    g.name(a),
                    g.name(b)
                )));
            }
        }
        Ok(())
    }
}

/// Symmetric 0/1 adjacency matrix in vertex order.
pub fn adjacency_matrix(g: &MixedSignGraph) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.vertex_count());
    for (a, b) in g.edges() {
        m.set(a, b, BigInt::one());
        m.set(b, a, BigInt::one());
    }
    m
}

/// Every edge joins a `+` vertex to a `-` vertex.
pub fn is_alternating_sign(g: &MixedSignGraph) -> bool {
    g.edges().iter().all(|&(a, b)| g.sign(a) != g.sign(b))
}

/// The bipartition given by the signs, if the graph is alternating-sign.
pub fn sign_bipartition(g: &MixedSignGraph) -> Option<Bipartition> {
    if !is_alternating_sign(g) {
        return None;
    }
    let n = g.vertex_count();
    Some(Bipartition::new(
        (0..n).filter(|&i| g.sign(i) == Sign::Plus).collect(),
        (0..n).filter(|&i| g.sign(i) == Sign::Minus).collect(),
    ))
}

/// Breadth-first proper 2-coloring with vertex 0 in `part_plus`.
pub fn two_coloring(g: &MixedSignGraph) -> Result<Bipartition, GraphError> {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    color[0] = Some(true);
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        let c = color[v].unwrap();
        for &w in g.neighbors(v) {
            match color[w] {
                None => {
                    color[w] = Some(!c);
                    queue.push_back(w);
                }
                Some(cw) if cw == c => return Err(GraphError::OddCycle(g.name(w).to_string())),
                Some(_) => {}
            }
        }
    }
    Ok(Bipartition::new(
        (0..n).filter(|&i| color[i] == Some(true)).collect(),
        (0..n).filter(|&i| color[i] == Some(false)).collect(),
    ))
}

/// Whether new vertices must keep the graph alternating-sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionMode {
    RequireAlternating,
    Unrestricted,
}

/// Adds one vertex `w` adjacent to exactly `neighbors`, named with the first
/// free identifier of the form `w`, `w1`, `w2`, ...
pub fn vertex_extension(
    g: &MixedSignGraph,
    sign: Sign,
    neighbors: &[usize],
    mode: ExtensionMode,
) -> Result<MixedSignGraph, GraphError> {
    let mut name = "w".to_string();
    let mut k = 0;
    while g.index_of(&name).is_some() {
        k += 1;
        name = format!("w{k}");
    }
    vertex_extension_named(g, &name, sign, neighbors, mode)
}

pub fn vertex_extension_named(
    g: &MixedSignGraph,
    name: &str,
    sign: Sign,
    neighbors: &[usize],
    mode: ExtensionMode,
) -> Result<MixedSignGraph, GraphError> {
    if neighbors.is_empty() {
        return Err(GraphError::NoNeighbors);
    }
    if mode == ExtensionMode::RequireAlternating {
        if let Some(&c) = neighbors
            .iter()
            .find(|&&v| v < g.vertex_count() && g.sign(v) == sign)
        {
            return Err(GraphError::SignConflict(g.name(c).to_string()));
        }
    }
    let w = g.vertex_count();
    let mut vertices = g.vertices.clone();
    vertices.push(Vertex::new(name, sign));
    let mut edges = g.edges();
    edges.extend(neighbors.iter().map(|&v| (v, w)));
    MixedSignGraph::new(vertices, &edges)
}

/// Label-preserving containment: every vertex of `small` (name and sign)
/// and every edge of `small` occur in `large`.
pub fn is_subgraph(small: &MixedSignGraph, large: &MixedSignGraph) -> bool {
    let Some(map) = vertex_map(small, large) else {
        return false;
    };
    small
        .edges()
        .iter()
        .all(|&(a, b)| large.has_edge(map[a], map[b]))
}

fn vertex_map(small: &MixedSignGraph, large: &MixedSignGraph) -> Option<Vec<usize>> {
    small
        .vertices
        .iter()
        .map(|v| large.index_of(&v.name).filter(|&j| large.sign(j) == v.sign))
        .collect()
}

/// `large` has exactly one extra vertex `w`, and the edges of `small` are
/// precisely the edges of `large` not touching `w`.
pub fn is_vertex_extension(small: &MixedSignGraph, large: &MixedSignGraph) -> bool {
    if large.vertex_count() != small.vertex_count() + 1 {
        return false;
    }
    let Some(map) = vertex_map(small, large) else {
        return false;
    };
    let mut hit = vec![false; large.vertex_count()];
    for &j in &map {
        hit[j] = true;
    }
    let Some(w) = hit.iter().position(|h| !h) else {
        return false;
    };
    let mut back = vec![usize::MAX; large.vertex_count()];
    for (i, &j) in map.iter().enumerate() {
        back[j] = i;
    }
    let small_edges: BTreeSet<(usize, usize)> = small.edges().into_iter().collect();
    let large_edges: BTreeSet<(usize, usize)> = large
        .edges()
        .into_iter()
        .filter(|&(a, b)| a != w && b != w)
        .map(|(a, b)| {
            let (x, y) = (back[a], back[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    small_edges == large_edges
}
