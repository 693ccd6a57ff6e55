use std::collections::HashSet;

use super::{MixedSignGraph, Sign, Vertex};

/// Cayley's count `n^(n-2)` of labeled trees (1 for `n <= 2`).
pub fn labeled_tree_count(n: usize) -> u64 {
    if n <= 2 {
        1
    } else {
        (n as u64).pow(n as u32 - 2)
    }
}

/// Decodes a Prüfer sequence (length `n - 2`, entries `< n`) into a tree on
/// vertices `v0..v{n-1}`, signed alternately with `v0` positive.
pub fn tree_from_prufer(n: usize, code: &[usize]) -> MixedSignGraph {
    assert!(n >= 1);
    let edges = if n == 1 {
        Vec::new()
    } else {
        assert_eq!(code.len(), n - 2, "Prüfer code length must be n - 2");
        let mut degree = vec![1usize; n];
        for &c in code {
            degree[c] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &c in code {
            let leaf = (0..n)
                .find(|&v| degree[v] == 1)
                .expect("a leaf always exists");
            edges.push((leaf.min(c), leaf.max(c)));
            degree[leaf] -= 1;
            degree[c] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        edges
    };
    let signs = bfs_parity_signs(n, &edges);
    let vertices = (0..n)
        .map(|i| Vertex::new(format!("v{i}"), signs[i]))
        .collect();
    MixedSignGraph::new(vertices, &edges).expect("Prüfer decoding yields a tree")
}

fn bfs_parity_signs(n: usize, edges: &[(usize, usize)]) -> Vec<Sign> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut sign = vec![None; n];
    sign[0] = Some(Sign::Plus);
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        let s = sign[v].unwrap();
        for &w in &adj[v] {
            if sign[w].is_none() {
                sign[w] = Some(s.flip());
                stack.push(w);
            }
        }
    }
    sign.into_iter()
        .map(|s| s.expect("tree is connected"))
        .collect()
}

/// The `index`-th Prüfer code of length `n - 2` in lexicographic order.
fn prufer_code(n: usize, mut index: u64) -> Vec<usize> {
    let len = n.saturating_sub(2);
    let mut code = vec![0usize; len];
    for slot in code.iter_mut().rev() {
        *slot = (index % n as u64) as usize;
        index /= n as u64;
    }
    code
}

/// All labeled trees on `n` vertices in Prüfer order, alternately signed.
///
/// With `dedup`, only the first tree of each isomorphism class is yielded.
pub struct AlternatingTrees {
    n: usize,
    next: u64,
    total: u64,
    seen: Option<HashSet<String>>,
}

impl AlternatingTrees {
    pub fn new(n: usize, dedup: bool) -> Self {
        assert!(n >= 1, "trees need at least one vertex");
        Self {
            n,
            next: 0,
            total: labeled_tree_count(n),
            seen: dedup.then(HashSet::new),
        }
    }

    /// Tree number `index` (`< labeled_tree_count(n)`), independent of iteration state.
    pub fn tree_at(n: usize, index: u64) -> MixedSignGraph {
        tree_from_prufer(n, &prufer_code(n, index))
    }
}

impl Iterator for AlternatingTrees {
    /// Enumeration index and tree.
    type Item = (u64, MixedSignGraph);

    fn next(&mut self) -> Option<Self::Item> {
        while self.next < self.total {
            let idx = self.next;
            self.next += 1;
            let t = Self::tree_at(self.n, idx);
            if let Some(seen) = &mut self.seen {
                let form = canonical_tree_form(&t).expect("enumerated graphs are trees");
                if !seen.insert(form) {
                    continue;
                }
            }
            return Some((idx, t));
        }
        None
    }
}

pub fn enumerate_alternating_trees(n: usize) -> impl Iterator<Item = MixedSignGraph> {
    AlternatingTrees::new(n, false).map(|(_, t)| t)
}

/// Canonical string of the unlabeled, unsigned shape of a tree (AHU encoding
/// rooted at the center), or `None` if `g` is not a tree.
pub fn canonical_tree_form(g: &MixedSignGraph) -> Option<String> {
    if !g.is_tree() {
        return None;
    }
    let n = g.vertex_count();
    if n == 1 {
        return Some("()".into());
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.neighbors(v).len()).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in g.neighbors(leaf) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| rooted_form(g, c, usize::MAX)).min()
}

fn rooted_form(g: &MixedSignGraph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_form(g, w, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_alternating_sign;

    #[test]
    fn cayley_counts() {
        assert_eq!(AlternatingTrees::new(1, false).count(), 1);
        assert_eq!(AlternatingTrees::new(2, false).count(), 1);
        assert_eq!(AlternatingTrees::new(3, false).count(), 3);
        assert_eq!(AlternatingTrees::new(4, false).count(), 16);
        assert_eq!(AlternatingTrees::new(5, false).count(), 125);
        assert_eq!(labeled_tree_count(8), 262_144);
    }

    #[test]
    fn enumerated_trees_are_distinct_alternating_trees() {
        let trees: Vec<_> = enumerate_alternating_trees(5).collect();
        let distinct: HashSet<Vec<(usize, usize)>> = trees.iter().map(|t| t.edges()).collect();
        assert_eq!(distinct.len(), 125);
        for t in &trees {
            assert!(t.is_tree());
            assert!(is_alternating_sign(t));
            assert_eq!(t.sign(0), Sign::Plus);
        }
    }

    #[test]
    fn dedup_counts_unlabeled_trees() {
        // OEIS A000055
        let expect = [1, 1, 1, 2, 3, 6, 11, 23];
        for (n, &e) in (1..=8).zip(&expect) {
            assert_eq!(AlternatingTrees::new(n, true).count(), e, "n = {n}");
        }
    }

    #[test]
    fn smallest_trees() {
        let a2 = tree_from_prufer(2, &[]);
        assert_eq!(a2.edges(), vec![(0, 1)]);
        assert_eq!(a2.sign(1), Sign::Minus);
        let star = tree_from_prufer(4, &[0, 0]);
        assert_eq!(star.edges(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let path_a = tree_from_prufer(4, &[1, 2]);
        let path_b = tree_from_prufer(4, &[3, 1]);
        let star = tree_from_prufer(4, &[2, 2]);
        assert_eq!(canonical_tree_form(&path_a), canonical_tree_form(&path_b));
        assert_ne!(canonical_tree_form(&path_a), canonical_tree_form(&star));
    }
}
