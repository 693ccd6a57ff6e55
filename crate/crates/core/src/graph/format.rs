//! Line-oriented graph text format:
//!
//! ```text
//! # comment
//! vertex <name> <+|->
//! edge <name> <name>
//! ```

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use super::{GraphError, MixedSignGraph, Sign, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownDirective(String),
    WrongArity {
        directive: &'static str,
        expected: usize,
    },
    BadSign(String),
    DuplicateVertex(String),
    UnknownVertex(String),
    SelfEdge(String),
    RepeatedEdge(String, String),
    Disconnected(String),
    Empty,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        match self {
            UnknownDirective(d) => write!(f, "unknown directive {d:?}"),
            WrongArity {
                directive,
                expected,
            } => write!(f, "`{directive}` takes {expected} arguments"),
            BadSign(s) => write!(f, "bad sign token {s:?} (expected + or -)"),
            DuplicateVertex(v) => write!(f, "duplicate vertex {v:?}"),
            UnknownVertex(v) => write!(f, "unknown vertex {v:?} in edge"),
            SelfEdge(v) => write!(f, "self-edge at {v:?}"),
            RepeatedEdge(a, b) => write!(f, "repeated edge {a} {b}"),
            Disconnected(v) => write!(f, "disconnected graph: {v:?} is unreachable"),
            Empty => write!(f, "empty graph"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

pub fn parse_graph(text: &str) -> Result<MixedSignGraph, ParseError> {
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut vertex_line: Vec<usize> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    let mut last_line = 0;
    let err = |line, kind| ParseError { line, kind };

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        match words[0] {
            "vertex" => {
                if words.len() != 3 {
                    return Err(err(
                        line,
                        ParseErrorKind::WrongArity {
                            directive: "vertex",
                            expected: 2,
                        },
                    ));
                }
                let sign = match words[2] {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    other => return Err(err(line, ParseErrorKind::BadSign(other.into()))),
                };
                let name = words[1].to_string();
                if index.contains_key(&name) {
                    return Err(err(line, ParseErrorKind::DuplicateVertex(name)));
                }
                index.insert(name.clone(), vertices.len());
                vertices.push(Vertex::new(name, sign));
                vertex_line.push(line);
            }
            "edge" => {
                if words.len() != 3 {
                    return Err(err(
                        line,
                        ParseErrorKind::WrongArity {
                            directive: "edge",
                            expected: 2,
                        },
                    ));
                }
                let lookup = |w: &str| {
                    index
                        .get(w)
                        .copied()
                        .ok_or_else(|| err(line, ParseErrorKind::UnknownVertex(w.into())))
                };
                let a = lookup(words[1])?;
                let b = lookup(words[2])?;
                if a == b {
                    return Err(err(line, ParseErrorKind::SelfEdge(words[1].into())));
                }
                if !seen.insert((a.min(b), a.max(b))) {
                    return Err(err(
                        line,
                        ParseErrorKind::RepeatedEdge(words[1].into(), words[2].into()),
                    ));
                }
                edges.push((a, b));
            }
            other => return Err(err(line, ParseErrorKind::UnknownDirective(other.into()))),
        }
    }

    if vertices.is_empty() {
        return Err(err(last_line.max(1), ParseErrorKind::Empty));
    }
    MixedSignGraph::new(vertices, &edges).map_err(|e| match e {
        GraphError::Disconnected(name) => {
            let line = vertex_line[index[&name]];
            err(line, ParseErrorKind::Disconnected(name))
        }
        other => unreachable!("validated while parsing: {other}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn kind(text: &str) -> (usize, ParseErrorKind) {
        let e = parse_graph(text).unwrap_err();
        (e.line, e.kind)
    }

    #[test]
    fn parses_smallest_input() {
        let g = parse_graph("vertex a +\nvertex b -\nedge a b").unwrap();
        assert_eq!(g, fixtures::a2());
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# A2\n\n  vertex a +\nvertex b -   \n# edge\nedge b a\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.name(0), "a");
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            kind("vertex a +\nedge a a"),
            (2, ParseErrorKind::SelfEdge("a".into()))
        );
        assert_eq!(
            kind("vertex a +\nvertex a -"),
            (2, ParseErrorKind::DuplicateVertex("a".into()))
        );
        assert_eq!(
            kind("vertex a +\nedge a z"),
            (2, ParseErrorKind::UnknownVertex("z".into()))
        );
        assert_eq!(
            kind("vertex a +\nvertex b -\nedge a b\nedge b a"),
            (4, ParseErrorKind::RepeatedEdge("b".into(), "a".into()))
        );
        assert_eq!(kind("vertex a *"), (1, ParseErrorKind::BadSign("*".into())));
        assert_eq!(
            kind("vertex a +\nvertex b -\nvertex c +\nedge a b"),
            (3, ParseErrorKind::Disconnected("c".into()))
        );
        assert_eq!(kind("# nothing\n"), (1, ParseErrorKind::Empty));
        assert_eq!(kind(""), (1, ParseErrorKind::Empty));
        assert_eq!(
            kind("node a +"),
            (1, ParseErrorKind::UnknownDirective("node".into()))
        );
        assert!(matches!(
            kind("vertex a"),
            (1, ParseErrorKind::WrongArity { .. })
        ));
    }

    #[test]
    fn serialization_round_trips() {
        for g in fixtures::all().into_iter().map(|(_, g)| g) {
            assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
        }
    }

    #[test]
    fn five_vertex_fixture_has_expected_block() {
        let g = fixtures::five_vertex();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
    }
}
