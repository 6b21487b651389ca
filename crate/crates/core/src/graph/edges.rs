//! Plain edge-list format.
//!
//! ```text
//! # comment
//! n m
//! u v
//! ...
//! ```
//!
//! Indices are 0-based and class-local: `0 <= u < n`, `0 <= v < m`.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use super::{BipartiteGraph, GraphError, Side};

fn pair(line: usize, raw: &str) -> Result<(usize, usize), String> {
    let mut tokens = raw.split_ascii_whitespace();
    let parse = |t: Option<&str>| -> Result<usize, String> {
        let t = t.ok_or_else(|| "expected two integers".to_string())?;
        t.parse()
            .map_err(|_| format!("expected a nonnegative integer, found {t:?}"))
    };
    let a = parse(tokens.next())?;
    let b = parse(tokens.next())?;
    if tokens.next().is_some() {
        return Err(format!("line {line} has more than two fields"));
    }
    Ok((a, b))
}

/// Parses an edge list into a validated graph.
pub fn parse_edge_list(text: &str) -> Result<BipartiteGraph, GraphError> {
    let mut lines = text
        .split('\n')
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.trim()))
        .filter(|(_, raw)| !raw.is_empty() && !raw.starts_with('#'));

    let (header_line, raw) = lines.next().ok_or(GraphError::MalformedHeader {
        line: 1,
        reason: "empty input".into(),
    })?;
    let (n, m) = pair(header_line, raw).map_err(|reason| GraphError::MalformedHeader {
        line: header_line,
        reason,
    })?;
    if n == 0 || m == 0 {
        return Err(GraphError::MalformedHeader {
            line: header_line,
            reason: "class sizes must be positive".into(),
        });
    }

    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    let mut left_first_line = HashMap::new();
    for (line, raw) in lines {
        let (u, v) = pair(line, raw).map_err(|reason| GraphError::Malformed { line, reason })?;
        if u >= n {
            return Err(GraphError::IndexOutOfRange {
                line: Some(line),
                side: Side::Left,
                index: u,
                bound: n,
            });
        }
        if v >= m {
            return Err(GraphError::IndexOutOfRange {
                line: Some(line),
                side: Side::Right,
                index: v,
                bound: m,
            });
        }
        if !seen.insert((u, v)) {
            return Err(GraphError::DuplicateEdge { line, left: u, right: v });
        }
        left_first_line.entry(u).or_insert(line);
        edges.push((u, v));
    }

    // The header sizes are untrusted; find an isolated vertex without
    // allocating per-vertex storage.
    if edges.len() < n || edges.len() < m {
        let lefts: HashSet<usize> = edges.iter().map(|e| e.0).collect();
        let rights: HashSet<usize> = edges.iter().map(|e| e.1).collect();
        let isolated = (0..n)
            .find(|u| !lefts.contains(u))
            .map(|u| (Side::Left, u))
            .or_else(|| (0..m).find(|v| !rights.contains(v)).map(|v| (Side::Right, v)));
        if let Some((side, vertex)) = isolated {
            return Err(GraphError::NotBiregular {
                line: None,
                side,
                vertex,
                degree: 0,
                expected: 1,
            });
        }
    }
    BipartiteGraph::from_edges(n, m, edges).map_err(|err| match err {
        GraphError::NotBiregular {
            side: Side::Left,
            vertex,
            degree,
            expected,
            ..
        } => GraphError::NotBiregular {
            line: left_first_line.get(&vertex).copied(),
            side: Side::Left,
            vertex,
            degree,
            expected,
        },
        other => other,
    })
}

/// Serializes a graph as an edge list, edges ordered by left then right index.
pub fn to_edge_list(graph: &BipartiteGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", graph.left_count(), graph.right_count());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
