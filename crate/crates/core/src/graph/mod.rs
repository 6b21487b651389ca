//! Biregular bipartite graphs.
//!
//! Vertices are addressed in two ways. Class-local indices (`0..n` on the
//! left, `0..m` on the right) are used by the file formats and constructors.
//! Unified indices place the left class first (`0..n`) followed by the right
//! class (`n..n + m`); the walk-counting code works exclusively with these.

mod alist;
mod edges;
mod girth;

pub use alist::{parse_alist, to_alist};
pub use edges::{parse_edge_list, to_edge_list};
pub use girth::{girth, Girth};

use std::fmt;

use thiserror::Error;

/// Which vertex class a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// The degree-`c` class (variable nodes in an alist file).
    Left,
    /// The degree-`d` class (check nodes in an alist file).
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("{side} vertex index {index} out of range (class size {bound}){}", line_suffix(*.line))]
    IndexOutOfRange {
        line: Option<usize>,
        side: Side,
        index: usize,
        bound: usize,
    },
    #[error("duplicate neighbor {neighbor} of {side} vertex {vertex}{}", line_suffix(*.line))]
    DuplicateNeighbor {
        line: Option<usize>,
        side: Side,
        vertex: usize,
        neighbor: usize,
    },
    #[error("line {line}: duplicate edge ({left}, {right})")]
    DuplicateEdge {
        line: usize,
        left: usize,
        right: usize,
    },
    #[error("line {line}: {reason}")]
    Inconsistent { line: usize, reason: String },
    #[error("{side} vertex {vertex} has degree {degree}, expected {expected}{}", line_suffix(*.line))]
    NotBiregular {
        line: Option<usize>,
        side: Side,
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error("graph must have at least one vertex in each class (got {left} left, {right} right)")]
    EmptyClass { left: usize, right: usize },
}

fn line_suffix(line: Option<usize>) -> String {
    match line {
        Some(l) => format!(" (line {l})"),
        None => String::new(),
    }
}

/// A validated simple `(c, d)`-biregular bipartite graph.
///
/// Every left vertex has degree `c >= 1`, every right vertex degree `d >= 1`,
/// and adjacency lists are sorted and free of repeats. The graph is immutable
/// once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left_count: usize,
    right_count: usize,
    left_degree: usize,
    right_degree: usize,
    /// Unified adjacency: left vertices first, then right vertices.
    adjacency: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// Builds a graph from the right-neighbor lists of the left vertices.
    ///
    /// Neighbor lists need not be sorted; repeats are rejected.
    pub fn from_left_adjacency(
        right_count: usize,
        left_adjacency: Vec<Vec<usize>>,
    ) -> Result<Self, GraphError> {
        let left_count = left_adjacency.len();
        if left_count == 0 || right_count == 0 {
            return Err(GraphError::EmptyClass {
                left: left_count,
                right: right_count,
            });
        }
        let mut adjacency = vec![Vec::new(); left_count + right_count];
        for (u, neighbors) in left_adjacency.into_iter().enumerate() {
            let mut sorted = neighbors;
            sorted.sort_unstable();
            for pair in sorted.windows(2) {
                if pair[0] == pair[1] {
                    return Err(GraphError::DuplicateNeighbor {
                        line: None,
                        side: Side::Left,
                        vertex: u,
                        neighbor: pair[0],
                    });
                }
            }
            for &v in &sorted {
                if v >= right_count {
                    return Err(GraphError::IndexOutOfRange {
                        line: None,
                        side: Side::Right,
                        index: v,
                        bound: right_count,
                    });
                }
                adjacency[left_count + v].push(u);
            }
            adjacency[u] = sorted.into_iter().map(|v| left_count + v).collect();
        }
        let left_degree = check_uniform(&adjacency[..left_count], Side::Left)?;
        let right_degree = check_uniform(&adjacency[left_count..], Side::Right)?;
        Ok(Self {
            left_count,
            right_count,
            left_degree,
            right_degree,
            adjacency,
        })
    }

    /// Builds a graph from `(left, right)` edge pairs in class-local indices.
    pub fn from_edges(
        left_count: usize,
        right_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut left_adjacency = vec![Vec::new(); left_count];
        for (u, v) in edges {
            if u >= left_count {
                return Err(GraphError::IndexOutOfRange {
                    line: None,
                    side: Side::Left,
                    index: u,
                    bound: left_count,
                });
            }
            left_adjacency[u].push(v);
        }
        Self::from_left_adjacency(right_count, left_adjacency)
    }

    /// Number of left (degree-`c`) vertices, `n`.
    pub fn left_count(&self) -> usize {
        self.left_count
    }

    /// Number of right (degree-`d`) vertices, `m`.
    pub fn right_count(&self) -> usize {
        self.right_count
    }

    pub fn vertex_count(&self) -> usize {
        self.left_count + self.right_count
    }

    pub fn edge_count(&self) -> usize {
        self.left_count * self.left_degree
    }

    /// The common degree `c` of the left class.
    pub fn left_degree(&self) -> usize {
        self.left_degree
    }

    /// The common degree `d` of the right class.
    pub fn right_degree(&self) -> usize {
        self.right_degree
    }

    /// Returns `(c, d)`.
    pub fn biregular_profile(&self) -> (usize, usize) {
        (self.left_degree, self.right_degree)
    }

    /// Neighbors of a vertex in unified indexing.
    pub fn neighbors(&self, vertex: usize) -> &[usize] {
        &self.adjacency[vertex]
    }

    pub fn side(&self, vertex: usize) -> Side {
        if vertex < self.left_count {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.adjacency[vertex].len()
    }

    /// Right-class neighbors (class-local indices) of left vertex `u`.
    pub fn left_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[u].iter().map(move |&v| v - self.left_count)
    }

    /// Left-class neighbors of right vertex `v` (class-local index).
    pub fn right_neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[self.left_count + v]
    }

    /// All edges as `(left, right)` class-local pairs, ordered by left vertex.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.left_count).flat_map(move |u| self.left_neighbors(u).map(move |v| (u, v)))
    }

    /// The same graph with the two classes exchanged, so `(c, d)` becomes `(d, c)`.
    pub fn swap_classes(&self) -> Self {
        let left_adjacency = (0..self.right_count)
            .map(|v| self.right_neighbors(v).to_vec())
            .collect();
        Self::from_left_adjacency(self.left_count, left_adjacency)
            .expect("class swap preserves validity")
    }

    /// Relabels vertices: left vertex `u` becomes `left_perm[u]`, right vertex
    /// `v` becomes `right_perm[v]`.
    ///
    /// # Panics
    ///
    /// Panics if either slice is not a permutation of its class.
    pub fn relabel(&self, left_perm: &[usize], right_perm: &[usize]) -> Self {
        assert_eq!(left_perm.len(), self.left_count);
        assert_eq!(right_perm.len(), self.right_count);
        let mut left_adjacency = vec![Vec::new(); self.left_count];
        for (u, v) in self.edges() {
            left_adjacency[left_perm[u]].push(right_perm[v]);
        }
        Self::from_left_adjacency(self.right_count, left_adjacency)
            .expect("relabelling must be a permutation")
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        let mut components = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(x) = stack.pop() {
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        components
    }
}

fn check_uniform(lists: &[Vec<usize>], side: Side) -> Result<usize, GraphError> {
    let expected = lists[0].len();
    for (vertex, list) in lists.iter().enumerate() {
        if list.len() != expected || list.is_empty() {
            return Err(GraphError::NotBiregular {
                line: None,
                side,
                vertex,
                degree: list.len(),
                expected: expected.max(1),
            });
        }
    }
    Ok(expected)
}
