use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::BipartiteGraph;

/// Length of the shortest cycle, or `Infinite` for a forest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("INFINITE"),
        }
    }
}

// JSON form: an integer, or the string "INFINITE".
impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => serializer.serialize_u64(*g as u64),
            Girth::Infinite => serializer.serialize_str("INFINITE"),
        }
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Number(usize),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Number(g) => Ok(Girth::Finite(g)),
            Repr::Text(s) if s == "INFINITE" => Ok(Girth::Infinite),
            Repr::Text(s) => Err(serde::de::Error::custom(format!(
                "girth must be an integer or \"INFINITE\", found {s:?}"
            ))),
        }
    }
}

/// Exact girth by breadth-first search from every vertex.
///
/// From a root, the first non-tree edge `(x, y)` met closes a closed walk of
/// length `dist(x) + dist(y) + 1` that contains a cycle no longer than that;
/// the minimum over all roots is attained by a root lying on a shortest cycle.
pub fn girth(graph: &BipartiteGraph) -> Girth {
    let n = graph.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        'bfs: while let Some(x) = queue.pop_front() {
            if let Some(b) = best {
                // Edges seen from depth `dist[x]` close walks of length >= 2 * dist[x].
                if 2 * dist[x] >= b {
                    break 'bfs;
                }
            }
            for &y in graph.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    let result = best.map_or(Girth::Infinite, Girth::Finite);
    debug_assert_eq!(
        result == Girth::Infinite,
        graph.edge_count() == graph.vertex_count() - graph.component_count()
    );
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn known_girths() {
        assert_eq!(girth(&generators::complete_bipartite(3, 3).unwrap()), Girth::Finite(4));
        assert_eq!(girth(&generators::complete_bipartite(2, 3).unwrap()), Girth::Finite(4));
        assert_eq!(girth(&generators::heawood()), Girth::Finite(6));
        assert_eq!(girth(&generators::subdivision_k4()), Girth::Finite(6));
        assert_eq!(girth(&generators::even_cycle(4).unwrap()), Girth::Finite(8));
        assert_eq!(girth(&generators::even_cycle(2).unwrap()), Girth::Finite(4));
    }

    #[test]
    fn star_is_acyclic() {
        // K_{1,3}: one left vertex of degree 3, three right leaves.
        let star = generators::complete_bipartite(1, 3).unwrap();
        assert_eq!(star.biregular_profile(), (3, 1));
        assert_eq!(girth(&star), Girth::Infinite);
    }

    #[test]
    fn disconnected_union_takes_minimum() {
        // A 4-cycle plus a disjoint 6-cycle, both (2,2).
        let edges = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4), (4, 2)];
        let g = BipartiteGraph::from_edges(5, 5, edges).unwrap();
        assert_eq!(girth(&g), Girth::Finite(4));
    }

    #[test]
    fn json_form() {
        assert_eq!(serde_json::to_string(&Girth::Finite(6)).unwrap(), "6");
        assert_eq!(serde_json::to_string(&Girth::Infinite).unwrap(), "\"INFINITE\"");
        let back: Girth = serde_json::from_str("\"INFINITE\"").unwrap();
        assert_eq!(back, Girth::Infinite);
        assert!(serde_json::from_str::<Girth>("\"big\"").is_err());
    }
}
