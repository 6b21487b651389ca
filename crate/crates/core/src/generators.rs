//! Deterministic test-graph construction.
//!
//! Random graphs use the ChaCha8 stream cipher generator (`rand_chacha`),
//! seeded with `ChaCha8Rng::seed_from_u64(seed)`. Stubs are shuffled with a
//! Fisher-Yates pass that draws `next_u64() % (i + 1)` for `i` from the top
//! down, so a given seed reproduces the same graph on any platform.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{BipartiteGraph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("no simple graph after {0} attempts")]
    AttemptsExhausted(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A named graph family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// `K_{a,b}`: `a` left vertices of degree `b`.
    Complete { a: usize, b: usize },
    /// The cycle on `2 * half` vertices.
    EvenCycle { half: usize },
    Heawood,
    SubdivisionK4,
    RandomBiregular {
        n: usize,
        m: usize,
        c: usize,
        d: usize,
        seed: u64,
        max_attempts: usize,
    },
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<BipartiteGraph, GeneratorError> {
        match *self {
            GeneratorSpec::Complete { a, b } => complete_bipartite(a, b),
            GeneratorSpec::EvenCycle { half } => even_cycle(half),
            GeneratorSpec::Heawood => Ok(heawood()),
            GeneratorSpec::SubdivisionK4 => Ok(subdivision_k4()),
            GeneratorSpec::RandomBiregular {
                n,
                m,
                c,
                d,
                seed,
                max_attempts,
            } => random_biregular(n, m, c, d, seed, max_attempts),
        }
    }
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<BipartiteGraph, GeneratorError> {
    if a == 0 || b == 0 {
        return Err(GeneratorError::Infeasible(format!("K_{{{a},{b}}} needs both sides nonempty")));
    }
    Ok(BipartiteGraph::from_left_adjacency(b, vec![(0..b).collect(); a])?)
}

pub fn even_cycle(half: usize) -> Result<BipartiteGraph, GeneratorError> {
    if half < 2 {
        return Err(GeneratorError::Infeasible(format!(
            "a simple even cycle needs half-length >= 2, got {half}"
        )));
    }
    let edges = (0..half).flat_map(|i| [(i, i), (i, (i + 1) % half)]);
    Ok(BipartiteGraph::from_edges(half, half, edges)?)
}

/// Point-line incidence graph of the Fano plane: points on the left, lines
/// on the right.
pub fn heawood() -> BipartiteGraph {
    const LINES: [[usize; 3]; 7] = [
        [0, 1, 3],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 0],
        [5, 6, 1],
        [6, 0, 2],
    ];
    let edges = LINES
        .iter()
        .enumerate()
        .flat_map(|(line, points)| points.iter().map(move |&p| (p, line)));
    BipartiteGraph::from_edges(7, 7, edges).expect("Fano incidence is (3,3)-regular")
}

/// Vertex-edge incidence graph of `K_4`: the four vertices on the left
/// (degree 3), the six edges `01 02 03 12 13 23` on the right (degree 2).
pub fn subdivision_k4() -> BipartiteGraph {
    let k4_edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let incidences = k4_edges
        .iter()
        .enumerate()
        .flat_map(|(e, &(x, y))| [(x, e), (y, e)]);
    BipartiteGraph::from_edges(4, 6, incidences).expect("K_4 incidence is (3,2)-biregular")
}

/// Configuration model: a uniformly shuffled matching of the `n * c` left
/// stubs to the `m * d` right stubs, retried from scratch whenever it
/// produces a parallel edge.
pub fn random_biregular(
    n: usize,
    m: usize,
    c: usize,
    d: usize,
    seed: u64,
    max_attempts: usize,
) -> Result<BipartiteGraph, GeneratorError> {
    if n == 0 || m == 0 || c == 0 || d == 0 {
        return Err(GeneratorError::Infeasible("sizes and degrees must be positive".into()));
    }
    if n * c != m * d {
        return Err(GeneratorError::Infeasible(format!(
            "n*c = {} differs from m*d = {}",
            n * c,
            m * d
        )));
    }
    if c > m || d > n {
        return Err(GeneratorError::Infeasible(format!(
            "degrees ({c},{d}) too large for class sizes ({n},{m})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = Vec::with_capacity(m * d);
    'attempt: for _ in 0..max_attempts {
        stubs.clear();
        stubs.extend((0..m).flat_map(|v| std::iter::repeat_n(v, d)));
        for i in (1..stubs.len()).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            stubs.swap(i, j);
        }
        let mut left_adjacency = Vec::with_capacity(n);
        for chunk in stubs.chunks(c) {
            let mut row = chunk.to_vec();
            row.sort_unstable();
            if row.windows(2).any(|w| w[0] == w[1]) {
                continue 'attempt;
            }
            left_adjacency.push(row);
        }
        return Ok(BipartiteGraph::from_left_adjacency(m, left_adjacency)?);
    }
    Err(GeneratorError::AttemptsExhausted(max_attempts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, Girth};

    #[test]
    fn named_graphs() {
        let k = complete_bipartite(3, 3).unwrap();
        assert_eq!(k.edge_count(), 9);
        let h = heawood();
        assert_eq!((h.left_count(), h.right_count()), (7, 7));
        assert_eq!(h.biregular_profile(), (3, 3));
        let s = subdivision_k4();
        assert_eq!((s.left_count(), s.right_count()), (4, 6));
        assert_eq!(s.biregular_profile(), (3, 2));
        assert_eq!(complete_bipartite(4, 3).unwrap().biregular_profile(), (3, 4));
        assert_eq!(girth(&complete_bipartite(1, 3).unwrap()), Girth::Infinite);
    }

    #[test]
    fn cycles() {
        for half in 2..8 {
            let g = even_cycle(half).unwrap();
            assert_eq!(g.biregular_profile(), (2, 2));
            assert_eq!(girth(&g), Girth::Finite(2 * half));
        }
        assert!(even_cycle(1).is_err());
    }

    #[test]
    fn random_is_reproducible_and_valid() {
        let a = random_biregular(4, 6, 3, 2, 11, 1000).unwrap();
        assert_eq!(a.biregular_profile(), (3, 2));
        let b = random_biregular(3, 4, 4, 3, 5, 1000).unwrap();
        let again = random_biregular(3, 4, 4, 3, 5, 1000).unwrap();
        assert_eq!(b, again);
        // K_{3,4} is the only simple (4,3)-biregular graph on 3 + 4 vertices.
        assert_eq!(b, complete_bipartite(3, 4).unwrap());
    }

    #[test]
    fn random_errors() {
        assert!(matches!(random_biregular(4, 5, 3, 2, 0, 10), Err(GeneratorError::Infeasible(_))));
        assert!(matches!(random_biregular(2, 1, 1, 3, 0, 10), Err(GeneratorError::Infeasible(_))));
        // K_{4,4} minus nothing: the 4x4 (4,4) graph requires every stub pairing to be perfect.
        assert!(random_biregular(6, 6, 5, 5, 3, 1).is_ok() || matches!(
            random_biregular(6, 6, 5, 5, 3, 1),
            Err(GeneratorError::AttemptsExhausted(1))
        ));
    }

    #[test]
    fn spec_builds() {
        let spec = GeneratorSpec::RandomBiregular { n: 6, m: 6, c: 3, d: 3, seed: 9, max_attempts: 500 };
        assert_eq!(spec.build().unwrap(), spec.build().unwrap());
        assert_eq!(GeneratorSpec::Heawood.build().unwrap(), heawood());
    }
}
