//! Exact traces of adjacency-matrix powers.
//!
//! `tr(A^L)` equals the number of closed walks of length `L`, which is the
//! spectral sum of `L`-th eigenvalue powers. The default path never touches
//! floating point: walk counts are propagated as exact integers from each
//! start vertex. [`eigen_traces`] exposes the floating spectral view as a
//! diagnostic only.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::BipartiteGraph;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TraceError {
    #[error("walk length must be even and at least 2, got {0}")]
    InvalidLength(usize),
    #[error("graph has {vertices} vertices; dense eigen-decomposition is limited to {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("symmetric eigen-solver did not converge after {iterations} iterations")]
    NonConvergence { iterations: usize },
}

/// Largest graph accepted by [`eigen_traces`].
pub const EIGEN_VERTEX_LIMIT: usize = 2000;

/// Exact `tr(A^L)` for every even `L` in a range.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TraceTable {
    entries: BTreeMap<usize, BigUint>,
}

impl TraceTable {
    pub fn get(&self, length: usize) -> Option<&BigUint> {
        self.entries.get(&length)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.entries.iter().map(|(&l, t)| (l, t))
    }

    pub fn max_length(&self) -> usize {
        self.entries.keys().next_back().copied().unwrap_or(0)
    }
}

/// One propagation step: `next = A * current`.
fn step(graph: &BipartiteGraph, current: &[BigUint], next: &mut [BigUint]) {
    for (x, slot) in next.iter_mut().enumerate() {
        slot.set_zero();
        for &y in graph.neighbors(x) {
            if !current[y].is_zero() {
                *slot += &current[y];
            }
        }
    }
}

/// Visits the walk-count vectors `A^h e_v` for `h = 1..=steps` from every
/// start vertex `v`.
fn for_each_propagation(
    graph: &BipartiteGraph,
    steps: usize,
    mut visit: impl FnMut(usize, usize, &[BigUint]),
) {
    let n = graph.vertex_count();
    let mut current = vec![BigUint::zero(); n];
    let mut next = vec![BigUint::zero(); n];
    for start in 0..n {
        current.iter_mut().for_each(Zero::set_zero);
        current[start] = BigUint::from(1u8);
        for h in 1..=steps {
            step(graph, &current, &mut next);
            std::mem::swap(&mut current, &mut next);
            visit(start, h, &current);
        }
    }
}

/// Closed walks of any length (odd lengths included) by full propagation
/// from each start vertex, reading back the start entry.
pub fn closed_walk_count(graph: &BipartiteGraph, length: usize) -> BigUint {
    if length == 0 {
        return BigUint::from(graph.vertex_count());
    }
    let mut total = BigUint::zero();
    for_each_propagation(graph, length, |start, h, vector| {
        if h == length {
            total += &vector[start];
        }
    });
    total
}

fn sum_of_squares(vector: &[BigUint]) -> BigUint {
    vector
        .iter()
        .filter(|x| !x.is_zero())
        .map(|x| x * x)
        .sum()
}

/// Exact `tr(A^L)` for even `L >= 2`.
///
/// Uses `tr(A^{2h}) = sum_v |A^h e_v|^2`, so only `L/2` propagation steps
/// are needed per start vertex.
pub fn power_trace(graph: &BipartiteGraph, length: usize) -> Result<BigUint, TraceError> {
    if length < 2 || !length.is_multiple_of(2) {
        return Err(TraceError::InvalidLength(length));
    }
    let half = length / 2;
    let mut total = BigUint::zero();
    for_each_propagation(graph, half, |_, h, vector| {
        if h == half {
            total += sum_of_squares(vector);
        }
    });
    Ok(total)
}

/// Traces for every even `L` in `2..=max_length`, sharing one propagation
/// per start vertex.
pub fn trace_table(graph: &BipartiteGraph, max_length: usize) -> Result<TraceTable, TraceError> {
    if max_length < 2 || !max_length.is_multiple_of(2) {
        return Err(TraceError::InvalidLength(max_length));
    }
    let mut entries: BTreeMap<usize, BigUint> =
        (1..=max_length / 2).map(|h| (2 * h, BigUint::zero())).collect();
    for_each_propagation(graph, max_length / 2, |_, h, vector| {
        *entries.get_mut(&(2 * h)).expect("length in table") += sum_of_squares(vector);
    });
    Ok(TraceTable { entries })
}

/// Floating-point spectral trace next to the exact value, for one length.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct EigenTraceEntry {
    pub length: usize,
    pub approx: f64,
    #[serde(with = "crate::bigjson")]
    pub exact: BigUint,
    pub abs_error: f64,
    pub rel_error: f64,
    pub within_tolerance: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct EigenTraceReport {
    pub tolerance: f64,
    pub eigenvalues: Vec<f64>,
    pub entries: Vec<EigenTraceEntry>,
}

impl EigenTraceReport {
    pub fn all_within_tolerance(&self) -> bool {
        self.entries.iter().all(|e| e.within_tolerance)
    }
}

const EIGEN_MAX_ITERATIONS: usize = 10_000;

/// Diagnostic: `sum_j lambda_j^L` from a dense symmetric eigen-decomposition,
/// compared with the exact table. `tol` is a relative tolerance.
pub fn eigen_traces(
    graph: &BipartiteGraph,
    max_length: usize,
    tol: f64,
) -> Result<EigenTraceReport, TraceError> {
    let n = graph.vertex_count();
    if n > EIGEN_VERTEX_LIMIT {
        return Err(TraceError::TooLarge {
            vertices: n,
            limit: EIGEN_VERTEX_LIMIT,
        });
    }
    let exact = trace_table(graph, max_length)?;
    let adjacency = DMatrix::from_fn(n, n, |i, j| {
        if graph.neighbors(i).binary_search(&j).is_ok() {
            1.0
        } else {
            0.0
        }
    });
    let eigen = adjacency
        .try_symmetric_eigen(f64::EPSILON, EIGEN_MAX_ITERATIONS)
        .ok_or(TraceError::NonConvergence {
            iterations: EIGEN_MAX_ITERATIONS,
        })?;
    let mut eigenvalues: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    eigenvalues.sort_by(|a, b| b.total_cmp(a));

    let entries = exact
        .iter()
        .map(|(length, exact)| {
            let approx: f64 = eigenvalues.iter().map(|l| l.powi(length as i32)).sum();
            let exact_f = exact.to_f64().unwrap_or(f64::INFINITY);
            let abs_error = (approx - exact_f).abs();
            let rel_error = if exact_f == 0.0 {
                abs_error
            } else {
                abs_error / exact_f
            };
            EigenTraceEntry {
                length,
                approx,
                exact: exact.clone(),
                abs_error,
                rel_error,
                within_tolerance: rel_error <= tol,
            }
        })
        .collect();
    Ok(EigenTraceReport {
        tolerance: tol,
        eigenvalues,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn complete_bipartite_traces() {
        let g = generators::complete_bipartite(3, 3).unwrap();
        assert_eq!(power_trace(&g, 4).unwrap(), big(162));
        let table = trace_table(&g, 6).unwrap();
        assert_eq!(table.get(2), Some(&big(18)));
        assert_eq!(table.get(4), Some(&big(162)));
        assert_eq!(table.get(6), Some(&big(1458)));
        assert_eq!(table.max_length(), 6);
    }

    #[test]
    fn eight_cycle_length_two() {
        let g = generators::even_cycle(4).unwrap();
        assert_eq!(power_trace(&g, 2).unwrap(), big(16));
    }

    #[test]
    fn subdivided_k4_length_six() {
        assert_eq!(power_trace(&generators::subdivision_k4(), 6).unwrap(), big(480));
    }

    #[test]
    fn heawood_table() {
        let table = trace_table(&generators::heawood(), 6).unwrap();
        let values: Vec<_> = table.iter().map(|(l, t)| (l, t.clone())).collect();
        assert_eq!(values, vec![(2, big(42)), (4, big(210)), (6, big(1554))]);
    }

    #[test]
    fn length_two_is_twice_edge_count() {
        for g in [generators::heawood(), generators::subdivision_k4(), generators::complete_bipartite(2, 5).unwrap()] {
            assert_eq!(trace_table(&g, 2).unwrap().get(2), Some(&big(2 * g.edge_count() as u64)));
        }
    }

    #[test]
    fn odd_lengths_vanish_and_even_routes_agree() {
        let g = generators::heawood();
        for len in [1, 3, 5, 7] {
            assert!(closed_walk_count(&g, len).is_zero());
        }
        for len in [2, 4, 6, 8] {
            assert_eq!(closed_walk_count(&g, len), power_trace(&g, len).unwrap());
        }
    }

    #[test]
    fn invalid_lengths() {
        let g = generators::heawood();
        assert_eq!(power_trace(&g, 3), Err(TraceError::InvalidLength(3)));
        assert_eq!(power_trace(&g, 0), Err(TraceError::InvalidLength(0)));
        assert!(trace_table(&g, 5).is_err());
    }

    #[test]
    fn eigen_diagnostic_matches() {
        let report = eigen_traces(&generators::complete_bipartite(3, 3).unwrap(), 4, 1e-6).unwrap();
        assert!(report.all_within_tolerance());
        assert!((report.entries[0].approx - 18.0).abs() < 1e-6);
        assert!((report.entries[1].approx - 162.0).abs() < 1e-6);
        assert!((report.eigenvalues[0] - 3.0).abs() < 1e-9);

        let report = eigen_traces(&generators::heawood(), 6, 1e-6).unwrap();
        assert!(report.all_within_tolerance());
    }
}
