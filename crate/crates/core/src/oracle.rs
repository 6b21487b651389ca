//! Brute-force ground truth for small graphs.
//!
//! Nothing here shares code with the census path: cycles are enumerated as
//! simple paths, closed walks are enumerated one by one and classified by
//! the shape of their edge trace, and tree walk counts are taken on an
//! explicitly built truncated tree.

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

use crate::graph::{girth, BipartiteGraph, Girth};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("walk length must be even and at least 2, got {0}")]
    InvalidLength(usize),
    #[error(
        "closed walk {walk:?} of length {length} has a trace with several cycles although \
         {length} < 2g = {}", 2 * .girth
    )]
    Ambiguity {
        length: usize,
        girth: usize,
        walk: Vec<usize>,
    },
}

/// Hard size limits for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub max_vertices: usize,
    pub max_length: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Self {
            max_vertices: 32,
            max_length: 16,
        }
    }
}

impl Guard {
    /// The default guard with the vertex limit replaced.
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        Self {
            max_vertices,
            ..Self::default()
        }
    }

    fn check(&self, graph: &BipartiteGraph, length: usize) -> Result<(), OracleError> {
        if graph.vertex_count() > self.max_vertices {
            return Err(OracleError::GuardExceeded(format!(
                "{} vertices exceeds the limit of {}",
                graph.vertex_count(),
                self.max_vertices
            )));
        }
        if length > self.max_length {
            return Err(OracleError::GuardExceeded(format!(
                "length {length} exceeds the limit of {}",
                self.max_length
            )));
        }
        Ok(())
    }
}

fn check_even(length: usize) -> Result<(), OracleError> {
    if length < 2 || !length.is_multiple_of(2) {
        return Err(OracleError::InvalidLength(length));
    }
    Ok(())
}

fn all_distances(graph: &BipartiteGraph) -> Vec<Vec<usize>> {
    let n = graph.vertex_count();
    (0..n)
        .map(|s| {
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in graph.neighbors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            dist
        })
        .collect()
}

/// Number of distinct cycles of length `length`.
///
/// Each cycle is found once: from its smallest vertex, in the direction whose
/// second vertex is smaller than its last.
pub fn brute_count_cycles(
    graph: &BipartiteGraph,
    length: usize,
    guard: Guard,
) -> Result<u64, OracleError> {
    check_even(length)?;
    guard.check(graph, length)?;
    if length < 4 {
        return Ok(0);
    }
    let dist = all_distances(graph);
    let n = graph.vertex_count();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(length);
    let mut count = 0u64;

    fn extend(
        graph: &BipartiteGraph,
        dist: &[Vec<usize>],
        length: usize,
        on_path: &mut [bool],
        path: &mut Vec<usize>,
        count: &mut u64,
    ) {
        let start = path[0];
        let last = *path.last().expect("nonempty path");
        if path.len() == length {
            if graph.neighbors(last).contains(&start) && path[1] < last {
                *count += 1;
            }
            return;
        }
        let remaining = length - path.len();
        for &next in graph.neighbors(last) {
            if next <= start || on_path[next] || dist[next][start] > remaining {
                continue;
            }
            on_path[next] = true;
            path.push(next);
            extend(graph, dist, length, on_path, path, count);
            path.pop();
            on_path[next] = false;
        }
    }

    for start in 0..n {
        on_path[start] = true;
        path.push(start);
        extend(graph, &dist, length, &mut on_path, &mut path, &mut count);
        path.pop();
        on_path[start] = false;
    }
    Ok(count)
}

/// Classification of every closed walk of one length.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OracleBreakdown {
    pub length: usize,
    /// Walks whose edge trace is a tree.
    pub cycle_free: u64,
    /// Walks that traverse a `length`-cycle exactly once.
    pub pure_cycle: u64,
    /// All remaining walks: the trace contains a cycle but the walk is not one.
    pub with_cycle_total: u64,
    /// Walks whose trace contains exactly one cycle, keyed by
    /// `(cycle length, start vertex lies on the cycle)`.
    pub with_cycle_by: BTreeMap<(usize, bool), u64>,
    /// Walks whose trace contains more than one cycle (possible only when
    /// `length >= 2g`).
    pub multi_cycle: u64,
}

impl OracleBreakdown {
    pub fn total(&self) -> u64 {
        self.cycle_free + self.pure_cycle + self.with_cycle_total
    }

    pub fn bin(&self, cycle_length: usize, starts_on_cycle: bool) -> u64 {
        self.with_cycle_by
            .get(&(cycle_length, starts_on_cycle))
            .copied()
            .unwrap_or(0)
    }
}

/// Incremental bookkeeping for the edge trace of the walk being enumerated.
struct WalkState<'g> {
    graph: &'g BipartiteGraph,
    /// `edge_ids[x][i]` is the id of the edge from `x` to its `i`-th neighbor.
    edge_ids: Vec<Vec<usize>>,
    edge_uses: Vec<u32>,
    vertex_uses: Vec<u32>,
    distinct_edges: usize,
    distinct_vertices: usize,
    walk: Vec<usize>,
    edges: Vec<usize>,
}

impl<'g> WalkState<'g> {
    fn new(graph: &'g BipartiteGraph) -> Self {
        let n = graph.vertex_count();
        let left = graph.left_count();
        let mut ids = BTreeMap::new();
        for (u, v) in graph.edges() {
            let next = ids.len();
            ids.insert((u, left + v), next);
        }
        let edge_ids = (0..n)
            .map(|x| {
                graph
                    .neighbors(x)
                    .iter()
                    .map(|&y| ids[&(x.min(y), x.max(y))])
                    .collect()
            })
            .collect();
        Self {
            graph,
            edge_ids,
            edge_uses: vec![0; ids.len()],
            vertex_uses: vec![0; n],
            distinct_edges: 0,
            distinct_vertices: 0,
            walk: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn enter(&mut self, vertex: usize) {
        if self.vertex_uses[vertex] == 0 {
            self.distinct_vertices += 1;
        }
        self.vertex_uses[vertex] += 1;
        self.walk.push(vertex);
    }

    fn leave(&mut self) {
        let vertex = self.walk.pop().expect("nonempty walk");
        self.vertex_uses[vertex] -= 1;
        if self.vertex_uses[vertex] == 0 {
            self.distinct_vertices -= 1;
        }
    }

    fn step(&mut self, from: usize, slot: usize) {
        let edge = self.edge_ids[from][slot];
        if self.edge_uses[edge] == 0 {
            self.distinct_edges += 1;
        }
        self.edge_uses[edge] += 1;
        self.edges.push(edge);
        self.enter(self.graph.neighbors(from)[slot]);
    }

    fn unstep(&mut self) {
        self.leave();
        let edge = self.edges.pop().expect("nonempty walk");
        self.edge_uses[edge] -= 1;
        if self.edge_uses[edge] == 0 {
            self.distinct_edges -= 1;
        }
    }

    fn trace_is_tree(&self) -> bool {
        // The trace of a walk is connected.
        self.distinct_edges + 1 == self.distinct_vertices
    }

    /// Vertices and edge count of the trace's 2-core (leaves stripped
    /// repeatedly).
    fn core(&self) -> (Vec<usize>, usize) {
        let mut trace_edges: Vec<(usize, usize)> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for pair in self.walk.windows(2) {
            let e = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if seen.insert(e) {
                trace_edges.push(e);
            }
        }
        let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
        for &(a, b) in &trace_edges {
            *degree.entry(a).or_default() += 1;
            *degree.entry(b).or_default() += 1;
        }
        let mut alive = vec![true; trace_edges.len()];
        loop {
            let leaves: Vec<usize> = degree
                .iter()
                .filter(|&(_, &deg)| deg == 1)
                .map(|(&v, _)| v)
                .collect();
            if leaves.is_empty() {
                break;
            }
            for leaf in leaves {
                if degree[&leaf] != 1 {
                    continue;
                }
                let (idx, &(a, b)) = trace_edges
                    .iter()
                    .enumerate()
                    .find(|&(i, &(a, b))| alive[i] && (a == leaf || b == leaf))
                    .expect("leaf has one live edge");
                alive[idx] = false;
                *degree.get_mut(&a).expect("endpoint") -= 1;
                *degree.get_mut(&b).expect("endpoint") -= 1;
            }
        }
        let vertices = degree
            .iter()
            .filter(|&(_, &deg)| deg > 0)
            .map(|(&v, _)| v)
            .collect();
        (vertices, alive.iter().filter(|&&a| a).count())
    }
}

/// Enumerates every closed walk of `length` and classifies its trace.
///
/// Walks with a unicyclic trace are binned by cycle length and whether the
/// start vertex lies on the cycle. Below `2g` no trace can hold two cycles;
/// meeting one there is reported as [`OracleError::Ambiguity`].
pub fn classify_closed_walks(
    graph: &BipartiteGraph,
    length: usize,
    guard: Guard,
) -> Result<OracleBreakdown, OracleError> {
    check_even(length)?;
    guard.check(graph, length)?;
    let girth_bound = match girth(graph) {
        Girth::Finite(g) => Some(g),
        Girth::Infinite => None,
    };
    let dist = all_distances(graph);
    let mut state = WalkState::new(graph);
    let mut out = OracleBreakdown {
        length,
        ..Default::default()
    };

    fn visit(
        state: &mut WalkState<'_>,
        dist: &[Vec<usize>],
        length: usize,
        girth: Option<usize>,
        out: &mut OracleBreakdown,
    ) -> Result<(), OracleError> {
        let start = state.walk[0];
        let here = *state.walk.last().expect("nonempty walk");
        let taken = state.edges.len();
        if taken == length {
            if here != start {
                return Ok(());
            }
            if state.trace_is_tree() {
                out.cycle_free += 1;
            } else if state.distinct_edges == length && state.distinct_vertices == length {
                out.pure_cycle += 1;
            } else {
                out.with_cycle_total += 1;
                let (core, core_edges) = state.core();
                if core_edges == core.len() {
                    let on_cycle = core.binary_search(&start).is_ok();
                    *out.with_cycle_by.entry((core.len(), on_cycle)).or_insert(0) += 1;
                } else if girth.is_some_and(|g| length < 2 * g) {
                    return Err(OracleError::Ambiguity {
                        length,
                        girth: girth.unwrap_or(0),
                        walk: state.walk.clone(),
                    });
                } else {
                    out.multi_cycle += 1;
                }
            }
            return Ok(());
        }
        let remaining = length - taken - 1;
        for slot in 0..state.graph.degree(here) {
            let next = state.graph.neighbors(here)[slot];
            if dist[next][start] > remaining {
                continue;
            }
            state.step(here, slot);
            let result = visit(state, dist, length, girth, out);
            state.unstep();
            result?;
        }
        Ok(())
    }

    for start in 0..graph.vertex_count() {
        state.enter(start);
        let result = visit(&mut state, &dist, length, girth_bound, &mut out);
        state.leave();
        result?;
    }
    Ok(out)
}

/// Closed walks of `length` from `vertex` whose trace is a tree.
pub fn brute_cycle_free_from_vertex(
    graph: &BipartiteGraph,
    vertex: usize,
    length: usize,
    guard: Guard,
) -> Result<u64, OracleError> {
    if length == 0 {
        return Ok(1);
    }
    check_even(length)?;
    guard.check(graph, length)?;
    let dist = all_distances(graph);
    let mut state = WalkState::new(graph);

    fn visit(state: &mut WalkState<'_>, dist: &[Vec<usize>], length: usize, count: &mut u64) {
        let start = state.walk[0];
        let here = *state.walk.last().expect("nonempty walk");
        let taken = state.edges.len();
        if taken == length {
            if here == start && state.trace_is_tree() {
                *count += 1;
            }
            return;
        }
        let remaining = length - taken - 1;
        for slot in 0..state.graph.degree(here) {
            if dist[state.graph.neighbors(here)[slot]][start] > remaining {
                continue;
            }
            state.step(here, slot);
            visit(state, dist, length, count);
            state.unstep();
        }
    }

    let mut count = 0;
    state.enter(vertex);
    visit(&mut state, &dist, length, &mut count);
    Ok(count)
}

/// Closed root walks of length `2k` on the explicitly built alternating tree
/// truncated at depth `k` (root branching `r`, then `a, b, a, ...`).
pub fn brute_tree_walks(r: u64, a: u64, b: u64, k: usize) -> Result<u64, OracleError> {
    if r > 8 || a > 8 || b > 8 || k > 6 {
        return Err(OracleError::GuardExceeded(format!(
            "tree ({r}, {a}, {b}) to depth {k} exceeds branching 8 / depth 6"
        )));
    }
    // Explicit adjacency; node 0 is the root.
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new()];
    let mut level = vec![0usize];
    for depth in 0..k {
        let branching = match depth {
            0 => r,
            d if d % 2 == 1 => a,
            _ => b,
        };
        let mut next_level = Vec::new();
        for &parent in &level {
            for _ in 0..branching {
                let child = adjacency.len();
                adjacency.push(vec![parent]);
                adjacency[parent].push(child);
                next_level.push(child);
            }
        }
        level = next_level;
    }
    let mut counts = vec![0u64; adjacency.len()];
    counts[0] = 1;
    for _ in 0..2 * k {
        let mut next = vec![0u64; adjacency.len()];
        for (x, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &y in &adjacency[x] {
                next[y] += c;
            }
        }
        counts = next;
    }
    Ok(counts[0])
}
