#![allow(dead_code)]

use short_cycles::generators::{self, random_biregular};
use short_cycles::graph::BipartiteGraph;

pub struct Named {
    pub name: String,
    pub graph: BipartiteGraph,
}

fn named(name: impl Into<String>, graph: BipartiteGraph) -> Named {
    Named {
        name: name.into(),
        graph,
    }
}

/// K_{3,3}, K_{3,4}, Heawood, subdivided K_4.
pub fn named_graphs() -> Vec<Named> {
    vec![
        named("K33", generators::complete_bipartite(3, 3).unwrap()),
        named("K34", generators::complete_bipartite(3, 4).unwrap()),
        named("heawood", generators::heawood()),
        named("subdivided-K4", generators::subdivision_k4()),
    ]
}

/// Cycles on 4, 6, ..., 16 vertices.
pub fn even_cycles() -> Vec<Named> {
    (2..=8)
        .map(|half| named(format!("C{}", 2 * half), generators::even_cycle(half).unwrap()))
        .collect()
}

/// Seeded random biregular graphs with at most 30 vertices.
pub fn random_graphs() -> Vec<Named> {
    // (n, m, c, d)
    let shapes = [
        (4, 6, 3, 2),
        (6, 9, 3, 2),
        (8, 12, 3, 2),
        (6, 6, 3, 3),
        (8, 8, 3, 3),
        (10, 10, 3, 3),
        (12, 12, 3, 3),
        (14, 14, 3, 3),
        (8, 6, 3, 4),
        (12, 9, 3, 4),
        (8, 8, 4, 4),
        (10, 10, 4, 4),
        (12, 8, 2, 3),
        (10, 10, 2, 2),
    ];
    let mut out = Vec::new();
    for (i, &(n, m, c, d)) in shapes.iter().enumerate() {
        for seed in 0..4u64 {
            let seed = 1000 * i as u64 + seed;
            let graph = random_biregular(n, m, c, d, seed, 10_000).unwrap();
            out.push(named(format!("random({n},{m},{c},{d};seed {seed})"), graph));
        }
    }
    out
}

pub fn corpus() -> Vec<Named> {
    let mut all = named_graphs();
    all.extend(even_cycles());
    all.extend(random_graphs());
    all
}
