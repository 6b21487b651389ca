//! Exact counts of the short cycles of a biregular bipartite graph.
//!
//! In a `(c, d)`-biregular bipartite graph of girth `g`, the number of cycles
//! of every even length `g <= L <= 2g - 2` is determined by the traces of the
//! adjacency-matrix powers together with the degree pair: closed walks of
//! length `L` split into cycle-free walks, walks around an `L`-cycle, and
//! walks containing exactly one shorter cycle, and the first and last kinds
//! are counted from tree walk series and the already-known shorter cycle
//! counts. Everything is computed in exact integer arithmetic.
//!
//! ```
//! use short_cycles::{census::count_short_cycles, generators::heawood};
//!
//! let report = count_short_cycles(&heawood()).unwrap();
//! let counts: Vec<String> = report.census.iter().map(|e| e.count.to_string()).collect();
//! assert_eq!(counts, ["28", "21", "84"]);
//! ```
//!
//! The [`oracle`] module enumerates cycles and closed walks directly and is
//! kept independent of the census code so the two can check each other.

pub mod bigjson;
pub mod census;
pub mod cli;
pub mod compositions;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod series;
pub mod trace;
