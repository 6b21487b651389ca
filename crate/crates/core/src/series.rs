//! Closed cycle-free walk counts on the universal-cover trees.
//!
//! Below twice the girth, every closed walk with an acyclic trace lifts
//! uniquely to the infinite alternating tree around its start vertex, so the
//! graph counts reduce to tree counts that depend only on `(c, d)`:
//!
//! * `b_c[k]`, `b_d[k]`: closed walks of length `2k` from a vertex of full
//!   degree `c` (resp. `d`).
//! * `t_c[k]`, `t_d[k]`: the same from a root whose branching is reduced by
//!   one (`c - 1`, resp. `d - 1`), i.e. walks that never use one fixed edge.
//! * `a_c[k] = c * t_d[k-1]`, `a_d[k] = d * t_c[k-1]`: walks returning to the
//!   start exactly once, at the end.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// Memoized counter for closed root walks on alternating trees.
///
/// `T(r, a, b, k)` counts closed walks of length `2k` from the root of the
/// infinite rooted tree whose root has `r` children, each child `a` children,
/// each grandchild `b` children, alternating `a, b, a, ...` further down.
/// Decomposing on the first return to the root gives
///
/// ```text
/// T(r, a, b, 0) = 1
/// T(r, a, b, k) = sum_{j < k} r * T(a, b, a, j) * T(r, a, b, k - 1 - j)
/// ```
#[derive(Debug, Default)]
pub struct TreeWalkCounter {
    memo: HashMap<(u64, u64, u64, usize), BigUint>,
}

impl TreeWalkCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&mut self, root_branch: u64, alt_a: u64, alt_b: u64, k: usize) -> BigUint {
        if k == 0 {
            return BigUint::from(1u8);
        }
        let key = (root_branch, alt_a, alt_b, k);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigUint::from(0u8);
        for j in 0..k {
            let below = self.count(alt_a, alt_b, alt_a, j);
            let rest = self.count(root_branch, alt_a, alt_b, k - 1 - j);
            total += below * rest;
        }
        total *= root_branch;
        self.memo.insert(key, total.clone());
        total
    }
}

/// `T(r, a, b, k)` with a fresh memo table.
pub fn tree_closed_walks(root_branch: u64, alt_a: u64, alt_b: u64, k: usize) -> BigUint {
    TreeWalkCounter::new().count(root_branch, alt_a, alt_b, k)
}

/// Names one of the tabulated series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesId {
    Bc,
    Bd,
    Tc,
    Td,
    Ac,
    Ad,
}

impl SeriesId {
    /// The same series with the roles of `c` and `d` exchanged.
    pub fn mirror(self) -> Self {
        match self {
            SeriesId::Bc => SeriesId::Bd,
            SeriesId::Bd => SeriesId::Bc,
            SeriesId::Tc => SeriesId::Td,
            SeriesId::Td => SeriesId::Tc,
            SeriesId::Ac => SeriesId::Ad,
            SeriesId::Ad => SeriesId::Ac,
        }
    }
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesId::Bc => "b_c",
            SeriesId::Bd => "b_d",
            SeriesId::Tc => "t_c",
            SeriesId::Td => "t_d",
            SeriesId::Ac => "a_c",
            SeriesId::Ad => "a_d",
        })
    }
}

/// Exact series values for `k = 0..=k_max` (walk length `2k`).
///
/// `a_c` and `a_d` start at `k = 1`: element `i` holds the value for
/// `k = i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkSeriesTable {
    pub c: u64,
    pub d: u64,
    pub k_max: usize,
    #[serde(with = "crate::bigjson::seq")]
    pub b_c: Vec<BigUint>,
    #[serde(with = "crate::bigjson::seq")]
    pub b_d: Vec<BigUint>,
    #[serde(with = "crate::bigjson::seq")]
    pub t_c: Vec<BigUint>,
    #[serde(with = "crate::bigjson::seq")]
    pub t_d: Vec<BigUint>,
    #[serde(with = "crate::bigjson::seq")]
    pub a_c: Vec<BigUint>,
    #[serde(with = "crate::bigjson::seq")]
    pub a_d: Vec<BigUint>,
}

impl WalkSeriesTable {
    /// Value of a series at index `k`, or `None` past the table (or `k = 0`
    /// for the return-once series).
    pub fn get(&self, id: SeriesId, k: usize) -> Option<&BigUint> {
        match id {
            SeriesId::Bc => self.b_c.get(k),
            SeriesId::Bd => self.b_d.get(k),
            SeriesId::Tc => self.t_c.get(k),
            SeriesId::Td => self.t_d.get(k),
            SeriesId::Ac => k.checked_sub(1).and_then(|i| self.a_c.get(i)),
            SeriesId::Ad => k.checked_sub(1).and_then(|i| self.a_d.get(i)),
        }
    }

    /// Coefficients `[s_0, s_1, ..]` of a series as a power series in `x`,
    /// truncated at `x^k_max`. Return-once series have a zero constant term.
    pub fn coefficients(&self, id: SeriesId) -> Vec<BigUint> {
        match id {
            SeriesId::Bc => self.b_c.clone(),
            SeriesId::Bd => self.b_d.clone(),
            SeriesId::Tc => self.t_c.clone(),
            SeriesId::Td => self.t_d.clone(),
            SeriesId::Ac | SeriesId::Ad => {
                let tail = if id == SeriesId::Ac { &self.a_c } else { &self.a_d };
                std::iter::once(BigUint::from(0u8)).chain(tail.iter().cloned()).collect()
            }
        }
    }

    /// The table for `(d, c)`.
    pub fn swapped(&self) -> Self {
        Self {
            c: self.d,
            d: self.c,
            k_max: self.k_max,
            b_c: self.b_d.clone(),
            b_d: self.b_c.clone(),
            t_c: self.t_d.clone(),
            t_d: self.t_c.clone(),
            a_c: self.a_d.clone(),
            a_d: self.a_c.clone(),
        }
    }
}

/// Tabulates all six series for degrees `(c, d)`, both at least 1.
pub fn build_series(c: u64, d: u64, k_max: usize) -> WalkSeriesTable {
    assert!(c >= 1 && d >= 1, "degrees must be positive");
    let mut counter = TreeWalkCounter::new();
    let mut column = |r: u64, a: u64, b: u64| -> Vec<BigUint> {
        (0..=k_max).map(|k| counter.count(r, a, b, k)).collect()
    };
    let t_c = column(c - 1, d - 1, c - 1);
    let t_d = column(d - 1, c - 1, d - 1);
    let b_c = column(c, d - 1, c - 1);
    let b_d = column(d, c - 1, d - 1);
    let a_c = (1..=k_max).map(|k| &t_d[k - 1] * c).collect();
    let a_d = (1..=k_max).map(|k| &t_c[k - 1] * d).collect();
    WalkSeriesTable {
        c,
        d,
        k_max,
        b_c,
        b_d,
        t_c,
        t_d,
        a_c,
        a_d,
    }
}
