//! Short-cycle census from exact traces and degree data.
//!
//! For every even `L` with `g <= L < 2g`, closed walks of length `L` split into
//! three disjoint kinds: cycle-free walks (`omega`), traversals of an `L`-cycle
//! (`2L` per cycle), and closed walks whose trace contains exactly one shorter
//! cycle (`psi`). The first and last depend only on `(c, d)` and on the
//! already-known counts of shorter cycles, so
//!
//! ```text
//! N_L = (tr(A^L) - omega_L - psi_L) / 2L
//! ```
//!
//! is evaluated in increasing `L`, feeding each count into later `psi` terms.
//! At `L >= 2g` a closed walk can contain two cycles and the degree data no
//! longer determines the split, so those lengths are refused.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::compositions::{product_sum, product_sum_over_layout, ClassAssignment, CompositionError};
use crate::graph::{girth, BipartiteGraph, Girth, Side};
use crate::series::{build_series, SeriesId, WalkSeriesTable};
use crate::trace::{trace_table, EigenTraceReport, TraceError};

/// Method tag written into every report.
pub const METHOD_EXACT_TRACE: &str = "exact-trace";

/// Note attached to every report about the unreachable range.
pub const LENGTH_LIMIT_NOTE: &str = "cycle counts are reported only for lengths g <= L <= 2g-2; \
    at L >= 2g the spectrum and degree distribution do not determine the number of cycles";

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("length {length} outside the countable range [{girth}, {}] for girth {girth}", 2 * .girth - 2)]
    LengthOutOfRange { length: usize, girth: usize },
    #[error("missing count of {0}-cycles needed by a longer length")]
    MissingPriorCount(usize),
    #[error("residual is not divisible by 2L:\n{0}")]
    Divisibility(Box<TermDump>),
    #[error("negative residual:\n{0}")]
    NegativeCount(Box<TermDump>),
    #[error(transparent)]
    Composition(#[from] CompositionError),
    #[error(transparent)]
    Trace(#[from] TraceError),
}

/// Every term behind one failed length, for diagnosis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermDump {
    pub length: usize,
    pub c: u64,
    pub d: u64,
    pub girth: usize,
    pub trace: BigUint,
    pub omega: BigUint,
    pub psi: PsiBreakdown,
    pub residual: BigInt,
}

impl fmt::Display for TermDump {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "  L = {} (c = {}, d = {}, g = {})", self.length, self.c, self.d, self.girth)?;
        writeln!(f, "  trace    = {}", self.trace)?;
        writeln!(f, "  omega    = {}", self.omega)?;
        writeln!(f, "  psi      = {}", self.psi.total)?;
        for part in &self.psi.contributions {
            writeln!(
                f,
                "    j = {:>3}: phi = {}, lambda = {}",
                part.cycle_length, part.phi, part.lambda
            )?;
        }
        write!(f, "  residual = {} (2L = {})", self.residual, 2 * self.length)
    }
}

/// One cycle length's share of `psi_L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiContribution {
    pub cycle_length: usize,
    /// Walks starting on a contained `cycle_length`-cycle: `N_j * phi_coefficient`.
    #[serde(with = "crate::bigjson")]
    pub phi: BigUint,
    /// Walks starting off it: `N_j * lambda_coefficient`.
    #[serde(with = "crate::bigjson")]
    pub lambda: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct PsiBreakdown {
    #[serde(with = "crate::bigjson")]
    pub total: BigUint,
    pub contributions: Vec<PsiContribution>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub c: u64,
    pub d: u64,
    pub girth: Girth,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthCensus {
    pub length: usize,
    #[serde(with = "crate::bigjson")]
    pub trace: BigUint,
    #[serde(with = "crate::bigjson")]
    pub omega: BigUint,
    pub psi: PsiBreakdown,
    #[serde(with = "crate::bigjson")]
    pub count: BigUint,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleCensusReport {
    pub graph: GraphSummary,
    pub method: String,
    pub census: Vec<LengthCensus>,
    #[serde(default)]
    pub notes: Vec<String>,
    /// Floating spectral traces, present only when requested. Never read by
    /// the census itself.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigen_diagnostic: Option<EigenTraceReport>,
}

impl CycleCensusReport {
    pub fn count(&self, length: usize) -> Option<&BigUint> {
        self.census.iter().find(|e| e.length == length).map(|e| &e.count)
    }

    pub fn entry(&self, length: usize) -> Option<&LengthCensus> {
        self.census.iter().find(|e| e.length == length)
    }
}

/// Number of vertices at distance exactly `l` from a cycle vertex, off the
/// cycle, whose shortest path reaches the cycle only at that vertex.
///
/// For a degree-`c` cycle vertex this is
/// `(c-2) (d-1)^ceil((l-1)/2) (c-1)^floor((l-1)/2)`; the degree-`d` case
/// swaps the roles. Zero when the relevant degree is 2 or less.
pub fn frontier_size(side: Side, l: usize, c: u64, d: u64) -> BigUint {
    assert!(l >= 1, "frontier distance starts at 1");
    let (own, other) = match side {
        Side::Left => (c, d),
        Side::Right => (d, c),
    };
    let base = BigUint::from(own.saturating_sub(2));
    if base.is_zero() {
        return base;
    }
    let up = (l - 1).div_ceil(2) as u32;
    let down = ((l - 1) / 2) as u32;
    base * BigUint::from(other - 1).pow(up) * BigUint::from(own - 1).pow(down)
}

/// `n * b_c[L/2] + m * b_d[L/2]`: closed cycle-free walks of length `L`.
pub fn omega(
    n: usize,
    m: usize,
    series: &WalkSeriesTable,
    length: usize,
) -> Result<BigUint, CensusError> {
    if !length.is_multiple_of(2) {
        return Err(CensusError::Precondition(format!("omega needs an even length, got {length}")));
    }
    let k = length / 2;
    let too_short = |id| CompositionError::IndexOutOfRange {
        series: id,
        index: k,
        k_max: series.k_max,
    };
    let bc = series.get(SeriesId::Bc, k).ok_or_else(|| too_short(SeriesId::Bc))?;
    let bd = series.get(SeriesId::Bd, k).ok_or_else(|| too_short(SeriesId::Bd))?;
    Ok(bc * n + bd * m)
}

/// Degree data and walk series for one `(c, d)` and girth.
#[derive(Debug, Clone)]
pub struct CensusContext {
    c: u64,
    d: u64,
    girth: usize,
    series: WalkSeriesTable,
}

impl CensusContext {
    /// `girth` must be even and at least 4.
    pub fn new(c: u64, d: u64, girth: usize) -> Result<Self, CensusError> {
        if girth < 4 || !girth.is_multiple_of(2) {
            return Err(CensusError::Precondition(format!(
                "girth of a bipartite graph is even and at least 4, got {girth}"
            )));
        }
        if c < 1 || d < 1 {
            return Err(CensusError::Precondition("degrees must be positive".into()));
        }
        Ok(Self {
            c,
            d,
            girth,
            series: build_series(c, d, girth),
        })
    }

    pub fn series(&self) -> &WalkSeriesTable {
        &self.series
    }

    pub fn girth(&self) -> usize {
        self.girth
    }

    fn check_excess(&self, cycle_length: usize, k: usize) -> Result<(), CensusError> {
        if cycle_length < 4 || !cycle_length.is_multiple_of(2) {
            return Err(CensusError::Precondition(format!(
                "cycle length must be even and at least 4, got {cycle_length}"
            )));
        }
        if k == 0 {
            return Err(CensusError::Precondition(
                "a closed walk with a cycle needs excess k >= 1".into(),
            ));
        }
        if cycle_length + 2 * k >= 2 * self.girth {
            return Err(CensusError::Precondition(format!(
                "walk length {} reaches 2g = {}",
                cycle_length + 2 * k,
                2 * self.girth
            )));
        }
        Ok(())
    }

    fn alternating(&self, pairs: usize, terminal: SeriesId) -> ClassAssignment {
        ClassAssignment::new([(SeriesId::Tc, pairs), (SeriesId::Td, pairs)], terminal)
    }

    /// Closed walks of length `i + 2k` that start on one fixed `i`-cycle and
    /// contain it, counted over both directions and all `i` start vertices.
    pub fn phi_coefficient(&self, cycle_length: usize, k: usize) -> Result<BigUint, CensusError> {
        self.check_excess(cycle_length, k)?;
        let half = cycle_length / 2;
        let from_c = product_sum(&self.alternating(half, SeriesId::Bc), &self.series, k)?;
        let from_d = product_sum(&self.alternating(half, SeriesId::Bd), &self.series, k)?;
        Ok((from_c + from_d) * cycle_length)
    }

    /// [`Self::phi_coefficient`] written as one alternating product
    /// `t_d t_c t_d t_c ...` against `b_c + b_d` in the final slot, summed by
    /// direct enumeration of compositions.
    pub fn phi_coefficient_merged(&self, cycle_length: usize, k: usize) -> Result<BigUint, CensusError> {
        self.check_excess(cycle_length, k)?;
        let mut layout: Vec<SeriesId> = (0..cycle_length)
            .map(|j| if j % 2 == 0 { SeriesId::Td } else { SeriesId::Tc })
            .collect();
        layout.push(SeriesId::Bc);
        let with_c = product_sum_over_layout(&layout, &self.series, k)?;
        *layout.last_mut().expect("terminal slot") = SeriesId::Bd;
        let with_d = product_sum_over_layout(&layout, &self.series, k)?;
        Ok((with_c + with_d) * cycle_length)
    }

    /// Closed walks of length `i + 2k` containing one fixed `i`-cycle whose
    /// start lies off the cycle.
    pub fn lambda_coefficient(&self, cycle_length: usize, k: usize) -> Result<BigUint, CensusError> {
        self.check_excess(cycle_length, k)?;
        let half = cycle_length / 2;
        let mut total = BigUint::zero();
        for l in 1..=k {
            // The start vertex sits at distance l from the cycle; its class
            // alternates with l.
            let terminal_c = if l % 2 == 0 { SeriesId::Bc } else { SeriesId::Bd };
            let pairs = half + l;
            for (side, terminal) in [(Side::Left, terminal_c), (Side::Right, terminal_c.mirror())] {
                let frontier = frontier_size(side, l, self.c, self.d);
                if frontier.is_zero() {
                    continue;
                }
                let walks = product_sum(&self.alternating(pairs, terminal), &self.series, k - l)?;
                total += frontier * walks;
            }
        }
        Ok(total * cycle_length)
    }

    /// Closed walks of length `L` that contain exactly one (shorter) cycle,
    /// given the counts of every cycle length from `g` to `L - 2`.
    pub fn psi(
        &self,
        length: usize,
        prior_counts: &BTreeMap<usize, BigUint>,
    ) -> Result<PsiBreakdown, CensusError> {
        self.check_length(length)?;
        let mut breakdown = PsiBreakdown::default();
        for j in (self.girth..length).step_by(2) {
            let count = prior_counts.get(&j).ok_or(CensusError::MissingPriorCount(j))?;
            let k = (length - j) / 2;
            let phi = count * self.phi_coefficient(j, k)?;
            let lambda = count * self.lambda_coefficient(j, k)?;
            breakdown.total += &phi + &lambda;
            breakdown.contributions.push(PsiContribution {
                cycle_length: j,
                phi,
                lambda,
            });
        }
        Ok(breakdown)
    }

    fn check_length(&self, length: usize) -> Result<(), CensusError> {
        if length < self.girth || length >= 2 * self.girth || !length.is_multiple_of(2) {
            return Err(CensusError::LengthOutOfRange {
                length,
                girth: self.girth,
            });
        }
        Ok(())
    }
}

/// Counts the cycles of every even length `g <= L <= 2g - 2`.
///
/// An acyclic graph yields an empty census with an explanatory note.
pub fn count_short_cycles(graph: &BipartiteGraph) -> Result<CycleCensusReport, CensusError> {
    let (c, d) = graph.biregular_profile();
    let (c, d) = (c as u64, d as u64);
    let g = girth(graph);
    let mut report = CycleCensusReport {
        graph: GraphSummary {
            n: graph.left_count(),
            m: graph.right_count(),
            c,
            d,
            girth: g,
        },
        method: METHOD_EXACT_TRACE.to_string(),
        census: Vec::new(),
        notes: vec![LENGTH_LIMIT_NOTE.to_string()],
        eigen_diagnostic: None,
    };
    let Girth::Finite(g) = g else {
        report
            .notes
            .push("graph is acyclic (infinite girth); there are no cycles to count".into());
        return Ok(report);
    };

    let context = CensusContext::new(c, d, g)?;
    let traces = trace_table(graph, 2 * g - 2)?;
    let mut counts = BTreeMap::new();
    for length in (g..2 * g - 1).step_by(2) {
        let trace = traces.get(length).expect("table covers 2..=2g-2").clone();
        let omega = omega(graph.left_count(), graph.right_count(), context.series(), length)?;
        let psi = context.psi(length, &counts)?;
        let residual = BigInt::from(trace.clone()) - BigInt::from(omega.clone()) - BigInt::from(psi.total.clone());
        let divisor = BigInt::from(2 * length);
        let dump = || {
            Box::new(TermDump {
                length,
                c,
                d,
                girth: g,
                trace: trace.clone(),
                omega: omega.clone(),
                psi: psi.clone(),
                residual: residual.clone(),
            })
        };
        if residual.is_negative() {
            return Err(CensusError::NegativeCount(dump()));
        }
        if !(&residual % &divisor).is_zero() {
            return Err(CensusError::Divisibility(dump()));
        }
        let count = (residual / divisor)
            .to_biguint()
            .expect("nonnegative residual");
        counts.insert(length, count.clone());
        report.census.push(LengthCensus {
            length,
            trace,
            omega,
            psi,
            count,
        });
    }
    Ok(report)
}

fn choose2(n: i128) -> i128 {
    n * (n - 1) / 2
}

fn choose3(n: i128) -> i128 {
    n * (n - 1) * (n - 2) / 6
}

fn times(count: &BigUint, coefficient: i128) -> BigInt {
    BigInt::from(count.clone()) * BigInt::from(coefficient)
}

/// Closed form of `psi_{g+2}`: `g N_g (g+2)(c+d-2)`.
pub fn psi_g2_closed(c: u64, d: u64, g: usize, n_g: &BigUint) -> BigInt {
    let (e, g) = ((c + d) as i128, g as i128);
    times(n_g, g * (g + 2) * (e - 2))
}

/// The bracketed per-cycle polynomial multiplying `g N_g` in `psi_{g+4}`.
fn g4_bracket(c: i128, d: i128, g: i128) -> i128 {
    let e = c + d;
    let h = g / 2;
    g * (e - 2).pow(2)
        + e * (e - 1)
        + 2 * choose2(h) * ((c - 1).pow(2) + (d - 1).pow(2))
        + 2 * h * h * (c - 1) * (d - 1)
        + h * e * (e - 2)
        + (h + 1) * (e - 2) * (e - 4)
        + (c - 2) * (2 * d - 1)
        + (d - 2) * (2 * c - 1)
}

/// Closed form of `psi_{g+4}` in terms of `N_g` and `N_{g+2}`.
pub fn psi_g4_closed(c: u64, d: u64, g: usize, n_g: &BigUint, n_g2: &BigUint) -> BigInt {
    let (ci, di, gi) = (c as i128, d as i128, g as i128);
    let e = ci + di;
    times(n_g2, (gi + 2) * (gi + 4) * (e - 2)) + times(n_g, gi * g4_bracket(ci, di, gi))
}

/// Closed form of `psi_{g+6}` as the sum of three expanded polynomials:
/// walks around a `g`-cycle, around a `(g+2)`-cycle, and around a
/// `(g+4)`-cycle.
///
/// The `g`-cycle polynomial does not match exhaustive counts
/// (e.g. the 16-cycle at length 22); [`CensusContext::psi`] is authoritative.
/// The other two parts agree with it for all `(c, d, g)`.
pub fn psi_g6_closed(
    c: u64,
    d: u64,
    g: usize,
    n_g: &BigUint,
    n_g2: &BigUint,
    n_g4: &BigUint,
) -> BigInt {
    let (c, d, g) = (c as i128, d as i128, g as i128);
    let e = c + d;
    let h = g / 2;
    let q = (c - 1).pow(2) + (d - 1).pow(2);
    let p = (c - 1) * (d - 1);
    let on_cycle = q * (e - 2) * (g + 2 * choose2(h) + 2 * choose3(h))
        + q * e * (choose2(h) + 1)
        + p * (e - 2) * (3 * g + g * g + g * choose2(h) - 2 * choose3(h))
        + e * ((3 * c * d - c - d) + h * h * p);
    let off_cycle = (e - 4) * ((h + 1) * (e - 2).pow(2) + ((h + 1).pow(2) + 1) * p + choose2(h + 1) * q)
        + (2 * c * d - 2 * c - 2 * d) * ((e - 1) + (h + 1) * (e - 2))
        + (h + 2) * (e - 2) * ((c - 2) * (d - 1) + (d - 2) * (c - 1))
        + c * (c - 2) * (d - 1)
        + d * (d - 2) * (c - 1);
    times(n_g, g * (on_cycle + off_cycle))
        + times(n_g2, (g + 2) * g4_bracket(c, d, g + 2))
        + times(n_g4, (g + 4) * (g + 6) * (e - 2))
}

/// Converts a closed-form value for comparison with an exact count.
pub fn as_count(value: &BigInt) -> Option<BigUint> {
    match value.sign() {
        Sign::Minus => None,
        _ => value.to_biguint(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use num_traits::ToPrimitive;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn counts(report: &CycleCensusReport) -> Vec<(usize, u64)> {
        report
            .census
            .iter()
            .map(|e| (e.length, e.count.to_u64().unwrap()))
            .collect()
    }

    #[test]
    fn frontier_examples() {
        assert_eq!(frontier_size(Side::Left, 1, 5, 3), big(3));
        assert_eq!(frontier_size(Side::Left, 2, 3, 3), big(2));
        assert_eq!(frontier_size(Side::Left, 3, 3, 3), big(4));
        assert_eq!(frontier_size(Side::Right, 2, 3, 4), big(2 * 2));
        for l in 1..6 {
            assert!(frontier_size(Side::Left, l, 2, 7).is_zero());
        }
    }

    #[test]
    fn omega_examples() {
        let s = build_series(3, 3, 3);
        assert_eq!(omega(3, 3, &s, 4).unwrap(), big(90));
        let s = build_series(3, 2, 3);
        assert_eq!(omega(4, 6, &s, 6).unwrap(), big(432));
        assert_eq!(omega(4, 6, &s, 0).unwrap(), big(10));
        assert!(omega(4, 6, &s, 8).is_err());
    }

    #[test]
    fn coefficient_examples() {
        let cubic4 = CensusContext::new(3, 3, 4).unwrap();
        assert_eq!(cubic4.phi_coefficient(4, 1).unwrap(), big(88));
        assert_eq!(cubic4.lambda_coefficient(4, 1).unwrap(), big(8));
        let cubic6 = CensusContext::new(3, 3, 6).unwrap();
        assert_eq!(cubic6.phi_coefficient(6, 1).unwrap(), big(180));
        let mixed = CensusContext::new(3, 2, 8).unwrap();
        assert_eq!(mixed.lambda_coefficient(6, 1).unwrap(), big(6));
        let cycle = CensusContext::new(2, 2, 10).unwrap();
        assert!(cycle.lambda_coefficient(6, 2).unwrap().is_zero());
    }

    #[test]
    fn coefficient_preconditions() {
        let ctx = CensusContext::new(3, 3, 6).unwrap();
        assert!(matches!(ctx.phi_coefficient(6, 0), Err(CensusError::Precondition(_))));
        assert!(matches!(ctx.phi_coefficient(6, 3), Err(CensusError::Precondition(_))));
        assert!(matches!(ctx.lambda_coefficient(5, 1), Err(CensusError::Precondition(_))));
        assert!(CensusContext::new(3, 3, 5).is_err());
    }

    #[test]
    fn psi_examples() {
        let ctx = CensusContext::new(3, 3, 6).unwrap();
        let empty = ctx.psi(6, &BTreeMap::new()).unwrap();
        assert!(empty.total.is_zero() && empty.contributions.is_empty());
        let prior = BTreeMap::from([(6, big(28))]);
        assert_eq!(ctx.psi(8, &prior).unwrap().total, big(5376));

        let ctx = CensusContext::new(3, 2, 6).unwrap();
        let prior = BTreeMap::from([(6, big(4)), (8, big(3))]);
        let psi = ctx.psi(10, &prior).unwrap();
        assert_eq!(psi.total, big(5520));
        let parts: Vec<_> = psi.contributions.iter().map(|p| (p.cycle_length, &p.phi + &p.lambda)).collect();
        assert_eq!(parts, vec![(6, big(4800)), (8, big(720))]);
    }

    #[test]
    fn psi_errors() {
        let ctx = CensusContext::new(3, 3, 6).unwrap();
        assert!(matches!(ctx.psi(8, &BTreeMap::new()), Err(CensusError::MissingPriorCount(6))));
        assert!(matches!(ctx.psi(12, &BTreeMap::new()), Err(CensusError::LengthOutOfRange { .. })));
        assert!(matches!(ctx.psi(4, &BTreeMap::new()), Err(CensusError::LengthOutOfRange { .. })));
    }

    #[test]
    fn census_of_named_graphs() {
        let k33 = count_short_cycles(&generators::complete_bipartite(3, 3).unwrap()).unwrap();
        assert_eq!(counts(&k33), vec![(4, 9), (6, 6)]);
        let e = k33.entry(6).unwrap();
        assert_eq!((e.trace.clone(), e.omega.clone(), e.psi.total.clone()), (big(1458), big(522), big(864)));

        let heawood = count_short_cycles(&generators::heawood()).unwrap();
        assert_eq!(counts(&heawood), vec![(6, 28), (8, 21), (10, 84)]);

        let sub = count_short_cycles(&generators::subdivision_k4()).unwrap();
        assert_eq!(counts(&sub), vec![(6, 4), (8, 3), (10, 0)]);
    }

    #[test]
    fn acyclic_graph_gives_empty_census() {
        let star = generators::complete_bipartite(1, 3).unwrap();
        let report = count_short_cycles(&star).unwrap();
        assert_eq!(report.graph.girth, Girth::Infinite);
        assert!(report.census.is_empty());
        assert!(report.notes.len() >= 2);
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(psi_g2_closed(3, 3, 6, &big(28)), BigInt::from(5376));
        assert_eq!(psi_g2_closed(3, 3, 4, &big(9)), BigInt::from(864));
        assert!(psi_g2_closed(3, 3, 4, &big(0)).is_zero());
        assert_eq!(psi_g4_closed(3, 3, 6, &big(28), &big(21)), BigInt::from(67200));
        assert_eq!(psi_g4_closed(3, 2, 6, &big(4), &big(3)), BigInt::from(5520));
        assert!(psi_g4_closed(4, 3, 8, &big(0), &big(0)).is_zero());
        assert!(psi_g6_closed(4, 3, 8, &big(0), &big(0), &big(0)).is_zero());
    }

    #[test]
    fn g6_closed_form_tail_terms_match_pipeline() {
        // With no g-cycles only the (g+2)- and (g+4)-cycle parts remain.
        for (c, d, g) in [(3, 3, 8), (3, 2, 10), (4, 3, 8), (2, 2, 12)] {
            let ctx = CensusContext::new(c, d, g).unwrap();
            let prior = BTreeMap::from([(g, big(0)), (g + 2, big(5)), (g + 4, big(7))]);
            let generic = ctx.psi(g + 6, &prior).unwrap().total;
            let closed = psi_g6_closed(c, d, g, &big(0), &big(5), &big(7));
            assert_eq!(as_count(&closed), Some(generic), "(c,d,g) = ({c},{d},{g})");
        }
    }

    #[test]
    fn term_dump_lists_every_term() {
        let dump = TermDump {
            length: 8,
            c: 3,
            d: 3,
            girth: 6,
            trace: big(100),
            omega: big(90),
            psi: PsiBreakdown {
                total: big(7),
                contributions: vec![PsiContribution { cycle_length: 6, phi: big(5), lambda: big(2) }],
            },
            residual: BigInt::from(3),
        };
        let text = CensusError::Divisibility(Box::new(dump)).to_string();
        for needle in ["trace    = 100", "omega    = 90", "phi = 5", "lambda = 2", "residual = 3"] {
            assert!(text.contains(needle), "{text}");
        }
    }
}
