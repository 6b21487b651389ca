//! Weak compositions and composition-indexed product sums.
//!
//! The walk decompositions split the excess length of a closed walk into
//! `p + 1` nonnegative halves `s_0 + ... + s_p = k`, one per attachment
//! point, and multiply per-slot series values. Because each product only
//! depends on how many interior slots draw from each series, the whole sum is
//! a coefficient of a product of truncated power series.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{SeriesId, WalkSeriesTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompositionError {
    #[error("series {series} needs index {index} but the table stops at k = {k_max}")]
    IndexOutOfRange {
        series: SeriesId,
        index: usize,
        k_max: usize,
    },
}

/// An ordered tuple of nonnegative parts with a fixed total.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Iterator over the weak compositions of `total` into `parts` slots, in
/// reverse lexicographic order (`(k, 0, .., 0)` first).
#[derive(Debug, Clone)]
pub struct WeakCompositions {
    current: Option<Vec<usize>>,
}

/// All weak compositions of `total` into `parts` slots; there are
/// `C(total + parts - 1, parts - 1)` of them. `parts` must be at least 1.
pub fn weak_compositions(total: usize, parts: usize) -> WeakCompositions {
    assert!(parts >= 1, "a composition needs at least one part");
    let mut first = vec![0; parts];
    first[0] = total;
    WeakCompositions {
        current: Some(first),
    }
}

impl Iterator for WeakCompositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.current.as_mut()?;
        let out = Composition {
            parts: current.clone(),
        };
        // Advance: move one unit from the rightmost nonzero non-final slot to
        // its right neighbour and collect everything after it there.
        let p = current.len();
        let pivot = (0..p.saturating_sub(1)).rev().find(|&i| current[i] > 0);
        match pivot {
            None => self.current = None,
            Some(i) => {
                let tail: usize = current[i + 1..].iter().sum();
                current[i] -= 1;
                current[i + 1..].iter_mut().for_each(|x| *x = 0);
                current[i + 1] = tail + 1;
            }
        }
        Some(out)
    }
}

/// Multiset of series assigned to the interior slots, plus the series used in
/// the final slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassAssignment {
    interior: BTreeMap<SeriesId, usize>,
    terminal: SeriesId,
}

impl ClassAssignment {
    pub fn new(interior: impl IntoIterator<Item = (SeriesId, usize)>, terminal: SeriesId) -> Self {
        let mut map = BTreeMap::new();
        for (id, count) in interior {
            *map.entry(id).or_insert(0) += count;
        }
        map.retain(|_, count| *count > 0);
        Self {
            interior: map,
            terminal,
        }
    }

    /// Collapses an explicit slot layout into multiplicities.
    pub fn from_layout(interior: &[SeriesId], terminal: SeriesId) -> Self {
        Self::new(interior.iter().map(|&id| (id, 1)), terminal)
    }

    /// One canonical slot layout: interior slots grouped by series, then the
    /// terminal slot last.
    pub fn layout(&self) -> Vec<SeriesId> {
        self.interior
            .iter()
            .flat_map(|(&id, &count)| std::iter::repeat_n(id, count))
            .chain(std::iter::once(self.terminal))
            .collect()
    }

    pub fn interior(&self) -> impl Iterator<Item = (SeriesId, usize)> + '_ {
        self.interior.iter().map(|(&id, &count)| (id, count))
    }

    pub fn terminal(&self) -> SeriesId {
        self.terminal
    }

    pub fn slot_count(&self) -> usize {
        self.interior.values().sum::<usize>() + 1
    }
}

fn lookup(
    series: &WalkSeriesTable,
    id: SeriesId,
    index: usize,
) -> Result<&BigUint, CompositionError> {
    series.get(id, index).ok_or(CompositionError::IndexOutOfRange {
        series: id,
        index,
        k_max: series.k_max,
    })
}

fn check_bounds(
    ids: impl IntoIterator<Item = SeriesId>,
    series: &WalkSeriesTable,
    k: usize,
) -> Result<(), CompositionError> {
    if k > series.k_max {
        let id = ids.into_iter().next().unwrap_or(SeriesId::Bc);
        return Err(CompositionError::IndexOutOfRange {
            series: id,
            index: k,
            k_max: series.k_max,
        });
    }
    Ok(())
}

/// `sum over (s_0..s_p) with total k` of `terminal(s_p) * prod_j slot_j(s_j)`,
/// where `layout` lists the series of every slot and its last entry is the
/// terminal slot. Direct enumeration; exponential in the slot count.
pub fn product_sum_over_layout(
    layout: &[SeriesId],
    series: &WalkSeriesTable,
    k: usize,
) -> Result<BigUint, CompositionError> {
    assert!(!layout.is_empty(), "layout needs a terminal slot");
    check_bounds(layout.iter().copied(), series, k)?;
    let mut total = BigUint::zero();
    for composition in weak_compositions(k, layout.len()) {
        let mut product = BigUint::one();
        for (&id, &s) in layout.iter().zip(composition.parts()) {
            if s == 0 && matches!(id, SeriesId::Ac | SeriesId::Ad) {
                product.set_zero();
                break;
            }
            let value = lookup(series, id, s)?;
            if value.is_zero() {
                product.set_zero();
                break;
            }
            product *= value;
        }
        total += product;
    }
    Ok(total)
}

/// [`product_sum`] by enumerating every composition over the canonical layout.
pub fn product_sum_enumerated(
    assignment: &ClassAssignment,
    series: &WalkSeriesTable,
    k: usize,
) -> Result<BigUint, CompositionError> {
    product_sum_over_layout(&assignment.layout(), series, k)
}

/// Truncated product of two power series up to `x^k`.
fn multiply(a: &[BigUint], b: &[BigUint], k: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); k + 1];
    for (i, x) in a.iter().enumerate().take(k + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(k + 1 - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn power(base: &[BigUint], mut exp: usize, k: usize) -> Vec<BigUint> {
    let mut result = vec![BigUint::zero(); k + 1];
    result[0] = BigUint::one();
    let mut square: Vec<BigUint> = base.iter().take(k + 1).cloned().collect();
    while exp > 0 {
        if exp & 1 == 1 {
            result = multiply(&result, &square, k);
        }
        exp >>= 1;
        if exp > 0 {
            square = multiply(&square, &square, k);
        }
    }
    result
}

/// Composition product sum as the `x^k` coefficient of
/// `terminal(x) * prod_X X(x)^{m_X}`.
pub fn product_sum(
    assignment: &ClassAssignment,
    series: &WalkSeriesTable,
    k: usize,
) -> Result<BigUint, CompositionError> {
    check_bounds(std::iter::once(assignment.terminal), series, k)?;
    let truncate = |id| -> Vec<BigUint> { series.coefficients(id).into_iter().take(k + 1).collect() };
    let mut acc = truncate(assignment.terminal);
    for (id, count) in assignment.interior() {
        acc = multiply(&acc, &power(&truncate(id), count, k), k);
    }
    Ok(acc.into_iter().nth(k).unwrap_or_default())
}
