//! Brute-force exact solver for arbitrary small graphs.
//!
//! For every vertex pair the table stores a bit mask of the vertices that
//! separate it, so checking a candidate set is one popcount per pair.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, Metric};
use crate::landmark::{Method, Model, ProblemSpec, Solution};
use crate::weights::Weights;

/// Size limits checked before any enumeration starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_n_enumerate: usize,
    pub max_n_minimal: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_n_enumerate: 20,
            max_n_minimal: 12,
        }
    }
}

/// Masks are processed in chunks of this size when searching in parallel.
const CHUNK: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, Default)]
pub struct Oracle {
    pub limits: OracleLimits,
}

/// Per-pair separator masks for one graph.
#[derive(Clone, Debug)]
pub struct SeparationTable {
    n: usize,
    pairs: Vec<(u64, u64)>,
}

impl SeparationTable {
    /// Panics if the graph has more than 63 vertices.
    pub fn new<M: Metric + ?Sized>(d: &M) -> Self {
        let n = d.order();
        assert!(n < 64, "separation table supports at most 63 vertices");
        let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                let sep = (0..n)
                    .filter(|&t| d.distance(u, t) != d.distance(v, t))
                    .fold(0u64, |m, t| m | 1 << t);
                pairs.push(((1 << u) | (1 << v), sep));
            }
        }
        SeparationTable { n, pairs }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Landmark set predicate on a bit mask.
    #[inline]
    pub fn is_feasible(&self, mask: u64, model: Model, k: usize) -> bool {
        let k = k as u32;
        match model {
            Model::AllPairs => self
                .pairs
                .iter()
                .all(|&(_, sep)| (sep & mask).count_ones() >= k),
            Model::NonLandmarks => self
                .pairs
                .iter()
                .all(|&(ends, sep)| ends & mask != 0 || (sep & mask).count_ones() >= k),
        }
    }
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Lexicographic order of the sorted vertex lists encoded by two masks.
pub(crate) fn lex_cmp(a: u64, b: u64) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let p = (a ^ b).trailing_zeros();
    // Both lists agree below p. The one holding p is smaller, unless the other
    // one has no element above p and is therefore a proper prefix.
    let a_holds = a >> p & 1 == 1;
    let other = if a_holds { b } else { a };
    let holder_smaller = other >> p != 0;
    if a_holds == holder_smaller {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// (weight, cardinality, lexicographic) key of a mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Key {
    weight: i128,
    mask: u64,
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then(self.mask.count_ones().cmp(&other.mask.count_ones()))
            .then_with(|| lex_cmp(self.mask, other.mask))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Subsets of `0..n` with exactly `size` elements, in lexicographic order.
fn combinations(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let mut idx: Vec<usize> = (0..size).collect();
    let mut done = size > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        // advance
        let mut i = size;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - size + i {
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    })
}

impl Oracle {
    pub fn new(limits: OracleLimits) -> Self {
        Oracle { limits }
    }

    fn check_size(&self, n: usize, limit: usize) -> Result<()> {
        if n > limit {
            Err(Error::SizeLimit { n, limit })
        } else {
            Ok(())
        }
    }

    fn table(&self, g: &Graph) -> Result<SeparationTable> {
        self.check_size(g.order(), self.limits.max_n_enumerate)?;
        Ok(SeparationTable::new(&DistanceMatrix::from_graph(g)))
    }

    /// Smallest feasible set; among sets of that size the lexicographically
    /// first one.
    pub fn min_cardinality(&self, g: &Graph, spec: &ProblemSpec) -> Result<Solution> {
        let table = self.table(g)?;
        let n = g.order();
        let weights = spec.weights_for(n)?;
        for size in 0..=n {
            if let Some(mask) =
                combinations(n, size).find(|&m| table.is_feasible(m, spec.model, spec.k))
            {
                let set = mask_to_vec(mask);
                let w = weights.weight_of(&set);
                return Ok(Solution::feasible(set, w, Method::Oracle));
            }
        }
        Ok(Solution::infeasible(Method::Oracle))
    }

    /// Minimum total weight over all feasible sets; ties go to the smaller
    /// set, then to the lexicographically first one.
    pub fn min_weight(&self, g: &Graph, spec: &ProblemSpec) -> Result<Solution> {
        let table = self.table(g)?;
        let weights = spec.weights_for(g.order())?;
        Ok(min_weight_on(&table, &weights, spec.model, spec.k, |_| {
            true
        }))
    }

    /// All inclusion-minimal feasible sets, sorted lexicographically.
    pub fn minimal_sets(&self, g: &Graph, model: Model, k: usize) -> Result<Vec<Vec<usize>>> {
        self.check_size(g.order(), self.limits.max_n_minimal)?;
        let table = self.table(g)?;
        let n = g.order();
        let mut sets: Vec<Vec<usize>> = (0..1u64 << n)
            .into_par_iter()
            .filter(|&m| {
                table.is_feasible(m, model, k)
                    && (0..n)
                        .filter(|&i| m >> i & 1 == 1)
                        .all(|i| !table.is_feasible(m & !(1 << i), model, k))
            })
            .map(mask_to_vec)
            .collect();
        sets.sort();
        Ok(sets)
    }
}

/// Weighted search restricted to masks accepted by `allowed`.
pub(crate) fn min_weight_on<F>(
    table: &SeparationTable,
    weights: &Weights,
    model: Model,
    k: usize,
    allowed: F,
) -> Solution
where
    F: Fn(u64) -> bool + Sync,
{
    let n = table.order();
    let total: u64 = 1 << n;
    let scaled = weights.scaled_values();
    let search = |lo: u64, hi: u64| -> Option<Key> {
        let mut best: Option<Key> = None;
        for mask in lo..hi {
            let mut weight = 0i128;
            let mut bits = mask;
            while bits != 0 {
                weight += scaled[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            let key = Key { weight, mask };
            if best.is_some_and(|b| key >= b) {
                continue;
            }
            if allowed(mask) && table.is_feasible(mask, model, k) {
                best = Some(key);
            }
        }
        best
    };
    let best = if total <= CHUNK {
        search(0, total)
    } else {
        (0..total / CHUNK)
            .into_par_iter()
            .filter_map(|c| search(c * CHUNK, (c + 1) * CHUNK))
            .min()
    };
    match best {
        Some(key) => Solution::feasible(
            mask_to_vec(key.mask),
            weights.unscale(key.weight),
            Method::Oracle,
        ),
        None => Solution::infeasible(Method::Oracle),
    }
}
