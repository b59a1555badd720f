//! Exact solvers for paths `v_1 - v_2 - ... - v_n` (vertex `i` is `v_{i+1}`).
//!
//! All-pairs model: any `k+1` vertices form a landmark set, so for `k >= 3`
//! the answer is the `k+1` lightest vertices. For `k = 2` the minimal sets
//! are `{v_1, v_n}` and the 3-sets not containing both ends; for `k = 1` they
//! are `{v_1}`, `{v_n}` and pairs of internal vertices.
//!
//! Non-landmarks model with `n >= k+2`: minimal sets have `k` or `k+1`
//! vertices. A `k`-set either leaves a single gap of holes, or leaves single
//! holes spaced by a common odd step `rho >= 3` (only possible when
//! `n <= 3k/2 + 1`).

use std::cmp::Ordering;
use std::ops::Range;

use crate::error::{invalid, Result};
use crate::graph::Metric;
use crate::landmark::{
    best_trivial, is_landmark_set, lightest, Candidate, Method, Model, ProblemSpec, Solution,
};
use crate::weights::Weights;

/// Distances on a path without materializing a matrix.
#[derive(Clone, Copy, Debug)]
pub struct PathMetric {
    pub n: usize,
}

impl Metric for PathMetric {
    fn order(&self) -> usize {
        self.n
    }

    fn distance(&self, u: usize, v: usize) -> Option<u32> {
        Some(u.abs_diff(v) as u32)
    }
}

/// Vertices other than the two ends.
pub fn internal_vertices(n: usize) -> Range<usize> {
    1..n.saturating_sub(1).max(1)
}

fn check_inputs(n: usize, k: usize, weights: &Weights) -> Result<()> {
    if n < 2 {
        return Err(invalid(format!("a path needs n >= 2, got {n}")));
    }
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    if weights.len() != n {
        return Err(invalid(format!(
            "expected {n} weights, got {}",
            weights.len()
        )));
    }
    Ok(())
}

/// Solves either model on a path.
pub fn path_solve(n: usize, spec: &ProblemSpec) -> Result<Solution> {
    let weights = spec.weights_for(n)?;
    match spec.model {
        Model::AllPairs => path_ap(n, spec.k, &weights),
        Model::NonLandmarks => path_nl(n, spec.k, &weights),
    }
}

pub fn path_ap(n: usize, k: usize, weights: &Weights) -> Result<Solution> {
    check_inputs(n, k, weights)?;
    let last = n - 1;
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    match k {
        1 => {
            candidates.push(vec![0]);
            candidates.push(vec![last]);
            candidates.extend(lightest(internal_vertices(n), 2, weights));
        }
        2 => {
            candidates.push(vec![0, last]);
            if let Some(pair) = lightest(internal_vertices(n), 2, weights) {
                for end in [0, last] {
                    let mut c = pair.clone();
                    c.push(end);
                    candidates.push(c);
                }
            }
            candidates.extend(lightest(internal_vertices(n), 3, weights));
        }
        _ if k < n => candidates.extend(lightest(0..n, k + 1, weights)),
        _ => {}
    }
    Ok(candidates
        .into_iter()
        .map(|c| Candidate::new(c, weights))
        .min()
        .map_or(Solution::infeasible(Method::ClosedForm), |c| {
            c.into_solution(weights, Method::ClosedForm)
        }))
}

/// Holes (non-landmarks) of a `k`-vertex candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Holes {
    /// `len` consecutive holes starting at `start`.
    Block { start: usize, len: usize },
    /// `count` holes `first, first + step, ...`.
    Progression {
        first: usize,
        step: usize,
        count: usize,
    },
}

impl Holes {
    fn iter(self) -> impl Iterator<Item = usize> {
        let (first, step, count) = match self {
            Holes::Block { start, len } => (start, 1, len),
            Holes::Progression { first, step, count } => (first, step, count),
        };
        (0..count).map(move |j| first + j * step)
    }

    fn landmarks(self, n: usize) -> Vec<usize> {
        let mut is_hole = vec![false; n];
        for h in self.iter() {
            is_hole[h] = true;
        }
        (0..n).filter(|&v| !is_hole[v]).collect()
    }
}

/// For hole sets of equal size, the complement of the lexicographically
/// larger hole set is the lexicographically smaller landmark set.
fn prefer_holes(a: (i128, Holes), b: (i128, Holes)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| b.1.iter().cmp(a.1.iter()))
}

pub fn path_nl(n: usize, k: usize, weights: &Weights) -> Result<Solution> {
    check_inputs(n, k, weights)?;
    if n <= k + 1 {
        return Ok(best_trivial(n, weights).into_solution(weights, Method::ClosedForm));
    }
    let scaled = weights.scaled_values();
    let total: i128 = scaled.iter().sum();
    let holes = n - k;

    let lightest_set = lightest(0..n, k + 1, weights).expect("n >= k + 2");
    let mut best = Candidate::new(lightest_set, weights);

    // Single gap: the heaviest block of n - k consecutive vertices.
    let mut window: i128 = scaled[..holes].iter().sum();
    let mut block = (
        window,
        Holes::Block {
            start: 0,
            len: holes,
        },
    );
    for start in 1..=n - holes {
        window += scaled[start + holes - 1] - scaled[start - 1];
        let cand = (window, Holes::Block { start, len: holes });
        if prefer_holes(cand, block) == Ordering::Less {
            block = cand;
        }
    }
    best = best.min(Candidate {
        weight: total - block.0,
        set: block.1.landmarks(n),
    });

    // Several single-hole gaps at a common odd spacing.
    if 2 * n <= 3 * k + 2 && holes >= 2 {
        let mut spaced: Vec<(i128, Holes)> = Vec::new();
        let mut step = 3;
        while (holes - 1) * step < n {
            for first in 0..n - (holes - 1) * step {
                let pattern = Holes::Progression {
                    first,
                    step,
                    count: holes,
                };
                spaced.push((pattern.iter().map(|h| scaled[h]).sum(), pattern));
            }
            step += 2;
        }
        spaced.sort_by(|&a, &b| prefer_holes(a, b));
        let metric = PathMetric { n };
        for (hole_weight, pattern) in spaced {
            let weight = total - hole_weight;
            if weight > best.weight {
                break;
            }
            let cand = Candidate {
                weight,
                set: pattern.landmarks(n),
            };
            if cand >= best {
                break;
            }
            if is_landmark_set(&metric, &cand.set, Model::NonLandmarks, k) {
                best = cand;
                break;
            }
        }
    }
    Ok(best.into_solution(weights, Method::ClosedForm))
}

/// Shape of a `k`-vertex set on a path, judged by its holes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GapStructure {
    /// All holes are consecutive; always a landmark set.
    OneGap,
    /// Single holes `first, first + rho, ...` with odd `rho >= 3`.
    MultiGap { rho: usize, first: usize },
    /// Several gaps that violate the spacing rules; never a landmark set.
    Invalid,
}

/// Classifies a `k`-vertex set by the gaps its holes form.
pub fn path_nl_structure_check(landmarks: &[usize], n: usize, k: usize) -> Result<GapStructure> {
    let mut member = vec![false; n];
    for &l in landmarks {
        if l >= n {
            return Err(crate::Error::VertexOutOfRange { vertex: l, n });
        }
        member[l] = true;
    }
    let size = member.iter().filter(|&&m| m).count();
    if size != k || landmarks.len() != k {
        return Err(invalid(format!(
            "expected {k} distinct landmarks, got {}",
            landmarks.len()
        )));
    }
    if k >= n {
        return Err(invalid(
            "a k-vertex set on a path with n <= k leaves no holes",
        ));
    }
    let holes: Vec<usize> = (0..n).filter(|&v| !member[v]).collect();
    let gaps = 1 + holes.windows(2).filter(|w| w[1] != w[0] + 1).count();
    if gaps == 1 {
        return Ok(GapStructure::OneGap);
    }
    if holes.windows(2).any(|w| w[1] == w[0] + 1) {
        return Ok(GapStructure::Invalid);
    }
    let rho = holes[1] - holes[0];
    if rho % 2 == 1 && holes.windows(2).all(|w| w[1] - w[0] == rho) {
        Ok(GapStructure::MultiGap {
            rho,
            first: holes[0],
        })
    } else {
        Ok(GapStructure::Invalid)
    }
}
