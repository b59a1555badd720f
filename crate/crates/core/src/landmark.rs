//! Separation semantics, the landmark set predicate and solution types.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::graph::Metric;
use crate::weights::{Weight, Weights};

/// Which vertex pairs need `k` separations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Model {
    /// Every pair of distinct vertices.
    AllPairs,
    /// Only pairs of distinct vertices outside the landmark set.
    NonLandmarks,
}

impl Model {
    pub const BOTH: [Model; 2] = [Model::AllPairs, Model::NonLandmarks];

    pub fn as_str(self) -> &'static str {
        match self {
            Model::AllPairs => "ap",
            Model::NonLandmarks => "nl",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ap" => Ok(Model::AllPairs),
            "nl" => Ok(Model::NonLandmarks),
            other => Err(invalid(format!(
                "unknown model `{other}` (expected ap or nl)"
            ))),
        }
    }
}

/// Model, redundancy and optional vertex weights (unit weights when absent).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemSpec {
    pub model: Model,
    pub k: usize,
    pub weights: Option<Weights>,
}

impl ProblemSpec {
    pub fn new(model: Model, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(invalid("k must be at least 1"));
        }
        Ok(ProblemSpec {
            model,
            k,
            weights: None,
        })
    }

    pub fn with_weights(mut self, weights: Weights) -> Self {
        self.weights = Some(weights);
        self
    }

    /// The weights to use on a graph with `n` vertices.
    pub fn weights_for(&self, n: usize) -> Result<Weights> {
        match &self.weights {
            Some(w) if w.len() != n => {
                Err(invalid(format!("expected {n} weights, got {}", w.len())))
            }
            Some(w) => Ok(w.clone()),
            None => Ok(Weights::unit(n)),
        }
    }
}

/// How a solution was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    Dp,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Dp => "dp",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of a solver. An infeasible solution stands for an infinite
/// (weighted) metric dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    landmarks: Option<Vec<usize>>,
    weight: Option<Weight>,
    method: Method,
}

impl Solution {
    /// `landmarks` is sorted before it is stored.
    pub fn feasible(mut landmarks: Vec<usize>, weight: Weight, method: Method) -> Self {
        landmarks.sort_unstable();
        Solution {
            landmarks: Some(landmarks),
            weight: Some(weight),
            method,
        }
    }

    pub fn infeasible(method: Method) -> Self {
        Solution {
            landmarks: None,
            weight: None,
            method,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.landmarks.is_some()
    }

    pub fn landmarks(&self) -> Option<&[usize]> {
        self.landmarks.as_deref()
    }

    pub fn cardinality(&self) -> Option<usize> {
        self.landmarks.as_ref().map(Vec::len)
    }

    pub fn weight(&self) -> Option<Weight> {
        self.weight
    }

    pub fn method(&self) -> Method {
        self.method
    }
}

/// A feasible set together with its scaled weight. Candidates are ordered by
/// weight, then cardinality, then lexicographically by sorted vertex list, so
/// `min` picks the deterministic optimum every solver reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Candidate {
    pub weight: i128,
    pub set: Vec<usize>,
}

impl Candidate {
    pub fn new(mut set: Vec<usize>, weights: &Weights) -> Self {
        set.sort_unstable();
        Candidate {
            weight: weights.scaled_sum(set.iter().copied()),
            set,
        }
    }

    pub fn into_solution(self, weights: &Weights, method: Method) -> Solution {
        Solution::feasible(self.set, weights.unscale(self.weight), method)
    }
}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight
            .cmp(&other.weight)
            .then(self.set.len().cmp(&other.set.len()))
            .then_with(|| self.set.cmp(&other.set))
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Index of the heaviest vertex among `vertices`; ties go to the largest
/// index.
pub(crate) fn heaviest<I: IntoIterator<Item = usize>>(
    vertices: I,
    weights: &Weights,
) -> Option<usize> {
    vertices.into_iter().max_by_key(|&v| (weights.scaled(v), v))
}

/// The `count` lightest vertices among `vertices` (ties to smaller indices),
/// sorted by index. `None` if there are fewer than `count` vertices.
pub(crate) fn lightest<I: IntoIterator<Item = usize>>(
    vertices: I,
    count: usize,
    weights: &Weights,
) -> Option<Vec<usize>> {
    let mut vs: Vec<usize> = vertices.into_iter().collect();
    if vs.len() < count {
        return None;
    }
    vs.sort_unstable_by_key(|&v| (weights.scaled(v), v));
    vs.truncate(count);
    vs.sort_unstable();
    Some(vs)
}

/// The cheapest set of `n - 1` vertices: everything but the heaviest vertex.
pub(crate) fn best_trivial(n: usize, weights: &Weights) -> Candidate {
    let drop = heaviest(0..n, weights);
    Candidate::new((0..n).filter(|&v| Some(v) != drop).collect(), weights)
}

fn check_pair<M: Metric + ?Sized>(d: &M, u: usize, v: usize) -> Result<()> {
    let n = d.order();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::InvalidPair(u));
    }
    Ok(())
}

/// Whether `tau` has different distances to `u` and `v`.
pub fn separates<M: Metric + ?Sized>(d: &M, tau: usize, u: usize, v: usize) -> Result<bool> {
    check_pair(d, u, v)?;
    if tau >= d.order() {
        return Err(Error::VertexOutOfRange {
            vertex: tau,
            n: d.order(),
        });
    }
    Ok(d.distance(u, tau) != d.distance(v, tau))
}

/// The members of `landmarks` that separate `u` and `v`.
pub fn sps<M: Metric + ?Sized>(
    d: &M,
    landmarks: &[usize],
    u: usize,
    v: usize,
) -> Result<Vec<usize>> {
    check_pair(d, u, v)?;
    Ok(landmarks
        .iter()
        .copied()
        .filter(|&t| d.distance(u, t) != d.distance(v, t))
        .collect())
}

/// A pair with fewer than `k` separations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub separations: usize,
}

/// Full feasibility report for a candidate landmark set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub feasible: bool,
    /// First violated pair in `(u, v)` order with `u < v`.
    pub violation: Option<Violation>,
    /// Fewest separations over all checked pairs; `None` if no pair needed
    /// checking.
    pub min_separations: Option<usize>,
}

fn membership(n: usize, landmarks: &[usize]) -> Result<Vec<bool>> {
    let mut member = vec![false; n];
    for &l in landmarks {
        if l >= n {
            return Err(Error::VertexOutOfRange { vertex: l, n });
        }
        member[l] = true;
    }
    Ok(member)
}

fn required_pairs(
    n: usize,
    model: Model,
    member: &[bool],
) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..n)
        .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
        .filter(move |&(u, v)| model == Model::AllPairs || (!member[u] && !member[v]))
}

fn count_separations<M: Metric + ?Sized>(d: &M, landmarks: &[usize], u: usize, v: usize) -> usize {
    landmarks
        .iter()
        .filter(|&&t| d.distance(u, t) != d.distance(v, t))
        .count()
}

fn dedup(landmarks: &[usize]) -> Vec<usize> {
    let mut ls = landmarks.to_vec();
    ls.sort_unstable();
    ls.dedup();
    ls
}

/// Whether `landmarks` gives at least `k` separations to every pair the model
/// requires. Vertices out of range make the set invalid.
pub fn is_landmark_set<M: Metric + ?Sized>(
    d: &M,
    landmarks: &[usize],
    model: Model,
    k: usize,
) -> bool {
    let n = d.order();
    let Ok(member) = membership(n, landmarks) else {
        return false;
    };
    let ls = dedup(landmarks);
    if ls.len() < k && model == Model::AllPairs && n >= 2 {
        return false;
    }
    let feasible =
        required_pairs(n, model, &member).all(|(u, v)| count_separations(d, &ls, u, v) >= k);
    feasible
}

/// Like [`is_landmark_set`] but scans every required pair and reports the
/// first violation and the minimum separation count.
pub fn check_landmarks<M: Metric + ?Sized>(
    d: &M,
    landmarks: &[usize],
    model: Model,
    k: usize,
) -> Result<FeasibilityReport> {
    let n = d.order();
    let member = membership(n, landmarks)?;
    let ls = dedup(landmarks);
    let mut violation = None;
    let mut min_separations: Option<usize> = None;
    for (u, v) in required_pairs(n, model, &member) {
        let s = count_separations(d, &ls, u, v);
        min_separations = Some(min_separations.map_or(s, |m| m.min(s)));
        if s < k && violation.is_none() {
            violation = Some(Violation {
                u,
                v,
                separations: s,
            });
        }
    }
    Ok(FeasibilityReport {
        feasible: violation.is_none(),
        violation,
        min_separations,
    })
}
