//! Exact solvers for the k-metric dimension problem.
//!
//! A vertex `t` *separates* two vertices `u != v` when their distances to `t`
//! differ. A set `L` is a *landmark set* for redundancy `k` when every
//! relevant pair is separated by at least `k` members of `L`. Two models
//! decide which pairs are relevant:
//!
//! * [`Model::AllPairs`] requires `k` separations for every pair of distinct
//!   vertices;
//! * [`Model::NonLandmarks`] only for pairs of vertices outside `L`.
//!
//! The crate finds minimum cardinality and minimum (exact rational) weight
//! landmark sets for paths ([`path`]), cliques and complete bipartite graphs
//! ([`complete`]) and complete wheels ([`wheel`]). Every specialized solver is
//! checked against the brute-force [`oracle`], which works on any small graph.
//!
//! ```
//! use kmetric::{wheel, Model, ProblemSpec};
//!
//! let spec = ProblemSpec::new(Model::AllPairs, 2).unwrap();
//! let sol = wheel::wheel_solve(9, &spec).unwrap();
//! assert_eq!(sol.cardinality(), Some(4));
//! ```

pub mod cli;
pub mod complete;
mod error;
pub mod graph;
pub mod landmark;
pub mod oracle;
pub mod path;
pub mod weights;
pub mod wheel;

pub use error::{Error, Result};
pub use graph::{cyclic_index, DistanceMatrix, Family, Graph, Metric};
pub use landmark::{is_landmark_set, separates, sps, Method, Model, ProblemSpec, Solution};
pub use oracle::{Oracle, OracleLimits};
pub use weights::{Weight, Weights};

/// Runs the specialized solver for a graph family.
pub fn solve(family: Family, spec: &ProblemSpec) -> Result<Solution> {
    match family {
        Family::Path(n) => path::path_solve(n, spec),
        Family::Clique(n) => complete::clique_solve(n, spec),
        Family::Bipartite(a, b) => complete::bipartite_solve(a, b, spec),
        Family::Wheel(n) => wheel::wheel_solve(n, spec),
        Family::Custom => Err(Error::Unsupported(
            "custom graphs have no specialized solver; use the oracle".into(),
        )),
    }
}
