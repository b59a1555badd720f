//! Cliques and complete bipartite graphs.
//!
//! In both families two vertices of the same part are separated only by
//! themselves, which pins landmark sets down to "everything except at most
//! one vertex per part".

use crate::error::{invalid, Result};
use crate::landmark::{best_trivial, heaviest, Candidate, Method, Model, ProblemSpec, Solution};

pub fn clique_solve(n: usize, spec: &ProblemSpec) -> Result<Solution> {
    if n < 2 {
        return Err(invalid(format!("a clique needs n >= 2, got {n}")));
    }
    let weights = spec.weights_for(n)?;
    let candidate = match (spec.model, spec.k) {
        (Model::AllPairs, 1) | (Model::NonLandmarks, _) => Some(best_trivial(n, &weights)),
        (Model::AllPairs, 2) => Some(Candidate::new((0..n).collect(), &weights)),
        (Model::AllPairs, _) => None,
    };
    Ok(match candidate {
        Some(c) => c.into_solution(&weights, Method::ClosedForm),
        None => Solution::infeasible(Method::ClosedForm),
    })
}

/// `K(a,b)` with part A = `0..a` and part B = `a..a+b`.
pub fn bipartite_solve(a: usize, b: usize, spec: &ProblemSpec) -> Result<Solution> {
    if a == 0 || b == 0 || a + b < 3 {
        return Err(invalid(format!(
            "a complete bipartite graph needs a, b >= 1 and a + b >= 3, got a = {a}, b = {b}"
        )));
    }
    let n = a + b;
    let weights = spec.weights_for(n)?;
    let drop_one_per_part = || {
        let drop_a = heaviest(0..a, &weights);
        let drop_b = heaviest(a..n, &weights);
        let set = (0..n)
            .filter(|&v| Some(v) != drop_a && Some(v) != drop_b)
            .collect();
        Candidate::new(set, &weights)
    };
    let candidate = match (spec.model, spec.k) {
        (Model::AllPairs, 1) => Some(drop_one_per_part()),
        // a part with one vertex meets only cross pairs, which every other
        // vertex separates, so a star can skip its center
        (Model::AllPairs, 2) => {
            let keep = |v: usize| if v < a { a > 1 } else { b > 1 };
            Some(Candidate::new(
                (0..n).filter(|&v| keep(v)).collect(),
                &weights,
            ))
        }
        (Model::AllPairs, _) => None,
        (Model::NonLandmarks, k) if n >= k + 2 => Some(drop_one_per_part()),
        (Model::NonLandmarks, _) => Some(best_trivial(n, &weights)),
    };
    Ok(match candidate {
        Some(c) => c.into_solution(&weights, Method::ClosedForm),
        None => Solution::infeasible(Method::ClosedForm),
    })
}
