//! Complete wheels `W_n`: cycle vertices `0..n-1` (exclusive) and the hub
//! `n - 1`.

mod dp;
pub mod strings;

pub use dp::wheel_dp;
pub use strings::{
    cyclic_string_is_valid, derive_boundary_sets, invalid_window, BoundaryStringSets, Variant,
};

use crate::complete::clique_solve;
use crate::error::{invalid, Error, Result};
use crate::graph::{cyclic_index, Graph};
use crate::landmark::{best_trivial, heaviest, Candidate, Method, Model, ProblemSpec, Solution};
use crate::oracle::Oracle;

/// Local rule on the cycle that characterizes landmark sets of the variant.
pub fn check_condition(variant: Variant, landmarks: &[usize], n: usize) -> Result<bool> {
    if n < 6 {
        return Err(invalid(format!("wheel conditions need n >= 6, got {n}")));
    }
    let m = n - 1;
    let mut member = vec![false; m];
    for &v in landmarks {
        if v >= m {
            return Err(invalid(format!("{v} is not a cycle vertex of W_{n}")));
        }
        member[v] = true;
    }
    let at = |i: usize, offset: i64| member[cyclic_index(i as i64 + offset, n)];
    let holds = (0..m).all(|i| match variant {
        Variant::ApK2 => at(i, 0) || at(i, 1) || [-3, -2, -1, 2, 3, 4].iter().all(|&o| at(i, o)),
        Variant::ApK3 => at(i, 0) || [-4, -3, -2, -1, 1, 2, 3, 4].iter().all(|&o| at(i, o)),
        Variant::NlK2 => at(i, 0) || at(i, 1) || [-2, -1, 2, 3].iter().all(|&o| at(i, o)),
        Variant::NlK34 => at(i, 0) || [-2, -1, 1, 2].iter().all(|&o| at(i, o)),
    });
    Ok(holds)
}

/// Indicator string of a set of cycle vertices.
pub fn cycle_bits(landmarks: &[usize], n: usize) -> Vec<bool> {
    let mut bits = vec![false; n - 1];
    for &v in landmarks {
        if v < n - 1 {
            bits[v] = true;
        }
    }
    bits
}

pub fn wheel_solve(n: usize, spec: &ProblemSpec) -> Result<Solution> {
    if n < 4 {
        return Err(invalid(format!("a wheel needs n >= 4, got {n}")));
    }
    let weights = spec.weights_for(n)?;
    let m = n - 1;
    let cycle = || Candidate::new((0..m).collect(), &weights);
    let closed = |c: Option<Candidate>| {
        Ok(match c {
            Some(c) => c.into_solution(&weights, Method::ClosedForm),
            None => Solution::infeasible(Method::ClosedForm),
        })
    };
    let oracle = || {
        let oracle = Oracle::default();
        if n > oracle.limits.max_n_enumerate {
            return Err(Error::Unsupported(format!(
                "wheel with k = {} and n = {n} is beyond the oracle limit {}",
                spec.k, oracle.limits.max_n_enumerate
            )));
        }
        oracle.min_weight(&Graph::wheel(n)?, spec)
    };
    // V minus `len` consecutive cycle vertices starting at each i
    let drop_runs = |len: usize| {
        (0..m)
            .map(|i| {
                let holes: Vec<usize> = (0..len).map(|j| cyclic_index((i + j) as i64, n)).collect();
                Candidate::new((0..n).filter(|v| !holes.contains(v)).collect(), &weights)
            })
            .min()
    };

    match (n, spec.model, spec.k) {
        (4, ..) => clique_solve(4, spec),
        (5, _, 1) => oracle(),
        (5, Model::AllPairs, 2) => closed(Some(cycle())),
        (5, Model::AllPairs, _) => closed(None),
        (5, Model::NonLandmarks, 2) => closed(drop_runs(2).min(Some(cycle()))),
        (5, Model::NonLandmarks, _) => closed(drop_runs(1).min(Some(cycle()))),
        (6..=8, ..) => oracle(),
        (_, _, 1) => oracle(),
        (_, model, k) => {
            if let Some(variant) = Variant::for_problem(model, k) {
                return wheel_dp(n, variant, &weights);
            }
            match model {
                Model::AllPairs if k == 4 => closed(Some(cycle())),
                Model::AllPairs => closed(None),
                Model::NonLandmarks if n >= k + 4 => {
                    let drop = heaviest(0..m, &weights);
                    closed(Some(Candidate::new(
                        (0..m).filter(|&v| Some(v) != drop).collect(),
                        &weights,
                    )))
                }
                Model::NonLandmarks => closed(Some(best_trivial(n, &weights))),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{Weight, Weights};

    fn solve(n: usize, model: Model, k: usize) -> Solution {
        wheel_solve(n, &ProblemSpec::new(model, k).unwrap()).unwrap()
    }

    #[test]
    fn condition_examples() {
        assert!(check_condition(Variant::ApK2, &[1, 3, 5, 7], 9).unwrap());
        let l: Vec<usize> = (0..10).filter(|i| (i + 1) % 5 != 0).collect();
        assert!(check_condition(Variant::ApK3, &l, 11).unwrap());
        assert!(!check_condition(Variant::NlK34, &[0, 1, 2, 3, 4, 5], 9).unwrap());
        assert!(check_condition(Variant::NlK34, &[0, 1, 3, 4, 6, 7], 9).unwrap());
        assert!(check_condition(Variant::NlK34, &[8], 9).is_err());
        assert!(check_condition(Variant::NlK34, &[], 5).is_err());
    }

    #[test]
    fn dispatch_examples() {
        let s = solve(6, Model::AllPairs, 4);
        assert_eq!(s.cardinality(), Some(6));
        assert_eq!(solve(12, Model::NonLandmarks, 5).cardinality(), Some(10));
        assert_eq!(solve(8, Model::NonLandmarks, 3).cardinality(), Some(5));
        assert_eq!(solve(9, Model::AllPairs, 2).method(), Method::Dp);
        assert_eq!(solve(20, Model::AllPairs, 4).cardinality(), Some(19));
        assert!(!solve(20, Model::AllPairs, 5).is_feasible());
        assert_eq!(solve(9, Model::NonLandmarks, 6).cardinality(), Some(8));
        assert!(matches!(
            wheel_solve(21, &ProblemSpec::new(Model::AllPairs, 1).unwrap()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn five_vertex_closed_forms() {
        assert_eq!(solve(5, Model::NonLandmarks, 2).cardinality(), Some(3));
        assert!(!solve(5, Model::AllPairs, 3).is_feasible());
        // free hub: dropping two cycle vertices beats keeping the cycle
        let w = Weights::from_integers(&[1, 1, 1, 1, 0]);
        let s = wheel_solve(
            5,
            &ProblemSpec::new(Model::NonLandmarks, 2)
                .unwrap()
                .with_weights(w),
        )
        .unwrap();
        assert_eq!(s.weight(), Some(Weight::from_integer(2)));
    }
}
