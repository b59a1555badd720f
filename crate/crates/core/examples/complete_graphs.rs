//! Cliques and complete bipartite graphs: almost every vertex is needed.
//!
//!     cargo run --example complete_graphs

use kmetric::complete::{bipartite_solve, clique_solve};
use kmetric::{Model, ProblemSpec, Weights};

fn show(label: &str, sol: &kmetric::Solution) {
    match sol.landmarks() {
        Some(l) => println!("{label:<28} {l:?} (weight {})", sol.weight().unwrap()),
        None => println!("{label:<28} infeasible"),
    }
}

fn main() -> kmetric::Result<()> {
    for model in Model::BOTH {
        for k in 1..=3 {
            let spec = ProblemSpec::new(model, k)?;
            show(&format!("K6 {model} k={k}"), &clique_solve(6, &spec)?);
            show(
                &format!("K(3,4) {model} k={k}"),
                &bipartite_solve(3, 4, &spec)?,
            );
        }
    }

    // the heaviest vertex of each part is the one left out
    let w = Weights::from_integers(&[3, 8, 1, 2, 2, 7, 1]);
    let spec = ProblemSpec::new(Model::NonLandmarks, 2)?.with_weights(w);
    show("weighted K(3,4) nl k=2", &bipartite_solve(3, 4, &spec)?);
    Ok(())
}
