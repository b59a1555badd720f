//! Brute force against the closed forms and the DP on small graphs.
//!
//!     cargo run --release --example oracle_cross_check

use kmetric::{Family, Graph, Model, Oracle, ProblemSpec};

fn main() -> kmetric::Result<()> {
    let oracle = Oracle::default();
    let families = [
        Family::Path(10),
        Family::Clique(7),
        Family::Bipartite(3, 5),
        Family::Wheel(12),
    ];
    let mut mismatches = 0;
    for family in families {
        let g = Graph::from_family(family)?;
        for model in Model::BOTH {
            for k in 1..=4 {
                let spec = ProblemSpec::new(model, k)?;
                let fast = kmetric::solve(family, &spec)?;
                let slow = oracle.min_weight(&g, &spec)?;
                let ok = fast.weight() == slow.weight();
                mismatches += usize::from(!ok);
                println!(
                    "{family:<16} {model} k={k}  solver {:>4}  oracle {:>4}  {}",
                    fmt(fast.cardinality()),
                    fmt(slow.cardinality()),
                    if ok { "ok" } else { "MISMATCH" }
                );
            }
        }
    }

    let minimal = oracle.minimal_sets(&Graph::wheel(6)?, Model::NonLandmarks, 2)?;
    println!("minimal NL k=2 sets of the 6-vertex wheel: {minimal:?}");
    std::process::exit(if mismatches == 0 { 0 } else { 1 });
}

fn fmt(c: Option<usize>) -> String {
    c.map_or("inf".into(), |c| c.to_string())
}
