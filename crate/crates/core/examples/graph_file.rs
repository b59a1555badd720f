//! Reading an edge list and a weight file, then solving with the oracle.
//!
//!     cargo run --example graph_file

use kmetric::graph::{parse_graph, parse_weights};
use kmetric::weights::format_ratio;
use kmetric::{Model, Oracle, ProblemSpec};

const PETERSEN: &str = "\
# outer 5-cycle, inner pentagram, spokes
10 15
0 1
1 2
2 3
3 4
4 0
5 7
7 9
9 6
6 8
8 5
0 5
1 6
2 7
3 8
4 9
";

fn main() -> kmetric::Result<()> {
    let g = parse_graph(PETERSEN)?;
    let weights = parse_weights("1\n1\n1\n1\n1\n0.5\n0.5\n2\n2\n2\n", g.order())?;
    let oracle = Oracle::default();
    for model in Model::BOTH {
        for k in 1..=3 {
            let spec = ProblemSpec::new(model, k)?.with_weights(weights.clone());
            let sol = oracle.min_weight(&g, &spec)?;
            match sol.landmarks() {
                Some(l) => println!(
                    "{model} k={k}: {l:?} weight {}",
                    format_ratio(&sol.weight().unwrap())
                ),
                None => println!("{model} k={k}: infeasible"),
            }
        }
    }
    Ok(())
}
