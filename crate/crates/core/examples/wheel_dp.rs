//! The cyclic-string DP on large wheels.
//!
//!     cargo run --release --example wheel_dp -- 200000

use std::time::Instant;

use kmetric::wheel::{wheel_dp, wheel_solve, Variant};
use kmetric::{Model, ProblemSpec, Weights};
use rand::{Rng, SeedableRng};

fn main() -> kmetric::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(100_000);

    println!("unit weights, n = 9..=20:");
    for (model, k) in [
        (Model::AllPairs, 2),
        (Model::AllPairs, 3),
        (Model::NonLandmarks, 2),
        (Model::NonLandmarks, 3),
    ] {
        let row: Vec<String> = (9..=20)
            .map(|n| {
                let sol = wheel_solve(n, &ProblemSpec::new(model, k).unwrap()).unwrap();
                sol.cardinality().unwrap().to_string()
            })
            .collect();
        println!("  {model} k={k}: {}", row.join(" "));
    }

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let values: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=1000)).collect();
    let w = Weights::from_integers(&values);
    println!("random weights, n = {n}:");
    for variant in Variant::ALL {
        let start = Instant::now();
        let sol = wheel_dp(n, variant, &w)?;
        println!(
            "  {variant:<9} {} landmarks, weight {}, {:.1?}",
            sol.cardinality().unwrap(),
            sol.weight().unwrap(),
            start.elapsed()
        );
    }
    Ok(())
}
