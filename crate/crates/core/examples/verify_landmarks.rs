//! Checking a proposed set and reading the violated pair.
//!
//!     cargo run --example verify_landmarks

use kmetric::landmark::check_landmarks;
use kmetric::{sps, Graph, Model};

fn main() -> kmetric::Result<()> {
    let g = Graph::wheel(7)?;
    let d = g.distances();
    let hub = 6;

    for (set, model, k) in [
        (vec![0, 2, 4], Model::NonLandmarks, 2),
        (vec![0, 1, 2], Model::NonLandmarks, 2),
        (vec![0, 1, 2, 3, 4, 5], Model::AllPairs, 2),
    ] {
        let report = check_landmarks(&d, &set, model, k)?;
        match report.violation {
            None => println!("{set:?} {model} k={k}: feasible"),
            Some(v) => println!(
                "{set:?} {model} k={k}: pair ({}, {}) separated only by {:?}",
                v.u,
                v.v,
                sps(&d, &set, v.u, v.v)?
            ),
        }
    }
    println!(
        "hub vs c1 under the full cycle: {:?}",
        sps(&d, &[0, 1, 2, 3, 4, 5], hub, 1)?
    );
    Ok(())
}
