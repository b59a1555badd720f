//! Weighted landmark sets on a path, both models.
//!
//!     cargo run --example path_landmarks

use kmetric::path::{path_ap, path_nl, path_nl_structure_check};
use kmetric::weights::format_ratio;
use kmetric::Weights;

fn main() -> kmetric::Result<()> {
    let w = Weights::from_integers(&[5, 1, 1, 4, 2, 1, 3, 9, 1, 2]);
    let n = w.len();

    for k in 1..=4 {
        let ap = path_ap(n, k, &w)?;
        let nl = path_nl(n, k, &w)?;
        println!(
            "k={k}  ap: {:?} weight {}   nl: {:?} weight {}",
            ap.landmarks().unwrap(),
            format_ratio(&ap.weight().unwrap()),
            nl.landmarks().unwrap(),
            format_ratio(&nl.weight().unwrap()),
        );
    }

    // NL sets of exactly k vertices are classified by their holes
    for set in [
        vec![0, 1, 2, 3, 4, 5],
        vec![1, 2, 4, 5, 7, 8],
        vec![0, 2, 3, 5, 6, 9],
    ] {
        println!("{set:?}: {:?}", path_nl_structure_check(&set, 10, 6)?);
    }
    Ok(())
}
