#![allow(dead_code)]

use kmetric::{Graph, Weight, Weights};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonnegative rationals with small denominators; zeros and repeated values
/// show up often enough to exercise tie-breaking.
pub fn random_weights(rng: &mut impl Rng, n: usize) -> Weights {
    let values: Vec<Weight> = (0..n)
        .map(|_| Weight::new(rng.gen_range(0..=12), rng.gen_range(1..=6)))
        .collect();
    Weights::from_ratios(&values).unwrap()
}

pub fn random_integer_weights(rng: &mut impl Rng, n: usize, max: u64) -> Weights {
    let values: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=max)).collect();
    Weights::from_integers(&values)
}

/// Erdos-Renyi style graph; may be disconnected.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_subset(rng: &mut impl Rng, n: usize, p: f64) -> Vec<usize> {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}
