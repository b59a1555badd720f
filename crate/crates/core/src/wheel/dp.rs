//! Linear-time DP over cyclic indicator strings of the wheel's cycle.
//!
//! For every start string `beta` the table `F[gamma]` holds the cheapest
//! linear string on `c_0..c_{i-1}` that begins with `beta`, ends with
//! `gamma` and has no invalid window. Closing the cycle is a lookup in the
//! boundary pair set. Only the choice bits of the winning `beta` are kept.

use crate::error::{invalid, Result};
use crate::landmark::{Method, Solution};
use crate::weights::Weights;

use super::strings::{derive_boundary_sets, Variant};

/// (scaled weight, landmark count); compared lexicographically.
type Cost = (i128, u32);

const NONE: u8 = u8::MAX;

/// Minimum-weight set of cycle vertices whose cyclic indicator string has no
/// invalid window. `weights` covers all `n` vertices; the hub (`n - 1`) is
/// ignored.
pub fn wheel_dp(n: usize, variant: Variant, weights: &Weights) -> Result<Solution> {
    if n < 9 {
        return Err(invalid(format!("the wheel DP needs n >= 9, got {n}")));
    }
    if weights.len() != n {
        return Err(invalid(format!(
            "expected {n} weights, got {}",
            weights.len()
        )));
    }
    let m = n - 1;
    let scaled = weights.scaled_values();
    let sets = derive_boundary_sets(variant);
    let q = sets.q;
    let b = q - 1;
    let low = (1u32 << b) - 1;
    let strings = &sets.strings;
    let s = strings.len();

    let mut index = vec![usize::MAX; 1 << b];
    for (i, &g) in strings.iter().enumerate() {
        index[g as usize] = i;
    }
    let mut closes = vec![false; s * s];
    for &(beta, gamma) in &sets.pairs {
        closes[index[beta as usize] * s + index[gamma as usize]] = true;
    }
    // For each end string: the (old bit, predecessor) pairs that reach it
    // through a good window.
    let preds: Vec<Vec<(u8, usize)>> = strings
        .iter()
        .map(|&g| {
            (0..2u32)
                .filter_map(|x| {
                    let window = x | (g << 1);
                    (!variant.is_invalid_mask(window))
                        .then(|| (x as u8, index[(window & low) as usize]))
                })
                .collect()
        })
        .collect();

    let steps = m - b;
    let mut best: Option<(Cost, usize, usize, Vec<u8>)> = None;
    let mut table: Vec<Option<Cost>> = vec![None; s];
    let mut next: Vec<Option<Cost>> = vec![None; s];

    for (bi, &beta) in strings.iter().enumerate() {
        let mut choices = vec![NONE; steps * s];
        table.fill(None);
        let start: i128 = (0..b)
            .filter(|&j| beta >> j & 1 == 1)
            .map(|j| scaled[j])
            .sum();
        table[bi] = Some((start, beta.count_ones()));

        for pos in b..m {
            let row = &mut choices[(pos - b) * s..(pos - b + 1) * s];
            for (gi, &g) in strings.iter().enumerate() {
                let mut cell: Option<Cost> = None;
                for &(x, pi) in &preds[gi] {
                    if let Some(prev) = table[pi] {
                        if cell.is_none_or(|c| prev < c) {
                            cell = Some(prev);
                            row[gi] = x;
                        }
                    }
                }
                next[gi] = cell.map(|(w, c)| {
                    if g >> (b - 1) & 1 == 1 {
                        (w + scaled[pos], c + 1)
                    } else {
                        (w, c)
                    }
                });
            }
            std::mem::swap(&mut table, &mut next);
        }

        let run_best = (0..s)
            .filter(|&gi| closes[bi * s + gi])
            .filter_map(|gi| table[gi].map(|c| (c, gi)))
            .min();
        if let Some((cost, gi)) = run_best {
            if best.as_ref().is_none_or(|(bc, ..)| cost < *bc) {
                best = Some((cost, bi, gi, choices));
            }
        }
    }

    let Some(((weight, _), bi, mut gi, choices)) = best else {
        return Ok(Solution::infeasible(Method::Dp));
    };
    let mut bits = vec![false; m];
    for pos in (b..m).rev() {
        let g = strings[gi];
        bits[pos] = g >> (b - 1) & 1 == 1;
        let x = u32::from(choices[(pos - b) * s + gi]);
        gi = index[((x | (g << 1)) & low) as usize];
    }
    debug_assert_eq!(gi, bi);
    let beta = strings[bi];
    for (j, bit) in bits.iter_mut().enumerate().take(b) {
        *bit = beta >> j & 1 == 1;
    }
    let landmarks: Vec<usize> = (0..m).filter(|&i| bits[i]).collect();
    Ok(Solution::feasible(
        landmarks,
        weights.unscale(weight),
        Method::Dp,
    ))
}
