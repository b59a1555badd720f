//! Window rules on cyclic landmark indicator strings.
//!
//! For a wheel with `n >= 9`, a set of cycle vertices is a landmark set
//! exactly when its cyclic indicator string (bit `i` set iff cycle vertex `i`
//! is a landmark, least index first) contains no *invalid* window of `q`
//! consecutive bits. Windows are stored as masks with bit `j` holding
//! position `j`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{invalid, Result};
use crate::landmark::Model;

/// The four (model, k) combinations that admit a window rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// All pairs, k = 2, q = 5.
    ApK2,
    /// All pairs, k = 3, q = 5.
    ApK3,
    /// Non-landmarks, k = 2, q = 4.
    NlK2,
    /// Non-landmarks, k = 3 or 4, q = 3.
    NlK34,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::ApK2, Variant::ApK3, Variant::NlK2, Variant::NlK34];

    pub fn for_problem(model: Model, k: usize) -> Option<Variant> {
        match (model, k) {
            (Model::AllPairs, 2) => Some(Variant::ApK2),
            (Model::AllPairs, 3) => Some(Variant::ApK3),
            (Model::NonLandmarks, 2) => Some(Variant::NlK2),
            (Model::NonLandmarks, 3 | 4) => Some(Variant::NlK34),
            _ => None,
        }
    }

    pub fn model(self) -> Model {
        match self {
            Variant::ApK2 | Variant::ApK3 => Model::AllPairs,
            Variant::NlK2 | Variant::NlK34 => Model::NonLandmarks,
        }
    }

    /// Redundancy values covered by this rule.
    pub fn ks(self) -> &'static [usize] {
        match self {
            Variant::ApK2 | Variant::NlK2 => &[2],
            Variant::ApK3 => &[3],
            Variant::NlK34 => &[3, 4],
        }
    }

    /// Window length `q`.
    pub fn window(self) -> usize {
        match self {
            Variant::ApK2 | Variant::ApK3 => 5,
            Variant::NlK2 => 4,
            Variant::NlK34 => 3,
        }
    }

    /// Whether a `q`-bit window (as a mask) is forbidden.
    #[inline]
    pub fn is_invalid_mask(self, window: u32) -> bool {
        let q = self.window() as u32;
        let zeros = q - (window & ((1 << q) - 1)).count_ones();
        match self {
            // 01010 is the one allowed window with three zeros
            Variant::ApK2 => zeros >= 4 || (zeros == 3 && window != 0b01010),
            Variant::ApK3 | Variant::NlK34 => zeros >= 2,
            Variant::NlK2 => zeros >= 3,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::ApK2 => f.write_str("AP k=2"),
            Variant::ApK3 => f.write_str("AP k=3"),
            Variant::NlK2 => f.write_str("NL k=2"),
            Variant::NlK34 => f.write_str("NL k=3,4"),
        }
    }
}

pub fn bits_to_mask(bits: &[bool]) -> u32 {
    bits.iter()
        .enumerate()
        .fold(0, |m, (j, &b)| m | (u32::from(b) << j))
}

/// Renders `len` bits of a mask, least significant bit first.
pub fn mask_to_string(mask: u32, len: usize) -> String {
    (0..len)
        .map(|j| if mask >> j & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Parses a string of `0`/`1` characters.
pub fn parse_bits(text: &str) -> Result<Vec<bool>> {
    text.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(invalid(format!("`{other}` is not a bit"))),
        })
        .collect()
}

/// Whether a window of exactly `q` bits is forbidden for `variant`.
pub fn invalid_window(variant: Variant, bits: &[bool]) -> Result<bool> {
    if bits.len() != variant.window() {
        return Err(invalid(format!(
            "{variant} uses windows of {} bits, got {}",
            variant.window(),
            bits.len()
        )));
    }
    Ok(variant.is_invalid_mask(bits_to_mask(bits)))
}

/// Whether a cyclic string has no invalid window.
pub fn cyclic_string_is_valid(variant: Variant, bits: &[bool]) -> bool {
    let len = bits.len();
    let q = variant.window();
    len == 0
        || (0..len).all(|start| {
            let window = (0..q).fold(0u32, |m, j| m | (u32::from(bits[(start + j) % len]) << j));
            !variant.is_invalid_mask(window)
        })
}

/// Boundary strings for the cyclic DP.
///
/// `strings` holds every `(q-1)`-bit prefix or suffix of a good `q`-bit
/// window. `pairs` holds the ordered pairs `(beta, gamma)` of such strings for
/// which `gamma` followed by `beta` contains no invalid window, i.e. the
/// pairs that may start and end a cyclic string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryStringSets {
    pub q: usize,
    pub strings: Vec<u32>,
    pub pairs: Vec<(u32, u32)>,
}

impl BoundaryStringSets {
    pub fn string_texts(&self) -> BTreeSet<String> {
        self.strings
            .iter()
            .map(|&s| mask_to_string(s, self.q - 1))
            .collect()
    }

    pub fn pair_texts(&self) -> BTreeSet<(String, String)> {
        self.pairs
            .iter()
            .map(|&(b, g)| (mask_to_string(b, self.q - 1), mask_to_string(g, self.q - 1)))
            .collect()
    }
}

/// Enumerates all `2^q` windows and derives both boundary sets.
pub fn derive_boundary_sets(variant: Variant) -> BoundaryStringSets {
    let q = variant.window();
    let b = q - 1;
    let low = (1u32 << b) - 1;
    let mut strings = BTreeSet::new();
    for window in 0..1u32 << q {
        if !variant.is_invalid_mask(window) {
            strings.insert(window & low);
            strings.insert(window >> 1);
        }
    }
    let strings: Vec<u32> = strings.into_iter().collect();
    let mut pairs = Vec::new();
    for &beta in &strings {
        for &gamma in &strings {
            let joined = gamma | (beta << b);
            let closes = (0..b).all(|s| !variant.is_invalid_mask((joined >> s) & ((1 << q) - 1)));
            if closes {
                pairs.push((beta, gamma));
            }
        }
    }
    BoundaryStringSets { q, strings, pairs }
}
