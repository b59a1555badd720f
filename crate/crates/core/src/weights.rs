//! Exact nonnegative vertex weights.
//!
//! Weights are rationals. Internally every weight is rescaled to a common
//! denominator so that solvers add and compare plain `i128` values; results
//! are turned back into reduced rationals only when reported.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{invalid, Result};

/// An exact rational weight.
pub type Weight = Ratio<i128>;

/// Vertex weights over a common denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weights {
    scaled: Vec<i128>,
    denom: i128,
}

impl Weights {
    /// All weights equal to one (the unweighted problem).
    pub fn unit(n: usize) -> Self {
        Weights {
            scaled: vec![1; n],
            denom: 1,
        }
    }

    pub fn from_integers(values: &[u64]) -> Self {
        Weights {
            scaled: values.iter().map(|&v| v as i128).collect(),
            denom: 1,
        }
    }

    /// Builds weights from exact rationals. Fails on negative values or if the
    /// common denominator does not fit in 128 bits.
    pub fn from_ratios(values: &[Weight]) -> Result<Self> {
        let mut denom: i128 = 1;
        for (v, w) in values.iter().enumerate() {
            if *w < Weight::zero() {
                return Err(invalid(format!("weight of vertex {v} is negative")));
            }
            let d = *w.denom();
            let g = denom.gcd(&d);
            denom = (denom / g)
                .checked_mul(d)
                .ok_or_else(|| invalid("common weight denominator overflows"))?;
        }
        let scaled = values
            .iter()
            .map(|w| {
                w.numer()
                    .checked_mul(denom / w.denom())
                    .ok_or_else(|| invalid("scaled weight overflows"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Weights { scaled, denom })
    }

    pub fn len(&self) -> usize {
        self.scaled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scaled.is_empty()
    }

    /// The weight of vertex `v`.
    pub fn get(&self, v: usize) -> Weight {
        Weight::new(self.scaled[v], self.denom)
    }

    /// The weight of vertex `v` multiplied by the common denominator.
    #[inline]
    pub fn scaled(&self, v: usize) -> i128 {
        self.scaled[v]
    }

    pub fn scaled_values(&self) -> &[i128] {
        &self.scaled
    }

    pub fn denominator(&self) -> i128 {
        self.denom
    }

    pub fn scaled_sum<I: IntoIterator<Item = usize>>(&self, vertices: I) -> i128 {
        vertices.into_iter().map(|v| self.scaled[v]).sum()
    }

    /// Converts a scaled total back to an exact rational.
    pub fn unscale(&self, scaled: i128) -> Weight {
        Weight::new(scaled, self.denom)
    }

    pub fn weight_of(&self, vertices: &[usize]) -> Weight {
        self.unscale(self.scaled_sum(vertices.iter().copied()))
    }

    /// Same weights multiplied by a positive rational factor.
    pub fn scaled_by(&self, factor: Weight) -> Result<Self> {
        if factor <= Weight::zero() {
            return Err(invalid("scaling factor must be positive"));
        }
        let values: Vec<Weight> = (0..self.len()).map(|v| self.get(v) * factor).collect();
        Weights::from_ratios(&values)
    }

    /// Lossy conversion, for display only.
    pub fn approx(&self, v: usize) -> f64 {
        self.get(v).to_f64().unwrap_or(f64::NAN)
    }
}

/// Parses a nonnegative decimal such as `3`, `0.5` or `2.50` into an exact
/// rational by power-of-ten scaling.
pub fn parse_decimal(text: &str) -> std::result::Result<Weight, String> {
    let text = text.trim();
    let (int_part, frac_part) = match text.split_once('.') {
        Some((i, f)) => (i, f),
        None => (text, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("`{text}` is not a nonnegative decimal"));
    }
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return Err(format!("`{text}` is not a nonnegative decimal"));
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: i128 = if digits.is_empty() {
        0
    } else {
        digits
            .parse()
            .map_err(|_| format!("`{text}` has too many digits"))?
    };
    let denom = 10i128
        .checked_pow(frac_part.len() as u32)
        .ok_or_else(|| format!("`{text}` has too many fractional digits"))?;
    Ok(Weight::new(numer, denom))
}

/// Formats a weight as `p/q` (always with an explicit denominator).
pub fn format_ratio(w: &Weight) -> String {
    format!("{}/{}", w.numer(), w.denom())
}
