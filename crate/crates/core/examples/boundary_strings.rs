//! Window rules and the boundary strings the wheel DP runs over.
//!
//!     cargo run --example boundary_strings

use kmetric::wheel::strings::parse_bits;
use kmetric::wheel::{derive_boundary_sets, invalid_window, Variant};

fn main() -> kmetric::Result<()> {
    for variant in Variant::ALL {
        let sets = derive_boundary_sets(variant);
        let strings: Vec<String> = sets.string_texts().into_iter().collect();
        println!(
            "{variant} (q = {}): {} strings, {} closing pairs",
            sets.q,
            strings.len(),
            sets.pairs.len()
        );
        println!("  S = {{{}}}", strings.join(","));
    }

    let pairs: Vec<String> = derive_boundary_sets(Variant::NlK34)
        .pair_texts()
        .into_iter()
        .map(|(b, g)| format!("({b},{g})"))
        .collect();
    println!("NL k=3,4 pairs: {}", pairs.join(" "));

    for text in ["01010", "00011", "10110"] {
        let bad = invalid_window(Variant::ApK2, &parse_bits(text)?)?;
        println!(
            "AP k=2 window {text}: {}",
            if bad { "invalid" } else { "good" }
        );
    }
    Ok(())
}
