//! The same problem in max-plus form, with entries given as base-2 logarithms.
//!
//! Run with `cargo run --example max_plus`.

use tropical_rating::io::parse_matrix;
use tropical_rating::{rate_constrained, rate_single, MaxPlusExact};

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/");

fn main() -> tropical_rating::Result<()> {
    let read = |name: &str| std::fs::read_to_string(format!("{DATA}{name}")).expect("example data");
    let a = parse_matrix::<MaxPlusExact>(&read("four_alternatives_log2.csv"))?;
    let c = parse_matrix::<MaxPlusExact>(&read("tied_tail_log2.csv"))?;
    println!("log2 comparisons:\n{a}");

    let single = rate_single(&a)?;
    println!("mu = {} (log2 of the max-times minimum)", single.minimum);
    for candidate in &single.candidates {
        println!("log2 scores: {}", candidate.scores);
    }

    let constrained = rate_constrained(&a, &c)?;
    println!("theta = {}", constrained.minimum);
    for candidate in &constrained.candidates {
        println!("log2 scores: {}", candidate.scores);
    }
    Ok(())
}
