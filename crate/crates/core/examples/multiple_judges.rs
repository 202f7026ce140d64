//! Combine two judges' comparison matrices into one rating.
//!
//! Run with `cargo run --example multiple_judges`.

use tropical_rating::rating::symmetrize_all;
use tropical_rating::{rate_multi, samples};

fn main() -> tropical_rating::Result<()> {
    let judges = samples::two_judges();
    for (k, judge) in judges.iter().enumerate() {
        println!("judge {}:\n{judge}", k + 1);
    }
    println!("symmetrized B = sum of A_i + A_i^-:\n{}", symmetrize_all(&judges)?);

    let result = rate_multi(&judges)?;
    println!("mu = {}", result.minimum);
    for candidate in &result.candidates {
        println!("scores: {}", candidate.scores);
        println!("ranking: {}", candidate.ranking.display(&result.labels));
        for (k, distance) in candidate.distances.iter().enumerate() {
            println!("  distance to judge {}: {distance}", k + 1);
        }
    }
    Ok(())
}
