//! Rate four alternatives from one reciprocal comparison matrix.
//!
//! Run with `cargo run --example single_matrix`.

use tropical_rating::{normalize, rate_single, samples, NormalizeMode};

fn main() -> tropical_rating::Result<()> {
    let a = samples::four_alternatives();
    println!("comparisons:\n{a}");

    let result = rate_single(&a)?;
    println!("minimum approximation error mu = {}", result.minimum);
    println!("generator (mu^-1 A)*:\n{}", result.solution_space.generator);
    for candidate in &result.candidates {
        println!("scores (max = 1): {}", candidate.scores);
        println!("weights (sum = 1): {}", normalize(&candidate.scores, NormalizeMode::SumToOne)?);
        println!("ranking: {}", candidate.ranking.display(&result.labels));
    }
    Ok(())
}
