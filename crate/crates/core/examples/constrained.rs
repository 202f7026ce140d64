//! Rate under the side condition that the last three alternatives tie.
//!
//! Run with `cargo run --example constrained`.

use tropical_rating::{rate_constrained, samples};

fn main() -> tropical_rating::Result<()> {
    let a = samples::four_alternatives();
    let c = samples::tied_tail_constraints();
    println!("constraints Cx <= x with C:\n{c}");

    let result = rate_constrained(&a, &c)?;
    let space = &result.solution_space;
    println!("spectral radius lambda = {}", space.spectral_radius);
    for term in &space.terms {
        println!("  term {:?}: {}", term.exponents, term.value);
    }
    println!("theta = {}", result.minimum);
    println!("generator (theta^-1 B + C)*:\n{}", space.generator);
    for candidate in &result.candidates {
        let flag = if candidate.uniform { " (ranks all alternatives equally)" } else { "" };
        println!("scores: {}{flag}", candidate.scores);
        let x = &candidate.scores;
        assert!(c.mul_vec(x)?.leq(x)?);
        println!("  Cx <= x holds, objective = {}", a.rayleigh(x)?);
    }
    Ok(())
}
