//! Floating point backend on a larger random matrix, comparing the trace
//! formula with Karp's algorithm for the spectral radius.
//!
//! Run with `cargo run --release --example float_backend`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropical_rating::{rate_single, Matrix, MaxTimesFloat, Semifield};

fn main() -> tropical_rating::Result<()> {
    let n = 30;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut a = Matrix::<MaxTimesFloat>::identity(n)?;
    for i in 0..n {
        for j in i + 1..n {
            let x = 9f64.powf(rng.gen_range(-1.0..=1.0));
            a.set(i, j, MaxTimesFloat::new(x)?);
            a.set(j, i, MaxTimesFloat::new(1.0 / x)?);
        }
    }

    let started = Instant::now();
    let by_trace = a.spectral_radius()?;
    let trace_time = started.elapsed();
    let started = Instant::now();
    let by_karp = a.spectral_radius_karp()?;
    let karp_time = started.elapsed();
    println!("trace formula: {by_trace} in {trace_time:?}");
    println!("karp:          {by_karp} in {karp_time:?}");
    println!("agree within tolerance: {}", by_trace.tol_eq(&by_karp));

    let result = rate_single(&a)?;
    println!("mu = {}, {} candidate(s)", result.minimum, result.candidates.len());
    if let Some(best) = result.candidates.first() {
        println!("top of ranking: {}", best.ranking.display(&result.labels).split(" > ").next().unwrap_or(""));
    }
    Ok(())
}
