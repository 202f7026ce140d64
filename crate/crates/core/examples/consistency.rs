//! Reciprocity and transitivity diagnostics for comparison matrices.
//!
//! Run with `cargo run --example consistency`.

use tropical_rating::{check_consistency, samples, Matrix, RootedRational, Vector};

fn main() -> tropical_rating::Result<()> {
    let weights = Vector::<RootedRational>::parse(&["4", "2", "1", "1/2"])?;
    let consistent = Matrix::rank_one(&weights)?;
    let skewed = Matrix::<RootedRational>::parse(&[&["1", "2"], &["2", "1"]])?;

    for (name, a) in [
        ("rank one", consistent),
        ("sample", samples::four_alternatives()),
        ("not reciprocal", skewed),
    ] {
        let report = check_consistency(&a)?;
        println!("{name}:");
        println!("  reciprocal: {} (largest defect {})", report.is_reciprocal, report.max_reciprocity_defect);
        println!("  consistent: {} (largest defect {})", report.is_consistent, report.max_transitivity_defect);
        if let Some((i, k, j)) = report.worst_triple {
            println!("  worst triple: {} via {} to {}", i + 1, k + 1, j + 1);
        }
    }
    Ok(())
}
