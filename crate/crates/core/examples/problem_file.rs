//! Load a JSON problem description, as accepted by the HTTP service, and
//! rate matrix files through the same entry point the `troprate` binary uses.
//!
//! Run with `cargo run --example problem_file`.

use std::path::PathBuf;

use tropical_rating::cli::{run, OutputFormat, RunConfig};
use tropical_rating::io::{result_to_text, ProblemDoc};
use tropical_rating::{NormalizeMode, RootedRational};

fn main() -> tropical_rating::Result<()> {
    let data = PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data"));

    let text = std::fs::read_to_string(data.join("problem.json")).expect("example data");
    let doc = ProblemDoc::from_json(&text)?;
    let result = doc.to_problem::<RootedRational>()?.rate()?;
    print!("{}", result_to_text(&result, NormalizeMode::SumToOne)?);

    let mut csv = RunConfig::new(vec![data.join("four_alternatives.csv")]);
    csv.constraints = Some(data.join("tied_tail.csv"));
    csv.normalize = NormalizeMode::SumToOne;
    csv.format = OutputFormat::Csv;
    print!("\n{}", run(&csv)?);
    Ok(())
}
