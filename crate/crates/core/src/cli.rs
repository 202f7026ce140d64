//! Batch front end: read matrices from files, rate, and report.

use std::path::PathBuf;

use clap::{Args, ValueEnum};

use crate::error::{Error, Result};
use crate::io::{parse_matrix, result_to_csv, result_to_json, result_to_text};
use crate::rating::{NormalizeMode, RatingProblem};
use crate::semifield::{Backend, Semifield, SemifieldTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

/// Command-line options for a rating run.
#[derive(Debug, Clone, PartialEq, Args)]
pub struct RunConfig {
    /// Comparison matrices (CSV or JSON). Several files rate them jointly.
    #[arg(value_name = "MATRIX")]
    pub inputs: Vec<PathBuf>,

    /// Comparison scale: mult (max-times) or add (max-plus).
    #[arg(long, default_value = "mult", value_parser = parse_scale)]
    pub scale: SemifieldTag,

    #[arg(long, default_value = "exact", value_parser = parse_backend)]
    pub backend: Backend,

    /// Constraint matrix: entry c_ij requires x_i >= c_ij x_j (0 = none).
    #[arg(long, value_name = "FILE")]
    pub constraints: Option<PathBuf>,

    /// sum, max or none.
    #[arg(long, default_value = "none", value_parser = parse_normalize)]
    pub normalize: NormalizeMode,

    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Comma-separated names of the alternatives.
    #[arg(long, value_delimiter = ',')]
    pub labels: Option<Vec<String>>,
}

fn parse_scale(s: &str) -> std::result::Result<SemifieldTag, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_backend(s: &str) -> std::result::Result<Backend, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_normalize(s: &str) -> std::result::Result<NormalizeMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

impl RunConfig {
    pub fn new(inputs: Vec<PathBuf>) -> Self {
        Self {
            inputs,
            scale: SemifieldTag::MaxTimes,
            backend: Backend::Exact,
            constraints: None,
            normalize: NormalizeMode::None,
            format: OutputFormat::Text,
            labels: None,
        }
    }
}

/// Rates the configured problem and renders the report.
pub fn run(config: &RunConfig) -> Result<String> {
    if config.inputs.is_empty() {
        return Err(Error::usage("at least one input matrix is required"));
    }
    crate::with_scalar!(config.scale, config.backend, S => run_with::<S>(config))
}

fn read_matrix<S: Semifield>(path: &PathBuf) -> Result<crate::linalg::Matrix<S>> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()).in_file(&name))?;
    parse_matrix(&text).map_err(|e| e.in_file(&name))
}

fn run_with<S: Semifield>(config: &RunConfig) -> Result<String> {
    let matrices = config
        .inputs
        .iter()
        .map(read_matrix::<S>)
        .collect::<Result<Vec<_>>>()?;
    let constraints = config.constraints.as_ref().map(read_matrix::<S>).transpose()?;
    let problem = RatingProblem::new(matrices, constraints, config.labels.clone())?;
    let result = problem.rate()?;
    match config.format {
        OutputFormat::Text => result_to_text(&result, config.normalize),
        OutputFormat::Csv => result_to_csv(&result, config.normalize),
        OutputFormat::Json => {
            if config.normalize == NormalizeMode::SumToOne && S::TAG != SemifieldTag::MaxTimes {
                return Err(Error::usage(
                    "sum-to-one normalization is only defined on the multiplicative scale",
                ));
            }
            let json = result_to_json(&result, config.normalize);
            Ok(serde_json::to_string_pretty(&json).expect("json values serialize") + "\n")
        }
    }
}
