use std::fmt::Write as _;

use serde_json::{json, Value};

use super::matrix::matrix_to_json;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::rating::{Candidate, ConsistencyReport, NormalizeMode, RatingMode, RatingResult};
use crate::semifield::{Backend, Semifield, SemifieldTag};

/// Exact scalars as strings (`"1/6"`, `"12^(1/2)"`), floats as numbers,
/// the float max-plus zero as `"-inf"`.
pub fn scalar_to_json<S: Semifield>(x: &S) -> Value {
    if S::BACKEND == Backend::Exact {
        return Value::String(x.to_string());
    }
    let v = x.to_f64();
    serde_json::Number::from_f64(v).map_or_else(|| Value::String(x.to_string()), Value::Number)
}

fn vector_to_json<S: Semifield>(x: &Vector<S>) -> Value {
    Value::Array(x.entries().iter().map(scalar_to_json).collect())
}

fn report_to_json<S: Semifield>(report: &ConsistencyReport<S>) -> Value {
    json!({
        "is_reciprocal": report.is_reciprocal,
        "max_reciprocity_defect": scalar_to_json(&report.max_reciprocity_defect),
        "is_consistent": report.is_consistent,
        "max_transitivity_defect": scalar_to_json(&report.max_transitivity_defect),
        "worst_triple": report.worst_triple.map(|(i, k, j)| vec![i, k, j]),
    })
}

fn candidate_to_json<S: Semifield>(c: &Candidate<S>, labels: &[String], mode: NormalizeMode) -> Value {
    let tiers: Vec<Vec<&str>> = c
        .ranking
        .tiers
        .iter()
        .map(|tier| tier.iter().map(|&i| labels[i].as_str()).collect())
        .collect();
    let normalized = match c.normalized(mode) {
        Ok(x) => vector_to_json(&x),
        Err(_) => Value::Null,
    };
    json!({
        "columns": c.columns,
        "raw": vector_to_json(&c.column),
        "scores": vector_to_json(&c.scores),
        "weights": c.weights.as_ref().map(vector_to_json),
        "approximate_weights": c.approximate_weights,
        "normalized": normalized,
        "uniform": c.uniform,
        "ranking": tiers,
        "ranking_text": c.ranking.display(labels),
        "distances": c.distances.iter().map(scalar_to_json).collect::<Vec<_>>(),
    })
}

/// The JSON result schema shared by the command line and the HTTP service.
pub fn result_to_json<S: Semifield>(result: &RatingResult<S>, mode: NormalizeMode) -> Value {
    let space = &result.solution_space;
    let terms: Vec<Value> = space
        .terms
        .iter()
        .map(|t| json!({ "exponents": t.exponents, "value": scalar_to_json(&t.value) }))
        .collect();
    json!({
        "scale": S::TAG,
        "backend": S::BACKEND,
        "mode": result.mode,
        "minimum": scalar_to_json(&result.minimum),
        "spectral_radius": scalar_to_json(&space.spectral_radius),
        "labels": result.labels,
        "normalize": mode,
        "symmetrized": matrix_to_json(&result.symmetrized),
        "generator": matrix_to_json(&space.generator),
        "theta_terms": terms,
        "candidates": result
            .candidates
            .iter()
            .map(|c| candidate_to_json(c, &result.labels, mode))
            .collect::<Vec<_>>(),
        "diagnostics": {
            "reports": result.diagnostics.reports.iter().map(report_to_json).collect::<Vec<_>>(),
            "warnings": result.diagnostics.warnings,
        },
    })
}

fn check_mode<S: Semifield>(mode: NormalizeMode) -> Result<()> {
    if mode == NormalizeMode::SumToOne && S::TAG != SemifieldTag::MaxTimes {
        return Err(Error::usage(
            "sum-to-one normalization is only defined on the multiplicative scale",
        ));
    }
    Ok(())
}

fn show_vector<S: Semifield>(c: &Candidate<S>, mode: NormalizeMode) -> String {
    match c.normalized(mode) {
        Ok(x) => x.to_string(),
        Err(_) => {
            let approx: Vec<String> = c
                .approximate_weights
                .iter()
                .flatten()
                .map(|w| format!("{w:.6}"))
                .collect();
            format!("~({})", approx.join(", "))
        }
    }
}

/// Human-readable report.
pub fn result_to_text<S: Semifield>(result: &RatingResult<S>, mode: NormalizeMode) -> Result<String> {
    check_mode::<S>(mode)?;
    let mut out = String::new();
    let (what, name) = match result.mode {
        RatingMode::Single => ("single matrix", "mu"),
        RatingMode::Multi => ("several matrices", "mu"),
        RatingMode::Constrained => ("constrained", "theta"),
    };
    let _ = writeln!(out, "problem: {what}, {} alternatives, {} / {}", result.labels.len(), S::TAG, S::BACKEND);
    let _ = writeln!(out, "minimum ({name}): {}", result.minimum);
    if result.mode == RatingMode::Constrained {
        let _ = writeln!(out, "spectral radius: {}", result.solution_space.spectral_radius);
    }
    let label = match mode {
        NormalizeMode::None => "scores",
        NormalizeMode::MaxToOne => "scores (max = 1)",
        NormalizeMode::SumToOne => "weights (sum = 1)",
    };
    for (k, c) in result.candidates.iter().enumerate() {
        let flag = if c.uniform { " [uniform: ranks all alternatives equally]" } else { "" };
        let _ = writeln!(out, "candidate {}{flag}", k + 1);
        let _ = writeln!(out, "  {label}: {}", show_vector(c, mode));
        let _ = writeln!(out, "  ranking: {}", c.ranking.display(&result.labels));
    }
    for (k, report) in result.diagnostics.reports.iter().enumerate() {
        let _ = writeln!(
            out,
            "matrix {}: reciprocal {} (defect {}), consistent {} (defect {})",
            k + 1,
            yes_no(report.is_reciprocal),
            report.max_reciprocity_defect,
            yes_no(report.is_consistent),
            report.max_transitivity_defect
        );
        if let Some((i, k, j)) = report.worst_triple {
            let l = &result.labels;
            let _ = writeln!(out, "  worst triple: {} via {} to {}", l[i], l[k], l[j]);
        }
    }
    for w in &result.diagnostics.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    Ok(out)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// One row per candidate: `candidate,uniform,<label>...`.
pub fn result_to_csv<S: Semifield>(result: &RatingResult<S>, mode: NormalizeMode) -> Result<String> {
    check_mode::<S>(mode)?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["candidate".to_string(), "uniform".to_string()];
    header.extend(result.labels.iter().cloned());
    let csv_err = |e: csv::Error| Error::Usage(e.to_string());
    writer.write_record(&header).map_err(csv_err)?;
    for (k, c) in result.candidates.iter().enumerate() {
        let mut row = vec![(k + 1).to_string(), c.uniform.to_string()];
        match c.normalized(mode) {
            Ok(x) => row.extend(x.entries().iter().map(|v| v.to_string())),
            Err(_) => row.extend(c.approximate_weights.iter().flatten().map(|w| w.to_string())),
        }
        writer.write_record(&row).map_err(csv_err)?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
