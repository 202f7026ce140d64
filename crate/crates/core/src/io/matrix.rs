use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::problem::Cell;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::semifield::{Backend, Semifield, SemifieldTag};

/// JSON form of a matrix: `{"tag", "rows", "cols", "entries"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<SemifieldTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cols: Option<usize>,
    pub entries: Vec<Vec<Cell>>,
}

/// CSV or JSON, told apart by a leading `{`.
pub fn parse_matrix<S: Semifield>(text: &str) -> Result<Matrix<S>> {
    if text.trim_start().starts_with('{') {
        matrix_from_json(text)
    } else {
        parse_matrix_csv(text)
    }
}

/// One row per line, comma separated. Blank lines and lines starting with
/// `#` are skipped; errors carry the 1-based line number.
pub fn parse_matrix_csv<S: Semifield>(text: &str) -> Result<Matrix<S>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut rows: Vec<Vec<S>> = Vec::new();
    let mut width = None;
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            Error::parse(line, e.to_string())
        })?;
        let line = record.position().map_or(rows.len() + 1, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let row = record
            .iter()
            .enumerate()
            .map(|(col, cell)| {
                S::parse(cell).map_err(|e| Error::parse(line, format!("column {}: {e}", col + 1)))
            })
            .collect::<Result<Vec<S>>>()?;
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(Error::parse(
                    line,
                    format!("ragged row: {} entries, expected {w}", row.len()),
                ))
            }
            _ => {}
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::parse(1, "no matrix rows found"));
    }
    Matrix::from_rows(rows)
}

pub fn matrix_from_json<S: Semifield>(text: &str) -> Result<Matrix<S>> {
    let doc: MatrixDoc = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    doc.to_matrix()
}

impl MatrixDoc {
    pub fn to_matrix<S: Semifield>(&self) -> Result<Matrix<S>> {
        if let Some(tag) = self.tag {
            if tag != S::TAG {
                return Err(Error::Mismatch(format!(
                    "matrix is tagged {tag} but the problem uses {}",
                    S::TAG
                )));
            }
        }
        let matrix = cells_to_matrix(&self.entries)?;
        if self.rows.is_some_and(|r| r != matrix.rows()) || self.cols.is_some_and(|c| c != matrix.cols()) {
            return Err(Error::Dimension(format!(
                "declared {}x{} but the entries form a {}x{} matrix",
                self.rows.unwrap_or(matrix.rows()),
                self.cols.unwrap_or(matrix.cols()),
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(matrix)
    }
}

pub(crate) fn cells_to_matrix<S: Semifield>(rows: &[Vec<Cell>]) -> Result<Matrix<S>> {
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, cell)| {
                    S::parse(&cell.text()).map_err(|e| {
                        Error::Usage(format!("entry ({}, {}): {e}", i + 1, j + 1))
                    })
                })
                .collect::<Result<Vec<S>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

pub fn matrix_to_csv<S: Semifield>(matrix: &Matrix<S>) -> String {
    let mut out = String::new();
    for row in matrix.to_rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Exact scalars become strings; float scalars become numbers, except the
/// max-plus zero which is the string `"-inf"`.
pub fn matrix_to_json<S: Semifield>(matrix: &Matrix<S>) -> Value {
    let entries: Vec<Value> = matrix
        .to_rows()
        .iter()
        .map(|row| Value::Array(row.iter().map(super::scalar_to_json).collect()))
        .collect();
    serde_json::json!({
        "tag": S::TAG,
        "backend": if S::BACKEND == Backend::Exact { "exact" } else { "float" },
        "rows": matrix.rows(),
        "cols": matrix.cols(),
        "entries": entries,
    })
}
