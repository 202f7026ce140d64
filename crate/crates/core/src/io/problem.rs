use serde::{Deserialize, Serialize};

use super::matrix::{cells_to_matrix, MatrixDoc};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rating::RatingProblem;
use crate::semifield::{Backend, Semifield, SemifieldTag};

/// A matrix entry on the wire: a string such as `"1/6"` or `"12^(1/2)"`, or
/// a JSON number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Text(String),
    Number(serde_json::Number),
}

impl Cell {
    pub fn text(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Number(n) => n.to_string(),
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

/// A matrix inside a problem: either bare rows or a [`MatrixDoc`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixInput {
    Rows(Vec<Vec<Cell>>),
    Doc(MatrixDoc),
}

impl MatrixInput {
    pub fn to_matrix<S: Semifield>(&self) -> Result<Matrix<S>> {
        match self {
            MatrixInput::Rows(rows) => cells_to_matrix(rows),
            MatrixInput::Doc(doc) => doc.to_matrix(),
        }
    }

    pub fn rows_mut(&mut self) -> &mut Vec<Vec<Cell>> {
        match self {
            MatrixInput::Rows(rows) => rows,
            MatrixInput::Doc(doc) => &mut doc.entries,
        }
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        match self {
            MatrixInput::Rows(rows) => rows,
            MatrixInput::Doc(doc) => &doc.entries,
        }
    }
}

/// Problem JSON:
/// `{"scale", "backend", "labels", "matrices", "constraints", "auto_reciprocal"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemDoc {
    pub scale: SemifieldTag,
    #[serde(default)]
    pub backend: Backend,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub matrices: Vec<MatrixInput>,
    #[serde(default)]
    pub constraints: Option<MatrixInput>,
    /// Entry edits also set the mirrored entry to the inverse.
    #[serde(default)]
    pub auto_reciprocal: bool,
}

impl ProblemDoc {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
    }

    pub fn to_problem<S: Semifield>(&self) -> Result<RatingProblem<S>> {
        if (S::TAG, S::BACKEND) != (self.scale, self.backend) {
            return Err(Error::Mismatch(format!(
                "problem is {} / {}, requested {} / {}",
                self.scale,
                self.backend,
                S::TAG,
                S::BACKEND
            )));
        }
        let matrices = self
            .matrices
            .iter()
            .enumerate()
            .map(|(k, m)| {
                m.to_matrix()
                    .map_err(|e| Error::Usage(format!("matrix {}: {e}", k + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        let constraints = self
            .constraints
            .as_ref()
            .map(|c| c.to_matrix().map_err(|e| Error::Usage(format!("constraints: {e}"))))
            .transpose()?;
        RatingProblem::new(matrices, constraints, self.labels.clone())
    }

    /// Checks that every entry parses and shapes agree.
    pub fn validate(&self) -> Result<()> {
        crate::with_scalar!(self.scale, self.backend, S => self.to_problem::<S>().map(|_| ()))
    }

    pub fn order(&self) -> usize {
        self.matrices.first().map_or(0, |m| m.rows().len())
    }
}
