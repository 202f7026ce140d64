//! Rating alternatives from pairwise comparison matrices.
//!
//! A comparison matrix `A` is approximated by a reciprocal rank-one matrix
//! `x x⁻` in the log-Chebyshev sense; the score vectors `x` are the
//! minimizers of `x⁻Bx` with `B = A ⊕ A⁻`, optionally under `Cx <= x`.

mod consistency;
mod ranking;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::approx::{mat_distance, minimize_constrained, minimize_rayleigh, SolutionSpace};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::semifield::{Semifield, SemifieldTag};

pub use consistency::{check_consistency, ConsistencyReport};
pub use ranking::Ranking;

/// Which rating procedure produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RatingMode {
    Single,
    Multi,
    Constrained,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalizeMode {
    /// Raw generator columns.
    #[default]
    None,
    /// Entries add up to one in ordinary arithmetic (max-times only).
    SumToOne,
    /// The largest entry equals the semifield unit.
    MaxToOne,
}

impl std::str::FromStr for NormalizeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(NormalizeMode::None),
            "sum" => Ok(NormalizeMode::SumToOne),
            "max" => Ok(NormalizeMode::MaxToOne),
            other => Err(Error::usage(format!(
                "unknown normalization '{other}' (expected sum, max or none)"
            ))),
        }
    }
}

/// One or more comparison matrices over the same alternatives, with
/// optional constraints `c_ij` meaning `x_j ⊗ c_ij <= x_i` (zero: no constraint).
#[derive(Debug, Clone, PartialEq)]
pub struct RatingProblem<S> {
    matrices: Vec<Matrix<S>>,
    constraints: Option<Matrix<S>>,
    labels: Vec<String>,
}

impl<S: Semifield> RatingProblem<S> {
    /// Validates shapes; labels default to `alt1, ..., altn`.
    pub fn new(
        matrices: Vec<Matrix<S>>,
        constraints: Option<Matrix<S>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let first = matrices
            .first()
            .ok_or_else(|| Error::usage("a rating problem needs at least one matrix"))?;
        let n = first.rows();
        for (k, a) in matrices.iter().enumerate() {
            if !a.is_square() {
                return Err(Error::NotSquare {
                    rows: a.rows(),
                    cols: a.cols(),
                });
            }
            if a.rows() != n {
                return Err(Error::Dimension(format!(
                    "matrix {} has order {}, matrix 1 has order {n}",
                    k + 1,
                    a.rows()
                )));
            }
        }
        if let Some(c) = &constraints {
            if matrices.len() > 1 {
                return Err(Error::usage(
                    "constraints combine with a single comparison matrix only; \
                     constrained problems over several matrices are not defined",
                ));
            }
            if (c.rows(), c.cols()) != (n, n) {
                return Err(Error::Dimension(format!(
                    "constraint matrix is {}x{}, expected {n}x{n}",
                    c.rows(),
                    c.cols()
                )));
            }
        }
        let labels = match labels {
            Some(labels) if labels.len() != n => {
                return Err(Error::usage(format!(
                    "{} labels given for {n} alternatives",
                    labels.len()
                )))
            }
            Some(labels) => labels,
            None => default_labels(n),
        };
        Ok(Self {
            matrices,
            constraints,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.matrices[0].rows()
    }

    pub fn scale(&self) -> SemifieldTag {
        S::TAG
    }

    pub fn matrices(&self) -> &[Matrix<S>] {
        &self.matrices
    }

    pub fn constraints(&self) -> Option<&Matrix<S>> {
        self.constraints.as_ref()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrices_mut(&mut self) -> &mut [Matrix<S>] {
        &mut self.matrices
    }

    /// Sets or clears the constraint matrix, with the same checks as [`RatingProblem::new`].
    pub fn set_constraints(&mut self, constraints: Option<Matrix<S>>) -> Result<()> {
        let checked = Self::new(self.matrices.clone(), constraints, Some(self.labels.clone()))?;
        self.constraints = checked.constraints;
        Ok(())
    }

    pub fn mode(&self) -> RatingMode {
        match (&self.constraints, self.matrices.len()) {
            (Some(_), _) => RatingMode::Constrained,
            (None, 1) => RatingMode::Single,
            (None, _) => RatingMode::Multi,
        }
    }

    /// Runs the procedure matching the problem's shape.
    pub fn rate(&self) -> Result<RatingResult<S>> {
        let mut result = match &self.constraints {
            Some(c) => rate_constrained(&self.matrices[0], c)?,
            None if self.matrices.len() == 1 => rate_single(&self.matrices[0])?,
            None => rate_multi(&self.matrices)?,
        };
        result.labels = self.labels.clone();
        Ok(result)
    }
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("alt{i}")).collect()
}

/// A collinearity class of minimizers.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate<S> {
    /// Indices of the generator columns in this class.
    pub columns: Vec<usize>,
    /// The first of those columns, unscaled.
    pub column: Vector<S>,
    /// Scaled so that the largest entry is the unit.
    pub scores: Vector<S>,
    /// Scaled to add up to one, when that sum is exactly representable.
    pub weights: Option<Vector<S>>,
    /// Sum-to-one weights in floating point (max-times only).
    pub approximate_weights: Option<Vec<f64>>,
    /// All entries equal: every alternative gets the same score.
    pub uniform: bool,
    pub ranking: Ranking,
    /// `ρ(A_i, x x⁻)` for each input matrix.
    pub distances: Vec<S>,
}

impl<S: Semifield> Candidate<S> {
    pub fn normalized(&self, mode: NormalizeMode) -> Result<Vector<S>> {
        match mode {
            NormalizeMode::None => Ok(self.column.clone()),
            NormalizeMode::MaxToOne => Ok(self.scores.clone()),
            NormalizeMode::SumToOne => normalize(&self.scores, NormalizeMode::SumToOne),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostics<S> {
    /// One report per input matrix.
    pub reports: Vec<ConsistencyReport<S>>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatingResult<S> {
    pub mode: RatingMode,
    /// `μ` (unconstrained) or `θ` (constrained).
    pub minimum: S,
    /// The symmetrized matrix `B`.
    pub symmetrized: Matrix<S>,
    pub candidates: Vec<Candidate<S>>,
    pub diagnostics: Diagnostics<S>,
    pub solution_space: SolutionSpace<S>,
    pub labels: Vec<String>,
}

impl<S: Semifield> RatingResult<S> {
    /// Candidates other than the uniform vector, or all of them if none is informative.
    pub fn informative(&self) -> Vec<&Candidate<S>> {
        let some: Vec<_> = self.candidates.iter().filter(|c| !c.uniform).collect();
        if some.is_empty() {
            self.candidates.iter().collect()
        } else {
            some
        }
    }
}

impl<S: Semifield> fmt::Display for RatingResult<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.mode {
            RatingMode::Constrained => "theta",
            _ => "mu",
        };
        writeln!(f, "minimum ({name}): {}", self.minimum)?;
        for (k, c) in self.candidates.iter().enumerate() {
            let flag = if c.uniform { "  [uniform]" } else { "" };
            writeln!(f, "candidate {}: {}{flag}", k + 1, c.scores)?;
            writeln!(f, "  ranking: {}", c.ranking.display(&self.labels))?;
        }
        for w in &self.diagnostics.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}

/// `B = A ⊕ A⁻`. `B` dominates its conjugate (`B⁻ <= B`) and equals `A`
/// when `A` is reciprocal.
pub fn symmetrize<S: Semifield>(a: &Matrix<S>) -> Result<Matrix<S>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if !a.is_regular() {
        return Err(Error::domain("comparison matrices must not contain zero entries"));
    }
    a.add(&a.conjugate_transpose()?)
}

/// `B = A_1 ⊕ A_1⁻ ⊕ ... ⊕ A_m ⊕ A_m⁻`.
pub fn symmetrize_all<S: Semifield>(matrices: &[Matrix<S>]) -> Result<Matrix<S>> {
    let (first, rest) = matrices
        .split_first()
        .ok_or_else(|| Error::usage("at least one matrix is needed"))?;
    rest.iter()
        .try_fold(symmetrize(first)?, |acc, a| acc.add(&symmetrize(a)?))
}

/// Minimizes `ρ(A, x x⁻)`: the minimum is the spectral radius `μ` of
/// `B = A ⊕ A⁻` and the solutions are `x = B_μ* u`.
pub fn rate_single<S: Semifield>(a: &Matrix<S>) -> Result<RatingResult<S>> {
    rate_multi(std::slice::from_ref(a))
}

/// Minimizes `max_i ρ(A_i, x x⁻)` through the combined `B` of all matrices.
pub fn rate_multi<S: Semifield>(matrices: &[Matrix<S>]) -> Result<RatingResult<S>> {
    let b = symmetrize_all(matrices)?;
    let space = minimize_rayleigh(&b)?;
    let mode = if matrices.len() == 1 {
        RatingMode::Single
    } else {
        RatingMode::Multi
    };
    finish(mode, matrices, b, space)
}

/// Minimizes `ρ(A, x x⁻)` subject to `Cx <= x`: the minimum is `θ` and the
/// solutions are `x = (θ⁻¹B ⊕ C)* u`.
pub fn rate_constrained<S: Semifield>(a: &Matrix<S>, c: &Matrix<S>) -> Result<RatingResult<S>> {
    let b = symmetrize(a)?;
    let space = minimize_constrained(&b, c)?;
    finish(RatingMode::Constrained, std::slice::from_ref(a), b, space)
}

fn finish<S: Semifield>(
    mode: RatingMode,
    matrices: &[Matrix<S>],
    b: Matrix<S>,
    space: SolutionSpace<S>,
) -> Result<RatingResult<S>> {
    let mut diagnostics = Diagnostics {
        reports: Vec::new(),
        warnings: Vec::new(),
    };
    for (k, a) in matrices.iter().enumerate() {
        let report = check_consistency(a)?;
        if !report.is_reciprocal {
            diagnostics.warnings.push(format!(
                "matrix {} is not reciprocal (defect {}); it enters the problem through A ⊕ A⁻",
                k + 1,
                report.max_reciprocity_defect
            ));
        }
        diagnostics.reports.push(report);
    }
    let mut candidates = extract_candidates(&space.generator)?;
    for candidate in &mut candidates {
        let xx = Matrix::rank_one(&candidate.scores)?;
        candidate.distances = matrices
            .iter()
            .map(|a| mat_distance(a, &xx))
            .collect::<Result<_>>()?;
    }
    let n = b.rows();
    Ok(RatingResult {
        mode,
        minimum: space.optimum.clone(),
        symmetrized: b,
        candidates,
        diagnostics,
        solution_space: space,
        labels: default_labels(n),
    })
}

/// Groups the nonzero columns of a generator into collinearity classes and
/// returns one representative per class.
pub fn extract_candidates<S: Semifield>(generator: &Matrix<S>) -> Result<Vec<Candidate<S>>> {
    let mut candidates: Vec<Candidate<S>> = Vec::new();
    for (j, column) in generator.columns().enumerate() {
        if column.entries().iter().all(S::is_zero) {
            continue;
        }
        if let Some(existing) = candidates
            .iter_mut()
            .find(|c| c.column.collinear_factor(&column).is_some())
        {
            existing.columns.push(j);
            continue;
        }
        let scores = normalize_max(&column)?;
        let weights = if S::TAG == SemifieldTag::MaxTimes && scores.is_regular() {
            normalize(&scores, NormalizeMode::SumToOne).ok()
        } else {
            None
        };
        let approximate_weights = (S::TAG == SemifieldTag::MaxTimes).then(|| {
            let total: f64 = scores.entries().iter().map(S::to_f64).sum();
            scores.entries().iter().map(|x| x.to_f64() / total).collect()
        });
        candidates.push(Candidate {
            columns: vec![j],
            uniform: scores.is_uniform(),
            ranking: Ranking::of(&scores),
            column,
            scores,
            weights,
            approximate_weights,
            distances: Vec::new(),
        });
    }
    Ok(candidates)
}

fn normalize_max<S: Semifield>(x: &Vector<S>) -> Result<Vector<S>> {
    let top = x.max_entry();
    if top.is_zero() {
        return Err(Error::domain("cannot normalize the zero vector"));
    }
    Ok(x.scale(&top.inv()?))
}

/// Rescales a regular score vector.
///
/// `SumToOne` divides by the ordinary arithmetic sum and is only defined on
/// the max-times scale; it fails with [`Error::Inexact`] when the entries are
/// irrational roots whose sum has no exact form.
pub fn normalize<S: Semifield>(x: &Vector<S>, mode: NormalizeMode) -> Result<Vector<S>> {
    if !x.is_regular() {
        return Err(Error::domain("score vectors must be regular"));
    }
    match mode {
        NormalizeMode::None => Ok(x.clone()),
        NormalizeMode::MaxToOne => normalize_max(x),
        NormalizeMode::SumToOne => {
            if S::TAG != SemifieldTag::MaxTimes {
                return Err(Error::usage(
                    "sum-to-one normalization is only defined on the multiplicative scale",
                ));
            }
            let total = S::arithmetic_sum(x.entries()).ok_or_else(|| {
                Error::Inexact(format!("the entries of {x} have no exact arithmetic sum"))
            })?;
            Ok(x.scale(&total.inv()?))
        }
    }
}
