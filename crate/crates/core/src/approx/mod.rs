//! Chebyshev-like distances and the two tropical minimization problems that
//! every rating procedure reduces to:
//!
//! * `minimize x⁻Ax` over regular `x`, solved by `λ` and `(λ⁻¹A)*`;
//! * the same under `Cx <= x`, solved by `θ` and `(θ⁻¹A ⊕ C)*`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::semifield::Semifield;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObjectiveKind {
    Unconstrained,
    Constrained,
}

/// One rooted trace `tr^(1/k)(A C^i1 ⋯ A C^ik)` contributing to `θ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaTerm<S> {
    pub exponents: Vec<u32>,
    pub value: S,
}

/// Minimum of the objective together with the matrix whose columns
/// generate every regular minimizer as `x = generator ⊗ u`.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSpace<S> {
    pub optimum: S,
    pub generator: Matrix<S>,
    pub kind: ObjectiveKind,
    /// Spectral radius of the objective matrix (equals `optimum` when unconstrained).
    pub spectral_radius: S,
    /// Every term of the `θ` expansion, empty when unconstrained.
    pub terms: Vec<ThetaTerm<S>>,
}

impl<S: Semifield> SolutionSpace<S> {
    /// `generator ⊗ u`.
    pub fn solution(&self, u: &Vector<S>) -> Result<Vector<S>> {
        if !u.is_regular() {
            return Err(Error::domain("the generating vector must be regular"));
        }
        self.generator.mul_vec(u)
    }

    /// `⊕` of the terms whose exponent tuple has length `k`, raised to `1/k`.
    pub fn terms_of_length(&self, k: usize) -> S {
        self.terms
            .iter()
            .filter(|t| t.exponents.len() == k)
            .fold(S::zero(), |acc, t| acc.add(&t.value))
    }
}

/// `ρ(x, y) = y⁻x ⊕ x⁻y`; the Chebyshev metric under max-plus.
pub fn vec_distance<S: Semifield>(x: &Vector<S>, y: &Vector<S>) -> Result<S> {
    if !x.is_regular() || !y.is_regular() {
        return Err(Error::domain("distance between vectors needs regular vectors"));
    }
    Ok(y.conj_dot(x)?.add(&x.conj_dot(y)?))
}

/// `ρ(A, B) = tr(B⁻A) ⊕ tr(A⁻B)` for matrices without zero entries.
pub fn mat_distance<S: Semifield>(a: &Matrix<S>, b: &Matrix<S>) -> Result<S> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(Error::Dimension(format!(
            "cannot compare {}x{} with {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if !a.is_regular() || !b.is_regular() {
        return Err(Error::domain("distance between matrices needs nonzero entries"));
    }
    let forward = b.conjugate_transpose()?.mul(a)?.trace()?;
    let backward = a.conjugate_transpose()?.mul(b)?.trace()?;
    Ok(forward.add(&backward))
}

/// Minimizes `x⁻Ax`: the minimum is the spectral radius `λ` and the
/// minimizers are `x = (λ⁻¹A)* u`.
pub fn minimize_rayleigh<S: Semifield>(a: &Matrix<S>) -> Result<SolutionSpace<S>> {
    let lambda = a.spectral_radius()?;
    if lambda.is_zero() {
        return Err(Error::domain(
            "the objective matrix has spectral radius zero (no cycles)",
        ));
    }
    let generator = a.scale(&lambda.inv()?).kleene_star()?;
    Ok(SolutionSpace {
        optimum: lambda.clone(),
        generator,
        kind: ObjectiveKind::Unconstrained,
        spectral_radius: lambda,
        terms: Vec::new(),
    })
}

/// Every tuple `(i1, ..., ik)` of nonnegative integers with
/// `1 <= i1 + ... + ik <= n - k`, in lexicographic order.
pub fn enumerate_exponents(n: usize, k: usize) -> Result<Vec<Vec<u32>>> {
    if k == 0 || k + 1 > n {
        return Err(Error::usage(format!(
            "tuple length {k} is outside 1..={} for order {n}",
            n.saturating_sub(1)
        )));
    }
    let budget = (n - k) as u32;
    let mut out = Vec::new();
    let mut tuple = Vec::with_capacity(k);
    fill(&mut tuple, k, budget, &mut out);
    Ok(out)
}

fn fill(tuple: &mut Vec<u32>, k: usize, budget: u32, out: &mut Vec<Vec<u32>>) {
    if tuple.len() == k {
        if tuple.iter().sum::<u32>() >= 1 {
            out.push(tuple.clone());
        }
        return;
    }
    for i in 0..=budget {
        tuple.push(i);
        fill(tuple, k, budget - i, out);
        tuple.pop();
    }
}

/// Minimizes `x⁻Ax` subject to `Cx <= x`. The minimum is
/// `θ = λ ⊕ ⊕_k ⊕_(i1..ik) tr^(1/k)(A C^i1 ⋯ A C^ik)` over the full index set
/// of [`enumerate_exponents`], and the minimizers are `x = (θ⁻¹A ⊕ C)* u`.
///
/// Fails with [`Error::Infeasible`] when `Tr(C) > 1`, reporting a cycle of `C`
/// whose product exceeds the unit.
pub fn minimize_constrained<S: Semifield>(a: &Matrix<S>, c: &Matrix<S>) -> Result<SolutionSpace<S>> {
    let n = a.rows();
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if (c.rows(), c.cols()) != (n, n) {
        return Err(Error::Dimension(format!(
            "constraint matrix is {}x{}, expected {n}x{n}",
            c.rows(),
            c.cols()
        )));
    }
    check_feasible(c)?;
    let lambda = a.spectral_radius()?;
    if lambda.is_zero() {
        return Err(Error::domain(
            "the objective matrix has spectral radius zero (no cycles)",
        ));
    }
    let terms = theta_terms(a, c)?;
    let theta = terms.iter().fold(lambda.clone(), |acc, t| acc.add(&t.value));
    let generator = a.scale(&theta.inv()?).add(c)?.kleene_star()?;
    Ok(SolutionSpace {
        optimum: theta,
        generator,
        kind: ObjectiveKind::Constrained,
        spectral_radius: lambda,
        terms,
    })
}

/// `Ok` when `Tr(C) <= 1`, otherwise the infeasibility error with a heavy cycle.
pub fn check_feasible<S: Semifield>(c: &Matrix<S>) -> Result<()> {
    if let Some((cycle, product)) = c.heavy_cycle()? {
        return Err(Error::Infeasible {
            value: c.trace_of_powers()?.to_string(),
            cycle,
            cycle_value: product.to_string(),
        });
    }
    Ok(())
}

/// All `θ` terms, walking exponent tuples depth first so that each prefix
/// product `A C^i1 ⋯ A C^ij` is computed once.
fn theta_terms<S: Semifield>(a: &Matrix<S>, c: &Matrix<S>) -> Result<Vec<ThetaTerm<S>>> {
    let n = a.rows();
    if n < 2 {
        return Ok(Vec::new());
    }
    // steps[i] = A C^i for 0 <= i <= n - 1
    let mut steps = Vec::with_capacity(n);
    let mut power = Matrix::identity(n)?;
    for _ in 0..n {
        steps.push(a.mul(&power)?);
        power = power.mul(c)?;
    }
    let mut terms = Vec::new();
    let mut tuple = Vec::new();
    for (i, step) in steps.iter().enumerate() {
        tuple.push(i as u32);
        descend(&steps, step, &mut tuple, i, n, &mut terms)?;
        tuple.pop();
    }
    Ok(terms)
}

fn descend<S: Semifield>(
    steps: &[Matrix<S>],
    prefix: &Matrix<S>,
    tuple: &mut Vec<u32>,
    used: usize,
    n: usize,
    terms: &mut Vec<ThetaTerm<S>>,
) -> Result<()> {
    let k = tuple.len();
    if used >= 1 && used + k <= n {
        terms.push(ThetaTerm {
            exponents: tuple.clone(),
            value: prefix.trace()?.nth_root(k as u32),
        });
    }
    // a longer tuple of length k + 1 allows a total of n - k - 1
    if k + 1 >= n {
        return Ok(());
    }
    let room = n - k - 1;
    if used > room {
        return Ok(());
    }
    for i in 0..=room - used {
        let next = prefix.mul(&steps[i])?;
        tuple.push(i as u32);
        descend(steps, &next, tuple, used + i, n, terms)?;
        tuple.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests;
