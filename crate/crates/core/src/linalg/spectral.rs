use super::{Matrix, Vector};
use crate::error::{Error, Result};
use crate::semifield::Semifield;

/// Eigenvectors of a matrix for its spectral radius.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenspace<S> {
    pub eigenvalue: S,
    /// `A_λ* = (λ⁻¹A)*`.
    pub star: Matrix<S>,
    /// Indices of the columns shared by `A_λ*` and `A_λ A_λ*`.
    pub columns: Vec<usize>,
    /// Those columns; every eigenvector is a `⊕`-combination of them.
    pub basis: Vec<Vector<S>>,
    /// Set when no column coincides (possible only for matrices with zeros).
    pub diagnostic: Option<String>,
}

impl<S: Semifield> Eigenspace<S> {
    /// `A_λ⁺` as a matrix, `None` when the basis is empty.
    pub fn generator(&self) -> Option<Matrix<S>> {
        let n = self.star.rows();
        let cols = self.basis.len();
        if cols == 0 {
            return None;
        }
        Matrix::from_fn(n, cols, |i, j| self.basis[j].get(i).clone()).ok()
    }
}

impl<S: Semifield> Matrix<S> {
    /// `tr A = a_11 ⊕ ... ⊕ a_nn`.
    pub fn trace(&self) -> Result<S> {
        let n = self.square_order()?;
        Ok((0..n).fold(S::zero(), |acc, i| acc.add(self.get(i, i))))
    }

    /// `Tr(A) = tr A ⊕ tr A² ⊕ ... ⊕ tr Aⁿ`.
    pub fn trace_of_powers(&self) -> Result<S> {
        let n = self.square_order()?;
        let mut power = self.clone();
        let mut acc = power.trace()?;
        for _ in 1..n {
            power = power.mul(self)?;
            acc = acc.add(&power.trace()?);
        }
        Ok(acc)
    }

    /// `A* = I ⊕ A ⊕ ... ⊕ A^(n-1)`, defined when `Tr(A) <= 1`.
    ///
    /// Computed as `(I ⊕ A)^m` for the first power of two `m >= n - 1`; the
    /// extra terms are dominated once every cycle weighs at most one.
    pub fn kleene_star(&self) -> Result<Self> {
        let n = self.square_order()?;
        let tr = self.trace_of_powers()?;
        if !tr.tol_leq(&S::one()) {
            return Err(Error::StarUndefined {
                value: tr.to_string(),
            });
        }
        if n == 1 {
            return Self::identity(1);
        }
        let mut acc = Self::identity(n)?.add(self)?;
        let mut reach = 1;
        while reach < n.saturating_sub(1) {
            acc = acc.mul(&acc)?;
            reach *= 2;
        }
        Ok(acc)
    }

    /// Spectral radius `λ = tr A ⊕ tr^(1/2)(A²) ⊕ ... ⊕ tr^(1/n)(Aⁿ)`,
    /// the maximum geometric cycle mean.
    pub fn spectral_radius(&self) -> Result<S> {
        let n = self.square_order()?;
        let mut power = self.clone();
        let mut lambda = power.trace()?;
        for k in 2..=n {
            power = power.mul(self)?;
            lambda = lambda.add(&power.trace()?.nth_root(k as u32));
        }
        Ok(lambda)
    }

    /// Eigenvectors for the spectral radius, from the columns that `A_λ*`
    /// and `A_λ A_λ*` have in common.
    pub fn eigenvectors(&self) -> Result<Eigenspace<S>> {
        let lambda = self.spectral_radius()?;
        if lambda.is_zero() {
            return Err(Error::domain("eigenvectors need a nonzero spectral radius"));
        }
        let scaled = self.scale(&lambda.inv()?);
        let star = scaled.kleene_star()?;
        let shifted = scaled.mul(&star)?;
        let (columns, basis): (Vec<usize>, Vec<Vector<S>>) = (0..star.cols())
            .filter_map(|j| {
                let column = star.column(j);
                column.tol_eq(&shifted.column(j)).then_some((j, column))
            })
            .unzip();
        let diagnostic = basis.is_empty().then(|| {
            "no column of A_λ* coincides with A_λ A_λ*; the matrix has zero entries \
             and its eigenvectors are not described by this construction"
                .to_string()
        });
        Ok(Eigenspace {
            eigenvalue: lambda,
            star,
            columns,
            basis,
            diagnostic,
        })
    }

    /// A simple cycle whose product exceeds the unit, with that product.
    /// `None` exactly when `Tr(A) <= 1`.
    pub fn heavy_cycle(&self) -> Result<Option<(Vec<usize>, S)>> {
        let n = self.square_order()?;
        let one = S::one();
        for start in 0..n {
            let mut best: Vec<S> = (0..n).map(|v| if v == start { S::one() } else { S::zero() }).collect();
            let mut preds: Vec<Vec<usize>> = Vec::with_capacity(n);
            for _ in 0..n {
                let mut next = vec![S::zero(); n];
                let mut pred = vec![usize::MAX; n];
                for v in 0..n {
                    for (u, from) in best.iter().enumerate() {
                        if from.is_zero() || self.get(u, v).is_zero() {
                            continue;
                        }
                        let w = from.mul(self.get(u, v));
                        if pred[v] == usize::MAX || next[v].compare(&w).is_lt() {
                            next[v] = w;
                            pred[v] = u;
                        }
                    }
                }
                preds.push(pred);
                best = next;
                if !best[start].tol_leq(&one) {
                    let walk = unwind(&preds, start);
                    return Ok(self.heavy_simple_cycle(&walk));
                }
            }
        }
        Ok(None)
    }

    /// Splits a closed walk into simple cycles and returns one heavier than the unit.
    fn heavy_simple_cycle(&self, walk: &[usize]) -> Option<(Vec<usize>, S)> {
        let mut stack: Vec<usize> = Vec::new();
        let mut found = Vec::new();
        for &v in walk {
            if let Some(pos) = stack.iter().position(|&u| u == v) {
                let cycle: Vec<usize> = stack.drain(pos..).collect();
                found.push(cycle);
            }
            stack.push(v);
        }
        found
            .into_iter()
            .map(|cycle| {
                let product = self.cycle_product(&cycle);
                (cycle, product)
            })
            .find(|(_, p)| !p.tol_leq(&S::one()))
    }

    fn cycle_product(&self, cycle: &[usize]) -> S {
        (0..cycle.len()).fold(S::one(), |acc, t| {
            acc.mul(self.get(cycle[t], cycle[(t + 1) % cycle.len()]))
        })
    }
}

/// Closed walk `start -> ... -> start` (start repeated at the end).
fn unwind(preds: &[Vec<usize>], start: usize) -> Vec<usize> {
    let mut walk = vec![start];
    let mut v = start;
    for pred in preds.iter().rev() {
        v = pred[v];
        walk.push(v);
    }
    walk.reverse();
    walk
}
