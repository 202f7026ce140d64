//! Dense matrices and vectors over a [`Semifield`].
//!
//! All products are tropical: `(AB)_ij = ⊕_k a_ik ⊗ b_kj`.

mod karp;
mod spectral;

use std::fmt;

use crate::error::{Error, Result};
use crate::semifield::{sum, Semifield};

pub use karp::{max_cycle_mean, LogWeight};
pub use spectral::Eigenspace;

/// A column vector. `x⁻` (the conjugate row) is never materialized; use
/// [`Vector::conj_dot`] instead.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<S>(Vec<S>);

impl<S: Semifield> Vector<S> {
    pub fn new(entries: Vec<S>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Dimension("vectors need at least one entry".into()));
        }
        Ok(Self(entries))
    }

    pub fn parse(entries: &[&str]) -> Result<Self> {
        Self::new(entries.iter().map(|e| S::parse(e)).collect::<Result<_>>()?)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[S] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<S> {
        self.0
    }

    pub fn get(&self, i: usize) -> &S {
        &self.0[i]
    }

    /// No zero entries.
    pub fn is_regular(&self) -> bool {
        self.0.iter().all(|x| !x.is_zero())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self(self.0.iter().map(|x| c.mul(x)).collect())
    }

    /// `⊕` of all entries.
    pub fn max_entry(&self) -> S {
        sum(&self.0)
    }

    /// `x⁻ y = ⊕_i x_i⁻¹ y_i`, with zero entries of `x` contributing nothing.
    pub fn conj_dot(&self, y: &Self) -> Result<S> {
        self.check_dim(y)?;
        Ok(self
            .0
            .iter()
            .zip(&y.0)
            .filter(|(x, _)| !x.is_zero())
            .map(|(x, y)| x.inv().expect("nonzero").mul(y))
            .fold(S::zero(), |acc, v| acc.add(&v)))
    }

    pub fn add(&self, y: &Self) -> Result<Self> {
        self.check_dim(y)?;
        Ok(Self(self.0.iter().zip(&y.0).map(|(a, b)| a.add(b)).collect()))
    }

    /// Entry-wise `self <= y`.
    pub fn leq(&self, y: &Self) -> Result<bool> {
        self.check_dim(y)?;
        Ok(self.0.iter().zip(&y.0).all(|(a, b)| a.leq(b)))
    }

    /// Entry-wise `tol_leq`.
    pub fn tol_leq(&self, y: &Self) -> Result<bool> {
        self.check_dim(y)?;
        Ok(self.0.iter().zip(&y.0).all(|(a, b)| a.tol_leq(b)))
    }

    pub fn tol_eq(&self, y: &Self) -> bool {
        self.dim() == y.dim() && self.0.iter().zip(&y.0).all(|(a, b)| a.tol_eq(b))
    }

    /// The nonzero scalar `c` with `y = c ⊗ self`, if the two are collinear.
    /// Zero vectors are collinear with nothing.
    pub fn collinear_factor(&self, y: &Self) -> Option<S> {
        if self.dim() != y.dim() {
            return None;
        }
        let i = self.0.iter().position(|x| !x.is_zero())?;
        if y.0[i].is_zero() {
            return None;
        }
        let c = y.0[i].div(&self.0[i]).ok()?;
        self.scale(&c).tol_eq(y).then_some(c)
    }

    /// All entries equal.
    pub fn is_uniform(&self) -> bool {
        self.0.iter().all(|x| x.tol_eq(&self.0[0]))
    }

    fn check_dim(&self, y: &Self) -> Result<()> {
        if self.dim() != y.dim() {
            return Err(Error::Dimension(format!(
                "vector lengths {} and {}",
                self.dim(),
                y.dim()
            )));
        }
        Ok(())
    }
}

impl<S: Semifield> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Semifield> Matrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension("matrices need at least one row and column".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "row {} has {} entries, expected {cols}",
                i + 1,
                row.len()
            )));
        }
        let n = rows.len();
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from scalar literals, e.g. `&[&["1", "1/3"], &["3", "1"]]`.
    pub fn parse(rows: &[&[&str]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|e| S::parse(e)).collect::<Result<Vec<_>>>())
                .collect::<Result<_>>()?,
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Result<Self> {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self::new(rows, cols, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    /// The rank-one matrix `x y⁻`.
    pub fn outer_conj(x: &Vector<S>, y: &Vector<S>) -> Result<Self> {
        if !y.is_regular() {
            return Err(Error::domain("x y⁻ needs a regular y"));
        }
        let inv: Vec<S> = y.entries().iter().map(|v| v.inv().expect("regular")).collect();
        Self::from_fn(x.dim(), y.dim(), |i, j| x.get(i).mul(&inv[j]))
    }

    /// The consistent matrix `x x⁻`.
    pub fn rank_one(x: &Vector<S>) -> Result<Self> {
        Self::outer_conj(x, x)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector<S> {
        Vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn columns(&self) -> impl Iterator<Item = Vector<S>> + '_ {
        (0..self.cols).map(|j| self.column(j))
    }

    pub fn entries(&self) -> impl Iterator<Item = &S> {
        self.data.iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        self.data.chunks(self.cols).map(<[S]>::to_vec).collect()
    }

    /// Regular (positive) matrix: no zero entries.
    pub fn is_regular(&self) -> bool {
        self.data.iter().all(|x| !x.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    /// `A⁻ = A`, which needs a regular matrix.
    pub fn is_reciprocal(&self) -> bool {
        self.is_square()
            && self.is_regular()
            && self.conjugate_transpose().is_ok_and(|t| t == *self)
    }

    pub fn tol_eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.tol_eq(b))
    }

    /// Entry-wise `⊕`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..other.cols {
                let mut acc = S::zero();
                for (k, a) in row.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                data.push(acc);
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn mul_vec(&self, x: &Vector<S>) -> Result<Vector<S>> {
        if self.cols != x.dim() {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by a vector of length {}",
                self.rows,
                self.cols,
                x.dim()
            )));
        }
        Ok(Vector(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(x.entries())
                        .fold(S::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
                })
                .collect(),
        ))
    }

    /// `c ⊗ A`.
    pub fn scale(&self, c: &S) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c.mul(x)).collect(),
        }
    }

    /// `A⁻`: transpose with nonzero entries inverted and zeros kept.
    pub fn conjugate_transpose(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("conjugate transpose of the zero matrix"));
        }
        Self::from_fn(self.cols, self.rows, |i, j| {
            let a = self.get(j, i);
            if a.is_zero() {
                S::zero()
            } else {
                a.inv().expect("nonzero")
            }
        })
    }

    /// `A^k` for `k >= 0`.
    pub fn pow(&self, k: u32) -> Result<Self> {
        let n = self.square_order()?;
        let mut result = Self::identity(n)?;
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// `x⁻ A x`.
    pub fn rayleigh(&self, x: &Vector<S>) -> Result<S> {
        x.conj_dot(&self.mul_vec(x)?)
    }

    pub(crate) fn square_order(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }
}

impl<S: Semifield> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for row in cells.chunks(self.cols) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join("  "))?;
        }
        Ok(())
    }
}
