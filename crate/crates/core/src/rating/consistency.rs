use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::semifield::Semifield;

/// How far a comparison matrix is from being reciprocal and consistent.
///
/// Defects are `d ⊕ d⁻¹` of the worst violation, so they equal the unit
/// exactly when the property holds.
#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyReport<S> {
    pub is_reciprocal: bool,
    /// `⊕_(i,j) (a_ij a_ji) ⊕ (a_ij a_ji)⁻¹`.
    pub max_reciprocity_defect: S,
    pub is_consistent: bool,
    /// `⊕_(i,k,j)` of `a_ij (a_ik a_kj)⁻¹` and its inverse.
    pub max_transitivity_defect: S,
    /// The first triple `(i, k, j)` reaching the transitivity defect, if any
    /// triple is violated.
    pub worst_triple: Option<(usize, usize, usize)>,
}

/// Reciprocity and transitivity defects of a square matrix without zeros.
pub fn check_consistency<S: Semifield>(a: &Matrix<S>) -> Result<ConsistencyReport<S>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if !a.is_regular() {
        return Err(Error::domain("consistency is only defined for matrices without zero entries"));
    }
    let n = a.rows();
    let one = S::one();
    let both_ways = |x: S| -> S {
        let inv = x.inv().expect("nonzero");
        x.add(&inv)
    };

    let mut reciprocity = one.clone();
    for i in 0..n {
        for j in i..n {
            reciprocity = reciprocity.add(&both_ways(a.get(i, j).mul(a.get(j, i))));
        }
    }

    let mut transitivity = one.clone();
    let mut worst_triple = None;
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                let through = a.get(i, k).mul(a.get(k, j));
                let defect = both_ways(a.get(i, j).div(&through)?);
                if !defect.tol_leq(&transitivity) {
                    transitivity = defect;
                    worst_triple = Some((i, k, j));
                }
            }
        }
    }

    let is_reciprocal = reciprocity.tol_eq(&one);
    Ok(ConsistencyReport {
        is_reciprocal,
        max_reciprocity_defect: reciprocity,
        is_consistent: is_reciprocal && transitivity.tol_eq(&one),
        max_transitivity_defect: transitivity,
        worst_triple,
    })
}
