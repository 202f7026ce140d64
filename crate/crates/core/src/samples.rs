//! Small comparison problems on four alternatives, used by the examples
//! and tests.

use crate::linalg::Matrix;
use crate::semifield::RootedRational;

fn build(rows: &[&[&str]]) -> Matrix<RootedRational> {
    Matrix::parse(rows).expect("sample matrices are well formed")
}

/// A reciprocal but inconsistent 4x4 comparison matrix.
pub fn four_alternatives() -> Matrix<RootedRational> {
    build(&[
        &["1", "3", "2", "4"],
        &["1/3", "1", "1/3", "1/2"],
        &["1/2", "3", "1", "1/4"],
        &["1/4", "2", "4", "1"],
    ])
}

/// Two judges comparing the same four alternatives.
pub fn two_judges() -> [Matrix<RootedRational>; 2] {
    [
        build(&[
            &["1", "3", "2", "4"],
            &["1/3", "1", "1/3", "1/2"],
            &["1/2", "3", "1", "1/3"],
            &["1/4", "2", "3", "1"],
        ]),
        build(&[
            &["1", "4", "2", "3"],
            &["1/4", "1", "1/2", "1/2"],
            &["1/2", "2", "1", "1/4"],
            &["1/3", "2", "4", "1"],
        ]),
    ]
}

/// Constraints `x4 <= x2`, `x2 <= x3`, `x3 <= x4`, i.e. `x2 = x3 = x4`.
pub fn tied_tail_constraints() -> Matrix<RootedRational> {
    build(&[
        &["0", "0", "0", "0"],
        &["0", "0", "0", "1"],
        &["0", "1", "0", "0"],
        &["0", "0", "1", "0"],
    ])
}
