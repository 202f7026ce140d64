//! Text formats: matrices as CSV or JSON, rating problems as JSON, and
//! rating results as text, JSON or CSV reports.

mod matrix;
mod problem;
mod report;

pub use matrix::{matrix_from_json, matrix_to_csv, matrix_to_json, parse_matrix, parse_matrix_csv, MatrixDoc};
pub use problem::{Cell, MatrixInput, ProblemDoc};
pub use report::{result_to_csv, result_to_json, result_to_text, scalar_to_json};

/// Runs `$body` with `$S` bound to the scalar type of a run-time
/// semifield/backend pair.
#[macro_export]
macro_rules! with_scalar {
    ($tag:expr, $backend:expr, $S:ident => $body:expr) => {{
        use $crate::semifield::{Backend as __Backend, SemifieldTag as __Tag};
        match ($tag, $backend) {
            (__Tag::MaxTimes, __Backend::Exact) => {
                type $S = $crate::semifield::RootedRational;
                $body
            }
            (__Tag::MaxPlus, __Backend::Exact) => {
                type $S = $crate::semifield::MaxPlusExact;
                $body
            }
            (__Tag::MaxTimes, __Backend::Float) => {
                type $S = $crate::semifield::MaxTimesFloat;
                $body
            }
            (__Tag::MaxPlus, __Backend::Float) => {
                type $S = $crate::semifield::MaxPlusFloat;
                $body
            }
        }
    }};
}
