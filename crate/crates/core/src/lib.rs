//! Rating alternatives from pairwise comparison matrices.
//!
//! A comparison matrix `A` (entry `a_ij` says how much alternative `i` is
//! preferred to `j`) is approximated by a consistent matrix `x x⁻` in the
//! log-Chebyshev sense. The problem is written over an idempotent semifield
//! (max-times for ratio scales, max-plus for difference scales), where the
//! complete solution set has a closed form built from spectral radii and
//! Kleene stars. Exact arithmetic is the default.

pub mod approx;
pub mod cli;
pub mod error;
pub mod io;
pub mod linalg;
pub mod rating;
pub mod samples;
pub mod semifield;
pub mod service;

pub use error::{Error, Result};
pub use approx::{
    enumerate_exponents, mat_distance, minimize_constrained, minimize_rayleigh, vec_distance,
    ObjectiveKind, SolutionSpace,
};
pub use linalg::{Matrix, Vector};
pub use rating::{
    check_consistency, normalize, rate_constrained, rate_multi, rate_single, symmetrize,
    Candidate, ConsistencyReport, NormalizeMode, RatingMode, RatingProblem, RatingResult,
};
pub use semifield::{
    AnyScalar, Backend, MaxPlusExact, MaxPlusFloat, MaxTimesFloat, RootedRational, Semifield,
    SemifieldTag,
};
