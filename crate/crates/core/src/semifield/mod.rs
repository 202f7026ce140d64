//! Idempotent semifields `R_max,x` and `R_max,+` with exact and float carriers.
//!
//! Every scalar type implements [`Semifield`]: `add` is the idempotent
//! maximum, `mul` is the group operation, and the induced order agrees
//! with the natural order on the reals. Four carriers are provided:
//!
//! | type             | semifield | backend |
//! |------------------|-----------|---------|
//! | [`RootedRational`] | max-times | exact   |
//! | [`MaxPlusExact`]   | max-plus  | exact   |
//! | [`MaxTimesFloat`]  | max-times | float   |
//! | [`MaxPlusFloat`]   | max-plus  | float   |
//!
//! [`AnyScalar`] wraps the four of them for code that only learns the
//! semifield at run time (file input, the HTTP service).

mod dynamic;
mod float;
mod literal;
mod maxplus;
mod rooted;

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::Result;

pub use dynamic::AnyScalar;
pub use float::{MaxPlusFloat, MaxTimesFloat, FLOAT_TOLERANCE};
pub use literal::parse_rational;
pub use maxplus::MaxPlusExact;
pub use rooted::RootedRational;

/// Which of the two semifields a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SemifieldTag {
    /// `(R+ ∪ {0}, max, ×, 0, 1)`, the multiplicative comparison scale.
    #[serde(alias = "mult")]
    MaxTimes,
    /// `(R ∪ {-inf}, max, +, -inf, 0)`, the additive comparison scale.
    #[serde(alias = "add")]
    MaxPlus,
}

impl std::str::FromStr for SemifieldTag {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mult" | "max-times" => Ok(SemifieldTag::MaxTimes),
            "add" | "max-plus" => Ok(SemifieldTag::MaxPlus),
            other => Err(crate::Error::Usage(format!(
                "unknown scale '{other}' (expected mult or add)"
            ))),
        }
    }
}

impl fmt::Display for SemifieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SemifieldTag::MaxTimes => "max-times",
            SemifieldTag::MaxPlus => "max-plus",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    #[default]
    Exact,
    Float,
}

impl std::str::FromStr for Backend {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            other => Err(crate::Error::Usage(format!(
                "unknown backend '{other}' (expected exact or float)"
            ))),
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        })
    }
}

/// Scalar arithmetic of an idempotent, radicable semifield with a linear order.
pub trait Semifield:
    Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const TAG: SemifieldTag;
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    /// Idempotent addition, the maximum under the semifield order.
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Result<Self>;

    /// Power with a rational exponent; `0^p` is only defined for `p > 0`.
    fn pow(&self, exponent: &BigRational) -> Result<Self>;

    fn compare(&self, rhs: &Self) -> Ordering;

    /// Equality as surfaced to users: exact for exact carriers, relative
    /// tolerance [`FLOAT_TOLERANCE`] for floats.
    fn tol_eq(&self, rhs: &Self) -> bool {
        self == rhs
    }

    /// The scalar denoted by a rational literal (`3`, `1/6`, `0.25`).
    fn from_rational(value: &BigRational) -> Result<Self>;

    /// Parses the scalar text syntax of this carrier.
    fn parse(text: &str) -> Result<Self>;

    /// Real value of the scalar in its own semifield (not its logarithm).
    fn to_f64(&self) -> f64;

    /// Ordinary arithmetic sum, when the carrier can represent it exactly.
    /// Max-plus carriers return `None`: the operation has no meaning there.
    fn arithmetic_sum(values: &[Self]) -> Option<Self>;

    fn leq(&self, rhs: &Self) -> bool {
        self.compare(rhs) != Ordering::Greater
    }

    /// `leq` relaxed by the user-facing tolerance.
    fn tol_leq(&self, rhs: &Self) -> bool {
        self.leq(rhs) || self.tol_eq(rhs)
    }

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// `k`-th root, `pow(1/k)`.
    fn nth_root(&self, k: u32) -> Self {
        assert!(k > 0, "root of order zero");
        if self.is_zero() {
            return Self::zero();
        }
        self.pow(&BigRational::new(1.into(), k.into()))
            .expect("root of a nonzero scalar is defined")
    }

    fn from_integer(value: i64) -> Result<Self> {
        Self::from_rational(&BigRational::from_integer(value.into()))
    }
}

/// `⊕` over an iterator; the empty sum is the semifield zero.
pub fn sum<'a, S: Semifield>(values: impl IntoIterator<Item = &'a S>) -> S {
    values
        .into_iter()
        .fold(S::zero(), |acc, v| acc.add(v))
}
