use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::literal::parse_rational;
use super::{Backend, Semifield, SemifieldTag};
use crate::error::{Error, Result};

/// Relative tolerance for float equality checks surfaced to users.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

fn close(a: f64, b: f64, floor: f64) -> bool {
    if a == b {
        return true;
    }
    if !a.is_finite() || !b.is_finite() {
        return false;
    }
    (a - b).abs() <= FLOAT_TOLERANCE * a.abs().max(b.abs()).max(floor)
}

fn ratio_to_f64(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

fn parse_f64(text: &str) -> Result<f64> {
    let text = text.trim();
    if text.contains('/') {
        return Ok(ratio_to_f64(&parse_rational(text)?));
    }
    text.parse::<f64>()
        .map_err(|_| Error::usage(format!("invalid number {text:?}")))
}

/// `R_max,x` over `f64`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct MaxTimesFloat(pub f64);

impl MaxTimesFloat {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || value < 0.0 || value.is_infinite() {
            return Err(Error::domain(format!("max-times scalars are finite and nonnegative, got {value}")));
        }
        Ok(Self(value))
    }
}

impl Semifield for MaxTimesFloat {
    const TAG: SemifieldTag = SemifieldTag::MaxTimes;
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Self(0.0)
    }

    fn one() -> Self {
        Self(1.0)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0.0
    }

    fn add(&self, rhs: &Self) -> Self {
        Self(self.0.max(rhs.0))
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self(self.0 * rhs.0)
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("the zero scalar has no inverse"));
        }
        Ok(Self(self.0.recip()))
    }

    fn pow(&self, exponent: &BigRational) -> Result<Self> {
        let e = ratio_to_f64(exponent);
        if self.is_zero() && e <= 0.0 {
            return Err(Error::domain("zero raised to a non-positive power"));
        }
        Ok(Self(self.0.powf(e)))
    }

    fn compare(&self, rhs: &Self) -> Ordering {
        self.0.total_cmp(&rhs.0)
    }

    fn tol_eq(&self, rhs: &Self) -> bool {
        close(self.0, rhs.0, 0.0)
    }

    fn from_rational(value: &BigRational) -> Result<Self> {
        Self::new(ratio_to_f64(value))
    }

    fn parse(text: &str) -> Result<Self> {
        Self::new(parse_f64(text)?)
    }

    fn to_f64(&self) -> f64 {
        self.0
    }

    fn arithmetic_sum(values: &[Self]) -> Option<Self> {
        Some(Self(values.iter().map(|v| v.0).sum()))
    }
}

impl fmt::Display for MaxTimesFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `R_max,+` over `f64`, with `f64::NEG_INFINITY` as the zero.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct MaxPlusFloat(pub f64);

impl MaxPlusFloat {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || value == f64::INFINITY {
            return Err(Error::domain(format!("max-plus scalars are real or -inf, got {value}")));
        }
        Ok(Self(value))
    }
}

impl Semifield for MaxPlusFloat {
    const TAG: SemifieldTag = SemifieldTag::MaxPlus;
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Self(f64::NEG_INFINITY)
    }

    fn one() -> Self {
        Self(0.0)
    }

    fn is_zero(&self) -> bool {
        self.0 == f64::NEG_INFINITY
    }

    fn add(&self, rhs: &Self) -> Self {
        Self(self.0.max(rhs.0))
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self(self.0 + rhs.0)
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("-inf has no inverse"));
        }
        Ok(Self(-self.0))
    }

    fn pow(&self, exponent: &BigRational) -> Result<Self> {
        let e = ratio_to_f64(exponent);
        if self.is_zero() {
            return if e > 0.0 {
                Ok(Self::zero())
            } else {
                Err(Error::domain("-inf raised to a non-positive power"))
            };
        }
        Ok(Self(self.0 * e))
    }

    fn compare(&self, rhs: &Self) -> Ordering {
        self.0.total_cmp(&rhs.0)
    }

    fn tol_eq(&self, rhs: &Self) -> bool {
        close(self.0, rhs.0, 1.0)
    }

    fn from_rational(value: &BigRational) -> Result<Self> {
        Self::new(ratio_to_f64(value))
    }

    fn parse(text: &str) -> Result<Self> {
        Self::new(parse_f64(text)?)
    }

    fn to_f64(&self) -> f64 {
        self.0
    }

    fn arithmetic_sum(_values: &[Self]) -> Option<Self> {
        None
    }
}

impl fmt::Display for MaxPlusFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
