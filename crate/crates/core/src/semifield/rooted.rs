use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use super::literal::{format_rational, parse_rational};
use super::{Backend, Semifield, SemifieldTag};
use crate::error::{Error, Result};

/// An exact nonnegative real of the form `base^(1/root)` with rational base.
///
/// The representation is canonical: `root` is the smallest positive integer
/// for which the value raised to `root` is rational, and zero is `0^(1/1)`.
/// Structural equality is therefore value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedRational {
    base: BigRational,
    root: u32,
}

impl RootedRational {
    pub fn new(base: BigRational, root: u32) -> Result<Self> {
        if root == 0 {
            return Err(Error::domain("root of order zero"));
        }
        if base.is_negative() {
            return Err(Error::domain(format!(
                "max-times scalars are nonnegative, got {}",
                format_rational(&base)
            )));
        }
        Ok(Self::canonical(base, root))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::domain("zero denominator"));
        }
        Self::new(BigRational::new(numer.into(), denom.into()), 1)
    }

    pub fn base(&self) -> &BigRational {
        &self.base
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    /// The value as a rational, if it is one.
    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.root == 1).then_some(&self.base)
    }

    pub fn log2(&self) -> f64 {
        log2_rational(&self.base) / f64::from(self.root)
    }

    fn canonical(base: BigRational, root: u32) -> Self {
        if base.is_zero() {
            return Self {
                base,
                root: 1,
            };
        }
        // The exponents d for which base is a perfect d-th power are closed
        // under lcm, so the largest divisor of `root` that works is maximal.
        for d in (2..=root).rev().filter(|d| root.is_multiple_of(*d)) {
            if let (Some(n), Some(m)) = (
                exact_root(base.numer(), d),
                exact_root(base.denom(), d),
            ) {
                return Self {
                    base: BigRational::new(n, m),
                    root: root / d,
                };
            }
        }
        Self { base, root }
    }

    /// Both values raised to the common power `lcm(p, q)`, as rationals.
    fn lifted(&self, rhs: &Self) -> (BigRational, BigRational, u32) {
        let l = self.root.lcm(&rhs.root);
        (
            pow_rational(&self.base, l / self.root),
            pow_rational(&rhs.base, l / rhs.root),
            l,
        )
    }
}

fn exact_root(n: &BigInt, d: u32) -> Option<BigInt> {
    let r = n.nth_root(d);
    (Pow::pow(&r, d) == *n).then_some(r)
}

pub(crate) fn pow_rational(q: &BigRational, e: u32) -> BigRational {
    BigRational::new_raw(Pow::pow(q.numer(), e), Pow::pow(q.denom(), e))
}

pub(crate) fn log2_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        n.to_f64().unwrap_or(f64::NAN).abs().log2()
    } else {
        let shift = bits - 64;
        let top: BigInt = n.abs() >> shift;
        top.to_f64().unwrap_or(f64::NAN).log2() + shift as f64
    }
}

pub(crate) fn log2_rational(q: &BigRational) -> f64 {
    if q.is_zero() {
        return f64::NEG_INFINITY;
    }
    log2_bigint(q.numer()) - log2_bigint(q.denom())
}

pub(crate) fn split_exponent(exponent: &BigRational) -> Result<(bool, u32, u32)> {
    let too_large = || Error::domain(format!("exponent {} is too large", format_rational(exponent)));
    let magnitude = exponent.numer().abs().to_u32().ok_or_else(too_large)?;
    let denom = exponent.denom().to_u32().ok_or_else(too_large)?;
    Ok((exponent.is_negative(), magnitude, denom))
}

impl Semifield for RootedRational {
    const TAG: SemifieldTag = SemifieldTag::MaxTimes;
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        Self {
            base: BigRational::zero(),
            root: 1,
        }
    }

    fn one() -> Self {
        Self {
            base: BigRational::one(),
            root: 1,
        }
    }

    fn is_zero(&self) -> bool {
        self.base.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.compare(rhs) == Ordering::Less {
            rhs.clone()
        } else {
            self.clone()
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.root == 1 && rhs.root == 1 {
            return Self {
                base: &self.base * &rhs.base,
                root: 1,
            };
        }
        let (a, b, l) = self.lifted(rhs);
        Self::canonical(a * b, l)
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("the zero scalar has no inverse"));
        }
        Ok(Self {
            base: self.base.recip(),
            root: self.root,
        })
    }

    fn pow(&self, exponent: &BigRational) -> Result<Self> {
        if self.is_zero() {
            return if exponent.is_positive() {
                Ok(Self::zero())
            } else {
                Err(Error::domain("zero raised to a non-positive power"))
            };
        }
        let (negative, magnitude, denom) = split_exponent(exponent)?;
        let base = pow_rational(&self.base, magnitude);
        let base = if negative { base.recip() } else { base };
        let root = self
            .root
            .checked_mul(denom)
            .ok_or_else(|| Error::domain("root order overflow"))?;
        Ok(Self::canonical(base, root))
    }

    fn compare(&self, rhs: &Self) -> Ordering {
        if self.root == rhs.root {
            return self.base.cmp(&rhs.base);
        }
        let (a, b, _) = self.lifted(rhs);
        a.cmp(&b)
    }

    fn from_rational(value: &BigRational) -> Result<Self> {
        Self::new(value.clone(), 1)
    }

    /// Accepts rational literals and rooted forms `12^(1/2)`, `(1/12)^(1/2)`.
    fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        match text.split_once('^') {
            Some((base, exponent)) => {
                let base = parse_rational(strip_parens(base))?;
                let exponent = parse_rational(strip_parens(exponent))?;
                Self::new(base, 1)?.pow(&exponent)
            }
            None => Self::new(parse_rational(text)?, 1),
        }
    }

    fn to_f64(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else if self.root == 1 {
            self.base.to_f64().unwrap_or(f64::NAN)
        } else {
            self.log2().exp2()
        }
    }

    fn arithmetic_sum(values: &[Self]) -> Option<Self> {
        let mut total = BigRational::zero();
        for v in values {
            total += v.as_rational()?;
        }
        Some(Self { base: total, root: 1 })
    }
}

pub(crate) fn strip_parens(text: &str) -> &str {
    let text = text.trim();
    text.strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(text)
}

impl fmt::Display for RootedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = format_rational(&self.base);
        match (self.root, self.base.is_integer()) {
            (1, _) => f.write_str(&base),
            (r, true) => write!(f, "{base}^(1/{r})"),
            (r, false) => write!(f, "({base})^(1/{r})"),
        }
    }
}
