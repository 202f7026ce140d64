use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use super::literal::{format_rational, parse_rational};
use super::rooted::{split_exponent, strip_parens};
use super::{Backend, RootedRational, Semifield, SemifieldTag};
use crate::error::{Error, Result};

/// Exact element of `R_max,+`.
///
/// Finite values are `rational + log2(odd)`, where `odd` is a positive
/// [`RootedRational`] whose base has odd numerator and denominator. Plain
/// rational data keeps `odd = 1` and never touches logarithms; the log part
/// only appears for images of max-times values such as `log2(3)`, which
/// keeps the semifield isomorphism `log2: R_max,x -> R_max,+` exact.
///
/// The split is unique, so structural equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MaxPlusExact {
    NegInfinity,
    Finite {
        rational: BigRational,
        log2_of: RootedRational,
    },
}

impl MaxPlusExact {
    pub fn rational(value: BigRational) -> Self {
        MaxPlusExact::Finite {
            rational: value,
            log2_of: RootedRational::one(),
        }
    }

    /// `log2(x)`: the image of a max-times value under the isomorphism.
    pub fn log2_of(value: &RootedRational) -> Self {
        if value.is_zero() {
            return MaxPlusExact::NegInfinity;
        }
        Self::finite(BigRational::zero(), value.clone())
    }

    /// `rational + log2(value)` with powers of two moved into the rational.
    fn finite(rational: BigRational, value: RootedRational) -> Self {
        let base = value.base();
        let (num_twos, numer) = strip_twos(base.numer());
        let (den_twos, denom) = strip_twos(base.denom());
        let twos = BigRational::new(
            BigInt::from(num_twos) - BigInt::from(den_twos),
            value.root().into(),
        );
        let odd = RootedRational::new(BigRational::new(numer, denom), value.root())
            .expect("positive base");
        MaxPlusExact::Finite {
            rational: rational + twos,
            log2_of: odd,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            MaxPlusExact::Finite { rational, log2_of } if log2_of.is_one() => Some(rational),
            _ => None,
        }
    }
}

fn strip_twos(n: &BigInt) -> (u64, BigInt) {
    let twos = n.trailing_zeros().unwrap_or(0);
    (twos, n >> twos)
}

trait IsOne {
    fn is_one(&self) -> bool;
}

impl IsOne for RootedRational {
    fn is_one(&self) -> bool {
        self.root() == 1 && self.base().is_one()
    }
}

/// Sign of `delta + log2(c)` for rational `delta` and positive rooted `c`.
fn sign_of_log_sum(delta: &BigRational, c: &RootedRational) -> Ordering {
    if c.is_one() {
        return delta.cmp(&BigRational::zero());
    }
    // delta = m/d, c = b^(1/s): sign(m s + d log2 b) = sign(b^d 2^(m s) - 1).
    let d = delta.denom().to_u32().expect("denominator fits u32");
    let s = BigInt::from(c.root());
    let shift = (delta.numer() * s).to_i64().expect("exponent fits i64");
    let mut lhs = Pow::pow(c.base().numer(), d);
    let mut rhs = Pow::pow(c.base().denom(), d);
    if shift >= 0 {
        lhs <<= shift as u64;
    } else {
        rhs <<= shift.unsigned_abs();
    }
    lhs.cmp(&rhs)
}

impl Semifield for MaxPlusExact {
    const TAG: SemifieldTag = SemifieldTag::MaxPlus;
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        MaxPlusExact::NegInfinity
    }

    fn one() -> Self {
        Self::rational(BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        matches!(self, MaxPlusExact::NegInfinity)
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.compare(rhs) == Ordering::Less {
            rhs.clone()
        } else {
            self.clone()
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (
                MaxPlusExact::Finite {
                    rational: a,
                    log2_of: x,
                },
                MaxPlusExact::Finite {
                    rational: b,
                    log2_of: y,
                },
            ) => {
                if x.is_one() && y.is_one() {
                    Self::rational(a + b)
                } else {
                    Self::finite(a + b, x.mul(y))
                }
            }
            _ => MaxPlusExact::NegInfinity,
        }
    }

    fn inv(&self) -> Result<Self> {
        match self {
            MaxPlusExact::NegInfinity => Err(Error::domain("-inf has no inverse")),
            MaxPlusExact::Finite { rational, log2_of } => Ok(MaxPlusExact::Finite {
                rational: -rational,
                log2_of: log2_of.inv()?,
            }),
        }
    }

    fn pow(&self, exponent: &BigRational) -> Result<Self> {
        match self {
            MaxPlusExact::NegInfinity if exponent.is_positive() => Ok(MaxPlusExact::NegInfinity),
            MaxPlusExact::NegInfinity => Err(Error::domain("-inf raised to a non-positive power")),
            MaxPlusExact::Finite { rational, log2_of } => {
                let rational = rational * exponent;
                if log2_of.is_one() {
                    return Ok(Self::rational(rational));
                }
                split_exponent(exponent)?;
                Ok(Self::finite(rational, log2_of.pow(exponent)?))
            }
        }
    }

    fn compare(&self, rhs: &Self) -> Ordering {
        match (self, rhs) {
            (MaxPlusExact::NegInfinity, MaxPlusExact::NegInfinity) => Ordering::Equal,
            (MaxPlusExact::NegInfinity, _) => Ordering::Less,
            (_, MaxPlusExact::NegInfinity) => Ordering::Greater,
            (
                MaxPlusExact::Finite {
                    rational: a,
                    log2_of: x,
                },
                MaxPlusExact::Finite {
                    rational: b,
                    log2_of: y,
                },
            ) => {
                if x == y {
                    a.cmp(b)
                } else {
                    let ratio = x.mul(&y.inv().expect("positive"));
                    sign_of_log_sum(&(a - b), &ratio)
                }
            }
        }
    }

    fn from_rational(value: &BigRational) -> Result<Self> {
        Ok(Self::rational(value.clone()))
    }

    /// Accepts `-inf`, rational literals, and `q+log2(x)` / `log2(x)/k` forms
    /// as produced by `Display`.
    fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("-inf") {
            return Ok(MaxPlusExact::NegInfinity);
        }
        let Some(pos) = text.find("log2(") else {
            return Ok(Self::rational(parse_rational(text)?));
        };
        let (prefix, rest) = text.split_at(pos);
        let rest = &rest["log2".len()..];
        let close = rest
            .rfind(')')
            .ok_or_else(|| Error::usage(format!("unbalanced parentheses in {text:?}")))?;
        let argument = RootedRational::parse(strip_parens(&rest[..=close]))?;
        if argument.is_zero() {
            return Err(Error::domain(format!("log2 of zero in {text:?}")));
        }
        let mut log = Self::log2_of(&argument);
        if let Some(divisor) = rest[close + 1..].trim().strip_prefix('/') {
            let divisor = parse_rational(divisor)?;
            if divisor.is_zero() {
                return Err(Error::domain("division by zero"));
            }
            log = log.pow(&divisor.recip())?;
        } else if !rest[close + 1..].trim().is_empty() {
            return Err(Error::usage(format!("invalid max-plus literal {text:?}")));
        }
        let prefix = prefix.trim();
        let (rational, negate) = if let Some(p) = prefix.strip_suffix('+') {
            (p.trim(), false)
        } else if let Some(p) = prefix.strip_suffix('-') {
            (p.trim(), true)
        } else if prefix.is_empty() {
            ("", false)
        } else {
            return Err(Error::usage(format!("invalid max-plus literal {text:?}")));
        };
        if negate {
            log = log.inv()?;
        }
        let offset = if rational.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(rational)?
        };
        Ok(Self::rational(offset).mul(&log))
    }

    fn to_f64(&self) -> f64 {
        match self {
            MaxPlusExact::NegInfinity => f64::NEG_INFINITY,
            MaxPlusExact::Finite { rational, log2_of } => {
                rational.to_f64().unwrap_or(f64::NAN) + log2_of.log2()
            }
        }
    }

    fn arithmetic_sum(_values: &[Self]) -> Option<Self> {
        None
    }
}

impl fmt::Display for MaxPlusExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxPlusExact::NegInfinity => f.write_str("-inf"),
            MaxPlusExact::Finite { rational, log2_of } => {
                if log2_of.is_one() {
                    return f.write_str(&format_rational(rational));
                }
                if !rational.is_zero() {
                    write!(f, "{}+", format_rational(rational))?;
                }
                let base = format_rational(log2_of.base());
                write!(f, "log2({base})")?;
                if log2_of.root() > 1 {
                    write!(f, "/{}", log2_of.root())?;
                }
                Ok(())
            }
        }
    }
}
