use std::fmt;

use num_rational::BigRational;

use super::{
    Backend, MaxPlusExact, MaxPlusFloat, MaxTimesFloat, RootedRational, Semifield, SemifieldTag,
};
use crate::error::{Error, Result};

/// A scalar whose semifield and backend are only known at run time.
///
/// Binary operations check that both operands agree and report a
/// [`Error::Mismatch`] otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyScalar {
    MaxTimesExact(RootedRational),
    MaxPlusExact(MaxPlusExact),
    MaxTimesFloat(MaxTimesFloat),
    MaxPlusFloat(MaxPlusFloat),
}

macro_rules! binary {
    ($name:ident, $op:ident) => {
        pub fn $name(&self, rhs: &Self) -> Result<Self> {
            match (self, rhs) {
                (Self::MaxTimesExact(a), Self::MaxTimesExact(b)) => Ok(Self::MaxTimesExact(a.$op(b))),
                (Self::MaxPlusExact(a), Self::MaxPlusExact(b)) => Ok(Self::MaxPlusExact(a.$op(b))),
                (Self::MaxTimesFloat(a), Self::MaxTimesFloat(b)) => Ok(Self::MaxTimesFloat(a.$op(b))),
                (Self::MaxPlusFloat(a), Self::MaxPlusFloat(b)) => Ok(Self::MaxPlusFloat(a.$op(b))),
                _ => Err(self.mismatch(rhs)),
            }
        }
    };
}

macro_rules! unary {
    ($self:expr, |$v:ident| $body:expr) => {
        match $self {
            AnyScalar::MaxTimesExact($v) => AnyScalar::MaxTimesExact($body),
            AnyScalar::MaxPlusExact($v) => AnyScalar::MaxPlusExact($body),
            AnyScalar::MaxTimesFloat($v) => AnyScalar::MaxTimesFloat($body),
            AnyScalar::MaxPlusFloat($v) => AnyScalar::MaxPlusFloat($body),
        }
    };
}

impl AnyScalar {
    pub fn parse(text: &str, tag: SemifieldTag, backend: Backend) -> Result<Self> {
        Ok(match (tag, backend) {
            (SemifieldTag::MaxTimes, Backend::Exact) => Self::MaxTimesExact(Semifield::parse(text)?),
            (SemifieldTag::MaxPlus, Backend::Exact) => Self::MaxPlusExact(Semifield::parse(text)?),
            (SemifieldTag::MaxTimes, Backend::Float) => Self::MaxTimesFloat(Semifield::parse(text)?),
            (SemifieldTag::MaxPlus, Backend::Float) => Self::MaxPlusFloat(Semifield::parse(text)?),
        })
    }

    pub fn tag(&self) -> SemifieldTag {
        match self {
            Self::MaxTimesExact(_) | Self::MaxTimesFloat(_) => SemifieldTag::MaxTimes,
            Self::MaxPlusExact(_) | Self::MaxPlusFloat(_) => SemifieldTag::MaxPlus,
        }
    }

    pub fn backend(&self) -> Backend {
        match self {
            Self::MaxTimesExact(_) | Self::MaxPlusExact(_) => Backend::Exact,
            Self::MaxTimesFloat(_) | Self::MaxPlusFloat(_) => Backend::Float,
        }
    }

    fn mismatch(&self, rhs: &Self) -> Error {
        Error::Mismatch(format!(
            "cannot combine {} {} with {} {}",
            self.tag(),
            self.backend(),
            rhs.tag(),
            rhs.backend()
        ))
    }

    binary!(add, add);
    binary!(mul, mul);

    pub fn leq(&self, rhs: &Self) -> Result<bool> {
        match (self, rhs) {
            (Self::MaxTimesExact(a), Self::MaxTimesExact(b)) => Ok(a.leq(b)),
            (Self::MaxPlusExact(a), Self::MaxPlusExact(b)) => Ok(a.leq(b)),
            (Self::MaxTimesFloat(a), Self::MaxTimesFloat(b)) => Ok(a.leq(b)),
            (Self::MaxPlusFloat(a), Self::MaxPlusFloat(b)) => Ok(a.leq(b)),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(match self {
            Self::MaxTimesExact(v) => Self::MaxTimesExact(v.inv()?),
            Self::MaxPlusExact(v) => Self::MaxPlusExact(v.inv()?),
            Self::MaxTimesFloat(v) => Self::MaxTimesFloat(v.inv()?),
            Self::MaxPlusFloat(v) => Self::MaxPlusFloat(v.inv()?),
        })
    }

    pub fn pow(&self, exponent: &BigRational) -> Result<Self> {
        Ok(match self {
            Self::MaxTimesExact(v) => Self::MaxTimesExact(v.pow(exponent)?),
            Self::MaxPlusExact(v) => Self::MaxPlusExact(v.pow(exponent)?),
            Self::MaxTimesFloat(v) => Self::MaxTimesFloat(v.pow(exponent)?),
            Self::MaxPlusFloat(v) => Self::MaxPlusFloat(v.pow(exponent)?),
        })
    }

    pub fn nth_root(&self, k: u32) -> Self {
        unary!(self, |v| v.nth_root(k))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Self::MaxTimesExact(v) => v.to_f64(),
            Self::MaxPlusExact(v) => v.to_f64(),
            Self::MaxTimesFloat(v) => v.to_f64(),
            Self::MaxPlusFloat(v) => v.to_f64(),
        }
    }
}

impl fmt::Display for AnyScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MaxTimesExact(v) => v.fmt(f),
            Self::MaxPlusExact(v) => v.fmt(f),
            Self::MaxTimesFloat(v) => v.fmt(f),
            Self::MaxPlusFloat(v) => v.fmt(f),
        }
    }
}
