//! Exact rationals and rationals extended by a single positive infinitesimal.
//!
//! Nothing in this crate touches floating point. [`Rational`] wraps an
//! arbitrary precision `BigRational`, which is always kept in lowest terms
//! with a positive denominator. [`EpsRational`] represents `base + c·ε` for a
//! formal `ε > 0` smaller than every positive rational, so values compare
//! lexicographically on `(base, c)`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

/// An exact rational number, stored reduced.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// `num / den`. Panics if `den == 0`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num.into(), den))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always `>= 1`.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Least integer `>= self`.
    pub fn ceil(&self) -> BigInt {
        self.numer().div_ceil(self.denom())
    }

    /// Greatest integer `<= self`.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// `self - floor(self)`, in `[0, 1)`.
    pub fn fract(&self) -> Rational {
        self - &Rational::from_integer(self.floor())
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

/// Least integer `>= x`.
pub fn rat_ceil(x: &Rational) -> BigInt {
    x.ceil()
}

/// True iff `x` has denominator 1.
pub fn rat_is_integer(x: &Rational) -> bool {
    x.is_integer()
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseError;

    /// Accepts `p` or `p/q` with optional sign on `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::Rational(s.to_string());
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Rational::new(num, den))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `base + eps_coeff·ε` with `ε` a positive infinitesimal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EpsRational {
    pub base: Rational,
    pub eps_coeff: Rational,
}

impl EpsRational {
    pub fn new(base: Rational, eps_coeff: Rational) -> Self {
        EpsRational { base, eps_coeff }
    }

    pub fn exact(base: Rational) -> Self {
        EpsRational {
            base,
            eps_coeff: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::exact(Rational::zero())
    }

    pub fn one() -> Self {
        Self::exact(Rational::one())
    }

    pub fn is_standard(&self) -> bool {
        self.eps_coeff.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        *self > EpsRational::zero()
    }

    /// Multiplies both components by a rational scalar.
    pub fn scale(&self, c: &Rational) -> EpsRational {
        EpsRational {
            base: &self.base * c,
            eps_coeff: &self.eps_coeff * c,
        }
    }
}

/// Lexicographic comparison on `(base, eps_coeff)`.
pub fn eps_compare(a: &EpsRational, b: &EpsRational) -> Ordering {
    a.base
        .cmp(&b.base)
        .then_with(|| a.eps_coeff.cmp(&b.eps_coeff))
}

impl Ord for EpsRational {
    fn cmp(&self, other: &Self) -> Ordering {
        eps_compare(self, other)
    }
}

impl PartialOrd for EpsRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Rational> for EpsRational {
    fn from(r: Rational) -> Self {
        EpsRational::exact(r)
    }
}

impl Add<&EpsRational> for &EpsRational {
    type Output = EpsRational;
    fn add(self, rhs: &EpsRational) -> EpsRational {
        EpsRational {
            base: &self.base + &rhs.base,
            eps_coeff: &self.eps_coeff + &rhs.eps_coeff,
        }
    }
}

impl Add for EpsRational {
    type Output = EpsRational;
    fn add(self, rhs: EpsRational) -> EpsRational {
        &self + &rhs
    }
}

impl Sub<&EpsRational> for &EpsRational {
    type Output = EpsRational;
    fn sub(self, rhs: &EpsRational) -> EpsRational {
        EpsRational {
            base: &self.base - &rhs.base,
            eps_coeff: &self.eps_coeff - &rhs.eps_coeff,
        }
    }
}

impl Sub for EpsRational {
    type Output = EpsRational;
    fn sub(self, rhs: EpsRational) -> EpsRational {
        &self - &rhs
    }
}

impl Neg for EpsRational {
    type Output = EpsRational;
    fn neg(self) -> EpsRational {
        EpsRational {
            base: -self.base,
            eps_coeff: -self.eps_coeff,
        }
    }
}

impl<'a> Sum<&'a EpsRational> for EpsRational {
    fn sum<I: Iterator<Item = &'a EpsRational>>(iter: I) -> Self {
        iter.fold(EpsRational::zero(), |acc, x| &acc + x)
    }
}

impl Sum for EpsRational {
    fn sum<I: Iterator<Item = EpsRational>>(iter: I) -> Self {
        iter.fold(EpsRational::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Display for EpsRational {
    /// `p/q` when the infinitesimal part vanishes, otherwise `p/q + (r/s)e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.eps_coeff.is_zero() {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{} + ({})e", self.base, self.eps_coeff)
        }
    }
}

impl fmt::Debug for EpsRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for EpsRational {
    type Err = ParseError;

    /// Accepts `p/q`, `p/q+e`, `p/q-Ne`, `p/q+N/Me`, and the display form
    /// `p/q + (r/s)e`. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseError::EpsRational(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        if !t.ends_with('e') {
            let base = t.parse::<Rational>().map_err(|_| bad())?;
            return Ok(EpsRational::exact(base));
        }
        let body = &t[..t.len() - 1];
        // The split point is the last sign that is not the leading sign of
        // the base and not inside parentheses.
        let bytes = body.as_bytes();
        let mut depth = 0i32;
        let mut split = None;
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if depth == 0 && i > 0 => split = Some(i),
                _ => {}
            }
        }
        let (base_str, coeff_str) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let base = base_str.parse::<Rational>().map_err(|_| bad())?;
        let (sign, mag) = match coeff_str.as_bytes().first() {
            Some(b'+') => (1, &coeff_str[1..]),
            Some(b'-') => (-1, &coeff_str[1..]),
            _ => (1, coeff_str),
        };
        let mag = mag
            .strip_prefix('(')
            .and_then(|m| m.strip_suffix(')'))
            .unwrap_or(mag);
        let coeff = if mag.is_empty() {
            Rational::one()
        } else {
            mag.parse::<Rational>().map_err(|_| bad())?
        };
        let coeff = if sign < 0 { -coeff } else { coeff };
        Ok(EpsRational::new(base, coeff))
    }
}

impl Serialize for EpsRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
