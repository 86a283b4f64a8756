//! Arbitrary-precision rational numbers in canonical form.
//!
//! [`ExactRational`] is the value type that carries every exact quantity in
//! this crate: Bernoulli and Euler numbers, moments, and power-series
//! coefficients. Values are always fully reduced (gcd of numerator and
//! denominator is 1) with the sign on the numerator and a strictly positive
//! denominator; zero is `0/1`.
//!
//! The text form is `"p/q"`, with integers rendered as plain `"n"` without
//! the `/1` suffix. [`std::fmt::Display`] and [`std::str::FromStr`] are
//! inverses on canonical values.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Errors from rational construction, arithmetic, and parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RationalError {
    /// A denominator of zero was supplied to a constructor.
    ZeroDenominator,
    /// Division (or reciprocal) by an exact zero.
    DivisionByZero,
    /// The input string is not a valid `"p/q"` or `"n"` rational.
    Parse(String),
}

impl fmt::Display for RationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalError::ZeroDenominator => write!(f, "denominator must be nonzero"),
            RationalError::DivisionByZero => write!(f, "exact division by zero"),
            RationalError::Parse(s) => write!(f, "invalid rational literal {s:?}"),
        }
    }
}

impl std::error::Error for RationalError {}

/// An exact rational number, always held in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Builds `numer/denom`, canonicalizing sign and common factors.
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self, RationalError> {
        if denom.is_zero() {
            return Err(RationalError::ZeroDenominator);
        }
        Ok(ExactRational(BigRational::new(numer, denom)))
    }

    /// Builds `p/q` from machine integers.
    pub fn from_ratio(p: i64, q: i64) -> Result<Self, RationalError> {
        Self::new(BigInt::from(p), BigInt::from(q))
    }

    pub fn from_integer<T: Into<BigInt>>(n: T) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    /// Numerator of the canonical form; carries the sign.
    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator of the canonical form; always >= 1.
    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    /// Exact division; `rhs` of zero is an error, never a NaN-like value.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, RationalError> {
        if rhs.is_zero() {
            return Err(RationalError::DivisionByZero);
        }
        Ok(ExactRational(&self.0 / &rhs.0))
    }

    /// Multiplicative inverse; zero is an error.
    pub fn recip(&self) -> Result<Self, RationalError> {
        if self.is_zero() {
            return Err(RationalError::DivisionByZero);
        }
        Ok(ExactRational(self.0.recip()))
    }

    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }

    /// Nearest binary64 rendering of the exact value.
    ///
    /// Values beyond the f64 range render as signed infinity.
    pub fn to_f64(&self) -> f64 {
        match self.0.to_f64() {
            Some(v) => v,
            None => {
                if self.0.is_negative() {
                    f64::NEG_INFINITY
                } else {
                    f64::INFINITY
                }
            }
        }
    }
}

impl From<BigInt> for ExactRational {
    fn from(n: BigInt) -> Self {
        ExactRational::from_integer(n)
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        ExactRational::from_integer(n)
    }
}

impl Add for &ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: &ExactRational) -> ExactRational {
        ExactRational(&self.0 + &rhs.0)
    }
}

impl Sub for &ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: &ExactRational) -> ExactRational {
        ExactRational(&self.0 - &rhs.0)
    }
}

impl Mul for &ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: &ExactRational) -> ExactRational {
        ExactRational(&self.0 * &rhs.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl Add for ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: ExactRational) -> ExactRational {
        &self + &rhs
    }
}

impl Sub for ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: ExactRational) -> ExactRational {
        &self - &rhs
    }
}

impl Mul for ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: ExactRational) -> ExactRational {
        &self * &rhs
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        -&self
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRational {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RationalError::Parse(s.to_owned());
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(ExactRational::from_integer(n))
            }
            Some((p, q)) => {
                let p = BigInt::from_str(p).map_err(|_| bad())?;
                let q = BigInt::from_str(q).map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                ExactRational::new(p, q)
            }
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Binomial coefficient C(n, k) as an exact integer; 0 when `k > n`.
///
/// Uses the multiplicative formula with a running division, which is exact
/// at every step, so no factorials are ever materialized.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// n! as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}
