//! Exact integer and rational primitives.
//!
//! Everything above this module works on [`Int`] (an arbitrary precision
//! signed integer) and [`Rat`] (a canonical reduced fraction). There is no
//! floating point here.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary precision signed integer.
pub type Int = BigInt;

/// Shorthand for building an [`Int`] from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Non-negative greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(x: &Int, y: &Int) -> Int {
    x.gcd(y)
}

/// Exact integer square root.
///
/// Returns `r >= 0` with `r * r == x`, [`Error::NotASquare`] when `x` is not
/// a perfect square and [`Error::NegativeInput`] for `x < 0`.
pub fn isqrt_exact(x: &Int) -> Result<Int> {
    if x.is_negative() {
        return Err(Error::NegativeInput);
    }
    let r = x.sqrt();
    if &r * &r == *x {
        Ok(r)
    } else {
        Err(Error::NotASquare(x.clone()))
    }
}

/// Floor square root of a non-negative integer.
pub fn isqrt_floor(x: &Int) -> Result<Int> {
    if x.is_negative() {
        return Err(Error::NegativeInput);
    }
    Ok(x.sqrt())
}

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Canonicalization happens on construction, so derived equality and
/// hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(BigRational);

/// Builds the canonical fraction `num / den`.
pub fn rat(num: Int, den: Int) -> Result<Rat> {
    Rat::new(num, den)
}

impl Rat {
    pub fn new(num: Int, den: Int) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(num, den)))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(v: Int) -> Self {
        Rat(BigRational::from_integer(v))
    }

    pub fn numer(&self) -> &Int {
        self.0.numer()
    }

    pub fn denom(&self) -> &Int {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Lossless conversion back to an integer; `None` unless the denominator is 1.
    pub fn to_int(&self) -> Option<Int> {
        self.is_integer().then(|| self.numer().clone())
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Rat(self.0.recip()))
    }

    pub fn signum(&self) -> Ordering {
        self.numer().sign().cmp(&num_bigint::Sign::NoSign)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn cube(&self) -> Self {
        &(self * self) * self
    }

    /// Nearest `f64`, for plotting only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<Int> for Rat {
    fn from(v: Int) -> Self {
        Rat::from_int(v)
    }
}

impl From<&Int> for Rat {
    fn from(v: &Int) -> Self {
        Rat::from_int(v.clone())
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat::from_int(Int::from(v))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `"n"` or `"n/d"` with decimal integers.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRat(s.to_string());
        match s.trim().split_once('/') {
            Some((n, d)) => {
                let n = n.trim().parse::<Int>().map_err(|_| bad())?;
                let d = d.trim().parse::<Int>().map_err(|_| bad())?;
                Rat::new(n, d)
            }
            None => Ok(Rat::from_int(s.trim().parse::<Int>().map_err(|_| bad())?)),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl<'a> $tr<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division by a zero Rat panics, same as integer division.
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl std::iter::Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// Serialized as the string `"num/den"` so consumers never see an overflowing number.
impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", self.numer(), self.denom()))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `#[serde(with = "int_str")]` for [`Int`] fields, as decimal strings.
pub mod int_str {
    use super::Int;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Int, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Int, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Same as [`int_str`] for a list of integers.
pub mod int_str_vec {
    use super::Int;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Int], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Int>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}
