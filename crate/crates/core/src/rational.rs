//! Exact rational scalars and weight classes in `Q/Z`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p/q` or `p`, each with an optional leading sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::BadRational(text.to_string());
    let t = text.trim();
    let (neg, body) = match t.as_bytes().first() {
        Some(b'-') => (true, &t[1..]),
        Some(b'+') => (false, &t[1..]),
        _ => (false, t),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let value = match body.split_once('/') {
        Some((p, q)) => {
            if !digits(p) || !digits(q) {
                return Err(bad());
            }
            let q = BigInt::from_str(q).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Rational::new(BigInt::from_str(p).map_err(|_| bad())?, q)
        }
        None => {
            if !digits(body) {
                return Err(bad());
            }
            Rational::from_integer(BigInt::from_str(body).map_err(|_| bad())?)
        }
    };
    Ok(if neg { -value } else { value })
}

/// `p/q`, or `p` when the value is an integer.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// The integer value of `r`, if it is an integer that fits in an `i64`.
pub fn to_i64(r: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if is_integer(r) {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// A coset `λ + Z`, stored by its representative in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightClass(Rational);

impl WeightClass {
    pub fn of(lambda: &Rational) -> Self {
        let floor = lambda.numer().div_floor(lambda.denom());
        WeightClass(lambda - Rational::from_integer(floor))
    }

    pub fn representative(&self) -> &Rational {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.is_zero()
    }
}

pub fn weight_class_of(lambda: &Rational) -> WeightClass {
    WeightClass::of(lambda)
}

/// The integer `a - b` when `a` and `b` lie in the same class.
pub fn integer_offset(a: &Rational, b: &Rational) -> Option<i64> {
    to_i64(&(a - b))
}

impl fmt::Display for WeightClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for WeightClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for WeightClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let r = parse_rational(&text).map_err(serde::de::Error::custom)?;
        Ok(WeightClass::of(&r))
    }
}

/// Serde adapter storing a [`Rational`] as a `"p/q"` string.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_signed_literals() {
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-6/8").unwrap(), ratio(-3, 4));
        assert_eq!(parse_rational("+5").unwrap(), int(5));
        assert_eq!(parse_rational("-0").unwrap(), int(0));
        for bad in ["", "1/0", "a", "1/", "/2", "--1", "1/-2", "1.5"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn formats_reduced() {
        assert_eq!(format_rational(&ratio(4, -6)), "-2/3");
        assert_eq!(format_rational(&int(7)), "7");
    }

    #[test]
    fn class_representatives() {
        assert_eq!(weight_class_of(&ratio(7, 2)).representative(), &ratio(1, 2));
        assert_eq!(weight_class_of(&int(-3)).representative(), &int(0));
        assert_eq!(weight_class_of(&ratio(5, 3)).representative(), &ratio(2, 3));
        assert_eq!(weight_class_of(&ratio(-1, 3)).representative(), &ratio(2, 3));
        assert!(weight_class_of(&int(4)).is_integral());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
