//! Exact rationals backed by `num-rational`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational. `Ratio` keeps gcd(num, den) = 1 and den > 0.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a pair of decimal strings into a canonical rational.
pub fn parse_pair(num: &str, den: &str) -> Result<Rational> {
    let n: BigInt = num
        .trim()
        .parse()
        .map_err(|_| Error::Schema(format!("bad integer {num:?}")))?;
    let d: BigInt = den
        .trim()
        .parse()
        .map_err(|_| Error::Schema(format!("bad integer {den:?}")))?;
    if d.is_zero() {
        return Err(Error::Schema("zero denominator".into()));
    }
    Ok(Rational::new(n, d))
}

/// Parses `"a"` or `"a/b"`.
pub fn parse(s: &str) -> Result<Rational> {
    match s.split_once('/') {
        Some((n, d)) => parse_pair(n, d),
        None => parse_pair(s, "1"),
    }
}

/// Formats as `"a"` for integers and `"a/b"` otherwise.
pub fn format(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn floor_div(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_floor(&a, &b)
}

pub fn ceil_div(a: i64, b: i64) -> i64 {
    -floor_div(-a, b)
}

/// Converts a rational that is known to be a small integer.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    num_traits::ToPrimitive::to_i64(q.numer())
}

pub fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}
