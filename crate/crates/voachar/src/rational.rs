//! Exact rational scalars and small integer utilities.
//!
//! `Q` is the coefficient field everywhere outside `analysis`. Values
//! serialize as decimal-free strings: `"3"`, `"-1/5"`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number.
pub type Q = BigRational;

/// Rational from an integer pair. Panics on zero denominator.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Renders without a denominator when it is 1: `"3"`, `"-1/5"`.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p"` or `"p/q"`. Whitespace is not accepted.
pub fn parse_q(s: &str) -> Result<Q> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::BadArgument(format!("invalid rational '{s}'")))
    };
    match s.split_once('/') {
        None => Ok(Q::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::BadArgument(format!("zero denominator in '{s}'")));
            }
            Ok(Q::new(parse_int(n)?, den))
        }
    }
}

/// Nearest f64; infinite values saturate.
pub fn q_to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm_i64(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd_i64(a, b)).abs() * b.abs()
    }
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt_big(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative integer");
    n.sqrt()
}

/// Largest integer x with x*x*den <= num, for num/den >= 0.
///
/// This is floor(sqrt(num/den)) computed exactly.
pub fn isqrt_ratio_floor(num: &BigInt, den: &BigInt) -> BigInt {
    assert!(den.is_positive());
    assert!(!num.is_negative());
    // floor(sqrt(num/den)) = floor(sqrt(num*den)/den)
    let root = isqrt_big(&(num * den));
    root / den
}
