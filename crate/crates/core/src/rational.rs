//! Exact rational scalars.
//!
//! Arbitrary-precision numerator and denominator; every value is kept in
//! lowest terms with a positive denominator.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational as Rational;

/// Integer-valued rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p"` or `"p/q"` with `q > 0`. Unreduced input is accepted and reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    if s.is_empty() || s.trim() != s {
        return Err(bad());
    }
    match s.split_once('/') {
        None => BigInt::from_str(s).map(Rational::from_integer).map_err(|_| bad()),
        Some((p, d)) => {
            if d.starts_with(['-', '+']) {
                return Err(bad());
            }
            let num = BigInt::from_str(p).map_err(|_| bad())?;
            let den = BigInt::from_str(d).map_err(|_| bad())?;
            if !den.is_positive() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Reduced text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}
