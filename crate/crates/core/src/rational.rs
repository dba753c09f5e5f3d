//! The exact scalar: arbitrary-precision rationals, plus text rendering.
//!
//! `Rational` is always held in canonical form: the denominator is positive
//! and coprime to the numerator, with zero represented as 0/1. The `num`
//! constructors and arithmetic maintain this, which makes equality structural.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rational = BigRational;

/// Rational from machine integers; `denom` must be nonzero.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(Int::from(numer), Int::from(denom))
}

/// Whole number as a rational.
pub fn rat_int(value: i64) -> Rational {
    Rational::from_integer(Int::from(value))
}

/// Renders `num/den` with the denominator always present, so 1 prints as `1/1`.
pub fn frac_string(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Parses the `num/den` format produced by [`frac_string`]; a bare integer
/// is accepted as well.
pub fn parse_frac(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(text.to_string());
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let numer: Int = n.trim().parse().map_err(|_| bad())?;
            let denom: Int = d.trim().parse().map_err(|_| bad())?;
            if denom.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(numer, denom))
        }
        None => {
            let numer: Int = text.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(numer))
        }
    }
}

/// Rounded decimal rendering with `digits` fractional digits.
///
/// Rounds half away from zero. The result is approximate whenever the
/// denominator has prime factors other than 2 and 5; callers are expected
/// to label it as such.
pub fn decimal_string(value: &Rational, digits: usize) -> String {
    let negative = value.is_negative();
    let scale = Int::from(10u32).pow(digits as u32);
    let scaled_numer = value.numer().abs() * &scale;
    let denom = value.denom();
    let mut quot = &scaled_numer / denom;
    let rem = &scaled_numer % denom;
    if &rem * 2 >= *denom {
        quot += 1;
    }
    let body = quot.to_string();
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{body}");
    }
    let body = if body.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - body.len()), body)
    } else {
        body
    };
    let split = body.len() - digits;
    format!("{sign}{}.{}", &body[..split], &body[split..])
}
