//! The exact scalar used everywhere: an arbitrary-precision rational.

use alloc::string::{String, ToString};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Canonical signed rational (`denominator > 0`, lowest terms).
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or a decimal integer, with optional sign and surrounding blanks.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::ParseRational(s.to_string()));
    }
    match t.split_once('/') {
        Some((n, d)) => {
            let num = BigInt::from_str(n.trim()).map_err(|_| Error::ParseRational(s.to_string()))?;
            let den = BigInt::from_str(d.trim()).map_err(|_| Error::ParseRational(s.to_string()))?;
            if den.is_zero() {
                return Err(Error::ParseRational(s.to_string()));
            }
            Ok(Rational::new(num, den))
        }
        None => {
            BigInt::from_str(t).map(Rational::from_integer).map_err(|_| Error::ParseRational(s.to_string()))
        }
    }
}

/// Parses a comma-separated list such as `"1, -1/4"`.
pub fn parse_rational_list(s: &str) -> Result<alloc::vec::Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

/// Returns the integer value when the denominator is 1.
pub fn as_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.numer().clone())
}

/// Generalized binomial `C(n, k)` for any integer `n` and `k >= 0`.
pub fn binomial(n: i64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= BigInt::from(n) - BigInt::from(i);
        den *= BigUint::from(i + 1);
    }
    num / BigInt::from(den)
}

/// Rounds `q` to `digits` places after the decimal point (half away from zero).
pub fn to_decimal(q: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = q * Rational::from_integer(scale.clone());
    let abs = scaled.abs();
    let (whole, rem) = abs.numer().div_rem(abs.denom());
    let twice = rem * 2u8;
    let rounded = if &twice >= abs.denom() { whole + 1u8 } else { whole };
    let negative = q.is_negative() && !rounded.is_zero();
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 {
        let f = frac_part.to_string();
        out.push('.');
        for _ in f.len()..digits {
            out.push('0');
        }
        out.push_str(&f);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), frac(3, 2));
        assert_eq!(parse_rational("1/-4").unwrap(), frac(-1, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(parse_rational_list("1,-1/4").unwrap(), [int(1), frac(-1, 4)]);
    }

    #[test]
    fn canonical_display() {
        assert_eq!(frac(6, -4).to_string(), "-3/2");
        assert_eq!(int(5).to_string(), "5");
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 3), BigInt::from(0));
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-3, 2), BigInt::from(6));
        assert_eq!(binomial(7, 0), BigInt::from(1));
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(to_decimal(&frac(2, 3), 3), "0.667");
        assert_eq!(to_decimal(&frac(-1, 8), 2), "-0.13");
        assert_eq!(to_decimal(&frac(-1, 1000), 2), "0.00");
        assert_eq!(to_decimal(&int(55), 0), "55");
        assert_eq!(to_decimal(&frac(1, 20), 3), "0.050");
    }
}
