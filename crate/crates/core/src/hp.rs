//! High-precision real and complex floats with an explicit working precision.
//!
//! Backed by `astro-float`. All arithmetic rounds to nearest-even at the
//! larger precision of the two operands.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, RoundingMode, Sign, Word};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::rational::{to_decimal, Rational};

const RM: RoundingMode = RoundingMode::ToEven;
const WORD_BITS: usize = Word::BITS as usize;

/// Default working precision in bits.
pub const DEFAULT_PRECISION: usize = 256;

#[derive(Debug, Clone)]
pub struct HpReal {
    value: BigFloat,
    precision: usize,
}

impl HpReal {
    pub fn zero(precision: usize) -> Self {
        HpReal { value: BigFloat::from_word(0, precision), precision }
    }

    pub fn from_i64(n: i64, precision: usize) -> Self {
        HpReal { value: BigFloat::from_i64(n, precision), precision }
    }

    pub fn from_f64(x: f64, precision: usize) -> Self {
        HpReal { value: BigFloat::from_f64(x, precision), precision }
    }

    pub fn from_bigint(n: &BigInt, precision: usize) -> Self {
        if n.is_zero() {
            return Self::zero(precision);
        }
        let words = to_words(n.magnitude());
        let sign = if n.is_negative() { Sign::Neg } else { Sign::Pos };
        let exponent = (words.len() * WORD_BITS) as i32;
        let mut value = BigFloat::from_words(&words, sign, exponent);
        value.set_precision(precision, RM).expect("precision is positive and allocation succeeds");
        HpReal { value, precision }
    }

    pub fn from_rational(q: &Rational, precision: usize) -> Self {
        let guard = precision + WORD_BITS;
        let num = Self::from_bigint(q.numer(), guard);
        let den = Self::from_bigint(q.denom(), guard);
        HpReal { value: num.value.div(&den.value, precision, RM), precision }
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_negative()
    }

    pub fn abs(&self) -> Self {
        HpReal { value: self.value.abs(), precision: self.precision }
    }

    pub fn sqrt(&self) -> Self {
        HpReal { value: self.value.sqrt(self.precision, RM), precision: self.precision }
    }

    pub fn recip(&self) -> Self {
        HpReal { value: self.value.reciprocal(self.precision, RM), precision: self.precision }
    }

    pub fn powi(&self, n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = HpReal::from_i64(1, self.precision);
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value as a rational, `None` for NaN or infinity.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.value.is_zero() {
            return Some(Rational::zero());
        }
        let (words, _bits, sign, exponent, _) = self.value.as_raw_parts()?;
        let mut mantissa = BigUint::zero();
        for w in words.iter().rev() {
            mantissa = (mantissa << WORD_BITS) + BigUint::from(*w);
        }
        let mut m = BigInt::from(mantissa);
        if sign == Sign::Neg {
            m = -m;
        }
        let shift = exponent as i64 - (words.len() * WORD_BITS) as i64;
        let q = if shift >= 0 {
            Rational::from_integer(m << shift as usize)
        } else {
            Rational::new(m, BigInt::from(1u8) << (-shift) as usize)
        };
        Some(q)
    }

    /// Nearest `f64` (saturating to infinity, flushing tiny values toward zero).
    pub fn to_f64(&self) -> f64 {
        if self.value.is_zero() {
            return 0.0;
        }
        let Some((words, _, sign, exponent, _)) = self.value.as_raw_parts() else {
            return f64::NAN;
        };
        let top = *words.last().unwrap_or(&0) as f64 / pow2(WORD_BITS as i32);
        let mag = top * pow2(exponent);
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    /// Binary exponent `e` with `2^(e-1) <= |x| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i32> {
        if self.value.is_zero() {
            None
        } else {
            self.value.exponent()
        }
    }

    /// Decimal rendering with `digits` places after the point.
    pub fn to_decimal(&self, digits: usize) -> String {
        match self.to_rational() {
            Some(q) => to_decimal(&q, digits),
            None => String::from("NaN"),
        }
    }

    fn prec2(&self, other: &Self) -> usize {
        self.precision.max(other.precision)
    }
}

fn to_words(n: &BigUint) -> Vec<Word> {
    let digits = n.to_u32_digits();
    let per = WORD_BITS / 32;
    digits
        .chunks(per)
        .map(|chunk| chunk.iter().enumerate().fold(0 as Word, |acc, (i, &d)| acc | ((d as Word) << (32 * i))))
        .collect()
}

/// `2^k` as an `f64`, saturating outside the representable range.
fn pow2(k: i32) -> f64 {
    if k > 1023 {
        f64::INFINITY
    } else if k >= -1022 {
        f64::from_bits(((k + 1023) as u64) << 52)
    } else if k >= -1074 {
        f64::from_bits(1u64 << (k + 1074))
    } else {
        0.0
    }
}

impl PartialEq for HpReal {
    fn eq(&self, other: &Self) -> bool {
        self.value.cmp(&other.value) == Some(0)
    }
}

impl PartialOrd for HpReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.cmp(&other.value).map(|c| c.cmp(&0))
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &HpReal {
            type Output = HpReal;
            fn $method(self, rhs: &HpReal) -> HpReal {
                let p = self.prec2(rhs);
                HpReal { value: self.value.$method(&rhs.value, p, RM), precision: p }
            }
        }
        impl $trait for HpReal {
            type Output = HpReal;
            fn $method(self, rhs: HpReal) -> HpReal {
                (&self).$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for &HpReal {
    type Output = HpReal;
    fn neg(self) -> HpReal {
        HpReal { value: BigFloat::neg(&self.value), precision: self.precision }
    }
}

impl Neg for HpReal {
    type Output = HpReal;
    fn neg(self) -> HpReal {
        -&self
    }
}

/// Complex number with [`HpReal`] parts.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexHP {
    pub re: HpReal,
    pub im: HpReal,
}

impl ComplexHP {
    pub fn new(re: HpReal, im: HpReal) -> Self {
        ComplexHP { re, im }
    }

    pub fn zero(precision: usize) -> Self {
        ComplexHP { re: HpReal::zero(precision), im: HpReal::zero(precision) }
    }

    pub fn one(precision: usize) -> Self {
        Self::from_i64(1, precision)
    }

    pub fn from_i64(n: i64, precision: usize) -> Self {
        ComplexHP { re: HpReal::from_i64(n, precision), im: HpReal::zero(precision) }
    }

    pub fn from_real(re: HpReal) -> Self {
        let p = re.precision();
        ComplexHP { re, im: HpReal::zero(p) }
    }

    pub fn from_rational(q: &Rational, precision: usize) -> Self {
        Self::from_real(HpReal::from_rational(q, precision))
    }

    pub fn from_f64(re: f64, im: f64, precision: usize) -> Self {
        ComplexHP { re: HpReal::from_f64(re, precision), im: HpReal::from_f64(im, precision) }
    }

    pub fn precision(&self) -> usize {
        self.re.precision().max(self.im.precision())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ComplexHP { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> HpReal {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> HpReal {
        self.norm_sqr().sqrt()
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        ComplexHP { re: &self.re / &d, im: -(&self.im / &d) }
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn powi(&self, n: i64) -> Self {
        let mut base = self.clone();
        let mut acc = ComplexHP::one(self.precision());
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    pub fn scale(&self, k: &HpReal) -> Self {
        ComplexHP { re: &self.re * k, im: &self.im * k }
    }

    /// `a + bi` with `digits` decimals per part.
    pub fn to_decimal(&self, digits: usize) -> String {
        let re = self.re.to_decimal(digits);
        let im = self.im.abs().to_decimal(digits);
        let sign = if self.im.is_negative() { '-' } else { '+' };
        alloc::format!("{re} {sign} {im}i")
    }
}

impl Add for &ComplexHP {
    type Output = ComplexHP;
    fn add(self, rhs: &ComplexHP) -> ComplexHP {
        ComplexHP { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &ComplexHP {
    type Output = ComplexHP;
    fn sub(self, rhs: &ComplexHP) -> ComplexHP {
        ComplexHP { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &ComplexHP {
    type Output = ComplexHP;
    fn mul(self, rhs: &ComplexHP) -> ComplexHP {
        ComplexHP {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Div for &ComplexHP {
    type Output = ComplexHP;
    fn div(self, rhs: &ComplexHP) -> ComplexHP {
        let d = rhs.norm_sqr();
        let re = &(&self.re * &rhs.re) + &(&self.im * &rhs.im);
        let im = &(&self.im * &rhs.re) - &(&self.re * &rhs.im);
        ComplexHP { re: &re / &d, im: &im / &d }
    }
}

impl Neg for &ComplexHP {
    type Output = ComplexHP;
    fn neg(self) -> ComplexHP {
        ComplexHP { re: -&self.re, im: -&self.im }
    }
}

macro_rules! complex_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for ComplexHP {
            type Output = ComplexHP;
            fn $method(self, rhs: ComplexHP) -> ComplexHP {
                (&self).$method(&rhs)
            }
        }
    };
}

complex_owned!(Add, add);
complex_owned!(Sub, sub);
complex_owned!(Mul, mul);
complex_owned!(Div, div);

impl fmt::Display for ComplexHP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(f.precision().unwrap_or(20)))
    }
}
