//! Closed-form evaluation from characteristic roots.
//!
//! The IRS is the sum of residues of `z^n / p(z)` over the roots of the
//! characteristic polynomial. For a root `a` of multiplicity `m` the residue
//! is `sum_s C(n, s) a^(n-s) [u^(m-1-s)] g(u)` where
//! `g(u) = prod_{b != a} (a - b + u)^(-m_b)`. With all roots simple this is
//! `a^n / prod (a - b)`; with a single distinct root it is `C(n, m-1) a^(n-m+1)`.
//! The formula holds for every integer `n`, including negative ones.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::hp::{ComplexHP, HpReal};
use crate::irs_algebra::representation_weights;
use crate::rational::{binomial, Rational};
use crate::roots::{characteristic_roots, RootDecomposition};
use crate::sequence::SequenceSpec;

/// Relative tolerance `10^-(20 * bits / 256)`, i.e. `1e-20` at 256 bits.
pub fn tolerance_exponent(precision_bits: usize) -> usize {
    (20 * precision_bits / 256).max(1)
}

pub fn tolerance_for(precision_bits: usize) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u8).pow(tolerance_exponent(precision_bits) as u32))
}

/// `|approx - exact| / max(1, |exact|)`, computed exactly from the float value.
pub fn relative_error(approx: &ComplexHP, exact: &Rational) -> Rational {
    let re = approx.re.to_rational().unwrap_or_else(|| exact + Rational::one());
    let im = approx.im.to_rational().unwrap_or_else(Rational::one);
    let dr = (re - exact).abs();
    let di = im.abs();
    let err = if dr > di { dr } else { di };
    let scale = if exact.abs() > Rational::one() { exact.abs() } else { Rational::one() };
    err / scale
}

/// Whether `approx` agrees with `exact` within the tolerance for `precision_bits`.
pub fn agrees(approx: &ComplexHP, exact: &Rational, precision_bits: usize) -> bool {
    relative_error(approx, exact) <= tolerance_for(precision_bits)
}

fn binomial_hp(n: i64, k: u64, precision: usize) -> HpReal {
    HpReal::from_bigint(&binomial(n, k), precision)
}

/// Coefficients `[u^0 .. u^(len-1)]` of `(d + u)^(-m)`.
fn inverse_power_series(d: &ComplexHP, m: usize, len: usize) -> Vec<ComplexHP> {
    let p = d.precision();
    let inv = d.recip();
    let mut out = Vec::with_capacity(len);
    let mut base = inv.powi(m as i64);
    for i in 0..len {
        let c = binomial_hp((m + i - 1) as i64, i as u64, p);
        let mut term = base.scale(&c);
        if i % 2 == 1 {
            term = -&term;
        }
        out.push(term);
        base = &base * &inv;
    }
    out
}

fn series_mul(a: &[ComplexHP], b: &[ComplexHP]) -> Vec<ComplexHP> {
    let len = a.len();
    let p = a[0].precision();
    let mut out = vec![ComplexHP::zero(p); len];
    for i in 0..len {
        for j in 0..len - i {
            out[i + j] = &out[i + j] + &(&a[i] * &b[j]);
        }
    }
    out
}

/// `F~_n` for the IRS whose characteristic roots are `roots`.
pub fn irs_closed_form(roots: &RootDecomposition, n: i64) -> ComplexHP {
    let p = roots.precision();
    let all = roots.roots();
    let mut total = ComplexHP::zero(p);
    for (j, root) in all.iter().enumerate() {
        let m = root.multiplicity;
        let mut g = vec![ComplexHP::zero(p); m];
        g[0] = ComplexHP::one(p);
        for (k, other) in all.iter().enumerate() {
            if k == j {
                continue;
            }
            let d = &root.alpha - &other.alpha;
            g = series_mul(&g, &inverse_power_series(&d, other.multiplicity, m));
        }
        for s in 0..m {
            let c = binomial_hp(n, s as u64, p);
            if c.is_zero() {
                continue;
            }
            let term = &root.alpha.powi(n - s as i64) * &g[m - 1 - s];
            total = &total + &term.scale(&c);
        }
    }
    total
}

/// `a_n` through `a_n = a_(r-1) F~_n + sum_j w_j F~_(n-1-j)`.
pub fn general_closed_form(spec: &SequenceSpec, roots: &RootDecomposition, n: i64) -> ComplexHP {
    let p = roots.precision();
    let r = spec.order();
    let mut total = irs_closed_form(roots, n).scale(&HpReal::from_rational(&spec.initials()[r - 1], p));
    for (j, w) in representation_weights(spec).iter().enumerate() {
        if w == &Rational::from_integer(0.into()) {
            continue;
        }
        let f = irs_closed_form(roots, n - 1 - j as i64);
        total = &total + &f.scale(&HpReal::from_rational(w, p));
    }
    total
}

/// Order-2 Binet form, with the repeated-root branch
/// `n a_1 a^(n-1) - (n-1) a_0 a^n` when the two roots coincide.
pub fn order2_closed_form(spec: &SequenceSpec, n: i64, precision_bits: usize) -> Result<ComplexHP> {
    if spec.order() != 2 {
        return Err(Error::OrderMismatch { expected: 2, found: spec.order() });
    }
    let roots = characteristic_roots(spec.coefficients(), precision_bits)?;
    let p = roots.precision();
    let a0 = ComplexHP::from_rational(&spec.initials()[0], p);
    let a1 = ComplexHP::from_rational(&spec.initials()[1], p);
    let rs = roots.roots();
    let value = if rs.len() == 1 {
        let alpha = &rs[0].alpha;
        let nn = HpReal::from_i64(n, p);
        let n1 = HpReal::from_i64(n - 1, p);
        &(&a1 * &alpha.powi(n - 1)).scale(&nn) - &(&a0 * &alpha.powi(n)).scale(&n1)
    } else {
        let (alpha, beta) = (&rs[0].alpha, &rs[1].alpha);
        let diff = alpha - beta;
        let ca = &(&a1 - &(beta * &a0)) / &diff;
        let cb = &(&a1 - &(alpha * &a0)) / &diff;
        &(&ca * &alpha.powi(n)) - &(&cb * &beta.powi(n))
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use crate::sequence::{BilateralSequence, CoefficientSet};

    fn roots_of(p: &[i64]) -> RootDecomposition {
        characteristic_roots(&CoefficientSet::from_integers(p).unwrap(), 256).unwrap()
    }

    #[test]
    fn fibonacci_and_tribonacci() {
        let fib = roots_of(&[1, 1]);
        assert!(agrees(&irs_closed_form(&fib, 10), &int(55), 256));
        let trib = roots_of(&[1, 1, 1]);
        assert!(agrees(&irs_closed_form(&trib, 9), &int(44), 256));
    }

    #[test]
    fn repeated_roots() {
        let d = roots_of(&[2, -1]);
        for n in 0..=100 {
            assert!(agrees(&irs_closed_form(&d, n), &int(n), 256), "n={n}");
        }
        // (t-1)^2 (t-2): IRS is 2^n - 1 - n
        let d = roots_of(&[4, -5, 2]);
        for n in 0..30i64 {
            let exact = Rational::from_integer((BigInt::one() << n as usize) - 1 - n);
            assert!(agrees(&irs_closed_form(&d, n), &exact, 256), "n={n}");
        }
        // (t-1)^2 (t+1)^2: t^4 - 2t^2 + 1
        let cs = CoefficientSet::from_integers(&[0, 2, 0, -1]).unwrap();
        let d = characteristic_roots(&cs, 256).unwrap();
        let seq = BilateralSequence::irs(&cs);
        for n in -3..40 {
            assert!(agrees(&irs_closed_form(&d, n), &seq.term(n).unwrap(), 256), "n={n}");
        }
    }

    #[test]
    fn negative_indices() {
        let cs = CoefficientSet::from_integers(&[1, 1, 1]).unwrap();
        let d = characteristic_roots(&cs, 256).unwrap();
        assert!(agrees(&irs_closed_form(&d, -1), &int(1), 256));
        assert!(agrees(&irs_closed_form(&d, -2), &int(-1), 256));
    }

    #[test]
    fn general_sequences() {
        let lucas = SequenceSpec::from_integers(&[1, 1], &[2, 1]).unwrap();
        let d = roots_of(&[1, 1]);
        assert!(agrees(&general_closed_form(&lucas, &d, 6), &int(18), 256));
        let trib = SequenceSpec::from_integers(&[1, 1, 1], &[2, 1, 1]).unwrap();
        let d = roots_of(&[1, 1, 1]);
        assert!(agrees(&general_closed_form(&trib, &d, 6), &int(21), 256));
        assert!(agrees(&general_closed_form(&trib, &d, 2), &int(1), 256));
    }

    #[test]
    fn order_two_branches() {
        let sqrt2 = SequenceSpec::from_integers(&[2, 1], &[1, 3]).unwrap();
        assert!(agrees(&order2_closed_form(&sqrt2, 4, 256).unwrap(), &int(41), 256));
        let cs = CoefficientSet::new(vec![int(1), frac(-1, 4)]).unwrap();
        let spec = SequenceSpec::new(cs, vec![int(0), int(1)]).unwrap();
        assert!(agrees(&order2_closed_form(&spec, 5, 256).unwrap(), &frac(5, 16), 256));
        let jac = SequenceSpec::from_integers(&[1, 2], &[0, 1]).unwrap();
        assert!(agrees(&order2_closed_form(&jac, 7, 256).unwrap(), &int(43), 256));
    }

    #[test]
    fn tolerance_scaling() {
        assert_eq!(tolerance_for(256), Rational::new(1.into(), BigInt::from(10u8).pow(20)));
        assert_eq!(tolerance_exponent(128), 10);
    }
}
