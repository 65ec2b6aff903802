//! Rational generating functions of sequences and their formal expansion.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::sequence::SequenceSpec;

/// `numerator(t) / denominator(t)` with `denominator(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalGF {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if !denominator.coeff(0).is_one() {
            return Err(Error::Precondition(
                "generating-function denominator must have constant term 1".into(),
            ));
        }
        Ok(RationalGF { numerator, denominator })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// First `count` power-series coefficients, by exact long division.
    pub fn expand(&self, count: usize) -> Vec<Rational> {
        let den = self.denominator.coeffs();
        let mut out: Vec<Rational> = Vec::with_capacity(count);
        for n in 0..count {
            let mut c = self.numerator.coeff(n);
            for (j, d) in den.iter().enumerate().skip(1).take(n) {
                c -= d * &out[n - j];
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Polynomial| p.term_count() > 1;
        if wrap(&self.numerator) {
            write!(f, "({})", self.numerator)?;
        } else {
            write!(f, "{}", self.numerator)?;
        }
        f.write_str("/")?;
        if wrap(&self.denominator) {
            write!(f, "({})", self.denominator)
        } else {
            write!(f, "{}", self.denominator)
        }
    }
}

/// Generating function of a sequence:
/// numerator `a_0 + sum_{n=1}^{r-1} (a_n - sum_{j=1}^{n} p_j a_{n-j}) t^n`,
/// denominator `1 - sum p_j t^j`.
pub fn genfunc_of(spec: &SequenceSpec) -> RationalGF {
    let p = spec.coefficients();
    let a = spec.initials();
    let num = (0..spec.order())
        .map(|n| {
            let mut c = a[n].clone();
            for j in 1..=n {
                c -= p.p(j) * &a[n - j];
            }
            c
        })
        .collect();
    RationalGF { numerator: Polynomial::new(num), denominator: p.denominator_polynomial() }
}

/// `expand` as a free function, matching [`RationalGF::expand`].
pub fn expand(gf: &RationalGF, count: usize) -> Vec<Rational> {
    gf.expand(count)
}

/// One term `weight * F~[n + shift]` of a representation by IRS shifts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftTerm {
    pub shift: i64,
    pub weight: Rational,
}

/// Writes `a_n = sum weight * F~[n + shift]` for every `n >= 0`, reading the
/// weights off the generating-function numerator: the term `c_k t^k` becomes
/// `c_k * F~[n + r - 1 - k]`. Zero weights are omitted.
pub fn irs_from_gf_shift(spec: &SequenceSpec) -> Vec<ShiftTerm> {
    let r = spec.order() as i64;
    let gf = genfunc_of(spec);
    (0..spec.order())
        .filter_map(|k| {
            let w = gf.numerator.coeff(k);
            (!w.is_zero()).then(|| ShiftTerm { shift: r - 1 - k as i64, weight: w })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::sequence::{BilateralSequence, CoefficientSet};
    use alloc::string::ToString;
    use alloc::vec;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn tribonacci_gf_renders() {
        let spec = SequenceSpec::irs(&CoefficientSet::from_integers(&[1, 1, 1]).unwrap());
        let gf = genfunc_of(&spec);
        assert_eq!(gf.to_string(), "t^2/(1 - t - t^2 - t^3)");
        assert_eq!(gf.expand(8), ints(&[0, 0, 1, 1, 2, 4, 7, 13]));
    }

    #[test]
    fn geometric_series() {
        let spec = SequenceSpec::from_integers(&[2], &[1]).unwrap();
        let gf = genfunc_of(&spec);
        assert_eq!(gf.to_string(), "1/(1 - 2t)");
    }

    #[test]
    fn explicit_expansions() {
        let fib =
            RationalGF::new(Polynomial::monomial(int(1), 1), Polynomial::new(ints(&[1, -1, -1]))).unwrap();
        assert_eq!(expand(&fib, 6), ints(&[0, 1, 1, 2, 3, 5]));
        // b_n = 3 b_{n-1} - 2 b_{n-2}, b_0 = 1, b_1 = 3, computed directly
        let mut oracle = vec![int(1), int(3)];
        for n in 2..6 {
            let next = int(3) * &oracle[n - 1] - int(2) * &oracle[n - 2];
            oracle.push(next);
        }
        let gf = RationalGF::new(Polynomial::one(), Polynomial::new(ints(&[1, -3, 2]))).unwrap();
        assert_eq!(gf.expand(6), oracle);
        assert_eq!(oracle, ints(&[1, 3, 7, 15, 31, 63]));
    }

    #[test]
    fn rejects_unnormalized_denominator() {
        assert!(RationalGF::new(Polynomial::one(), Polynomial::new(ints(&[2, 1]))).is_err());
    }

    #[test]
    fn shift_representations() {
        let fib = SequenceSpec::irs(&CoefficientSet::from_integers(&[1, 1]).unwrap());
        assert_eq!(irs_from_gf_shift(&fib), vec![ShiftTerm { shift: 0, weight: int(1) }]);

        let lucas = SequenceSpec::from_integers(&[1, 1], &[2, 1]).unwrap();
        let terms = irs_from_gf_shift(&lucas);
        assert_eq!(
            terms,
            vec![ShiftTerm { shift: 1, weight: int(2) }, ShiftTerm { shift: 0, weight: int(-1) }]
        );
        let l = BilateralSequence::new(lucas);
        let f = BilateralSequence::new(fib);
        for n in 0..=10 {
            let v = int(2) * f.term(n + 1).unwrap() - f.term(n).unwrap();
            assert_eq!(v, l.term(n).unwrap());
        }

        let like = SequenceSpec::from_integers(&[1, 1, 1], &[2, 1, 1]).unwrap();
        assert_eq!(genfunc_of(&like).numerator().to_string(), "2 - t - 2t^2");
        assert_eq!(
            irs_from_gf_shift(&like),
            vec![
                ShiftTerm { shift: 2, weight: int(2) },
                ShiftTerm { shift: 1, weight: int(-1) },
                ShiftTerm { shift: 0, weight: int(-2) },
            ]
        );
    }
}
