//! Coefficient sets, sequence specifications and exact bilateral evaluation.

use alloc::vec::Vec;
use core::cell::RefCell;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// The coefficients `(p_1, ..., p_r)` of `a[n] = p_1 a[n-1] + ... + p_r a[n-r]`.
///
/// Invariant: `r >= 1` and `p_r != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientSet {
    coeffs: Vec<Rational>,
}

impl CoefficientSet {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        match coeffs.last() {
            None => Err(Error::EmptyCoefficients),
            Some(last) if last.is_zero() => Err(Error::ZeroLeadingCoefficient),
            Some(_) => Ok(CoefficientSet { coeffs }),
        }
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| crate::rational::int(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.coeffs
    }

    /// One-based access: `p(1)` is the coefficient of `a[n-1]`.
    pub fn p(&self, j: usize) -> &Rational {
        &self.coeffs[j - 1]
    }

    /// `t^r - p_1 t^(r-1) - ... - p_r`, ascending powers.
    pub fn characteristic_polynomial(&self) -> Polynomial {
        let r = self.order();
        let mut c = Vec::with_capacity(r + 1);
        for j in (1..=r).rev() {
            c.push(-self.p(j).clone());
        }
        c.push(Rational::one());
        Polynomial::new(c)
    }

    /// `1 - p_1 t - ... - p_r t^r`, the generating-function denominator.
    pub fn denominator_polynomial(&self) -> Polynomial {
        let mut c = Vec::with_capacity(self.order() + 1);
        c.push(Rational::one());
        c.extend(self.coeffs.iter().map(|p| -p.clone()));
        Polynomial::new(c)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|p| p.is_integer())
    }
}

/// A coefficient set together with the initial window `(a_0, ..., a_{r-1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSpec {
    coefficients: CoefficientSet,
    initials: Vec<Rational>,
}

impl SequenceSpec {
    pub fn new(coefficients: CoefficientSet, initials: Vec<Rational>) -> Result<Self> {
        if initials.len() != coefficients.order() {
            return Err(Error::InitialsLength { expected: coefficients.order(), found: initials.len() });
        }
        Ok(SequenceSpec { coefficients, initials })
    }

    pub fn from_integers(coeffs: &[i64], initials: &[i64]) -> Result<Self> {
        Self::new(
            CoefficientSet::from_integers(coeffs)?,
            initials.iter().map(|&a| crate::rational::int(a)).collect(),
        )
    }

    /// The impulse response sequence: initials `0, ..., 0, 1`.
    pub fn irs(coefficients: &CoefficientSet) -> Self {
        let r = coefficients.order();
        let mut initials = alloc::vec![Rational::zero(); r];
        initials[r - 1] = Rational::one();
        SequenceSpec { coefficients: coefficients.clone(), initials }
    }

    pub fn coefficients(&self) -> &CoefficientSet {
        &self.coefficients
    }

    pub fn initials(&self) -> &[Rational] {
        &self.initials
    }

    pub fn order(&self) -> usize {
        self.coefficients.order()
    }

    pub fn is_irs(&self) -> bool {
        let r = self.order();
        self.initials[..r - 1].iter().all(Zero::is_zero) && self.initials[r - 1].is_one()
    }
}

/// Builds the IRS for raw coefficients, rejecting `p_r = 0`.
pub fn make_irs(coeffs: Vec<Rational>) -> Result<SequenceSpec> {
    Ok(SequenceSpec::irs(&CoefficientSet::new(coeffs)?))
}

/// Memoized evaluation of a sequence on `n >= -r + 1`.
///
/// Terms below zero come from solving the recurrence backwards, which is
/// well defined because `p_r != 0`. The cache is a contiguous vector starting
/// at index `-r + 1` and lives in a `RefCell`, so the type is `Send` but not
/// `Sync`: clone it to evaluate from several threads.
#[derive(Debug, Clone)]
pub struct BilateralSequence {
    spec: SequenceSpec,
    cache: RefCell<Vec<Rational>>,
}

impl BilateralSequence {
    pub fn new(spec: SequenceSpec) -> Self {
        let r = spec.order();
        let p = spec.coefficients();
        // cache[i] holds a[i - (r - 1)]
        let mut window: Vec<Rational> = alloc::vec![Rational::zero(); 2 * r - 1];
        window[r - 1..].clone_from_slice(spec.initials());
        let pr = p.p(r);
        for m in (-(r as i64 - 1)..0).rev() {
            // a[m] = (a[m + r] - sum_{j=1}^{r-1} p_j a[m + r - j]) / p_r
            let at = |k: i64| (k + r as i64 - 1) as usize;
            let mut acc = window[at(m + r as i64)].clone();
            for j in 1..r {
                acc -= p.p(j) * &window[at(m + (r - j) as i64)];
            }
            window[at(m)] = acc / pr;
        }
        BilateralSequence { spec, cache: RefCell::new(window) }
    }

    pub fn irs(coefficients: &CoefficientSet) -> Self {
        Self::new(SequenceSpec::irs(coefficients))
    }

    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    /// Lowest supported index, `-r + 1`.
    pub fn floor(&self) -> i64 {
        1 - self.spec.order() as i64
    }

    pub fn term(&self, n: i64) -> Result<Rational> {
        let floor = self.floor();
        if n < floor {
            return Err(Error::IndexBelowFloor { index: n, floor });
        }
        let idx = (n - floor) as usize;
        self.extend_to(idx);
        Ok(self.cache.borrow()[idx].clone())
    }

    /// Terms for `n = lo..=hi`.
    pub fn terms_range(&self, lo: i64, hi: i64) -> Result<Vec<Rational>> {
        if lo > hi {
            return Err(Error::InvalidRange { lo, hi });
        }
        let floor = self.floor();
        if lo < floor {
            return Err(Error::IndexBelowFloor { index: lo, floor });
        }
        let (a, b) = ((lo - floor) as usize, (hi - floor) as usize);
        self.extend_to(b);
        Ok(self.cache.borrow()[a..=b].to_vec())
    }

    fn extend_to(&self, idx: usize) {
        let mut cache = self.cache.borrow_mut();
        let p = self.spec.coefficients().as_slice();
        while cache.len() <= idx {
            let len = cache.len();
            let next =
                p.iter().enumerate().fold(Rational::zero(), |acc, (j, pj)| acc + pj * &cache[len - 1 - j]);
            cache.push(next);
        }
    }
}
