//! Exact verification of identity families for order-2 sequences, plus a
//! catalog of named identities over Fibonacci, Lucas, Jacobsthal, Mersenne,
//! Pell and tribonacci numbers.
//!
//! Every check compares two exact rationals. A failing check carries the
//! parameters and both sides so it can be replayed.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;
use core::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::irs_algebra::order2_coefficients;
use crate::rational::{as_integer, binomial, frac, int, Rational};
use crate::sequence::{BilateralSequence, CoefficientSet, SequenceSpec};

/// Order-2 sequence defined on all of `Z`, by default the IRS (`0, 1`).
///
/// Single-threaded like [`BilateralSequence`]; clone per thread.
#[derive(Debug, Clone)]
pub struct BilateralIRS2 {
    p1: Rational,
    p2: Rational,
    // pos[k] = a_k, neg[k] = a_(-1-k)
    pos: RefCell<Vec<Rational>>,
    neg: RefCell<Vec<Rational>>,
}

impl BilateralIRS2 {
    pub fn new(p1: Rational, p2: Rational) -> Result<Self> {
        Self::with_initials(p1, p2, Rational::zero(), Rational::one())
    }

    pub fn from_integers(p1: i64, p2: i64) -> Result<Self> {
        Self::new(int(p1), int(p2))
    }

    pub fn from_coefficients(cs: &CoefficientSet) -> Result<Self> {
        if cs.order() != 2 {
            return Err(Error::OrderMismatch { expected: 2, found: cs.order() });
        }
        Self::new(cs.p(1).clone(), cs.p(2).clone())
    }

    /// Same recurrence with arbitrary `a_0, a_1`.
    pub fn with_initials(p1: Rational, p2: Rational, a0: Rational, a1: Rational) -> Result<Self> {
        if p2.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        Ok(BilateralIRS2 { p1, p2, pos: RefCell::new(vec![a0, a1]), neg: RefCell::new(Vec::new()) })
    }

    pub fn p1(&self) -> &Rational {
        &self.p1
    }

    pub fn p2(&self) -> &Rational {
        &self.p2
    }

    pub fn is_integral(&self) -> bool {
        self.p1.is_integer() && self.p2.is_integer()
    }

    pub fn term(&self, n: i64) -> Rational {
        if n >= 0 {
            let n = n as usize;
            let mut pos = self.pos.borrow_mut();
            while pos.len() <= n {
                let k = pos.len();
                let next = &self.p1 * &pos[k - 1] + &self.p2 * &pos[k - 2];
                pos.push(next);
            }
            pos[n].clone()
        } else {
            let idx = (-1 - n) as usize;
            let (a0, a1) = {
                let pos = self.pos.borrow();
                (pos[0].clone(), pos[1].clone())
            };
            let mut neg = self.neg.borrow_mut();
            while neg.len() <= idx {
                let k = neg.len();
                // a_(m-1) = (a_(m+1) - p1 a_m) / p2 with m = -k
                let (hi, mid) = match k {
                    0 => (&a1, &a0),
                    1 => (&a0, &neg[0]),
                    _ => (&neg[k - 2], &neg[k - 1]),
                };
                let prev = (hi - &self.p1 * mid) / &self.p2;
                neg.push(prev);
            }
            neg[idx].clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub parameters: Vec<(String, i64)>,
    /// Which line of a multi-line family failed, empty otherwise.
    pub detail: String,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.parameters.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        if !self.detail.is_empty() {
            write!(f, " [{}]", self.detail)?;
        }
        write!(f, ": lhs={} rhs={}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub identity: String,
    pub ranges: String,
    pub passed: bool,
    /// Parameter tuples checked.
    pub cases: u64,
    pub counterexample: Option<Counterexample>,
}

impl fmt::Display for IdentityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS ({} cases)", self.cases),
            Some(c) => write!(f, "FAIL at {c}"),
        }
    }
}

/// Failure of one parameter tuple: `(line, lhs, rhs)`.
type Miss = Option<(String, Rational, Rational)>;

fn compare(line: &str, lhs: Rational, rhs: Rational) -> Miss {
    if lhs == rhs {
        None
    } else {
        Some((line.to_string(), lhs, rhs))
    }
}

fn single(identity: &str, params: &[(&str, i64)], miss: Miss) -> IdentityVerdict {
    let ranges = params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", ");
    let counterexample = miss.map(|(detail, lhs, rhs)| Counterexample {
        parameters: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        detail,
        lhs,
        rhs,
    });
    IdentityVerdict {
        identity: identity.to_string(),
        ranges,
        passed: counterexample.is_none(),
        cases: 1,
        counterexample,
    }
}

fn pow(q: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= q;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

fn binom(n: i64, j: i64) -> Rational {
    Rational::from_integer(binomial(n, j as u64))
}

fn check_addition(f: &BilateralIRS2, m: i64, r: i64) -> Miss {
    let lhs = f.term(m + r);
    let rhs = f.term(m) * f.term(r + 1) + f.p2() * f.term(m - 1) * f.term(r);
    compare("", lhs, rhs)
}

/// `sum_j C(n,j) x^j y^(n-j) F~_(shift + j)`.
fn binomial_sum(f: &BilateralIRS2, n: i64, x: &Rational, y: &Rational, shift: i64) -> Rational {
    (0..=n).map(|j| binom(n, j) * pow(x, j) * pow(y, n - j) * f.term(shift + j)).sum()
}

fn check_nonlinear(f: &BilateralIRS2, m: i64, n: i64, r: i64) -> Miss {
    let x = f.term(m);
    let y = f.p2() * f.term(m - 1);
    compare("", f.term(r + m * n), binomial_sum(f, n, &x, &y, r))
}

fn check_negative(f: &BilateralIRS2, m: i64, n: i64) -> Miss {
    let x = f.term(m);
    let y = f.p2() * f.term(m - 1);
    let first = f.p2() * binomial_sum(f, n, &x, &y, -m * n - 1);
    if let Some(miss) = compare("index j-mn-1, expected 1", first, Rational::one()) {
        return Some(miss);
    }
    let second = binomial_sum(f, n, &x, &y, -m * n);
    if let Some(miss) = compare("index j-mn, expected 0", second, Rational::zero()) {
        return Some(miss);
    }
    compare("index j-mn+1, expected 1", binomial_sum(f, n, &x, &y, -m * n + 1), Rational::one())
}

/// `(F~_m, p2 F~_(m-1))` for `m = 2, 3, 4` written through `p1, p2` only.
fn small_m_weights(p1: &Rational, p2: &Rational) -> [(i64, Rational, Rational); 3] {
    let p1sq = p1 * p1;
    [
        (2, p1.clone(), p2.clone()),
        (3, &p1sq + p2, p1 * p2),
        (4, p1 * (&p1sq + p2 * int(2)), p2 * &(&p1sq + p2)),
    ]
}

fn check_small_m(f: &BilateralIRS2, n: i64, r: i64) -> Miss {
    for (m, x, y) in small_m_weights(f.p1(), f.p2()) {
        let lhs = binomial_sum(f, n, &x, &y, r);
        if let Some(miss) = compare(&format!("m={m}"), lhs, f.term(r + m * n)) {
            return Some(miss);
        }
    }
    None
}

/// `c a_(k-1) + d a_(k-2)` as a sequence in `k`.
struct Transfer<'a> {
    seq: &'a BilateralSequence,
    c: Rational,
    d: Rational,
}

impl Transfer<'_> {
    fn at(&self, k: i64) -> Result<Rational> {
        Ok(&self.c * self.seq.term(k - 1)? + &self.d * self.seq.term(k - 2)?)
    }
}

fn check_transfer(t: &Transfer<'_>, p1: &Rational, p2: &Rational, n: i64, r: i64) -> Result<Miss> {
    for (m, x, y) in small_m_weights(p1, p2) {
        let mut lhs = Rational::zero();
        for j in 0..=n {
            lhs += binom(n, j) * pow(&x, j) * pow(&y, n - j) * t.at(r + j)?;
        }
        if let Some(miss) = compare(&format!("m={m}"), lhs, t.at(r + m * n)?) {
            return Ok(Some(miss));
        }
    }
    Ok(None)
}

fn to_int(q: &Rational) -> Result<BigInt> {
    as_integer(q).ok_or_else(|| Error::NonInteger(q.to_string()))
}

/// `a = b (mod |modulus|)`, with modulus 0 meaning exact equality.
pub fn congruent(a: &BigInt, b: &BigInt, modulus: &BigInt) -> bool {
    if modulus.is_zero() {
        a == b
    } else {
        (a - b).mod_floor(&modulus.abs()).is_zero()
    }
}

fn require_integral(f: &BilateralIRS2) -> Result<()> {
    if !f.is_integral() {
        return Err(Error::NonInteger(format!("coefficients {}, {}", f.p1(), f.p2())));
    }
    Ok(())
}

fn check_congruence(f: &BilateralIRS2, m: i64, n: i64, r: i64) -> Result<Miss> {
    let fm = to_int(&f.term(m))?;
    let fm1 = to_int(&f.term(m - 1))?;
    let p2 = to_int(f.p2())?;
    let lhs = to_int(&f.term(m * n + r))?;
    let rhs = num_traits::pow(&p2 * &fm1, n as usize) * to_int(&f.term(r))?
        + num_traits::pow(fm.clone(), n as usize) * to_int(&f.term(n + r))?;
    let modulus = &fm1 * &fm;
    if congruent(&lhs, &rhs, &modulus) {
        Ok(None)
    } else {
        Ok(Some((format!("mod {modulus}"), Rational::from_integer(lhs), Rational::from_integer(rhs))))
    }
}

/// `F~_(m1 m2 ... ms) = 0 mod prod F~_(mk)` when the `F~_(mk)` are pairwise
/// coprime. `Ok(None)` when the precondition fails, `Ok(Some(miss))` otherwise.
fn check_coprime_product(f: &BilateralIRS2, ms: &[i64]) -> Result<Option<Miss>> {
    let values: Vec<BigInt> = ms.iter().map(|&m| to_int(&f.term(m))).collect::<Result<_>>()?;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if !values[i].gcd(&values[j]).is_one() {
                return Ok(None);
            }
        }
    }
    let index: i64 = ms.iter().product();
    let value = to_int(&f.term(index))?;
    let modulus: BigInt = values.iter().product();
    if congruent(&value, &BigInt::zero(), &modulus) {
        Ok(Some(None))
    } else {
        Ok(Some(Some((format!("mod {modulus}"), Rational::from_integer(value), Rational::zero()))))
    }
}

/// `F~_(m+r) = F~_m F~_(r+1) + p2 F~_(m-1) F~_r`.
pub fn addition_formula(irs: &BilateralIRS2, m: i64, r: i64) -> IdentityVerdict {
    single("addition", &[("m", m), ("r", r)], check_addition(irs, m, r))
}

/// `F~_(r+mn) = sum_j C(n,j) F~_m^j (p2 F~_(m-1))^(n-j) F~_(r+j)`.
pub fn nonlinear_expansion(irs: &BilateralIRS2, m: i64, n: i64, r: i64) -> Result<IdentityVerdict> {
    if m < 0 || n < 0 {
        return Err(Error::Precondition(format!("m and n must be nonnegative (got m={m}, n={n})")));
    }
    Ok(single("nonlinear", &[("m", m), ("n", n), ("r", r)], check_nonlinear(irs, m, n, r)))
}

/// The three negative-index sums (equal to 1, 0, 1).
pub fn negative_index_suite(irs: &BilateralIRS2, m: i64, n: i64) -> Result<IdentityVerdict> {
    if m < 1 || n < 0 {
        return Err(Error::Precondition(format!("need m >= 1 and n >= 0 (got m={m}, n={n})")));
    }
    Ok(single("negative", &[("m", m), ("n", n)], check_negative(irs, m, n)))
}

/// The nonlinear expansion at `m = 2, 3, 4` with `F~_m` written in `p1, p2`.
pub fn small_m_suite(irs: &BilateralIRS2, n: i64, r: i64) -> Result<IdentityVerdict> {
    if n < 0 {
        return Err(Error::Precondition(format!("n must be nonnegative (got {n})")));
    }
    Ok(single("small-m", &[("n", n), ("r", r)], check_small_m(irs, n, r)))
}

fn transfer_parts(spec: &SequenceSpec) -> Result<(BilateralSequence, Rational, Rational)> {
    let (c, d) = order2_coefficients(spec)?;
    Ok((BilateralSequence::new(spec.clone()), c, d))
}

/// The `m = 2, 3, 4` identities for an arbitrary order-2 sequence, with
/// `c a_(k-1) + d a_(k-2)` in place of `F~_k`.
pub fn transfer_suite(spec: &SequenceSpec, n: i64, r: i64) -> Result<IdentityVerdict> {
    if n < 0 || r < 1 {
        return Err(Error::Precondition(format!("need n >= 0 and r >= 1 (got n={n}, r={r})")));
    }
    let (seq, c, d) = transfer_parts(spec)?;
    let t = Transfer { seq: &seq, c, d };
    let (p1, p2) = (spec.coefficients().p(1), spec.coefficients().p(2));
    Ok(single("transfer", &[("n", n), ("r", r)], check_transfer(&t, p1, p2, n, r)?))
}

/// `F~_(mn+r) = (p2 F~_(m-1))^n F~_r + F~_m^n F~_(n+r) (mod F~_(m-1) F~_m)`.
pub fn congruence_suite(irs: &BilateralIRS2, m: i64, n: i64, r: i64) -> Result<IdentityVerdict> {
    require_integral(irs)?;
    if m < 1 || n < 0 || r < 0 {
        return Err(Error::Precondition(format!("need m >= 1, n >= 0, r >= 0 (got m={m}, n={n}, r={r})")));
    }
    Ok(single("congruence", &[("m", m), ("n", n), ("r", r)], check_congruence(irs, m, n, r)?))
}

/// `F~_(m1...ms) = 0 mod F~_(m1)...F~_(ms)`; `Ok(None)` when the values are
/// not pairwise coprime and the statement makes no claim.
pub fn coprime_product(irs: &BilateralIRS2, ms: &[i64]) -> Result<Option<IdentityVerdict>> {
    require_integral(irs)?;
    if ms.is_empty() || ms.iter().any(|&m| m < 1) {
        return Err(Error::Precondition("indices must be >= 1".into()));
    }
    let names: Vec<String> = (1..=ms.len()).map(|i| format!("m{i}")).collect();
    let params: Vec<(&str, i64)> = names.iter().map(String::as_str).zip(ms.iter().copied()).collect();
    Ok(check_coprime_product(irs, ms)?.map(|miss| single("coprime-product", &params, miss)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Addition,
    Nonlinear,
    Negative,
    SmallM,
    Transfer,
    Congruence,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        Some(match s {
            "addition" => Suite::Addition,
            "nonlinear" => Suite::Nonlinear,
            "negative" => Suite::Negative,
            "small-m" => Suite::SmallM,
            "transfer" => Suite::Transfer,
            "congruence" => Suite::Congruence,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Addition => "addition",
            Suite::Nonlinear => "nonlinear",
            Suite::Negative => "negative",
            Suite::SmallM => "small-m",
            Suite::Transfer => "transfer",
            Suite::Congruence => "congruence",
        }
    }

    /// Which of `m`, `n`, `r` the suite ranges over.
    pub fn uses(self) -> (bool, bool, bool) {
        match self {
            Suite::Addition => (true, false, true),
            Suite::Nonlinear | Suite::Congruence => (true, true, true),
            Suite::Negative => (true, true, false),
            Suite::SmallM | Suite::Transfer => (false, true, true),
        }
    }
}

/// Inclusive parameter ranges for a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub m: RangeInclusive<i64>,
    pub n: RangeInclusive<i64>,
    pub r: RangeInclusive<i64>,
}

impl Grid {
    pub fn new(m: RangeInclusive<i64>, n: RangeInclusive<i64>, r: RangeInclusive<i64>) -> Self {
        Grid { m, n, r }
    }
}

fn span(r: &RangeInclusive<i64>) -> u64 {
    if r.is_empty() {
        0
    } else {
        (r.end() - r.start()) as u64 + 1
    }
}

/// Number of parameter tuples `suite` visits on `grid`.
pub fn case_count(suite: Suite, grid: &Grid) -> u64 {
    let (um, un, ur) = suite.uses();
    let pick = |used: bool, r: &RangeInclusive<i64>| if used { span(r) } else { 1 };
    pick(um, &grid.m) * pick(un, &grid.n) * pick(ur, &grid.r)
}

fn describe(suite: Suite, grid: &Grid) -> String {
    let (um, un, ur) = suite.uses();
    let mut parts = Vec::new();
    for (used, name, r) in [(um, "m", &grid.m), (un, "n", &grid.n), (ur, "r", &grid.r)] {
        if used {
            parts.push(format!("{name}={}..{}", r.start(), r.end()));
        }
    }
    parts.join(", ")
}

/// Runs `suite` over every tuple in `grid`, stopping at the first failure.
///
/// Identity families built on the IRS use only the coefficients of `spec`;
/// the transfer family uses the sequence itself.
pub fn sweep(suite: Suite, spec: &SequenceSpec, grid: &Grid) -> Result<IdentityVerdict> {
    let (um, un, ur) = suite.uses();
    let one = 0..=0;
    let ms = if um { grid.m.clone() } else { one.clone() };
    let ns = if un { grid.n.clone() } else { one.clone() };
    let rs = if ur { grid.r.clone() } else { one };
    for (used, name, r) in [(um, 'm', &ms), (un, 'n', &ns), (ur, 'r', &rs)] {
        if used && r.is_empty() {
            return Err(Error::Precondition(format!("empty range for {name}: {}..{}", r.start(), r.end())));
        }
    }
    let lowest = |r: &RangeInclusive<i64>, min: i64, name: char| -> Result<()> {
        if *r.start() < min {
            Err(Error::Precondition(format!("{name} must be >= {min} for the {} suite", suite.name())))
        } else {
            Ok(())
        }
    };
    match suite {
        Suite::Addition => {}
        Suite::Nonlinear => {
            lowest(&ms, 0, 'm')?;
            lowest(&ns, 0, 'n')?;
        }
        Suite::Negative => {
            lowest(&ms, 1, 'm')?;
            lowest(&ns, 0, 'n')?;
        }
        Suite::SmallM => lowest(&ns, 0, 'n')?,
        Suite::Transfer => {
            lowest(&ns, 0, 'n')?;
            lowest(&rs, 1, 'r')?;
        }
        Suite::Congruence => {
            lowest(&ms, 1, 'm')?;
            lowest(&ns, 0, 'n')?;
            lowest(&rs, 0, 'r')?;
        }
    }

    let irs = if suite == Suite::Transfer {
        None
    } else {
        let f = BilateralIRS2::from_coefficients(spec.coefficients())?;
        if suite == Suite::Congruence {
            require_integral(&f)?;
        }
        Some(f)
    };
    let transfer = if suite == Suite::Transfer { Some(transfer_parts(spec)?) } else { None };
    let (p1, p2) = (spec.coefficients().p(1).clone(), spec.coefficients().p(2).clone());

    let mut verdict = IdentityVerdict {
        identity: suite.name().to_string(),
        ranges: describe(suite, grid),
        passed: true,
        cases: 0,
        counterexample: None,
    };
    for m in ms.clone() {
        for n in ns.clone() {
            for r in rs.clone() {
                verdict.cases += 1;
                let miss = match (suite, &irs, &transfer) {
                    (Suite::Addition, Some(f), _) => check_addition(f, m, r),
                    (Suite::Nonlinear, Some(f), _) => check_nonlinear(f, m, n, r),
                    (Suite::Negative, Some(f), _) => check_negative(f, m, n),
                    (Suite::SmallM, Some(f), _) => check_small_m(f, n, r),
                    (Suite::Transfer, _, Some((seq, c, d))) => {
                        let t = Transfer { seq, c: c.clone(), d: d.clone() };
                        check_transfer(&t, &p1, &p2, n, r)?
                    }
                    (Suite::Congruence, Some(f), _) => {
                        let mut miss = check_congruence(f, m, n, r)?;
                        if miss.is_none() && r == *rs.start() {
                            if let Some(Some(m2)) = check_coprime_product(f, &[m, n])? {
                                miss = Some(m2);
                            }
                        }
                        miss
                    }
                    _ => unreachable!("sequence prepared for every suite"),
                };
                if let Some((detail, lhs, rhs)) = miss {
                    let mut parameters = Vec::new();
                    for (used, name, v) in [(um, "m", m), (un, "n", n), (ur, "r", r)] {
                        if used {
                            parameters.push((name.to_string(), v));
                        }
                    }
                    verdict.passed = false;
                    verdict.counterexample = Some(Counterexample { parameters, detail, lhs, rhs });
                    return Ok(verdict);
                }
            }
        }
    }
    Ok(verdict)
}

/// Homogeneous form of `a_n = p a_(n-1) + q a_(n-2) + l`.
#[derive(Debug, Clone)]
pub struct Reduction {
    /// Recurrence and initials of `b_n = a_n - k`; order 1 when `q = 0`.
    pub spec: SequenceSpec,
    pub k: Rational,
}

impl Reduction {
    /// `a_n = b_n + k`.
    pub fn original_term(&self, seq: &BilateralSequence, n: i64) -> Result<Rational> {
        Ok(seq.term(n)? + &self.k)
    }
}

/// `k = l / (1 - p - q)`, `b_n = a_n - k`. `initials` holds `a_0` alone when
/// `q = 0`, `(a_0, a_1)` otherwise.
pub fn nonhomogeneous_reduce(
    p: &Rational,
    q: &Rational,
    ell: &Rational,
    initials: &[Rational],
) -> Result<Reduction> {
    let denom = Rational::one() - p - q;
    if denom.is_zero() {
        return Err(Error::Precondition("p + q = 1, so k = l/(1 - p - q) is undefined".into()));
    }
    let k = ell / denom;
    let coeffs = if q.is_zero() { vec![p.clone()] } else { vec![p.clone(), q.clone()] };
    let cs = CoefficientSet::new(coeffs)?;
    let shifted = initials.iter().map(|a| a - &k).collect();
    Ok(Reduction { spec: SequenceSpec::new(cs, shifted)?, k })
}

/// Prebuilt sequences shared by catalog entries.
pub struct CatalogContext {
    fib: BilateralIRS2,
    lucas: BilateralIRS2,
    jac: BilateralIRS2,
    jac_lucas: BilateralIRS2,
    pell: BilateralIRS2,
    trib: BilateralSequence,
    trib_like: BilateralSequence,
    mersenne_irs: BilateralIRS2,
    nzm: Vec<(Rational, Rational, BilateralIRS2, BilateralIRS2)>,
}

impl CatalogContext {
    pub fn new() -> Self {
        let two = |p1: i64, p2: i64, a0: i64, a1: i64| {
            BilateralIRS2::with_initials(int(p1), int(p2), int(a0), int(a1)).expect("p2 != 0")
        };
        let nzm = [(1, 1), (2, 1), (1, 2), (3, -2), (2, 3), (-1, 5)]
            .iter()
            .map(|&(p, q)| (int(p), int(q), two(p, q, 0, 1), two(p, q, 2, p)))
            .collect();
        let trib_cs = CoefficientSet::from_integers(&[1, 1, 1]).expect("valid");
        CatalogContext {
            fib: two(1, 1, 0, 1),
            lucas: two(1, 1, 2, 1),
            jac: two(1, 2, 0, 1),
            jac_lucas: two(1, 2, 2, 1),
            pell: two(2, 1, 0, 1),
            trib: BilateralSequence::irs(&trib_cs),
            trib_like: BilateralSequence::new(
                SequenceSpec::new(trib_cs, vec![int(2), int(1), int(1)]).expect("valid"),
            ),
            mersenne_irs: two(3, -2, 0, 1),
            nzm,
        }
    }
}

impl Default for CatalogContext {
    fn default() -> Self {
        Self::new()
    }
}

/// One entry of the identity catalog. `eval` returns `(lhs, rhs)`, or the
/// first mismatching pair for entries that check several instances.
pub struct NamedIdentity {
    pub name: &'static str,
    pub statement: &'static str,
    /// Smallest index at which the identity is claimed.
    pub min_index: i64,
    /// 1 for identities in `n`, 2 for identities in `(m, n)`.
    pub arity: usize,
    /// False for printed variants kept to document that they do not hold.
    pub expected_to_hold: bool,
    pub eval: fn(&CatalogContext, &[i64]) -> (Rational, Rational),
}

fn two_pow(n: i64) -> Rational {
    pow(&int(2), n)
}

fn sign(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn mersenne(k: i64, n: i64) -> Rational {
    (pow(&int(k), n) - int(1)) / int(k - 1)
}

fn first_miss(pairs: impl Iterator<Item = (Rational, Rational)>) -> (Rational, Rational) {
    let mut last = (Rational::zero(), Rational::zero());
    for (l, r) in pairs {
        if l != r {
            return (l, r);
        }
        last = (l, r);
    }
    last
}

fn t(s: &BilateralSequence, n: i64) -> Rational {
    s.term(n).expect("catalog indices stay above the floor")
}

pub static CATALOG: &[NamedIdentity] = &[
    NamedIdentity {
        name: "carlitz",
        statement: "F[n+1] L[n+2] - F[n+2] L[n] = F[2n+1]",
        min_index: 0,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| {
            let n = a[0];
            let (f, l) = (&c.fib, &c.lucas);
            (f.term(n + 1) * l.term(n + 2) - f.term(n + 2) * l.term(n), f.term(2 * n + 1))
        },
    },
    NamedIdentity {
        name: "fibonacci-pair",
        statement: "F[n+1] F[n+2] - F[n-1] F[n] = F[2n+1]",
        min_index: 0,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| {
            let (n, f) = (a[0], &c.fib);
            (f.term(n + 1) * f.term(n + 2) - f.term(n - 1) * f.term(n), f.term(2 * n + 1))
        },
    },
    NamedIdentity {
        name: "lucas-squares",
        statement: "L[n+1]^2 + L[n]^2 = L[2n] + L[2n+2]",
        min_index: 0,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| {
            let (n, l) = (a[0], &c.lucas);
            (l.term(n + 1) * l.term(n + 1) + l.term(n) * l.term(n), l.term(2 * n) + l.term(2 * n + 2))
        },
    },
    NamedIdentity {
        name: "lucas-from-fibonacci",
        statement: "L[n] = F[n] + 2F[n-1] = F[n+1] + F[n-1]",
        min_index: 0,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| {
            let (n, f) = (a[0], &c.fib);
            let l = c.lucas.term(n);
            first_miss(
                [(l.clone(), f.term(n) + int(2) * f.term(n - 1)), (l, f.term(n + 1) + f.term(n - 1))]
                    .into_iter(),
            )
        },
    },
    NamedIdentity {
        name: "fibonacci-from-lucas",
        statement: "F[n] = (1/5) L[n-1] + (1/5) L[n+1]",
        min_index: 0,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| {
            let n = a[0];
            (c.fib.term(n), frac(1, 5) * (c.lucas.term(n - 1) + c.lucas.term(n + 1)))
        },
    },
    NamedIdentity {
        name: "jacobsthal-lucas-from-jacobsthal",
        statement: "j[n] = J[n] + 4J[n-1]",
        min_index: 0,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| {
            let n = a[0];
            (c.jac_lucas.term(n), c.jac.term(n) + int(4) * c.jac.term(n - 1))
        },
    },
    NamedIdentity {
        name: "jacobsthal-lucas-closed",
        statement: "j[n] = 2^n + (-1)^n",
        min_index: 0,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| (c.jac_lucas.term(a[0]), two_pow(a[0]) + sign(a[0])),
    },
    NamedIdentity {
        name: "jacobsthal-closed",
        statement: "J[n] = (2^n - (-1)^n)/3",
        min_index: 0,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| (c.jac.term(a[0]), (two_pow(a[0]) - sign(a[0])) / int(3)),
    },
    NamedIdentity {
        name: "jacobsthal-square",
        statement: "J[n]^2 + 4J[n-1] J[n] = J[2n]",
        min_index: 0,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| {
            let (n, j) = (a[0], &c.jac);
            (j.term(n) * j.term(n) + int(4) * j.term(n - 1) * j.term(n), j.term(2 * n))
        },
    },
    NamedIdentity {
        name: "jacobsthal-lucas-product",
        statement: "j[n] J[n] = J[2n]",
        min_index: 0,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| (c.jac_lucas.term(a[0]) * c.jac.term(a[0]), c.jac.term(2 * a[0])),
    },
    NamedIdentity {
        name: "jacobsthal-difference",
        statement: "J[m] J[n-1] - J[n] J[m-1] = (-1)^n 2^(n-1) J[m-n]",
        min_index: 0,
        arity: 2,
        expected_to_hold: true,
        eval: |c, a| {
            let (m, n, j) = (a[0], a[1], &c.jac);
            (j.term(m) * j.term(n - 1) - j.term(n) * j.term(m - 1), sign(n) * two_pow(n - 1) * j.term(m - n))
        },
    },
    NamedIdentity {
        name: "jacobsthal-mixed-difference",
        statement: "J[m] j[n] - J[n] j[m] = (-1)^n 2^(n+1) J[m-n]",
        min_index: 0,
        arity: 2,
        expected_to_hold: true,
        eval: |c, a| {
            let (m, n, j, l) = (a[0], a[1], &c.jac, &c.jac_lucas);
            (j.term(m) * l.term(n) - j.term(n) * l.term(m), sign(n) * two_pow(n + 1) * j.term(m - n))
        },
    },
    NamedIdentity {
        name: "jacobsthal-addition",
        statement: "J[m] J[n] + 2J[m] J[n-1] + 2J[n] J[m-1] = J[m+n]",
        min_index: 0,
        arity: 2,
        expected_to_hold: true,
        eval: |c, a| {
            let (m, n, j) = (a[0], a[1], &c.jac);
            (
                j.term(m) * j.term(n)
                    + int(2) * j.term(m) * j.term(n - 1)
                    + int(2) * j.term(n) * j.term(m - 1),
                j.term(m + n),
            )
        },
    },
    NamedIdentity {
        name: "jacobsthal-mixed-sum",
        statement: "J[m] j[n] + J[n] j[m] = 2J[m+n]",
        min_index: 0,
        arity: 2,
        expected_to_hold: true,
        eval: |c, a| {
            let (m, n, j, l) = (a[0], a[1], &c.jac, &c.jac_lucas);
            (j.term(m) * l.term(n) + j.term(n) * l.term(m), int(2) * j.term(m + n))
        },
    },
    NamedIdentity {
        name: "jacobsthal-mixed-sum-printed",
        statement: "J[m] j[n] - J[n] j[m] = 2J[m+n]",
        min_index: 0,
        arity: 2,
        expected_to_hold: false,
        eval: |c, a| {
            let (m, n, j, l) = (a[0], a[1], &c.jac, &c.jac_lucas);
            (j.term(m) * l.term(n) - j.term(n) * l.term(m), int(2) * j.term(m + n))
        },
    },
    NamedIdentity {
        name: "jacobsthal-lucas-shift",
        statement: "j[n] = J[n+1] + 2J[n-1]",
        min_index: 0,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| {
            let n = a[0];
            (c.jac_lucas.term(n), c.jac.term(n + 1) + int(2) * c.jac.term(n - 1))
        },
    },
    NamedIdentity {
        name: "jacobsthal-recurrence",
        statement: "J[n+1] = J[n] + 2J[n-1]",
        min_index: 0,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| {
            let n = a[0];
            (c.jac.term(n + 1), c.jac.term(n) + int(2) * c.jac.term(n - 1))
        },
    },
    NamedIdentity {
        name: "nzm-h-from-g",
        statement: "H[n] = p G[n] + 2q G[n-1] for several (p, q)",
        min_index: 0,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| {
            let n = a[0];
            first_miss(
                c.nzm.iter().map(|(p, q, g, h)| (h.term(n), p * g.term(n) + int(2) * q * g.term(n - 1))),
            )
        },
    },
    NamedIdentity {
        name: "nzm-g-from-h",
        statement: "G[n] = q/(p^2+4q) H[n-1] + 1/(p^2+4q) H[n+1] for several (p, q)",
        min_index: 0,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| {
            let n = a[0];
            first_miss(c.nzm.iter().map(|(p, q, g, h)| {
                let d = p * p + int(4) * q;
                (g.term(n), q / &d * h.term(n - 1) + h.term(n + 1) / &d)
            }))
        },
    },
    NamedIdentity {
        name: "mersenne-homogeneous",
        statement: "M[n] = 3M[n-1] - 2M[n-2] with M[n] = 2^n - 1",
        min_index: 2,
        arity: 1,
        expected_to_hold: true,
        eval: |_, a| {
            let n = a[0];
            (mersenne(2, n), int(3) * mersenne(2, n - 1) - int(2) * mersenne(2, n - 2))
        },
    },
    NamedIdentity {
        name: "mersenne-nonhomogeneous",
        statement: "M[n] = 2M[n-1] + 1 with M[n] = 2^n - 1",
        min_index: 1,
        arity: 1,
        expected_to_hold: true,
        eval: |_, a| (mersenne(2, a[0]), int(2) * mersenne(2, a[0] - 1) + int(1)),
    },
    NamedIdentity {
        name: "mersenne-general",
        statement:
            "M[n] = (k^n - 1)/(k - 1) satisfies M[n] = (k+1)M[n-1] - kM[n-2] and M[n] = kM[n-1] + 1, k = 2..6",
        min_index: 2,
        arity: 1,
        expected_to_hold: true,
        eval: |_, a| {
            let n = a[0];
            first_miss((2..=6).flat_map(|k| {
                let m = |i| mersenne(k, i);
                [(m(n), int(k + 1) * m(n - 1) - int(k) * m(n - 2)), (m(n), int(k) * m(n - 1) + int(1))]
            }))
        },
    },
    NamedIdentity {
        name: "mersenne-irs",
        statement: "2^n - 1 is the IRS of {3, -2}",
        min_index: 0,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| (c.mersenne_irs.term(a[0]), mersenne(2, a[0])),
    },
    NamedIdentity {
        name: "pell-nonhomogeneous",
        statement: "Pbar[n] = 2Pbar[n-1] + Pbar[n-2] + 1 with Pbar[n] = P[n] - 1/2",
        min_index: 2,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| {
            let n = a[0];
            let bar = |i| c.pell.term(i) - frac(1, 2);
            (bar(n), int(2) * bar(n - 1) + bar(n - 2) + int(1))
        },
    },
    NamedIdentity {
        name: "tribonacci-shift",
        statement: "T[n] = 2T[n-1] - T[n-4]",
        min_index: 4,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| {
            let n = a[0];
            (t(&c.trib, n), int(2) * t(&c.trib, n - 1) - t(&c.trib, n - 4))
        },
    },
    NamedIdentity {
        name: "tribonacci-like-7term",
        statement:
            "6a[n+1] - 16a[n] + 7a[n-1] + 2a[n-2] + 6a[n-3] - 4a[n-4] - a[n-5] = 0 for a = 2, 1, 1, 4, ...",
        min_index: 5,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| {
            let n = a[0];
            let s = |k: i64| t(&c.trib_like, n + k);
            let lhs = int(6) * s(1) - int(16) * s(0) + int(7) * s(-1) + int(2) * s(-2) + int(6) * s(-3)
                - int(4) * s(-4)
                - s(-5);
            (lhs, Rational::zero())
        },
    },
    NamedIdentity {
        name: "tribonacci-7term",
        statement: "T[n] + T[n-1] - 5T[n-2] - 2T[n-3] + T[n-4] + 3T[n-5] + T[n-6] = 0",
        min_index: 6,
        arity: 1,
        expected_to_hold: true,
        eval: |c, a| {
            let n = a[0];
            let s = |k: i64| t(&c.trib, n - k);
            let lhs = s(0) + s(1) - int(5) * s(2) - int(2) * s(3) + s(4) + int(3) * s(5) + s(6);
            (lhs, Rational::zero())
        },
    },
];

pub fn find_identity(name: &str) -> Result<&'static NamedIdentity> {
    CATALOG.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}

/// Checks a catalog identity for every index in `lo..=hi` (every pair for
/// two-index identities). Indices below the identity's domain are rejected.
pub fn named_identity_suite(name: &str, lo: i64, hi: i64) -> Result<IdentityVerdict> {
    let entry = find_identity(name)?;
    if lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    if lo < entry.min_index {
        return Err(Error::Precondition(format!(
            "{name} is stated for indices >= {}, got {lo}",
            entry.min_index
        )));
    }
    let ctx = CatalogContext::new();
    let labels = if entry.arity == 1 { "n" } else { "m, n" };
    let mut verdict = IdentityVerdict {
        identity: name.to_string(),
        ranges: format!("{labels} in {lo}..{hi}"),
        passed: true,
        cases: 0,
        counterexample: None,
    };
    let tuples: Vec<Vec<i64>> = if entry.arity == 1 {
        (lo..=hi).map(|n| vec![n]).collect()
    } else {
        (lo..=hi).flat_map(|m| (lo..=hi).map(move |n| vec![m, n])).collect()
    };
    for args in tuples {
        verdict.cases += 1;
        let (lhs, rhs) = (entry.eval)(&ctx, &args);
        if lhs != rhs {
            let names = if entry.arity == 1 { &["n"][..] } else { &["m", "n"][..] };
            verdict.passed = false;
            verdict.counterexample = Some(Counterexample {
                parameters: names.iter().map(|s| s.to_string()).zip(args).collect(),
                detail: String::new(),
                lhs,
                rhs,
            });
            break;
        }
    }
    Ok(verdict)
}
