//! Conversions between a sequence and the IRS of its coefficient set.
//!
//! Forward: every sequence is a fixed combination of shifted IRS terms.
//! Backward: the IRS is a combination of shifted terms of the sequence, found
//! by solving an `r x r` system built from the sequence values, which may be
//! singular.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::rational::Rational;
use crate::sequence::{BilateralSequence, CoefficientSet, SequenceSpec};

/// Weights `w_j = sum_{k=j}^{r-2} a_k p_{r+j-k}` for `j = 0..r-2`, so that
/// `a_n = a_(r-1) F~_n + sum_j w_j F~_(n-1-j)`.
pub fn representation_weights(spec: &SequenceSpec) -> Vec<Rational> {
    let r = spec.order();
    let a = spec.initials();
    let p = spec.coefficients();
    (0..r.saturating_sub(1)).map(|j| (j..=r - 2).map(|k| &a[k] * p.p(r + j - k)).sum()).collect()
}

/// `a_n` computed from IRS values only.
pub fn represent_by_irs(spec: &SequenceSpec, n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::IndexBelowFloor { index: n, floor: 0 });
    }
    let irs = BilateralSequence::irs(spec.coefficients());
    let r = spec.order();
    let mut acc = &spec.initials()[r - 1] * irs.term(n)?;
    for (j, w) in representation_weights(spec).iter().enumerate() {
        acc += w * irs.term(n - 1 - j as i64)?;
    }
    Ok(acc)
}

/// `sum_{j=0}^{k} p_(r+j-k) F~_(n-1-j)`, which is 1 when `k == n` and 0 otherwise.
pub fn delta_identity_check(coefficients: &CoefficientSet, k: i64, n: i64) -> Result<Rational> {
    let r = coefficients.order() as i64;
    if !(0..=r - 2).contains(&k) || !(0..=r - 2).contains(&n) {
        return Err(Error::Precondition(alloc::format!(
            "k and n must lie in 0..={} (got k={k}, n={n})",
            r - 2
        )));
    }
    let irs = BilateralSequence::irs(coefficients);
    let mut acc = Rational::zero();
    for j in 0..=k {
        acc += coefficients.p((r + j - k) as usize) * irs.term(n - 1 - j)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Linear system for the coefficients `c_j` of `F~_n = sum c_j a_(n + delta_j)`.
#[derive(Debug, Clone)]
pub struct ToeplitzSystem {
    pub matrix: ExactMatrix,
    pub rhs: Vec<Rational>,
    pub parity: Parity,
    pub unknown_shifts: Vec<i64>,
    /// Offset of the sequence index for each unknown, same order as `unknown_shifts`.
    pub deltas: Vec<i64>,
}

fn shifts_and_deltas(r: i64) -> (Parity, Vec<i64>, Vec<i64>) {
    if r % 2 == 0 {
        let h = r / 2;
        let shifts: Vec<i64> = (h..3 * h).collect();
        let deltas = shifts.iter().map(|&j| if j < r { r - j } else { r - j - 1 }).collect();
        (Parity::Even, shifts, deltas)
    } else {
        let h = (r - 1) / 2;
        let shifts: Vec<i64> = (h..=3 * h).collect();
        let deltas = shifts.iter().map(|&j| r - j - 1).collect();
        (Parity::Odd, shifts, deltas)
    }
}

/// Row `t` holds `a_(t + delta_j)`; solving against `e_r` matches the IRS on
/// its initial window `t = 0..r-1`.
pub fn build_toeplitz(spec: &SequenceSpec) -> ToeplitzSystem {
    let r = spec.order();
    let (parity, unknown_shifts, deltas) = shifts_and_deltas(r as i64);
    let seq = BilateralSequence::new(spec.clone());
    let mut entries = Vec::with_capacity(r * r);
    for t in 0..r as i64 {
        for d in &deltas {
            entries.push(seq.term(t + d).expect("deltas stay above the index floor"));
        }
    }
    let mut rhs = vec![Rational::zero(); r];
    rhs[r - 1] = Rational::one();
    ToeplitzSystem {
        matrix: ExactMatrix::new(r, r, entries).expect("r x r entries"),
        rhs,
        parity,
        unknown_shifts,
        deltas,
    }
}

pub fn solve_toeplitz(system: &ToeplitzSystem) -> Result<IrsRepresentation> {
    let c = system.matrix.solve(&system.rhs)?;
    let terms = system.deltas.iter().copied().zip(c).map(|(delta, c)| IrsTerm { delta, c }).collect();
    Ok(IrsRepresentation { terms })
}

/// Builds and solves the system in one step.
pub fn irs_representation(spec: &SequenceSpec) -> Result<IrsRepresentation> {
    solve_toeplitz(&build_toeplitz(spec))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrsTerm {
    pub delta: i64,
    pub c: Rational,
}

/// `F~_n = sum c * a_(n + delta)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrsRepresentation {
    pub terms: Vec<IrsTerm>,
}

fn index_label(delta: i64) -> String {
    match delta {
        0 => "a[n]".into(),
        d if d > 0 => alloc::format!("a[n+{d}]"),
        d => alloc::format!("a[n-{}]", -d),
    }
}

impl IrsRepresentation {
    pub fn evaluate(&self, seq: &BilateralSequence, n: i64) -> Result<Rational> {
        let mut acc = Rational::zero();
        for t in &self.terms {
            acc += &t.c * seq.term(n + t.delta)?;
        }
        Ok(acc)
    }

    /// Human-oriented form, e.g. `F~_n = (6/19)a[n+1] - (4/19)a[n] - (1/19)a[n-1]`.
    pub fn pretty(&self) -> String {
        let mut out = String::from("F~_n =");
        let mut first = true;
        for t in self.terms.iter().filter(|t| !t.c.is_zero()) {
            let mag = t.c.abs();
            let sign = if t.c.is_negative() { "-" } else { "+" };
            if first {
                out.push(' ');
                if t.c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&alloc::format!(" {sign} "));
            }
            first = false;
            if !mag.is_one() {
                if mag.is_integer() {
                    out.push_str(&alloc::format!("{mag}"));
                } else {
                    out.push_str(&alloc::format!("({mag})"));
                }
            }
            out.push_str(&index_label(t.delta));
        }
        if first {
            out.push_str(" 0");
        }
        out
    }
}

impl fmt::Display for IrsRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("F~_n =")?;
        let mut first = true;
        for t in self.terms.iter().filter(|t| !t.c.is_zero()) {
            f.write_str(if first { " " } else { " + " })?;
            first = false;
            write!(f, "({})*{}", t.c, index_label(t.delta))?;
        }
        if first {
            f.write_str(" 0")?;
        }
        Ok(())
    }
}

fn require_order2(spec: &SequenceSpec) -> Result<()> {
    if spec.order() != 2 {
        return Err(Error::OrderMismatch { expected: 2, found: spec.order() });
    }
    Ok(())
}

/// `(c1, c2)` with `F~_n = c1 a_(n+1) + c2 a_(n-1)` for an order-2 sequence.
pub fn order2_coefficients(spec: &SequenceSpec) -> Result<(Rational, Rational)> {
    require_order2(spec)?;
    let (p1, p2) = (spec.coefficients().p(1), spec.coefficients().p(2));
    let (a0, a1) = (&spec.initials()[0], &spec.initials()[1]);
    if p1.is_zero() {
        return Err(Error::Precondition("p_1 must be nonzero".into()));
    }
    let d = a1 * a1 - a0 * a1 * p1 - a0 * a0 * p2;
    if d.is_zero() {
        return Err(Error::Precondition("a_1^2 - a_0 a_1 p_1 - a_0^2 p_2 must be nonzero".into()));
    }
    let denom = p1 * &d;
    Ok(((a1 - a0 * p1) / &denom, -(a1 * p2) / &denom))
}

fn same_order2_family(specs: &[&SequenceSpec]) -> Result<()> {
    for s in specs {
        require_order2(s)?;
    }
    let first = specs[0].coefficients();
    if specs.iter().any(|s| s.coefficients() != first) {
        return Err(Error::CoefficientMismatch);
    }
    Ok(())
}

/// True when `{b1, b2}` spans the order-2 family and neither member is the
/// shifted IRS `F~_(n-1)`, whose initials are `(1/p_2, 0)`.
pub fn is_nontrivial_basis(b1: &SequenceSpec, b2: &SequenceSpec) -> Result<bool> {
    same_order2_family(&[b1, b2])?;
    let (x, y) = (b1.initials(), b2.initials());
    let det = &x[0] * &y[1] - &y[0] * &x[1];
    let inv_p2 = b1.coefficients().p(2).recip();
    let shifted = |v: &[Rational]| v[1].is_zero() && v[0] == inv_p2;
    Ok(!det.is_zero() && !shifted(x) && !shifted(y))
}

/// `(c1, c2)` with `target = c1 b1 + c2 b2`; only needs a nonzero determinant.
pub fn decompose_in_basis(
    target: &SequenceSpec,
    b1: &SequenceSpec,
    b2: &SequenceSpec,
) -> Result<(Rational, Rational)> {
    same_order2_family(&[target, b1, b2])?;
    let (x, y, t) = (b1.initials(), b2.initials(), target.initials());
    let det = &x[0] * &y[1] - &y[0] * &x[1];
    if det.is_zero() {
        return Err(Error::SingularSystem);
    }
    let c1 = (&t[0] * &y[1] - &y[0] * &t[1]) / &det;
    let c2 = (&x[0] * &t[1] - &t[0] * &x[1]) / &det;
    Ok((c1, c2))
}
