//! Roots of the characteristic polynomial with multiplicities.
//!
//! Multiplicities come from an exact square-free factorization over the
//! rationals, so they are never guessed from floating-point proximity. Each
//! square-free factor is then solved by Aberth iteration.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hp::{ComplexHP, HpReal};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::sequence::CoefficientSet;

pub const MAX_ITERATIONS: usize = 500;
const GUARD_BITS: usize = 32;

/// A distinct root and its multiplicity.
#[derive(Debug, Clone)]
pub struct Root {
    pub alpha: ComplexHP,
    pub multiplicity: usize,
}

#[derive(Debug, Clone)]
pub struct RootDecomposition {
    roots: Vec<Root>,
    source: Polynomial,
    residuals: Vec<HpReal>,
    precision: usize,
}

impl RootDecomposition {
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// The characteristic polynomial `t^r - p_1 t^(r-1) - ... - p_r`.
    pub fn source_polynomial(&self) -> &Polynomial {
        &self.source
    }

    /// `|p(alpha)|` for each root, in the same order as `roots()`.
    pub fn residuals(&self) -> &[HpReal] {
        &self.residuals
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn multiplicity_sum(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

/// `2^-k` at the given precision.
pub(crate) fn pow2_neg(k: usize, precision: usize) -> HpReal {
    let two = HpReal::from_i64(2, precision);
    two.powi(k as u64).recip()
}

/// Clustering radius: distinct roots must be at least this far apart.
pub fn clustering_radius(precision_bits: usize) -> HpReal {
    pow2_neg(precision_bits / 3, precision_bits + GUARD_BITS)
}

/// Residual bound `2^-(precision/2)` every reported root must meet.
pub fn residual_bound(precision_bits: usize) -> HpReal {
    pow2_neg(precision_bits / 2, precision_bits + GUARD_BITS)
}

pub fn characteristic_roots(
    coefficients: &CoefficientSet,
    precision_bits: usize,
) -> Result<RootDecomposition> {
    if precision_bits < 16 {
        return Err(Error::Precondition(alloc::format!(
            "precision must be at least 16 bits, got {precision_bits}"
        )));
    }
    let source = coefficients.characteristic_polynomial();
    let work = precision_bits + GUARD_BITS;

    let mut roots = Vec::new();
    for (factor, multiplicity) in source.square_free_decomposition() {
        for alpha in solve_square_free(&factor, work, precision_bits)? {
            roots.push(Root { alpha, multiplicity });
        }
    }

    let radius = clustering_radius(precision_bits);
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            if (&roots[i].alpha - &roots[j].alpha).abs() < radius {
                return Err(Error::AmbiguousClustering { precision_bits });
            }
        }
    }

    let src: Vec<HpReal> = source.coeffs().iter().map(|c| HpReal::from_rational(c, work)).collect();
    let bound = residual_bound(precision_bits);
    let mut residuals = Vec::with_capacity(roots.len());
    for root in &roots {
        let res = horner(&src, &root.alpha).0.abs();
        if res > bound {
            return Err(Error::NotConverged { iterations: MAX_ITERATIONS, precision_bits });
        }
        residuals.push(res);
    }

    Ok(RootDecomposition { roots, source, residuals, precision: work })
}

/// `(p(z), p'(z))` for real coefficients in ascending order.
fn horner(coeffs: &[HpReal], z: &ComplexHP) -> (ComplexHP, ComplexHP) {
    let p = z.precision();
    let mut value = ComplexHP::zero(p);
    let mut deriv = ComplexHP::zero(p);
    for c in coeffs.iter().rev() {
        deriv = &(&deriv * z) + &value;
        value = &value * z;
        value.re = &value.re + c;
    }
    (value, deriv)
}

fn solve_square_free(factor: &Polynomial, work: usize, precision_bits: usize) -> Result<Vec<ComplexHP>> {
    let monic = factor.monic();
    let degree = monic.degree().unwrap_or(0);
    match degree {
        0 => return Ok(Vec::new()),
        1 => {
            let root = -monic.coeff(0);
            return Ok(alloc::vec![ComplexHP::from_rational(&root, work)]);
        }
        _ => {}
    }
    let coeffs: Vec<HpReal> = monic.coeffs().iter().map(|c| HpReal::from_rational(c, work)).collect();

    // Cauchy bound, then points R * u^k with u = (3 + 4i)/5 on the unit circle.
    let mut bound = Rational::zero();
    for c in &monic.coeffs()[..degree] {
        if c.abs() > bound {
            bound = c.abs();
        }
    }
    let radius = HpReal::from_rational(&(bound + Rational::one()), work);
    let u = ComplexHP::new(
        HpReal::from_rational(&Rational::new(3.into(), 5.into()), work),
        HpReal::from_rational(&Rational::new(4.into(), 5.into()), work),
    );
    let mut z: Vec<ComplexHP> = Vec::with_capacity(degree);
    let mut w = ComplexHP::one(work);
    for _ in 0..degree {
        w = &w * &u;
        z.push(w.scale(&radius));
    }

    let stop = pow2_neg(work - GUARD_BITS / 2, work);
    let one = HpReal::from_i64(1, work);
    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let mut worst = HpReal::zero(work);
        for k in 0..degree {
            let (value, deriv) = horner(&coeffs, &z[k]);
            if value.is_zero() {
                continue;
            }
            let newton = &value / &deriv;
            let mut sum = ComplexHP::zero(work);
            for j in 0..degree {
                if j != k {
                    sum = &sum + &(&z[k] - &z[j]).recip();
                }
            }
            let denom = &ComplexHP::one(work) - &(&newton * &sum);
            let step = &newton / &denom;
            let scale = {
                let m = z[k].abs();
                if m > one {
                    m
                } else {
                    one.clone()
                }
            };
            let rel = &step.abs() / &scale;
            if rel > worst {
                worst = rel;
            }
            z[k] = &z[k] - &step;
        }
        if worst <= stop {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NotConverged { iterations: MAX_ITERATIONS, precision_bits });
    }

    // A genuine non-real root this close to the axis would sit within the
    // clustering radius of its conjugate and be rejected anyway.
    let snap = pow2_neg(work - GUARD_BITS, work);
    for root in &mut z {
        let scale = {
            let m = root.abs();
            if m > one {
                m
            } else {
                one.clone()
            }
        };
        if &root.im.abs() / &scale <= snap {
            root.im = HpReal::zero(work);
        }
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decompose(p: &[i64]) -> RootDecomposition {
        characteristic_roots(&CoefficientSet::from_integers(p).unwrap(), 256).unwrap()
    }

    #[test]
    fn golden_ratio_pair() {
        let d = decompose(&[1, 1]);
        assert_eq!(d.roots().len(), 2);
        let mut re: Vec<_> = d.roots().iter().map(|r| r.alpha.re.to_decimal(30)).collect();
        re.sort();
        assert_eq!(re[0], "-0.618033988749894848204586834366");
        assert_eq!(re[1], "1.618033988749894848204586834366");
        assert!(d.roots().iter().all(|r| r.multiplicity == 1 && r.alpha.im.is_zero()));
    }

    #[test]
    fn double_root_is_exact() {
        let d = decompose(&[2, -1]);
        assert_eq!(d.roots().len(), 1);
        assert_eq!(d.roots()[0].multiplicity, 2);
        assert_eq!(d.roots()[0].alpha, ComplexHP::from_i64(1, d.precision()));
    }

    #[test]
    fn tribonacci_real_root() {
        let d = decompose(&[1, 1, 1]);
        assert_eq!(d.multiplicity_sum(), 3);
        let real: Vec<_> = d.roots().iter().filter(|r| r.alpha.im.is_zero()).collect();
        assert_eq!(real.len(), 1);
        assert_eq!(real[0].alpha.re.to_decimal(12), "1.839286755214");
        let bound = residual_bound(256);
        assert!(d.residuals().iter().all(|r| *r <= bound));
    }

    #[test]
    fn mixed_multiplicities() {
        // (t-1)^2 (t-2) = t^3 - 4t^2 + 5t - 2
        let d = decompose(&[4, -5, 2]);
        let mut mults: Vec<_> =
            d.roots().iter().map(|r| (r.alpha.re.to_decimal(6), r.multiplicity)).collect();
        mults.sort();
        assert_eq!(mults, [("1.000000".into(), 2), ("2.000000".into(), 1)]);
    }

    #[test]
    fn higher_degree_with_complex_roots() {
        // t^5 - 9: five simple roots of modulus 9^(1/5)
        let d = decompose(&[0, 0, 0, 0, 9]);
        assert_eq!(d.roots().len(), 5);
        let target = HpReal::from_i64(9, 288);
        for r in d.roots() {
            let m5 = r.alpha.norm_sqr().sqrt().powi(5);
            assert!((&m5 - &target).abs().to_f64() < 1e-60);
        }
    }
}
