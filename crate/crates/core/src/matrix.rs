//! Dense exact matrices and fraction-free (Bareiss) elimination.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    /// Row-major entries; both dimensions must be positive.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::Precondition(alloc::format!(
                "a {rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Precondition("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        (0..self.rows).map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn determinant(&self) -> Result<Rational> {
        self.square()?;
        let zeros = vec![Rational::zero(); self.rows];
        Ok(Bareiss::run(self, &zeros).det)
    }

    /// Unique solution of `self * x = rhs`, or `SingularSystem`.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Vec<Rational>> {
        self.square()?;
        if rhs.len() != self.rows {
            return Err(Error::Precondition(alloc::format!(
                "right-hand side has {} entries, expected {}",
                rhs.len(),
                self.rows
            )));
        }
        Bareiss::run(self, rhs).solution.ok_or(Error::SingularSystem)
    }

    fn square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::Precondition(alloc::format!(
                "matrix is {}x{}, not square",
                self.rows,
                self.cols
            )));
        }
        Ok(())
    }
}

struct Bareiss {
    det: Rational,
    solution: Option<Vec<Rational>>,
}

impl Bareiss {
    fn run(m: &ExactMatrix, rhs: &[Rational]) -> Bareiss {
        let n = m.rows;
        // Clear denominators row by row; the scale factors go back into det.
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for (i, b) in rhs.iter().enumerate() {
            let lcm =
                m.row(i).iter().chain(core::iter::once(b)).fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let row =
                m.row(i).iter().chain(core::iter::once(b)).map(|q| q.numer() * (&lcm / q.denom())).collect();
            scale *= &lcm;
            a.push(row);
        }

        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let mut best: Option<(usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() > a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return Bareiss { det: Rational::zero(), solution: None };
            };
            if pi != k {
                a.swap(pi, k);
                sign = -sign;
            }
            if pj != k {
                for row in a.iter_mut() {
                    row.swap(pj, k);
                }
                perm.swap(pj, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..=n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }

        let det = Rational::new(sign * &a[n - 1][n - 1], scale);
        let mut y = vec![Rational::zero(); n];
        for k in (0..n).rev() {
            let mut acc = Rational::from_integer(a[k][n].clone());
            for j in k + 1..n {
                acc -= Rational::from_integer(a[k][j].clone()) * &y[j];
            }
            y[k] = acc / Rational::from_integer(a[k][k].clone());
        }
        let mut x = vec![Rational::zero(); n];
        for (k, &col) in perm.iter().enumerate() {
            x[col] = y[k].clone();
        }
        Bareiss { det, solution: Some(x) }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[&[0, 1, -2], &[1, 0, 1], &[2, 1, 0]]).determinant().unwrap(), int(0));
        assert_eq!(m(&[&[2, 1], &[1, 3]]).determinant().unwrap(), int(5));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), int(-1));
        let h =
            ExactMatrix::from_rows((1..=3).map(|i| (1..=3).map(|j| frac(1, i + j - 1)).collect()).collect())
                .unwrap();
        assert_eq!(h.determinant().unwrap(), frac(1, 2160));
    }

    #[test]
    fn solves_with_pivoting() {
        let a = m(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]);
        let x = a.solve(&[int(1), int(1), int(1)]).unwrap();
        assert_eq!(x, [frac(1, 3), frac(1, 2), int(1)]);
        let b = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(b.solve(&[int(1), int(0)]), Err(Error::SingularSystem));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(ExactMatrix::new(0, 1, vec![]).is_err());
        assert!(ExactMatrix::new(2, 1, vec![int(1), int(2)]).unwrap().determinant().is_err());
    }
}
