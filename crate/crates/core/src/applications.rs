//! Stirling numbers of the second kind as impulse responses, Wythoff-type
//! arrays, and the boustrophedon transform.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::closed_form::agrees;
use crate::error::{Error, Result};
use crate::hp::{ComplexHP, HpReal};
use crate::poly::Polynomial;
use crate::rational::{binomial, int, Rational};
use crate::sequence::{BilateralSequence, CoefficientSet, SequenceSpec};

/// `(p_1..p_k)` with `prod_{j=1}^{k} (1 - j t) = 1 - sum p_j t^j`.
pub fn stirling_coefficients(k: usize) -> Result<CoefficientSet> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let mut prod = Polynomial::one();
    for j in 1..=k as i64 {
        prod = prod.mul(&Polynomial::new(vec![int(1), int(-j)]));
    }
    CoefficientSet::new((1..=k).map(|j| -prod.coeff(j)).collect())
}

/// `S(n+1, k)` for `n = 0..count-1`, read off the IRS of `stirling_coefficients(k)`.
pub fn stirling_column(k: usize, count: usize) -> Result<Vec<Rational>> {
    let cs = stirling_coefficients(k)?;
    if count == 0 {
        return Ok(Vec::new());
    }
    BilateralSequence::irs(&cs).terms_range(0, count as i64 - 1)
}

/// Rows `0..=n_max` of `S(n, k)` from `S(n+1, k) = k S(n, k) + S(n, k-1)`.
pub fn stirling_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let stay = prev.get(k).map_or(BigInt::zero(), |s| s * k);
                let step = if k > 0 { prev.get(k - 1).cloned().unwrap_or_default() } else { BigInt::zero() };
                stay + step
            })
            .collect();
        rows.push(row);
    }
    rows
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WythoffVariant {
    Fibonacci,
    Pell,
}

impl WythoffVariant {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "fibonacci" => Some(WythoffVariant::Fibonacci),
            "pell" => Some(WythoffVariant::Pell),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WythoffVariant::Fibonacci => "fibonacci",
            WythoffVariant::Pell => "pell",
        }
    }

    fn coefficients(self) -> CoefficientSet {
        let p = match self {
            WythoffVariant::Fibonacci => [1, 1],
            WythoffVariant::Pell => [2, 1],
        };
        CoefficientSet::from_integers(&p).expect("nonzero p_2")
    }

    /// Second entry of row `j`: `floor((j+1) phi)` or `floor((j+1)(1 + sqrt 2)) - 1`.
    pub fn second_entry(self, j: u64) -> BigInt {
        let m = BigInt::from(j) + 1u8;
        match self {
            WythoffVariant::Fibonacci => (&m + (&m * &m * 5u8).sqrt()) / 2u8,
            WythoffVariant::Pell => &m + (&m * &m * 2u8).sqrt() - 1u8,
        }
    }

    pub fn row_spec(self, j: u64) -> SequenceSpec {
        let initials = vec![Rational::from_integer(j.into()), Rational::from_integer(self.second_entry(j))];
        SequenceSpec::new(self.coefficients(), initials).expect("two initials")
    }
}

/// Row `j` is the variant's recurrence started at `(j, second_entry(j))`.
/// `entries` holds every column, including the two that precede the
/// vertical line in the printed tables.
#[derive(Debug, Clone)]
pub struct WythoffArray {
    pub variant: WythoffVariant,
    pub rows: Vec<SequenceSpec>,
    pub entries: Vec<Vec<BigInt>>,
}

/// Columns left of the vertical line in the printed tables.
pub const WYTHOFF_LEAD_COLUMNS: usize = 2;

pub fn wythoff_array(variant: WythoffVariant, n_rows: usize, n_cols: usize) -> Result<WythoffArray> {
    if n_rows == 0 || n_cols == 0 {
        return Err(Error::Precondition("rows and columns must be at least 1".into()));
    }
    let rows: Vec<SequenceSpec> = (0..n_rows as u64).map(|j| variant.row_spec(j)).collect();
    let entries = rows
        .iter()
        .map(|spec| {
            BilateralSequence::new(spec.clone())
                .terms_range(0, n_cols as i64 - 1)
                .map(|v| v.into_iter().map(|q| q.to_integer()).collect())
        })
        .collect::<Result<_>>()?;
    Ok(WythoffArray { variant, rows, entries })
}

/// Binet-type form of row `j`, term `n`: with roots `a, b` and initials
/// `(j, w)`, `(w - j b)/(a - b) a^n - (w - j a)/(a - b) b^n`.
pub fn wythoff_closed_form_value(
    variant: WythoffVariant,
    j: u64,
    n: i64,
    precision_bits: usize,
) -> Result<HpReal> {
    if n < 0 {
        return Err(Error::IndexBelowFloor { index: n, floor: 0 });
    }
    let p = precision_bits + 32;
    let w = HpReal::from_bigint(&variant.second_entry(j), p);
    let jj = HpReal::from_i64(j as i64, p);
    let one = HpReal::from_i64(1, p);
    let (alpha, beta, denom, w) = match variant {
        WythoffVariant::Fibonacci => {
            let s5 = HpReal::from_i64(5, p).sqrt();
            let two = HpReal::from_i64(2, p);
            (&(&one + &s5) / &two, &(&one - &s5) / &two, s5, w)
        }
        WythoffVariant::Pell => {
            let s2 = HpReal::from_i64(2, p).sqrt();
            let d = &s2 * &HpReal::from_i64(2, p);
            (&one + &s2, &one - &s2, d, w)
        }
    };
    let ca = &(&w - &(&jj * &beta)) / &denom;
    let cb = &(&w - &(&jj * &alpha)) / &denom;
    let n = n as u64;
    Ok(&(&ca * &alpha.powi(n)) - &(&cb * &beta.powi(n)))
}

pub fn wythoff_closed_form_check(
    variant: WythoffVariant,
    j: u64,
    n: i64,
    precision_bits: usize,
) -> Result<bool> {
    let value = wythoff_closed_form_value(variant, j, n, precision_bits)?;
    let exact = BilateralSequence::new(variant.row_spec(j)).term(n)?;
    Ok(agrees(&ComplexHP::from_real(value), &exact, precision_bits))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub rows: usize,
    pub bound: u64,
    /// Values in `[0, bound]` seen more than once.
    pub duplicates: Vec<u64>,
    /// Values in `[0, bound]` never seen.
    pub gaps: Vec<u64>,
}

impl PartitionReport {
    pub fn holds(&self) -> bool {
        self.duplicates.is_empty() && self.gaps.is_empty()
    }
}

/// Checks that `0` together with the entries right of the vertical line in
/// the first `n_rows` rows of the Wythoff array hits each of `0..=bound`
/// exactly once. Fails with `InsufficientRows` when row `n_rows` would
/// already contribute a value `<= bound`.
pub fn wythoff_partition_check(n_rows: usize, bound: u64) -> Result<PartitionReport> {
    if n_rows == 0 {
        return Err(Error::InsufficientRows { rows: 0, bound });
    }
    let variant = WythoffVariant::Fibonacci;
    let first_unseen = BilateralSequence::new(variant.row_spec(n_rows as u64))
        .term(WYTHOFF_LEAD_COLUMNS as i64)?
        .to_integer();
    if first_unseen <= BigInt::from(bound) {
        return Err(Error::InsufficientRows { rows: n_rows, bound });
    }
    let len = usize::try_from(bound).map_err(|_| Error::Precondition("bound too large".into()))? + 1;
    let mut seen = vec![0u32; len];
    seen[0] += 1;
    for j in 0..n_rows as u64 {
        let seq = BilateralSequence::new(variant.row_spec(j));
        let mut n = WYTHOFF_LEAD_COLUMNS as i64;
        loop {
            let v = seq.term(n)?.to_integer();
            match v.to_u64() {
                Some(v) if v <= bound => seen[v as usize] += 1,
                _ => break,
            }
            n += 1;
        }
    }
    let duplicates = (0..len).filter(|&i| seen[i] > 1).map(|i| i as u64).collect();
    let gaps = (0..len).filter(|&i| seen[i] == 0).map(|i| i as u64).collect();
    Ok(PartitionReport { rows: n_rows, bound, duplicates, gaps })
}

/// `T[n][k]` for `0 <= k <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoustrophedonTriangle {
    pub rows: Vec<Vec<Rational>>,
}

impl BoustrophedonTriangle {
    /// `b_n = T[n][n]`.
    pub fn diagonal(&self) -> Vec<Rational> {
        self.rows.iter().map(|r| r[r.len() - 1].clone()).collect()
    }

    /// Re-checks the left edge against `a` and every interior entry.
    pub fn verify(&self, a: &[Rational]) -> bool {
        if self.rows.len() != a.len() {
            return false;
        }
        for (n, row) in self.rows.iter().enumerate() {
            if row.len() != n + 1 || row[0] != a[n] {
                return false;
            }
            if n == 0 {
                continue;
            }
            let prev = &self.rows[n - 1];
            for k in 0..n {
                if row[k + 1] != &row[k] + &prev[n - 1 - k] {
                    return false;
                }
            }
        }
        true
    }
}

/// `T[n][0] = a_n`, `T[n+1][k+1] = T[n+1][k] + T[n][n-k]`, `b_n = T[n][n]`.
pub fn boustrophedon(a: &[Rational]) -> Result<(Vec<Rational>, BoustrophedonTriangle)> {
    if a.is_empty() {
        return Err(Error::Precondition("input sequence is empty".into()));
    }
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(a.len());
    rows.push(vec![a[0].clone()]);
    for n in 1..a.len() {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(a[n].clone());
        for k in 0..n {
            let next = &row[k] + &prev[n - 1 - k];
            row.push(next);
        }
        rows.push(row);
    }
    let tri = BoustrophedonTriangle { rows };
    Ok((tri.diagonal(), tri))
}

/// Zigzag numbers `Z_0..Z_(len-1)`, the transform of `1, 0, 0, ...`.
pub fn zigzag(len: usize) -> Vec<Rational> {
    if len == 0 {
        return Vec::new();
    }
    let mut delta = vec![Rational::zero(); len];
    delta[0] = Rational::one();
    boustrophedon(&delta).expect("nonempty").0
}

/// `b_n = sum_k C(n,k) Z_(n-k) a_k`, the coefficient form of multiplying the
/// exponential generating function by `sec t + tan t`.
pub fn boustrophedon_egf_check(a: &[Rational]) -> Result<bool> {
    let (b, _) = boustrophedon(a)?;
    let z = zigzag(a.len());
    for n in 0..a.len() {
        let conv: Rational =
            (0..=n).map(|k| Rational::from_integer(binomial(n as i64, k as u64)) * &z[n - k] * &a[k]).sum();
        if conv != b[n] {
            return Ok(false);
        }
    }
    Ok(true)
}
