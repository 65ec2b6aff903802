//! Exact arithmetic for linear recurring sequences of arbitrary order.
//!
//! A sequence in this crate satisfies `a[n] = p[1] a[n-1] + ... + p[r] a[n-r]`
//! with rational coefficients and `p[r] != 0`. Every such coefficient set has a
//! distinguished member, the impulse response sequence (IRS), whose initial
//! window is `0, ..., 0, 1`. The modules here build the IRS, its generating
//! function and root-based closed form, convert between an arbitrary sequence
//! and the IRS in both directions, and check identity families exactly.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the command
//! line live in the `lrs` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod applications;
pub mod closed_form;
pub mod error;
pub mod genfunc;
pub mod hp;
pub mod identity;
pub mod irs_algebra;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod sequence;

pub use error::{Error, Result};
pub use genfunc::{RationalGF, ShiftTerm};
pub use hp::{ComplexHP, HpReal};
pub use poly::Polynomial;
pub use rational::Rational;
pub use roots::{Root, RootDecomposition};
pub use sequence::{make_irs, BilateralSequence, CoefficientSet, SequenceSpec};
