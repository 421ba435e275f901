//! Exact coefficient arithmetic and division-free determinants.

mod matrix;
mod poly;
mod scalar;
mod upoly;

pub use matrix::{bareiss_det, bareiss_det_scalar, berkowitz_char_poly, det_exact, leading_minors, leading_minors_exact, RingMatrix};
pub use poly::{Monomial, Poly, Var};
pub use scalar::{is_negative_constant, Point, Scalar};
pub use upoly::UniPoly;

use std::fmt::Debug;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("cannot parse exact value {0:?}")]
    Parse(String),
    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
}

/// A commutative ring the determinant routines can run over. Arithmetic
/// takes operands by reference so generic code never clones them.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn from_i64(v: i64) -> Self {
        Scalar::int(v)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}
