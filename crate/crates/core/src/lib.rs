//! Exact Hankel determinants of generalized Catalan and central binomial
//! sequence families.
//!
//! Everything runs over [`arith::Scalar`], an exact ring of integers,
//! rationals and polynomials in the formal parameters `a`, `b`, `t`.

pub mod arith;
pub mod sequences;
pub mod series;
pub mod hankel;
pub mod sampling;
pub mod orthopoly;
pub mod paths;
pub mod conjectures;
