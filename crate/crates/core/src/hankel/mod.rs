//! Hankel matrices of sequence windows, their exact determinants, the closed
//! forms known for them, and the sweep that compares the two.

mod closed_form;
mod sweep;

pub use closed_form::{closed_form_det, ClosedFormId, ClosedFormQuery, Domain};
pub use sweep::{equivalence_sweep, plan, run_cells, PlannedCell, SweepCell, SweepConfig, SweepMode, SweepReport, Verdict};

use thiserror::Error;

use crate::arith::{det_exact, leading_minors_exact, ArithError, RingMatrix, Scalar};
use crate::sequences::{seq_terms, SequenceSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HankelError {
    #[error("outside the formula's domain: {0}")]
    OutOfDomain(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// `d_k(n)` for one sequence: shift `k`, size `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelQuery {
    pub spec: SequenceSpec,
    pub k: usize,
    pub n: usize,
}

impl HankelQuery {
    pub fn new(spec: SequenceSpec, k: usize, n: usize) -> Self {
        HankelQuery { spec, k, n }
    }

    /// Number of sequence terms the matrix reads.
    pub fn terms_needed(&self) -> usize {
        terms_needed(self.k, self.n)
    }
}

pub fn terms_needed(k: usize, n: usize) -> usize {
    if n == 0 {
        0
    } else {
        2 * n - 1 + k
    }
}

/// The `n x n` matrix `(terms[i + j + k])`.
pub fn hankel_matrix(terms: &[Scalar], k: usize, n: usize) -> RingMatrix<Scalar> {
    RingMatrix::from_fn(n, |i, j| terms[i + j + k].clone())
}

pub fn hankel_det_of_terms(terms: &[Scalar], k: usize, n: usize) -> Scalar {
    det_exact(&hankel_matrix(terms, k, n))
}

/// `[d_k(0), ..., d_k(max_n)]` from one elimination pass over the largest matrix.
pub fn hankel_dets_of_terms(terms: &[Scalar], k: usize, max_n: usize) -> Vec<Scalar> {
    leading_minors_exact(&hankel_matrix(terms, k, max_n))
}

pub fn hankel_det(q: &HankelQuery) -> Scalar {
    if q.n == 0 {
        return Scalar::one();
    }
    let terms = seq_terms(&q.spec, q.terms_needed()).terms;
    hankel_det_of_terms(&terms, q.k, q.n)
}

/// `[d_k(0), ..., d_k(max_n)]` for a sequence.
pub fn hankel_dets(spec: &SequenceSpec, k: usize, max_n: usize) -> Vec<Scalar> {
    let terms = seq_terms(spec, terms_needed(k, max_n)).terms;
    hankel_dets_of_terms(&terms, k, max_n)
}

/// `d_2(n) d_0(n) = d_0(n+1) d_2(n-1) + d_1(n)^2`, all five by elimination.
pub fn condensation_check(spec: &SequenceSpec, n: usize) -> bool {
    assert!(n >= 1, "condensation needs n >= 1");
    let d = |k: usize, size: usize| hankel_det(&HankelQuery::new(spec.clone(), k, size));
    let lhs = &d(2, n) * &d(0, n);
    let rhs = &(&d(0, n + 1) * &d(2, n - 1)) + &d(1, n).pow(2);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::Named;

    #[test]
    fn known_examples() {
        let cat = SequenceSpec::named(Named::Catalan);
        assert_eq!(hankel_det(&HankelQuery::new(cat.clone(), 2, 4)), Scalar::int(5));
        let motzkin: Vec<Scalar> = hankel_dets(&SequenceSpec::named(Named::Motzkin), 1, 11);
        let expected: Vec<Scalar> = [1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0].iter().map(|&v| Scalar::int(v)).collect();
        assert_eq!(motzkin, expected);
        let sym = SequenceSpec::symbolic(crate::sequences::Family::Restricted, 3);
        assert_eq!(hankel_det(&HankelQuery::new(sym, 0, 5)), Scalar::zero());
        let cb = SequenceSpec::named(Named::CentralBinomial);
        assert_eq!(hankel_det(&HankelQuery::new(cb, 2, 3)), Scalar::int(56));
    }

    #[test]
    fn condensation_examples() {
        assert!(condensation_check(&SequenceSpec::named(Named::Catalan), 3));
        assert!(condensation_check(&SequenceSpec::restricted(3, Scalar::int(1), Scalar::int(1)), 5));
        assert!(condensation_check(&SequenceSpec::named(Named::Delannoy), 1));
    }
}
