use hankel_core::arith::{det_exact, Point, RingMatrix, Scalar};
use hankel_core::hankel::{condensation_check, hankel_det, hankel_det_of_terms, hankel_dets, HankelQuery};
use hankel_core::sampling::random_points;
use hankel_core::sequences::{seq_terms, Family, SequenceSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// Laplace expansion along the first row; the independent reference.
fn cofactor_det(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one();
    }
    let mut total = Scalar::zero();
    for j in 0..n {
        let minor: Vec<Vec<Scalar>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect()).collect();
        let term = &m[0][j] * &cofactor_det(&minor);
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

fn matrix(rows: &[Vec<Scalar>]) -> RingMatrix<Scalar> {
    RingMatrix::from_rows(rows.to_vec()).unwrap()
}

fn entry() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        4 => (-9i64..=9).prop_map(Scalar::int),
        1 => (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Scalar::ratio(n, d)),
        1 => (-3i64..=3).prop_map(|c| &Scalar::int(c) * &Scalar::a()),
        1 => Just(Scalar::b()),
    ]
}

fn square(max: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    (0..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(entry(), n), n))
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

proptest! {
    #[test]
    fn elimination_matches_cofactor_expansion(rows in square(5)) {
        prop_assert_eq!(det_exact(&matrix(&rows)), cofactor_det(&rows));
    }

    #[test]
    fn row_swap_flips_sign(rows in square(5), i in 0usize..5, j in 0usize..5) {
        let n = rows.len();
        prop_assume!(n >= 2 && i % n != j % n);
        let mut swapped = rows.clone();
        swapped.swap(i % n, j % n);
        prop_assert_eq!(det_exact(&matrix(&swapped)), -det_exact(&matrix(&rows)));
    }

    #[test]
    fn zero_row_gives_zero(rows in square(5), i in 0usize..5) {
        let n = rows.len();
        prop_assume!(n >= 1);
        let mut z = rows.clone();
        z[i % n] = vec![Scalar::zero(); n];
        prop_assert!(det_exact(&matrix(&z)).is_zero());
    }

    #[test]
    fn evaluation_commutes_with_determinant(
        fam in 0usize..3, m in 1u32..=4, k in 0usize..=2, size in 0usize..=5,
        a in (-5i64..=5, 1i64..=4), b in (-5i64..=5, 1i64..=4), t in (-5i64..=5, 1i64..=4),
    ) {
        let family = Family::ALL[fam];
        let point = Point::new(ratio(a.0, a.1), ratio(b.0, b.1), ratio(t.0, t.1));
        let symbolic = hankel_det(&HankelQuery::new(SequenceSpec::symbolic(family, m), k, size));
        let numeric = hankel_det(&HankelQuery::new(SequenceSpec::symbolic(family, m).at(&point), k, size));
        prop_assert_eq!(Scalar::from(symbolic.eval(&point)), numeric);
    }
}

#[test]
fn hankel_det_is_determinant_of_hankel_matrix() {
    for p in random_points(5, 3) {
        for family in Family::ALL {
            let spec = SequenceSpec::symbolic(family, 3).at(&p);
            let terms = seq_terms(&spec, 12).terms;
            for k in 0..=2 {
                for n in 0..=5 {
                    let rows: Vec<Vec<Scalar>> = (0..n).map(|i| (0..n).map(|j| terms[i + j + k].clone()).collect()).collect();
                    assert_eq!(hankel_det_of_terms(&terms, k, n), cofactor_det(&rows), "{} k={k} n={n}", spec.label());
                }
            }
        }
    }
}

#[test]
fn condensation_holds() {
    for family in Family::ALL {
        for m in 1..=4 {
            let spec = SequenceSpec::symbolic(family, m);
            for n in 1..=5 {
                assert!(condensation_check(&spec, n), "{} n={n}", spec.label());
            }
        }
    }
}

#[test]
fn cubic_d0_does_not_depend_on_t() {
    let shifted = hankel_dets(&SequenceSpec::symbolic(Family::Shifted, 3), 0, 9);
    let restricted = hankel_dets(&SequenceSpec::symbolic(Family::Restricted, 3), 0, 9);
    assert_eq!(shifted, restricted);
}

#[test]
fn catalan_determinants_by_hand() {
    // Catalan numbers from the binomial formula.
    let c = |n: i64| -> Scalar {
        let mut v = Scalar::one();
        for i in 0..n {
            v = &v * &Scalar::ratio(2 * (2 * i + 1), i + 2);
        }
        v
    };
    let terms: Vec<Scalar> = (0..20).map(c).collect();
    let spec_terms = seq_terms(&SequenceSpec::named(hankel_core::sequences::Named::Catalan), 20).terms;
    assert_eq!(terms, spec_terms);
    for n in 0..=6 {
        assert_eq!(hankel_det_of_terms(&terms, 2, n), Scalar::int(n as i64 + 1));
        assert_eq!(hankel_det_of_terms(&terms, 3, n), Scalar::int(((n + 1) * (n + 2) * (2 * n + 3) / 6) as i64));
    }
}
