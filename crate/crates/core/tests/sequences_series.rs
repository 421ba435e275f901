use hankel_core::arith::{Point, Scalar};
use hankel_core::conjectures::partial_sum_terms;
use hankel_core::series::gen_series;
use hankel_core::sequences::{closed_form_terms, seq_terms, Family, Named, SequenceSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Point> {
    let q = (-7i64..=7, 1i64..=4).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)));
    (q.clone(), q.clone(), q).prop_map(|(a, b, t)| Point::new(a, b, t))
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::int(x)).collect()
}

proptest! {
    #[test]
    fn recurrence_series_and_closed_sum_agree(fam in 0usize..3, m in 1u32..=5, p in point()) {
        let spec = SequenceSpec::symbolic(Family::ALL[fam], m).at(&p);
        let rec = seq_terms(&spec, 16).terms;
        let series = gen_series(&spec, 15).unwrap();
        prop_assert_eq!(series.coeffs(), rec.as_slice());
        if let Some(closed) = closed_form_terms(&spec, 16) {
            prop_assert_eq!(closed.terms, rec);
        }
    }

    #[test]
    fn symbolic_terms_specialize(fam in 0usize..3, m in 1u32..=4, p in point()) {
        let sym = SequenceSpec::symbolic(Family::ALL[fam], m);
        let at = seq_terms(&sym.at(&p), 12).terms;
        let evaluated: Vec<Scalar> = seq_terms(&sym, 12).terms.iter().map(|x| Scalar::from(x.eval(&p))).collect();
        prop_assert_eq!(evaluated, at);
    }

    #[test]
    fn partial_sums_agree_below_mk(m in 1u32..=4, k in 1u32..=4, p in point()) {
        let (a, b, _) = p.as_scalars();
        let n = (m * k) as usize;
        let h = partial_sum_terms(m, k, &a, &b, n + 3);
        let g = seq_terms(&SequenceSpec::unrestricted(m, a, b), n + 4).terms;
        prop_assert_eq!(&h[..n], &g[..n]);
    }
}

#[test]
fn named_sequences() {
    let first = |n: Named| seq_terms(&SequenceSpec::named(n), 8).terms;
    assert_eq!(first(Named::Catalan), ints(&[1, 1, 2, 5, 14, 42, 132, 429]));
    assert_eq!(first(Named::AeratedCatalan), ints(&[1, 0, 1, 0, 2, 0, 5, 0]));
    assert_eq!(first(Named::Motzkin), ints(&[1, 1, 2, 4, 9, 21, 51, 127]));
    assert_eq!(first(Named::Schroeder), ints(&[1, 2, 6, 22, 90, 394, 1806, 8558]));
    assert_eq!(first(Named::CentralTrinomial), ints(&[1, 1, 3, 7, 19, 51, 141, 393]));
    assert_eq!(first(Named::Delannoy), ints(&[1, 3, 13, 63, 321, 1683, 8989, 48639]));
    let central: Vec<i64> = (0..8).map(|n| binom(2 * n, n)).collect();
    assert_eq!(first(Named::CentralBinomial), ints(&central));
}

#[test]
fn partial_sums_by_binomials() {
    // H_2(k, z, 0, 1) has coefficients binom(2n, n) - binom(2n, n - k) at z^(2n).
    for k in 1..=4 {
        let h = partial_sum_terms(2, k, &Scalar::zero(), &Scalar::one(), 20);
        for n in 0..=10 {
            assert_eq!(h[2 * n as usize], Scalar::int(binom(2 * n, n) - binom(2 * n, n - k as i64)), "k={k} n={n}");
            if n < 10 {
                assert!(h[2 * n as usize + 1].is_zero());
            }
        }
    }
}

#[test]
fn parameter_parsing() {
    assert_eq!("-3/6".parse::<Scalar>().unwrap(), Scalar::ratio(-1, 2));
    assert_eq!("4/2".parse::<Scalar>().unwrap(), Scalar::int(2));
    assert!("1.5".parse::<Scalar>().is_err());
    assert!("1/0".parse::<Scalar>().is_err());
}
