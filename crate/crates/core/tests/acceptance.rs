//! End-to-end acceptance checks, one line per criterion. Runs without the
//! libtest harness so the lines always print.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hankel_core::arith::{Point, Scalar};
use hankel_core::conjectures::{check_all, partial_sum_terms, ConjectureGrid, ConjectureId};
use hankel_core::hankel::{
    equivalence_sweep, hankel_dets, hankel_dets_of_terms, ClosedFormId, SweepConfig, SweepMode, SweepReport,
};
use hankel_core::orthopoly::{jacobi_from_moments, moments_from_jacobi, JacobiCoeffs};
use hankel_core::paths::{lgv_det_oracle, path_weight_dp, PathModel, PathSystemQuery};
use hankel_core::sampling::{random_points, sweep_points};
use hankel_core::sequences::{seq_terms, Family, Named, SequenceSpec};
use hankel_core::series::{verify_vanishing, Kernel};

type Outcome = Result<(), String>;

fn int(v: i64) -> Scalar {
    Scalar::int(v)
}

fn pow2(e: i64) -> Scalar {
    if e >= 0 {
        int(2).pow(e as u32)
    } else {
        Scalar::ratio(1, 1 << -e)
    }
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn expect_dets(label: &str, spec: &SequenceSpec, k: usize, sizes: std::ops::RangeInclusive<usize>, f: impl Fn(i64) -> Scalar) -> Outcome {
    let dets = hankel_dets(spec, k, *sizes.end());
    for n in sizes {
        let want = f(n as i64);
        if dets[n] != want {
            return Err(format!("{label} k={k} size {n}: got {}, expected {want}", dets[n]));
        }
    }
    Ok(())
}

fn named(n: Named) -> SequenceSpec {
    SequenceSpec::named(n)
}

fn sweep(ids: &[ClosedFormId], mode: SweepMode, numeric: usize, symbolic: usize, m_max: u32) -> Result<SweepReport, String> {
    let config = SweepConfig {
        ids: ids.to_vec(),
        mode,
        max_size_numeric: numeric,
        max_size_symbolic: symbolic,
        m_max,
        ..SweepConfig::default()
    };
    let report = equivalence_sweep(&config).map_err(|e| e.to_string())?;
    if report.cells.is_empty() {
        return Err("sweep produced no cells".into());
    }
    if let Some(bad) = report.cells.iter().find(|c| c.predicted != c.computed) {
        return Err(format!(
            "{} m={} k={} size {} at {:?}: predicted {}, computed {}",
            bad.id.name(),
            bad.m,
            bad.k,
            bad.size,
            bad.point,
            bad.predicted,
            bad.computed
        ));
    }
    Ok(report)
}

fn catalan() -> Outcome {
    let cat = named(Named::Catalan);
    expect_dets("catalan", &cat, 0, 0..=12, |_| int(1))?;
    expect_dets("catalan", &cat, 1, 0..=12, |_| int(1))?;
    expect_dets("catalan", &cat, 2, 0..=12, |n| int(n + 1))?;
    for k in 0..=4i64 {
        expect_dets("catalan", &cat, k as usize, 0..=8, |n| {
            let mut p = int(1);
            for j in 1..k {
                for i in 1..=j {
                    p = &p * &Scalar::ratio(2 * n + j + i, j + i);
                }
            }
            p
        })?;
    }
    Ok(())
}

fn motzkin() -> Outcome {
    let m = named(Named::Motzkin);
    expect_dets("motzkin", &m, 0, 0..=13, |_| int(1))?;
    expect_dets("motzkin", &m, 1, 0..=13, |n| int([1, 1, 0, -1, -1, 0][(n % 6) as usize]))?;
    // 1, 2, 2, 3, 4, 4, 5, 6, 6, ...
    expect_dets("motzkin", &m, 2, 0..=13, |n| int(n + 1 - (n + 1) / 3))
}

fn central() -> Outcome {
    let cb = named(Named::CentralBinomial);
    expect_dets("central binomial", &cb, 0, 1..=12, |n| pow2(n - 1))?;
    expect_dets("central binomial", &cb, 1, 0..=12, pow2)?;
    expect_dets("central binomial", &cb, 2, 0..=12, |n| &pow2(n) * &int(2 * n + 1))?;
    let ct = named(Named::CentralTrinomial);
    let lucas = |n: i64| int([2, 1, -1, -2, -1, 1][(n % 6) as usize]);
    let r = |n: i64| int(6 * (n / 3) + 2 + n % 3);
    expect_dets("central trinomial", &ct, 0, 1..=12, |n| pow2(n - 1))?;
    expect_dets("central trinomial", &ct, 1, 1..=12, |n| &pow2(n - 1) * &lucas(n))?;
    expect_dets("central trinomial", &ct, 2, 1..=12, |n| &pow2(n - 1) * &r(n))
}

fn schroeder_delannoy() -> Outcome {
    let r = named(Named::Schroeder);
    expect_dets("schroeder", &r, 0, 0..=10, |n| pow2(binom2(n)))?;
    expect_dets("schroeder", &r, 1, 0..=10, |n| pow2(binom2(n + 1)))?;
    expect_dets("schroeder", &r, 2, 0..=10, |n| &pow2(binom2(n + 1)) * &(&pow2(n + 1) - &int(1)))?;
    let d = named(Named::Delannoy);
    let base = |n: i64| pow2(binom2(n + 1) - 1);
    expect_dets("delannoy", &d, 0, 1..=10, base)?;
    expect_dets("delannoy", &d, 1, 1..=10, |n| &base(n) * &(&pow2(n) + &int(1)))?;
    expect_dets("delannoy", &d, 2, 1..=10, |n| {
        let inner = &(&pow2(2 * n + 1) - &int(1)) + &(&int(2 * n + 1) * &pow2(n));
        &base(n) * &inner
    })?;
    sweep(&[ClosedFormId::Thm4_1, ClosedFormId::Cor4_3, ClosedFormId::Thm4_4], SweepMode::Points, 9, 0, 1).map(|_| ())
}

fn roots() -> Outcome {
    use ClosedFormId::*;
    sweep(&[A, AStar, B, BStar], SweepMode::Both, 7, 7, 2).map(|_| ())
}

fn zero_patterns() -> Outcome {
    let report = sweep(&[ClosedFormId::ZeroPattern5_1], SweepMode::Both, 14, 14, 6)?;
    let families: std::collections::BTreeSet<Family> = report.cells.iter().map(|c| c.family).collect();
    if families.len() != 2 {
        return Err(format!("expected both families, got {families:?}"));
    }
    let ms: std::collections::BTreeSet<u32> = report.cells.iter().map(|c| c.m).collect();
    if ms.iter().next_back() != Some(&6) {
        return Err(format!("grid did not reach m = 6: {ms:?}"));
    }
    match report.cells.iter().find(|c| !c.computed.is_zero()) {
        Some(c) => Err(format!("m={} k={} size {}: {} is not zero", c.m, c.k, c.size, c.computed)),
        None => Ok(()),
    }
}

fn theorems() -> Outcome {
    use ClosedFormId::*;
    sweep(
        &[Thm5_4, Thm5_5, Thm5_6, Thm6_1, Thm6_2, Thm6_3, Thm6_4, Thm6_5, Thm7_1, Thm7_2, Thm7_3, Thm7_4],
        SweepMode::Both,
        12,
        9,
        5,
    )
    .map(|_| ())
}

fn vanishing() -> Outcome {
    let (a, b, t) = (Scalar::a(), Scalar::b(), Scalar::t());
    for kernel in [Kernel::Fib, Kernel::FibT(t), Kernel::Lucas] {
        for m in 2..=5 {
            for n in 0..=3 {
                let v = verify_vanishing(n, m, &a, &b, &kernel).map_err(|e| e.to_string())?;
                if !v.holds {
                    return Err(format!("{} m={m} n={n}: coefficient {:?} is nonzero", kernel.name(), v.offending));
                }
            }
        }
    }
    Ok(())
}

fn favard() -> Outcome {
    let pts = random_points(99, 2 * 12);
    for count in 1..=12 {
        let s: Vec<Scalar> = (0..count).map(|i| pts[i].as_scalars().0).collect();
        let t: Vec<Scalar> = (0..count - 1).map(|i| pts[12 + i].as_scalars().1).collect();
        let j = JacobiCoeffs::new(s, t);
        let moments = moments_from_jacobi(&j, 2 * count).map_err(|e| e.to_string())?;
        let back = jacobi_from_moments(&moments, count).map_err(|e| e.to_string())?;
        if back != j {
            return Err(format!("round trip failed at N = {count}"));
        }
    }
    for p in random_points(7, 5) {
        let (a, b, t) = p.as_scalars();
        let count = 9;
        let terms = seq_terms(&SequenceSpec::shifted(3, a.clone(), b.clone(), t.clone()), 2 * count + 1).terms;
        let moments: Vec<Scalar> = terms[1..].iter().map(|x| x.div(&a).unwrap()).collect();
        let got = jacobi_from_moments(&moments, count).map_err(|e| e.to_string())?;
        let w = |n: usize| &(&int(n as i64 + 1) * &a) + &t;
        for i in 0..count {
            let (n, r) = (i / 3, i % 3);
            let s = [w(n), a.clone(), -w(n)][r].clone();
            if got.s[i] != s {
                return Err(format!("s({i}) at {p:?}: got {}, expected {s}", got.s[i]));
            }
            if i + 1 < count {
                let tv = match r {
                    0 => b.div(&w(n)).unwrap(),
                    1 => -b.div(&w(n)).unwrap(),
                    _ => -(&w(n) * &w(n + 1)),
                };
                if got.t[i] != tv {
                    return Err(format!("t({i}) at {p:?}: got {}, expected {tv}", got.t[i]));
                }
            }
        }
    }
    Ok(())
}

fn oracles() -> Outcome {
    let mut settings: Vec<(usize, Option<Point>)> = sweep_points(2024, 3).into_iter().map(|p| (20, Some(p))).collect();
    settings.push((12, None));
    for family in Family::ALL {
        for m in 1..=5 {
            for (max, point) in &settings {
                let spec = match point {
                    Some(p) => SequenceSpec::symbolic(family, m).at(p),
                    None => SequenceSpec::symbolic(family, m),
                };
                let model = PathModel::for_spec(&spec);
                let terms = seq_terms(&spec, max + 1).terms;
                for (n, term) in terms.iter().enumerate() {
                    let dp = path_weight_dp(&model, n);
                    if &dp != term {
                        return Err(format!("{} n={n}: paths give {dp}, sequence has {term}", spec.label()));
                    }
                }
            }
        }
    }
    for family in [Family::Restricted, Family::Shifted] {
        for m in 1..=4 {
            let spec = SequenceSpec::symbolic(family, m);
            let model = PathModel::for_spec(&spec);
            // m = 1 has vertical down steps and far more path systems.
            let max = if m == 1 { 4 } else { 5 };
            for k in 0..=2 {
                let dets = hankel_dets(&spec, k, max);
                for (n, det) in dets.iter().enumerate() {
                    let w = lgv_det_oracle(&PathSystemQuery::new(model.clone(), k, n)).map_err(|e| e.to_string())?;
                    if &w != det {
                        return Err(format!("{} k={k} size {n}: path systems give {w}, determinant is {det}", spec.label()));
                    }
                }
            }
        }
    }
    Ok(())
}

fn conjectures() -> Outcome {
    let start = Instant::now();
    let reports = check_all(&ConjectureGrid::default());
    let elapsed = start.elapsed();
    if reports.len() != ConjectureId::ALL.len() {
        return Err(format!("{} reports for {} ids", reports.len(), ConjectureId::ALL.len()));
    }
    for r in &reports {
        if r.cells.is_empty() {
            return Err(format!("{} produced no cells", r.id));
        }
        if !r.theorem_cells_match() {
            return Err(format!("{}: {} theorem-backed cells mismatch", r.id, r.theorem_mismatches));
        }
    }
    // D^(2, k)(n, 0, 1) prefixes as displayed.
    let displayed: [(u32, &[i64]); 3] = [
        (3, &[1, 1, 2, 4, 4, 6, 9, 9, 12, 16, 16, 20]),
        (5, &[1, 1, 2, 4, 8, 16, 16, 24, 36, 54, 81, 81, 108, 144, 192]),
        (7, &[1, 1, 2, 4, 8, 16, 32, 64, 64, 96, 144, 216, 324, 486, 729, 729, 972]),
    ];
    for (k, want) in displayed {
        let n = want.len() - 1;
        let terms = partial_sum_terms(2, k, &Scalar::zero(), &Scalar::one(), 2 * n);
        let got = hankel_dets_of_terms(&terms, 0, n);
        let want: Vec<Scalar> = want.iter().map(|&v| int(v)).collect();
        if got != want {
            let shown: Vec<String> = got.iter().map(|v| v.to_string()).collect();
            return Err(format!("D^(2,{k}) = {}", shown.join(",")));
        }
    }
    if elapsed > Duration::from_secs(600) {
        return Err(format!("default grids took {elapsed:?}"));
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("Catalan determinants, shifts 0..4", catalan),
        ("Motzkin determinants, shifts 0..2", motzkin),
        ("central binomial and trinomial determinants", central),
        ("Schroeder and Delannoy determinants, m = 1 theorems at random points", schroeder_delannoy),
        ("two-root closed forms A, A*, B, B*", roots),
        ("zero pattern, m <= 6, both families", zero_patterns),
        ("closed forms of the m >= 3 theorems", theorems),
        ("kernel vanishing, m = 2..5, n = 0..3", vanishing),
        ("moment / recurrence round trip and cubic shifted coefficients", favard),
        ("path-sum and path-system oracles", oracles),
        ("conjecture harness on default grids", conjectures),
    ];
    let mut failed = 0;
    for (i, (label, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {label} ({secs:.1}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {label} ({secs:.1}s): {e}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
