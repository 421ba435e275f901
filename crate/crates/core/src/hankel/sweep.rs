//! Compares every closed form against elimination over its whole domain.
//!
//! Cells are grouped by the sequence and shift they read, so each group costs
//! one leading-minor pass over its largest matrix. Groups run in parallel and
//! the report is sorted by cell key.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{closed_form_det, hankel_dets, ClosedFormId, ClosedFormQuery, HankelError};
use crate::arith::{Point, Scalar};
use crate::sampling::sweep_points;
use crate::sequences::{Family, SequenceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SweepMode {
    /// Rational points only.
    Points,
    /// Formal `a`, `b`, `t` only.
    Symbolic,
    Both,
}

impl std::str::FromStr for SweepMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "points" | "numeric" => Ok(SweepMode::Points),
            "symbolic" => Ok(SweepMode::Symbolic),
            "both" => Ok(SweepMode::Both),
            _ => Err(format!("unknown mode {s:?}, expected numeric, symbolic or both")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub ids: Vec<ClosedFormId>,
    pub mode: SweepMode,
    /// Largest matrix size at rational points.
    pub max_size_numeric: usize,
    /// Largest matrix size with formal parameters.
    pub max_size_symbolic: usize,
    pub m_max: u32,
    /// Largest shift for the ids that cover every shift.
    pub k_max_all: usize,
    /// Random points in addition to the all-ones point.
    pub random_points: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            ids: ClosedFormId::ALL.to_vec(),
            mode: SweepMode::Both,
            max_size_numeric: 12,
            max_size_symbolic: 9,
            m_max: 5,
            k_max_all: 4,
            random_points: 3,
            seed: 2024,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Match,
    Mismatch,
}

/// One compared value. `point` is `None` in symbolic mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepCell {
    pub id: ClosedFormId,
    pub family: Family,
    pub m: u32,
    pub k: usize,
    pub size: usize,
    pub point_index: Option<usize>,
    pub point: Option<Point>,
    pub predicted: Scalar,
    pub computed: Scalar,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub cells: Vec<SweepCell>,
    pub matches: usize,
    pub mismatches: usize,
}

impl SweepReport {
    pub fn all_match(&self) -> bool {
        self.mismatches == 0
    }
}

/// A planned comparison before any arithmetic happens.
#[derive(Clone, Debug)]
pub struct PlannedCell {
    pub query: ClosedFormQuery,
    pub point_index: Option<usize>,
    pub point: Option<Point>,
}

fn query_at(id: ClosedFormId, family: Family, m: u32, k: usize, size: usize, point: Option<&Point>) -> ClosedFormQuery {
    let d = id.domain();
    if d.fixed.is_some() {
        return ClosedFormQuery::fixed(id, k, size).expect("fixed id");
    }
    let (mut a, b, t) = match point {
        Some(p) => p.as_scalars(),
        None => (Scalar::a(), Scalar::b(), Scalar::t()),
    };
    if d.a_zero {
        a = Scalar::zero();
    }
    ClosedFormQuery::new(id, family, m, k, size, a, b, t)
}

/// Every cell the configuration asks for, in report order.
pub fn plan(config: &SweepConfig) -> Vec<PlannedCell> {
    let points = sweep_points(config.seed, config.random_points);
    let mut settings: Vec<(Option<usize>, usize)> = Vec::new();
    if config.mode != SweepMode::Symbolic {
        settings.extend((0..points.len()).map(|i| (Some(i), config.max_size_numeric)));
    }
    if config.mode != SweepMode::Points {
        settings.push((None, config.max_size_symbolic));
    }
    let mut ids = config.ids.clone();
    ids.sort();
    ids.dedup();
    let mut cells = Vec::new();
    for id in ids {
        let d = id.domain();
        let k_hi = d.k_max.unwrap_or(config.k_max_all);
        for &family in d.families {
            for m in d.m_min..=config.m_max.min(d.m_max.unwrap_or(u32::MAX)) {
                for k in d.k_min..=k_hi {
                    for &(pi, max_size) in &settings {
                        // Fixed sequences have no parameters to vary.
                        if d.fixed.is_some() && pi.is_some_and(|i| i > 0) {
                            continue;
                        }
                        let point = pi.map(|i| points[i].clone());
                        for size in 0..=max_size {
                            if id.covers(family, m, k, size) {
                                cells.push(PlannedCell {
                                    query: query_at(id, family, m, k, size, point.as_ref()),
                                    point_index: pi,
                                    point: point.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    cells
}

/// Runs the comparison for every planned cell.
pub fn equivalence_sweep(config: &SweepConfig) -> Result<SweepReport, HankelError> {
    run_cells(plan(config))
}

/// Runs a list of planned cells; exposed so callers can budget the plan first.
pub fn run_cells(cells: Vec<PlannedCell>) -> Result<SweepReport, HankelError> {
    // Largest size needed per (sequence, shift).
    let mut groups: HashMap<(SequenceSpec, usize), usize> = HashMap::new();
    let specs: Vec<SequenceSpec> = cells.iter().map(|c| c.query.spec()).collect();
    for (c, spec) in cells.iter().zip(&specs) {
        let e = groups.entry((spec.clone(), c.query.k)).or_insert(0);
        *e = (*e).max(c.query.n);
    }
    let mut keys: Vec<_> = groups.into_iter().collect();
    // Biggest first so the parallel tail is short.
    keys.sort_by_key(|((spec, k), n)| std::cmp::Reverse((*n, spec.is_symbolic(), *k)));
    let minors: HashMap<(SequenceSpec, usize), Vec<Scalar>> = keys
        .into_par_iter()
        .map(|((spec, k), n)| {
            let dets = hankel_dets(&spec, k, n);
            ((spec, k), dets)
        })
        .collect();
    let out: Vec<Result<SweepCell, HankelError>> = cells
        .into_par_iter()
        .zip(specs.into_par_iter())
        .map(|(c, spec)| {
            let predicted = closed_form_det(&c.query)?;
            let computed = minors[&(spec, c.query.k)][c.query.n].clone();
            let verdict = if predicted == computed { Verdict::Match } else { Verdict::Mismatch };
            Ok(SweepCell {
                id: c.query.id,
                family: c.query.family,
                m: c.query.m,
                k: c.query.k,
                size: c.query.n,
                point_index: c.point_index,
                point: c.point,
                predicted,
                computed,
                verdict,
            })
        })
        .collect();
    let mut report = SweepReport::default();
    for cell in out {
        let cell = cell?;
        match cell.verdict {
            Verdict::Match => report.matches += 1,
            Verdict::Mismatch => report.mismatches += 1,
        }
        report.cells.push(cell);
    }
    report.cells.sort_by(|x, y| {
        (x.id, x.family, x.m, x.k, x.point_index.is_none(), x.point_index, x.size).cmp(&(
            y.id,
            y.family,
            y.m,
            y.k,
            y.point_index.is_none(),
            y.point_index,
            y.size,
        ))
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_matches() {
        let config = SweepConfig {
            ids: vec![ClosedFormId::Thm6_2, ClosedFormId::AStar],
            max_size_numeric: 6,
            max_size_symbolic: 4,
            random_points: 1,
            ..SweepConfig::default()
        };
        let report = equivalence_sweep(&config).unwrap();
        assert!(report.matches > 0);
        assert!(report.all_match(), "{:?}", report.cells.iter().find(|c| c.verdict == Verdict::Mismatch));
    }
}
