//! `hankel`: sequences, Hankel determinants, closed forms, recurrence
//! coefficients, path oracles and conjecture reports from the command line.
//!
//! Exit codes: 0 on success, 1 when a proven identity fails to match, 2 on
//! configuration errors.

mod report;

use std::fs::File;
use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use hankel_core::arith::Scalar;
use hankel_core::conjectures::{check_conjecture, CellVerdict, ConjectureGrid, ConjectureId};
use hankel_core::hankel::{
    closed_form_det, hankel_dets, plan, run_cells, ClosedFormId, ClosedFormQuery, HankelError, SweepConfig, SweepMode,
};
use hankel_core::orthopoly::jacobi_from_moments;
use hankel_core::paths::{lgv_det_oracle, path_weight_dp, PathModel, PathSystemQuery};
use hankel_core::sequences::{closed_form_terms, seq_terms, Family, Named, SequenceSpec};

use report::{Cell, Format, Report};

/// Largest determinant size accepted with rational and with formal parameters.
const MAX_SIZE: usize = 64;
const MAX_SIZE_SYMBOLIC: usize = 14;
const DEFAULT_MAX_CELLS: usize = 200_000;

#[derive(Parser)]
#[command(name = "hankel", version, about = "Exact Hankel determinants of Catalan-like sequence families")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Seed for sampled evaluation points.
    #[arg(long, default_value_t = 2024, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sequence terms.
    Seq {
        #[command(flatten)]
        spec: SpecArgs,
        /// Number of terms.
        #[arg(short = 'n', long, default_value_t = 10)]
        n: usize,
        /// Compare with the closed-form sum.
        #[arg(long)]
        check: bool,
    },
    /// Hankel determinants d_k(n) by elimination.
    Det {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(short = 'k', long, default_value_t = 0)]
        k: usize,
        #[command(flatten)]
        sizes: SizeArgs,
    },
    /// A closed form by id.
    Closed {
        #[arg(long)]
        id: String,
        #[command(flatten)]
        spec: SpecArgs,
        /// Defaults to the smallest shift the formula covers.
        #[arg(short = 'k', long)]
        k: Option<usize>,
        #[command(flatten)]
        sizes: SizeArgs,
        /// Also compute the determinant by elimination and compare.
        #[arg(long)]
        check: bool,
    },
    /// Closed forms against elimination over their domains.
    Verify {
        /// Ids to sweep, or "all".
        #[arg(long, default_value = "all")]
        id: Vec<String>,
        #[arg(long, default_value = "both")]
        mode: String,
        /// Largest size in every mode.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        m_max: Option<u32>,
        #[arg(long)]
        k_max: Option<usize>,
        /// Random points besides the all-ones point.
        #[arg(long)]
        points: Option<usize>,
    },
    /// Recurrence coefficients s(n), t(n) from moments.
    Favard {
        #[command(flatten)]
        spec: SpecArgs,
        /// Comma-separated moments instead of a sequence spec.
        #[arg(long, allow_hyphen_values = true)]
        terms: Option<String>,
        /// Number of s coefficients.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Path-model oracles against the sequence and its determinants.
    Oracle {
        #[command(flatten)]
        spec: SpecArgs,
        /// Largest term index for the path sums.
        #[arg(short = 'n', long, default_value_t = 10)]
        n: usize,
        #[arg(short = 'k', long, default_value_t = 0)]
        k: usize,
        /// Largest determinant size for path-system enumeration.
        #[arg(long, default_value_t = PathSystemQuery::DEFAULT_CAP)]
        cap: usize,
    },
    /// Conjecture reports. Mismatches are evidence and do not change the exit code.
    Conjecture {
        /// Ids to run, or "all".
        #[arg(long, default_value = "all")]
        id: Vec<String>,
        #[arg(long, default_value = "both")]
        mode: String,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        max_size_symbolic: Option<usize>,
        #[arg(long)]
        m_min: Option<u32>,
        #[arg(long)]
        m_max: Option<u32>,
        #[arg(long, default_value_t = 3)]
        points: usize,
        /// Partial-sum parameters, comma separated.
        #[arg(long)]
        shifts: Option<String>,
    },
}

#[derive(Args, Clone)]
struct SpecArgs {
    /// restricted, shifted or unrestricted.
    #[arg(long)]
    family: Option<String>,
    /// A named sequence such as catalan or motzkin.
    #[arg(long)]
    name: Option<String>,
    /// Defaults to 2.
    #[arg(short = 'm', long)]
    m: Option<u32>,
    /// Defaults to 1.
    #[arg(short = 'a', long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Defaults to 1.
    #[arg(short = 'b', long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Defaults to 0.
    #[arg(short = 't', long, allow_hyphen_values = true)]
    t: Option<String>,
    /// Keep a, b, t formal.
    #[arg(long)]
    symbolic: bool,
}

impl SpecArgs {
    fn m(&self) -> u32 {
        self.m.unwrap_or(2)
    }

    /// `a`, `b`, `t` with the given defaults for unset values.
    fn params_or(&self, defaults: [&str; 3]) -> Result<(Scalar, Scalar, Scalar)> {
        if self.symbolic {
            return Ok((Scalar::a(), Scalar::b(), Scalar::t()));
        }
        let p = |v: &Option<String>, d: &str, what: &str| {
            let s = v.as_deref().unwrap_or(d);
            s.parse::<Scalar>().map_err(|e| anyhow!("bad value for {what}: {e}"))
        };
        Ok((p(&self.a, defaults[0], "a")?, p(&self.b, defaults[1], "b")?, p(&self.t, defaults[2], "t")?))
    }

    fn params(&self) -> Result<(Scalar, Scalar, Scalar)> {
        self.params_or(["1", "1", "0"])
    }

    fn family(&self) -> Result<Option<Family>> {
        self.family.as_deref().map(|f| f.parse::<Family>().map_err(|e| anyhow!(e))).transpose()
    }

    fn resolve(&self) -> Result<SequenceSpec> {
        if self.m() == 0 {
            bail!("m must be positive");
        }
        if let Some(name) = &self.name {
            if self.family.is_some() {
                bail!("give either --name or --family, not both");
            }
            return Ok(SequenceSpec::named(name.parse::<Named>().map_err(|e| anyhow!(e))?));
        }
        let family = self.family()?.ok_or_else(|| anyhow!("a sequence needs --family or --name"))?;
        let (a, b, t) = self.params()?;
        Ok(SequenceSpec::new(family, self.m(), a, b, t))
    }

    fn echo(&self, config: &mut Map<String, Value>) {
        config.insert("family".into(), json!(self.family));
        config.insert("name".into(), json!(self.name));
        config.insert("m".into(), json!(self.m));
        config.insert("symbolic".into(), json!(self.symbolic));
        if !self.symbolic {
            config.insert("a".into(), json!(self.a));
            config.insert("b".into(), json!(self.b));
            config.insert("t".into(), json!(self.t));
        }
    }
}

#[derive(Args, Clone)]
struct SizeArgs {
    /// A single size.
    #[arg(short = 'n', long)]
    n: Option<usize>,
    /// Inclusive range such as 1..5.
    #[arg(long)]
    n_range: Option<String>,
}

impl SizeArgs {
    fn sizes(&self) -> Result<Vec<usize>> {
        match (&self.n, &self.n_range) {
            (Some(_), Some(_)) => bail!("give either -n or --n-range"),
            (Some(n), None) => Ok(vec![*n]),
            (None, Some(r)) => parse_range(r),
            (None, None) => Ok((0..=10).collect()),
        }
    }
}

fn parse_range(r: &str) -> Result<Vec<usize>> {
    let (lo, hi) = r.split_once("..").ok_or_else(|| anyhow!("range {r:?} should look like 1..5"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().with_context(|| format!("bad range start in {r:?}"))?;
    let hi: usize = hi.trim().parse().with_context(|| format!("bad range end in {r:?}"))?;
    if lo > hi {
        bail!("empty range {r:?}");
    }
    Ok((lo..=hi).collect())
}

fn parse_mode(s: &str) -> Result<SweepMode> {
    s.parse::<SweepMode>().map_err(|e| anyhow!(e))
}

fn max_cells() -> Result<usize> {
    match std::env::var("HF_MAX_CELLS") {
        Ok(v) => v.trim().parse().with_context(|| format!("HF_MAX_CELLS={v:?} is not a number")),
        Err(_) => Ok(DEFAULT_MAX_CELLS),
    }
}

fn check_cells(count: usize) -> Result<()> {
    let cap = max_cells()?;
    if count > cap {
        bail!("{count} cells requested, above the HF_MAX_CELLS cap of {cap}");
    }
    Ok(())
}

fn check_size(size: usize, symbolic: bool) -> Result<()> {
    let cap = if symbolic { MAX_SIZE_SYMBOLIC } else { MAX_SIZE };
    if size > cap {
        bail!("size {size} is above the cap of {cap}{}", if symbolic { " for formal parameters" } else { "" });
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let code = match emit(&cli, &report) {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("error: {e:#}");
                    return ExitCode::from(2);
                }
            };
            let code = if code == 0 { outcome_code(&report) } else { code };
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// 1 when a proven identity failed to match. Conjecture mismatches are
/// evidence, not failures.
fn outcome_code(report: &Report) -> u8 {
    if report.command != "conjecture" && report.mismatches() > 0 {
        1
    } else {
        0
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<()> {
    match &cli.out {
        Some(path) => {
            let mut f = File::create(path).with_context(|| format!("cannot create {path}"))?;
            report.write(cli.format, &mut f)?;
            f.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            report.write(cli.format, &mut lock)?;
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Report> {
    let mut config = Map::new();
    config.insert("seed".into(), json!(cli.seed.to_string()));
    match &cli.command {
        Command::Seq { spec, n, check } => {
            spec.echo(&mut config);
            config.insert("n".into(), json!(n.to_string()));
            config.insert("check".into(), json!(check));
            let s = spec.resolve()?;
            check_cells(*n)?;
            let terms = seq_terms(&s, *n).terms;
            let closed = if *check {
                Some(closed_form_terms(&s, *n).ok_or_else(|| anyhow!("no closed-form sum for the {} family", s.family))?)
            } else {
                None
            };
            let cells = terms
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let cell = Cell::new(vec![("index", i.to_string())]);
                    match &closed {
                        Some(w) => cell.compared(&w.terms[i], v),
                        None => cell.computed(v),
                    }
                })
                .collect();
            Ok(Report::new("seq", config, cells))
        }
        Command::Det { spec, k, sizes } => {
            spec.echo(&mut config);
            config.insert("k".into(), json!(k.to_string()));
            let s = spec.resolve()?;
            let sizes = sizes.sizes()?;
            let max = *sizes.iter().max().unwrap_or(&0);
            check_size(max, s.is_symbolic())?;
            check_cells(sizes.len())?;
            config.insert("sizes".into(), json!(sizes.iter().map(|n| n.to_string()).collect::<Vec<_>>()));
            let dets = hankel_dets(&s, *k, max);
            let cells =
                sizes.iter().map(|&n| Cell::new(vec![("k", k.to_string()), ("size", n.to_string())]).computed(&dets[n])).collect();
            Ok(Report::new("det", config, cells))
        }
        Command::Closed { id, spec, k, sizes, check } => {
            let id: ClosedFormId = id.parse().map_err(|e: String| anyhow!(e))?;
            config.insert("id".into(), json!(id.name()));
            spec.echo(&mut config);
            let domain = id.domain();
            let k = &k.unwrap_or(domain.k_min);
            let m = spec.m.unwrap_or(domain.m_min);
            config.insert("k".into(), json!(k.to_string()));
            config.insert("check".into(), json!(check));
            let sizes = sizes.sizes()?;
            let family = spec.family()?.unwrap_or(domain.families[0]);
            let (a, b, t) = spec.params_or([if domain.a_zero { "0" } else { "1" }, "1", "0"])?;
            let mut cells = Vec::new();
            let mut queries = Vec::new();
            for &n in &sizes {
                let q = match ClosedFormQuery::fixed(id, *k, n) {
                    Some(q) => q,
                    None => ClosedFormQuery::new(id, family, m, *k, n, a.clone(), b.clone(), t.clone()),
                };
                q.check_domain().map_err(|e| anyhow!(e))?;
                queries.push(q);
            }
            let max = *sizes.iter().max().unwrap_or(&0);
            let brute = match (check, queries.first()) {
                (true, Some(q)) => {
                    check_size(max, q.spec().is_symbolic())?;
                    Some(hankel_dets(&q.spec(), *k, max))
                }
                _ => None,
            };
            for q in &queries {
                let predicted = closed_form_det(q).map_err(|e: HankelError| anyhow!(e))?;
                let cell = Cell::new(vec![("id", id.name().to_string()), ("k", k.to_string()), ("size", q.n.to_string())]);
                cells.push(match &brute {
                    Some(d) => cell.compared(&predicted, &d[q.n]),
                    None => cell.predicted(&predicted),
                });
            }
            Ok(Report::new("closed", config, cells))
        }
        Command::Verify { id, mode, max_n, m_max, k_max, points } => {
            let mut sweep = SweepConfig { ids: parse_ids(id)?, mode: parse_mode(mode)?, seed: cli.seed, ..SweepConfig::default() };
            if let Some(n) = max_n {
                sweep.max_size_numeric = *n;
                sweep.max_size_symbolic = *n;
            }
            if let Some(m) = m_max {
                sweep.m_max = *m;
            }
            if let Some(k) = k_max {
                sweep.k_max_all = *k;
            }
            if let Some(p) = points {
                sweep.random_points = *p;
            }
            if sweep.mode != SweepMode::Points {
                check_size(sweep.max_size_symbolic, true)?;
            }
            check_size(sweep.max_size_numeric, false)?;
            config.insert("ids".into(), json!(sweep.ids.iter().map(|i| i.name()).collect::<Vec<_>>()));
            config.insert("mode".into(), json!(mode));
            config.insert("max_size_numeric".into(), json!(sweep.max_size_numeric.to_string()));
            config.insert("max_size_symbolic".into(), json!(sweep.max_size_symbolic.to_string()));
            config.insert("m_max".into(), json!(sweep.m_max.to_string()));
            config.insert("k_max".into(), json!(sweep.k_max_all.to_string()));
            config.insert("random_points".into(), json!(sweep.random_points.to_string()));
            let planned = plan(&sweep);
            check_cells(planned.len())?;
            let result = run_cells(planned).map_err(|e| anyhow!(e))?;
            let cells = result
                .cells
                .iter()
                .map(|c| {
                    let point = match &c.point {
                        Some(p) => p.to_string(),
                        None => "symbolic".into(),
                    };
                    Cell::new(vec![
                        ("id", c.id.name().to_string()),
                        ("family", c.family.name().to_string()),
                        ("m", c.m.to_string()),
                        ("k", c.k.to_string()),
                        ("size", c.size.to_string()),
                        ("point", point),
                    ])
                    .compared(&c.predicted, &c.computed)
                })
                .collect();
            Ok(Report::new("verify", config, cells))
        }
        Command::Favard { spec, terms, count } => {
            let moments: Vec<Scalar> = match terms {
                Some(list) => {
                    config.insert("terms".into(), json!(list));
                    list.split(',')
                        .map(|x| x.parse::<Scalar>().map_err(|e| anyhow!("bad term {x:?}: {e}")))
                        .collect::<Result<_>>()?
                }
                None => {
                    spec.echo(&mut config);
                    let s = spec.resolve()?;
                    seq_terms(&s, 2 * count.unwrap_or(6)).terms
                }
            };
            let count = count.unwrap_or(moments.len() / 2);
            config.insert("count".into(), json!(count.to_string()));
            check_cells(2 * count)?;
            let j = jacobi_from_moments(&moments, count).map_err(|e| anyhow!(e))?;
            let mut cells = Vec::new();
            for (i, s) in j.s.iter().enumerate() {
                cells.push(Cell::new(vec![("coefficient", format!("s({i})"))]).computed(s));
            }
            for (i, t) in j.t.iter().enumerate() {
                cells.push(Cell::new(vec![("coefficient", format!("t({i})"))]).computed(t));
            }
            Ok(Report::new("favard", config, cells))
        }
        Command::Oracle { spec, n, k, cap } => {
            spec.echo(&mut config);
            config.insert("n".into(), json!(n.to_string()));
            config.insert("k".into(), json!(k.to_string()));
            config.insert("cap".into(), json!(cap.to_string()));
            let s = spec.resolve()?;
            check_cells(2 * n + 2)?;
            let model = PathModel::for_spec(&s);
            let terms = seq_terms(&s, n + 1).terms;
            let mut cells = Vec::new();
            for (i, term) in terms.iter().enumerate() {
                let dp = path_weight_dp(&model, i);
                cells.push(Cell::new(vec![("oracle", "paths".into()), ("index", i.to_string())]).compared(term, &dp));
            }
            let sizes = (*n).min(MAX_SIZE_SYMBOLIC);
            let dets = hankel_dets(&s, *k, sizes);
            for (size, det) in dets.iter().enumerate() {
                let cell = Cell::new(vec![("oracle", "lgv".into()), ("k", k.to_string()), ("size", size.to_string())]);
                let q = PathSystemQuery::new(model.clone(), *k, size).with_cap(*cap);
                cells.push(match lgv_det_oracle(&q) {
                    Ok(w) => cell.compared(det, &w),
                    Err(e) => cell.predicted(det).verdict("inapplicable").note(e.to_string()),
                });
            }
            Ok(Report::new("oracle", config, cells))
        }
        Command::Conjecture { id, mode, max_size, max_size_symbolic, m_min, m_max, points, shifts } => {
            let ids: Vec<ConjectureId> = if id.iter().any(|s| s == "all") {
                ConjectureId::ALL.to_vec()
            } else {
                id.iter().map(|s| s.parse::<ConjectureId>().map_err(|e| anyhow!(e))).collect::<Result<_>>()?
            };
            let shifts = shifts
                .as_deref()
                .map(|s| s.split(',').map(|x| x.trim().parse::<usize>().with_context(|| format!("bad shift {x:?}"))).collect())
                .transpose()?;
            let grid = ConjectureGrid {
                m_min: *m_min,
                m_max: *m_max,
                max_size: *max_size,
                max_size_symbolic: *max_size_symbolic,
                mode: parse_mode(mode)?,
                random_points: *points,
                seed: cli.seed,
                shifts,
            };
            config.insert("ids".into(), json!(ids.iter().map(|i| i.name()).collect::<Vec<_>>()));
            config.insert("mode".into(), json!(mode));
            config.insert("random_points".into(), json!(points.to_string()));
            let mut cells = Vec::new();
            let mut per_id = Map::new();
            let mut notes = Vec::new();
            for id in ids {
                let r = check_conjecture(id, &grid);
                per_id.insert(
                    id.name().into(),
                    json!({
                        "cells": r.cells.len(),
                        "matches": r.matches,
                        "mismatches": r.mismatches,
                        "inapplicable": r.inapplicable,
                        "theorem_backed": r.theorem_backed,
                        "theorem_mismatches": r.theorem_mismatches,
                    }),
                );
                notes.extend(r.notes.iter().map(|n| format!("{}: {n}", id.name())));
                for c in r.cells {
                    let mut params = vec![("id", id.name().to_string()), ("reading", c.reading.to_string())];
                    params.extend(c.params.iter().map(|(k, v)| (k.as_str(), v.clone())));
                    params.push(("theorem_backed", c.theorem_backed.to_string()));
                    let mut cell = Cell::new(params).verdict(c.verdict.name());
                    cell.predicted = c.predicted.map(|v| v.to_string());
                    cell.computed = c.computed.map(|v| v.to_string());
                    cell.note = c.note;
                    if c.verdict == CellVerdict::Inapplicable && cell.note.is_none() {
                        cell.note = Some("not evaluated".into());
                    }
                    cells.push(cell);
                }
            }
            let mut report = Report::new("conjecture", config, cells);
            report.summary.insert("by_id".into(), Value::Object(per_id));
            report.summary.insert("notes".into(), json!(notes));
            Ok(report)
        }
    }
}

fn parse_ids(ids: &[String]) -> Result<Vec<ClosedFormId>> {
    if ids.iter().any(|s| s == "all") {
        return Ok(ClosedFormId::ALL.to_vec());
    }
    ids.iter().map(|s| s.parse::<ClosedFormId>().map_err(|e: String| anyhow!(e))).collect()
}
