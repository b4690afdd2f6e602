//! Ratio benchmark: random (and optionally all small) regular instances per
//! `(d, n)` cell, every requested algorithm and `k`, exact optima under a
//! size cap, and a hard check of each observed ratio against its
//! guarantee.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use pkvc_core::approx::{approx1, approx2, approx3, dc};
use pkvc_core::bounds::{self, Rational};
use pkvc_core::exact::{psi_exact, ExactConfig};
use pkvc_core::generators::{
    enumerate_small_regular_with, generate, EnumerationOptions, GeneratorSpec,
    DEFAULT_ENUMERATION_CAP,
};
use pkvc_core::verify::verify_cover;
use pkvc_core::{Algorithm, CoverSolution, Graph, Verdict};
use rayon::prelude::*;
use thiserror::Error;

use crate::report::RatioReport;

/// Restart budget used for bench instances; dense cells need far more than
/// the generator default.
pub const BENCH_RESTART_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub d_list: Vec<usize>,
    pub k_list: Vec<usize>,
    pub n_list: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub algos: Vec<Algorithm>,
    /// Exact optima are computed for `n <= exact_cap`.
    pub exact_cap: usize,
    /// Also run every isomorphism class of `d`-regular graphs on `n` vertices
    /// when `n` is within the enumeration cap.
    pub exhaustive: bool,
    pub cell_budget: Duration,
    pub restart_budget: usize,
    pub record_timing: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            d_list: vec![3],
            k_list: vec![4],
            n_list: vec![10],
            trials: 50,
            seed: 0,
            algos: vec![Algorithm::Dc],
            exact_cap: 24,
            exhaustive: false,
            cell_budget: Duration::from_secs(60),
            restart_budget: BENCH_RESTART_BUDGET,
            record_timing: true,
        }
    }
}

/// Enough to rebuild a failing instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Random(GeneratorSpec),
    /// Position in the isomorph-rejected enumeration of `d`-regular graphs
    /// on `n` vertices.
    Enumerated {
        n: usize,
        d: usize,
        index: usize,
    },
}

impl Source {
    fn id(&self) -> String {
        match self {
            Source::Random(s) => format!("{}-n{}-d{}-s{}", s.family.name(), s.n, s.d, s.seed),
            Source::Enumerated { n, d, index } => format!("enum-n{n}-d{d}-i{index}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reproducer {
    pub source: Source,
    pub algo: Algorithm,
    pub k: usize,
}

impl fmt::Display for Reproducer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.source {
            Source::Random(s) => write!(
                f,
                "pkvc gen --family {} --n {} --d {} --seed {} --restart-budget {} --out instance.el && pkvc solve --algo {} --k {} --input instance.el",
                s.family.name().replace('_', "-"),
                s.n,
                s.d,
                s.seed,
                s.restart_budget,
                self.algo,
                self.k
            ),
            Source::Enumerated { n, d, index } => write!(
                f,
                "isomorphism class #{index} of {d}-regular graphs on {n} vertices, then pkvc solve --algo {} --k {}",
                self.algo, self.k
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("generating {id}: {source}")]
    Generate {
        id: String,
        #[source]
        source: pkvc_core::Error,
    },
    #[error("{algo} returned an infeasible cover on {id}, surviving path {witness:?}\nreproduce: {reproducer}")]
    Infeasible {
        id: String,
        algo: Algorithm,
        witness: Vec<usize>,
        reproducer: Reproducer,
    },
    #[error(
        "ratio {ratio} exceeds the guarantee {bound} for {algo} on {id}\nreproduce: {reproducer}"
    )]
    BoundViolation {
        id: String,
        algo: Algorithm,
        ratio: Rational,
        bound: Rational,
        reproducer: Reproducer,
    },
    #[error("report invariant failed: {0}")]
    Report(String),
    #[error("{algo} on {id}: {source}")]
    Algorithm {
        id: String,
        algo: Algorithm,
        #[source]
        source: pkvc_core::Error,
    },
}

impl BenchError {
    /// Input and precondition problems map to 1, wrong outputs to 2.
    pub fn exit_code(&self) -> u8 {
        match self {
            BenchError::Config(_) | BenchError::Generate { .. } | BenchError::Algorithm { .. } => 1,
            BenchError::Infeasible { .. }
            | BenchError::BoundViolation { .. }
            | BenchError::Report(_) => 2,
        }
    }
}

/// Whether `algo` applies to `d`-regular graphs with path order `k`.
pub fn applicable(algo: Algorithm, d: usize, k: usize) -> bool {
    match algo {
        Algorithm::Dc => k >= 3 && k - 2 < d,
        Algorithm::Approx1 => d == 3 && k == 4,
        Algorithm::Approx2 => d >= 4 && d.is_multiple_of(2) && k == 4,
        Algorithm::Approx3 => d >= 3 && k == 4,
        Algorithm::Exact => (2..=8).contains(&k),
        Algorithm::Degree2Exact => false,
    }
}

/// The ratio `algo` guarantees on `d`-regular inputs, where one is proven.
pub fn guarantee(algo: Algorithm, d: usize, k: usize) -> Option<Rational> {
    match algo {
        Algorithm::Dc => bounds::dc_ratio_bound(d, k).ok(),
        Algorithm::Approx1 => Some(bounds::approx1_ratio_bound()),
        Algorithm::Approx2 => {
            let general = bounds::approx2_ratio_bound(d).ok()?;
            Some(if d == 4 {
                general.min(bounds::approx2_four_regular_bound())
            } else {
                general
            })
        }
        Algorithm::Approx3 => bounds::approx3_ratio_bound(d).ok(),
        Algorithm::Exact => Some(Rational::from_integer(1)),
        Algorithm::Degree2Exact => None,
    }
}

pub fn run_algorithm(
    algo: Algorithm,
    g: &Graph,
    k: usize,
    exact: ExactConfig,
) -> pkvc_core::Result<CoverSolution> {
    match algo {
        Algorithm::Dc => dc(g, k),
        Algorithm::Approx1 => approx1(g),
        Algorithm::Approx2 => approx2(g),
        Algorithm::Approx3 => approx3(g),
        Algorithm::Exact => psi_exact(g, k, exact),
        Algorithm::Degree2Exact => pkvc_core::exact::degree2_exact(&g.full_view()),
    }
}

/// Statistics for one `(algo, d, k, n)` cell.
#[derive(Clone, Debug, PartialEq)]
pub struct CellSummary {
    pub algo: Algorithm,
    pub d: usize,
    pub k: usize,
    pub n: usize,
    pub rows: usize,
    pub with_opt: usize,
    pub max_ratio_opt: Option<Rational>,
    pub worst_instance: Option<String>,
    pub mean_ratio_opt: Option<f64>,
    pub max_ratio_lb: Option<Rational>,
    pub mean_ratio_lb: Option<f64>,
    pub guarantee: Option<Rational>,
    /// The wall-clock budget cut the cell short.
    pub truncated: bool,
}

#[derive(Clone, Debug, Default)]
pub struct BenchOutcome {
    pub rows: Vec<RatioReport>,
    pub summaries: Vec<CellSummary>,
    /// Requested combinations no algorithm guarantee covers.
    pub skipped: Vec<String>,
}

/// Seed of trial `t` in cell `(d, n)`, independent of scheduling.
pub fn instance_seed(base: u64, d: usize, n: usize, trial: usize) -> u64 {
    let mut x = base ^ (d as u64).rotate_left(48) ^ (n as u64).rotate_left(24) ^ trial as u64;
    // splitmix64 finalizer
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

struct Instance {
    source: Source,
    graph: Graph,
}

fn instances(
    cfg: &BenchConfig,
    d: usize,
    n: usize,
    bipartite: bool,
) -> Result<Vec<Instance>, BenchError> {
    let mut out = Vec::new();
    if cfg.exhaustive && n <= DEFAULT_ENUMERATION_CAP {
        let opts = EnumerationOptions {
            isomorph_rejection: true,
            ..EnumerationOptions::default()
        };
        let all =
            enumerate_small_regular_with(n, d, opts).map_err(|source| BenchError::Generate {
                id: format!("enum-n{n}-d{d}"),
                source,
            })?;
        for (index, graph) in all.enumerate() {
            if bipartite && graph.bipartition().is_none() {
                continue;
            }
            out.push(Instance {
                source: Source::Enumerated { n, d, index },
                graph,
            });
        }
    }
    for trial in 0..cfg.trials {
        let seed = instance_seed(cfg.seed, d, n, trial);
        let base = if bipartite {
            GeneratorSpec::random_regular_bipartite(n, d, seed)
        } else {
            GeneratorSpec::random_regular(n, d, seed)
        };
        let spec = GeneratorSpec {
            restart_budget: cfg.restart_budget,
            ..base
        };
        let source = Source::Random(spec);
        let graph = generate(&spec).map_err(|source_err| BenchError::Generate {
            id: source.id(),
            source: source_err,
        })?;
        out.push(Instance { source, graph });
    }
    Ok(out)
}

/// Rows for one instance; `None` when the budget ran out before it started.
fn run_instance(
    cfg: &BenchConfig,
    inst: &Instance,
    d: usize,
    plan: &[(Algorithm, usize)],
    deadline: Instant,
) -> Option<Result<Vec<RatioReport>, BenchError>> {
    if Instant::now() > deadline {
        return None;
    }
    Some(run_plan(cfg, inst, d, plan))
}

fn run_plan(
    cfg: &BenchConfig,
    inst: &Instance,
    d: usize,
    plan: &[(Algorithm, usize)],
) -> Result<Vec<RatioReport>, BenchError> {
    let g = &inst.graph;
    let id = inst.source.id();
    let exact = ExactConfig {
        cap: pkvc_core::exact::MAX_EXACT_N,
        ..ExactConfig::default()
    };
    let mut optima: BTreeMap<usize, Option<usize>> = BTreeMap::new();
    let mut rows = Vec::new();
    for &(algo, k) in plan {
        let opt = *optima.entry(k).or_insert_with(|| {
            if g.n() > cfg.exact_cap {
                return None;
            }
            psi_exact(g, k, exact)
                .ok()
                .filter(|s| s.optimal)
                .map(|s| s.size())
        });
        let start = Instant::now();
        let sol = run_algorithm(algo, g, k, exact).map_err(|source| BenchError::Algorithm {
            id: id.clone(),
            algo,
            source,
        })?;
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let reproducer = Reproducer {
            source: inst.source.clone(),
            algo,
            k,
        };
        match verify_cover(g, &sol).map_err(|source| BenchError::Algorithm {
            id: id.clone(),
            algo,
            source,
        })? {
            Verdict::Feasible => {}
            Verdict::Witness(witness) => {
                return Err(BenchError::Infeasible {
                    id,
                    algo,
                    witness,
                    reproducer,
                })
            }
        }
        let row = RatioReport::new(id.clone(), g, &sol, opt, cfg.record_timing.then_some(ms));
        row.check().map_err(BenchError::Report)?;
        // The approx1 guarantee assumes a certified maximum independent set.
        let certified = sol.mis_certified.unwrap_or(true);
        if let (Some(ratio), Some(bound), true) =
            (row.exact_ratio_opt, guarantee(algo, d, k), certified)
        {
            if ratio > bound {
                return Err(BenchError::BoundViolation {
                    id,
                    algo,
                    ratio,
                    bound,
                    reproducer,
                });
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn run(cfg: &BenchConfig) -> Result<BenchOutcome, BenchError> {
    if cfg.algos.is_empty()
        || cfg.d_list.is_empty()
        || cfg.k_list.is_empty()
        || cfg.n_list.is_empty()
    {
        return Err(BenchError::Config(
            "every list flag needs at least one value".into(),
        ));
    }
    if cfg.algos.contains(&Algorithm::Degree2Exact) {
        return Err(BenchError::Config(
            "degree2 is not a benchmark algorithm".into(),
        ));
    }
    let mut outcome = BenchOutcome::default();
    for &d in &cfg.d_list {
        for &k in &cfg.k_list {
            for &a in &cfg.algos {
                if !applicable(a, d, k) {
                    outcome.skipped.push(format!("{a} with d = {d}, k = {k}"));
                }
            }
        }
    }
    for &d in &cfg.d_list {
        for &n in &cfg.n_list {
            for bipartite in [false, true] {
                let plan: Vec<(Algorithm, usize)> = cfg
                    .k_list
                    .iter()
                    .flat_map(|&k| cfg.algos.iter().map(move |&a| (a, k)))
                    .filter(|&(a, k)| (a == Algorithm::Approx3) == bipartite && applicable(a, d, k))
                    .collect();
                if plan.is_empty() {
                    continue;
                }
                let insts = instances(cfg, d, n, bipartite)?;
                let deadline = Instant::now() + cfg.cell_budget;
                let results: Vec<Option<Result<Vec<RatioReport>, BenchError>>> = insts
                    .par_iter()
                    .map(|inst| run_instance(cfg, inst, d, &plan, deadline))
                    .collect();
                let truncated = results.iter().any(Option::is_none);
                let mut rows = Vec::new();
                for r in results.into_iter().flatten() {
                    rows.extend(r?);
                }
                for &(algo, k) in &plan {
                    let cell: Vec<&RatioReport> = rows
                        .iter()
                        .filter(|r| r.algo == algo.name() && r.k == k)
                        .collect();
                    outcome
                        .summaries
                        .push(summarize(algo, d, k, n, &cell, truncated));
                }
                // Instance order first, then the plan order within an instance.
                outcome.rows.extend(rows);
            }
        }
    }
    Ok(outcome)
}

fn summarize(
    algo: Algorithm,
    d: usize,
    k: usize,
    n: usize,
    cell: &[&RatioReport],
    truncated: bool,
) -> CellSummary {
    let with: Vec<&&RatioReport> = cell
        .iter()
        .filter(|r| r.exact_ratio_opt.is_some())
        .collect();
    let worst = with.iter().max_by_key(|r| r.exact_ratio_opt.unwrap());
    let mean = |xs: Vec<f64>| (!xs.is_empty()).then(|| xs.iter().sum::<f64>() / xs.len() as f64);
    CellSummary {
        algo,
        d,
        k,
        n,
        rows: cell.len(),
        with_opt: with.len(),
        max_ratio_opt: worst.map(|r| r.exact_ratio_opt.unwrap()),
        worst_instance: worst.map(|r| r.instance.clone()),
        mean_ratio_opt: mean(with.iter().filter_map(|r| r.ratio_opt).collect()),
        max_ratio_lb: cell.iter().filter_map(|r| r.exact_ratio_lb).max(),
        mean_ratio_lb: mean(cell.iter().filter_map(|r| r.ratio_lb).collect()),
        guarantee: guarantee(algo, d, k),
        truncated,
    }
}

impl fmt::Display for CellSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |r: Option<Rational>| {
            r.map_or("-".to_string(), |r| format!("{:.4}", bounds::to_f64(r)))
        };
        write!(
            f,
            "{} d={} k={} n={}: rows={} with_opt={} max_ratio_opt={} mean_ratio_opt={} max_ratio_lb={} guarantee={}",
            self.algo,
            self.d,
            self.k,
            self.n,
            self.rows,
            self.with_opt,
            show(self.max_ratio_opt),
            self.mean_ratio_opt.map_or("-".to_string(), |x| format!("{x:.4}")),
            show(self.max_ratio_lb),
            show(self.guarantee),
        )?;
        if let Some(w) = &self.worst_instance {
            write!(f, " worst={w}")?;
        }
        if self.truncated {
            write!(f, " (truncated by time budget)")?;
        }
        Ok(())
    }
}
