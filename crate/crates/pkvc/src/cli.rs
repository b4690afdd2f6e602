//! The `pkvc` command line. Exit codes: 0 success, 1 input or precondition
//! error, 2 an output failed verification or a guarantee.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use pkvc_core::approx::dc_with;
use pkvc_core::coloring::InitialColoring;
use pkvc_core::exact::{psi_exact, ExactConfig};
use pkvc_core::generators::{generate, Family, GeneratorSpec, DEFAULT_RESTART_BUDGET};
use pkvc_core::verify::verify_cover;
use pkvc_core::{Algorithm, Verdict};

use crate::bench::{self, BenchConfig, BENCH_RESTART_BUDGET};
use crate::edgelist;
use crate::report::{self, CoverJson, RatioReport, SolveJson};

pub const SEED_ENV: &str = "PKVC_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "pkvc",
    version,
    about = "k-path vertex cover approximations on regular graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Dc,
    Approx1,
    Approx2,
    Approx3,
    Exact,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Dc => Algorithm::Dc,
            AlgoArg::Approx1 => Algorithm::Approx1,
            AlgoArg::Approx2 => Algorithm::Approx2,
            AlgoArg::Approx3 => Algorithm::Approx3,
            AlgoArg::Exact => Algorithm::Exact,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Path,
    Cycle,
    Complete,
    #[value(alias = "complete_bipartite")]
    CompleteBipartite,
    #[value(alias = "random_regular")]
    RandomRegular,
    #[value(alias = "random_regular_bipartite")]
    RandomRegularBipartite,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Path => Family::Path,
            FamilyArg::Cycle => Family::Cycle,
            FamilyArg::Complete => Family::Complete,
            FamilyArg::CompleteBipartite => Family::CompleteBipartite,
            FamilyArg::RandomRegular => Family::RandomRegular,
            FamilyArg::RandomRegularBipartite => Family::RandomRegularBipartite,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one algorithm on an edge-list file and verify the cover.
    Solve {
        #[arg(long, value_enum)]
        algo: AlgoArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        /// Seeds a random initial coloring for dc; other algorithms are
        /// deterministic.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
        /// Largest graph the exact solver accepts.
        #[arg(long, default_value_t = pkvc_core::exact::DEFAULT_EXACT_CAP)]
        exact_cap: usize,
    },
    /// Write a generated graph as an edge list.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `-` writes to standard output.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_RESTART_BUDGET)]
        restart_budget: usize,
    },
    /// Measure approximation ratios over random regular instances.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        d_list: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        k_list: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', value_enum, required = true)]
        algos: Vec<AlgoArg>,
        #[arg(long, default_value_t = 24)]
        exact_cap: usize,
        /// Add every isomorphism class for n up to the enumeration cap.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Defaults to standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Leave the ms column empty so output is byte-reproducible.
        #[arg(long)]
        omit_timing: bool,
        #[arg(long, default_value_t = 60)]
        cell_seconds: u64,
        #[arg(long, default_value_t = BENCH_RESTART_BUDGET)]
        restart_budget: usize,
    },
}

/// Failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

fn input(message: impl ToString) -> Failure {
    Failure {
        code: 1,
        message: message.to_string(),
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    input(format!("write failed: {e}"))
}

/// `PKVC_SEED` wins over the flag.
fn effective_seed(flag: Option<u64>) -> Result<Option<u64>, Failure> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| input(format!("{SEED_ENV}=`{v}` is not a 64-bit unsigned integer"))),
        Err(_) => Ok(flag),
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 1;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Solve {
            algo,
            k,
            input: path,
            seed,
            json,
            exact_cap,
        } => solve(
            algo.into(),
            k,
            &path,
            effective_seed(seed)?,
            json,
            exact_cap,
            out,
        ),
        Command::Gen {
            family,
            n,
            d,
            seed,
            out: path,
            restart_budget,
        } => {
            let seed = effective_seed(Some(seed))?.unwrap_or(0);
            let spec = GeneratorSpec {
                family: family.into(),
                n,
                d,
                seed,
                restart_budget,
            };
            let g = generate(&spec).map_err(input)?;
            let comments = vec![format!(
                "pkvc gen family={} n={n} d={d} seed={seed}",
                spec.family.name()
            )];
            if path.as_os_str() == "-" {
                out.write_all(edgelist::serialize(&g, &comments).as_bytes())
                    .map_err(io_failure)
            } else {
                edgelist::write(&path, &g, &comments).map_err(input)
            }
        }
        Command::Bench {
            d_list,
            k_list,
            n_list,
            trials,
            seed,
            algos,
            exact_cap,
            exhaustive,
            format,
            out: path,
            omit_timing,
            cell_seconds,
            restart_budget,
        } => {
            let cfg = BenchConfig {
                d_list,
                k_list,
                n_list,
                trials,
                seed: effective_seed(Some(seed))?.unwrap_or(0),
                algos: algos.into_iter().map(Algorithm::from).collect(),
                exact_cap,
                exhaustive,
                cell_budget: Duration::from_secs(cell_seconds),
                restart_budget,
                record_timing: !omit_timing,
            };
            let outcome = bench::run(&cfg).map_err(|e| Failure {
                code: e.exit_code(),
                message: e.to_string(),
            })?;
            for s in &outcome.skipped {
                let _ = writeln!(err, "skipped: {s} (no guarantee applies)");
            }
            for s in &outcome.summaries {
                let _ = writeln!(err, "{s}");
            }
            let mut buf = Vec::new();
            match format {
                Format::Csv => report::write_csv(&mut buf, &outcome.rows).map_err(input)?,
                Format::Json => report::write_json(&mut buf, &outcome.rows).map_err(input)?,
            }
            match path {
                Some(p) => {
                    std::fs::write(&p, buf).map_err(|e| input(format!("{}: {e}", p.display())))
                }
                None => out.write_all(&buf).map_err(io_failure),
            }
        }
    }
}

fn solve(
    algo: Algorithm,
    k: usize,
    path: &std::path::Path,
    seed: Option<u64>,
    json: bool,
    exact_cap: usize,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let g = edgelist::read(path).map_err(input)?;
    if algo != Algorithm::Dc && algo != Algorithm::Exact && k != 4 {
        return Err(input(format!("{algo} covers 4-paths only, got k = {k}")));
    }
    let exact = ExactConfig {
        cap: exact_cap,
        ..ExactConfig::default()
    };
    let start = Instant::now();
    let sol = match (algo, seed) {
        (Algorithm::Dc, Some(s)) => dc_with(&g, k, InitialColoring::Seeded(s)),
        (Algorithm::Exact, _) => psi_exact(&g, k, exact),
        _ => bench::run_algorithm(algo, &g, k, exact),
    }
    .map_err(input)?;
    let ms = start.elapsed().as_secs_f64() * 1e3;
    let verdict = verify_cover(&g, &sol).map_err(input)?;
    let opt = (sol.optimal && algo == Algorithm::Exact).then(|| sol.size());
    let instance = path
        .file_stem()
        .map_or_else(|| "input".into(), |s| s.to_string_lossy().into_owned());
    let row = RatioReport::new(instance, &g, &sol, opt, Some(ms));
    let witness = match &verdict {
        Verdict::Witness(p) => Some(p.clone()),
        Verdict::Feasible => None,
    };
    if json {
        let body = SolveJson {
            solution: CoverJson::new(&sol, &verdict),
            witness: witness.clone(),
            report: row,
        };
        serde_json::to_writer_pretty(&mut *out, &body).map_err(|e| input(e.to_string()))?;
        writeln!(out).map_err(io_failure)?;
    } else {
        let show = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        let mut text = String::new();
        text += &format!("algorithm  {algo}\n");
        text += &format!("k          {k}\n");
        text += &format!(
            "graph      n={} m={} d={}\n",
            g.n(),
            g.m(),
            show(row.d.map(|d| d.to_string()))
        );
        text += &format!("size       {}\n", sol.size());
        text += &format!(
            "feasible   {}\n",
            if verdict.is_feasible() { "yes" } else { "NO" }
        );
        text += &format!("lower      {}\n", show(row.lb.map(|x| x.to_string())));
        text += &format!("optimum    {}\n", show(opt.map(|x| x.to_string())));
        text += &format!(
            "ratio_lb   {}\n",
            show(row.ratio_lb.map(|x| format!("{x:.4}")))
        );
        for c in &sol.candidates {
            text += &format!("candidate  {} {}\n", c.name, c.size);
        }
        let cover: Vec<String> = sol.cover.iter().map(|v| v.to_string()).collect();
        text += &format!("cover      {}\n", cover.join(" "));
        out.write_all(text.as_bytes()).map_err(io_failure)?;
    }
    if let Some(w) = witness {
        return Err(Failure {
            code: 2,
            message: format!("{algo} produced an infeasible cover; surviving {k}-path {w:?}"),
        });
    }
    Ok(())
}
