mod algos;
mod out;
mod verify;

use clap::{Args, Parser, Subcommand};
use regsubmod::Error;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exit codes.
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_CAPABILITY: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub msg: String,
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, msg: msg.into() }
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Self { code: EXIT_PARSE, msg: msg.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Structural(_) => EXIT_PARSE,
            Error::Capability(_) => EXIT_CAPABILITY,
            _ => EXIT_USAGE,
        };
        Self { code, msg: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::usage(format!("i/o: {e}"))
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "regsubmod", version, about = "Maximize f(S) + ℓ(S) for submodular f and linear ℓ", after_help = algos::help_table())]
struct Cli {
    /// Worker threads for parallel sections (0 = one per core).
    #[arg(long, global = true, env = "REGSUBMOD_THREADS", default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run one algorithm on an instance file and print a result record.
    Solve(SolveArgs),
    /// Guarantee-LP tables: α(β) per requested β.
    Table(TableArgs),
    /// Symmetry-gap searches and limit schedules.
    Sgap(SgapArgs),
    /// Run a verification suite; exits 4 if any check fails.
    Verify(VerifyArgs),
    /// Write benchmark instances as JSON.
    Gen(GenArgs),
}

#[derive(Args, Debug, Clone)]
pub struct SolveArgs {
    /// Instance JSON file.
    #[arg(long)]
    pub instance: PathBuf,
    /// Algorithm (see the list below).
    #[arg(long, default_value = "brute")]
    pub algo: String,
    /// Double-greedy trade-off parameter (r ≥ 1).
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    /// Stopping time for pipeline-unconstrained.
    #[arg(long, default_value_t = 1.0)]
    pub t: f64,
    #[arg(long, default_value_t = 0.0)]
    pub ts: f64,
    #[arg(long, default_value_t = 1.0)]
    pub tf: f64,
    /// Continuous-greedy steps per unit time.
    #[arg(long, default_value_t = 200)]
    pub steps: usize,
    /// Samples per marginal estimate (0 = exact when cheap).
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Guess-grid accuracy.
    #[arg(long, default_value_t = 0.1)]
    pub eps: f64,
    /// Guess grid for pipeline-nonpos: full or geometric.
    #[arg(long, default_value = "full")]
    pub grid: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// nonpos or nonneg-comb.
    #[arg(long)]
    name: String,
    /// Comma-separated β values (default: the standard rows).
    #[arg(long, value_delimiter = ',')]
    beta: Vec<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SgapArgs {
    /// inapprox-nonpos or inapprox-unconstrained.
    #[arg(long, conflicts_with = "limit")]
    table: Option<String>,
    /// 2ln2, sqrt2, 0408, 0478 or csm-beta1.
    #[arg(long)]
    limit: Option<String>,
    #[arg(long, value_delimiter = ',')]
    beta: Vec<f64>,
    /// Gap slack for csm-beta1.
    #[arg(long, default_value_t = 0.05)]
    eps: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// dg-invariants, cg-trajectory, cutlp, tables, sgap-tables or limits.
    #[arg(long)]
    pub suite: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random cases for the property suites.
    #[arg(long, default_value_t = 200)]
    pub cases: usize,
    #[arg(long, default_value_t = 200)]
    pub steps: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    family: String,
    /// Comma-separated key=value pairs, e.g. `n=8,seed=3`.
    #[arg(long, default_value = "")]
    params: String,
    /// Output file; several instances get `-<i>` suffixes.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.threads > 0 {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}

fn run(cmd: Cmd) -> CliResult<()> {
    match cmd {
        Cmd::Solve(a) => algos::solve(&a),
        Cmd::Table(a) => table(a),
        Cmd::Sgap(a) => sgap(a),
        Cmd::Verify(a) => verify::run(&a),
        Cmd::Gen(a) => gen(a),
    }
}

fn table(a: TableArgs) -> CliResult<()> {
    use regsubmod::guarantees::{alpha_comb, alpha_nonpos};
    let (solve, defaults): (fn(f64) -> regsubmod::Result<regsubmod::guarantees::GuaranteeSolution>, &[f64]) = match a.name.as_str() {
        "nonpos" => (alpha_nonpos, &[0.7, 0.8, 0.9, 1.0, 1.1, 1.2, 1.3, 1.4]),
        "nonneg-comb" => (alpha_comb, &[0.85, 0.9, 0.95, 1.0]),
        other => return Err(CliError::usage(format!("unknown table `{other}`; valid: nonpos, nonneg-comb"))),
    };
    let betas = if a.beta.is_empty() { defaults.to_vec() } else { a.beta };
    let mut w = out::Csv::open(a.out.as_deref(), &["table", "beta", "alpha"])?;
    for beta in betas {
        let s = solve(beta)?;
        w.row(&[a.name.clone(), out::num(beta), out::num4(s.alpha)])?;
    }
    w.finish()
}

fn sgap(a: SgapArgs) -> CliResult<()> {
    use regsubmod::sgap::*;
    if let Some(name) = a.table {
        let (mode, defaults): (SignMode, &[f64]) = match name.as_str() {
            "inapprox-nonpos" => (SignMode::NonPositive, &[0.1, 0.6, 1.0]),
            "inapprox-unconstrained" => (SignMode::Unconstrained, &[0.8, 1.0]),
            other => return Err(CliError::usage(format!("unknown table `{other}`; valid: inapprox-nonpos, inapprox-unconstrained"))),
        };
        let betas = if a.beta.is_empty() { defaults.to_vec() } else { a.beta };
        let mut w = out::Csv::open(a.out.as_deref(), &["table", "beta", "alpha", "kappa", "ell_p", "ell_q", "q", "p"])?;
        for beta in betas {
            let r = outer_min(beta, &SgapParams::new(mode))?;
            w.row(&[name.clone(), out::num(beta), out::num4(r.alpha), out::num4(r.kappa), out::num4(r.ell_p), out::num4(r.ell_q), out::num4(r.q), out::num4(r.p)])?;
        }
        return w.finish();
    }
    let Some(limit) = a.limit else {
        return Err(CliError::usage("give --table or --limit"));
    };
    match limit.as_str() {
        "2ln2" => {
            let (pts, sup) = limit_two_ln_two(&default_two_ln_two_schedule())?;
            let mut w = out::Csv::open(a.out.as_deref(), &["p_star", "kappa", "ell_p", "beta"])?;
            for p in pts {
                w.row(&[out::num(p.p_star), out::num(p.kappa), out::num(p.ell_p), out::num(p.beta)])?;
            }
            w.row(&["sup".into(), String::new(), String::new(), out::num(sup)])?;
            w.finish()
        }
        "sqrt2" => {
            let (pts, inf) = limit_sqrt2(&default_sqrt2_schedule())?;
            let mut w = out::Csv::open(a.out.as_deref(), &["p_star", "kappa", "ell_p", "max_value", "holds", "beta"])?;
            for p in pts {
                w.row(&[out::num(p.p_star), out::num(p.kappa), out::num(p.ell_p), out::num(p.max_value), p.holds.to_string(), out::num(p.beta)])?;
            }
            w.row(&["inf".into(), String::new(), String::new(), String::new(), String::new(), out::num(inf)])?;
            w.finish()
        }
        "0408" => {
            let h = hyperedge_0408();
            let mut w = out::Csv::open(a.out.as_deref(), &["ell", "max_value", "argmax_p", "argmax_q", "alpha_bound"])?;
            w.row(&[out::num(ELL_0408), out::num(h.max_value), out::num(h.argmax.0), out::num(h.argmax.1), out::num4(h.alpha_bound)])?;
            w.finish()
        }
        "0478" => {
            let (v, q, p) = cardinality_0478_check(KAPPA_0478)?;
            let mut w = out::Csv::open(a.out.as_deref(), &["kappa", "max_value", "q", "p", "below_0478"])?;
            w.row(&[out::num(KAPPA_0478), out::num(v), out::num(q), out::num(p), (v < 0.478).to_string()])?;
            w.finish()
        }
        "csm-beta1" => {
            let alpha = 0.5 + a.eps;
            let k = (2..=10_000).find(|&k| csm_beta1_check(k, alpha, 1.0).unwrap_or(false));
            let mut w = out::Csv::open(a.out.as_deref(), &["alpha", "beta", "first_k"])?;
            w.row(&[out::num(alpha), "1".into(), k.map_or_else(|| "none".into(), |k| k.to_string())])?;
            w.finish()
        }
        other => Err(CliError::usage(format!("unknown limit `{other}`; valid: 2ln2, sqrt2, 0408, 0478, csm-beta1"))),
    }
}

pub fn parse_params(s: &str) -> CliResult<BTreeMap<String, String>> {
    let mut m = BTreeMap::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| CliError::parse(format!("expected key=value, got `{part}`")))?;
        m.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(m)
}

fn gen(a: GenArgs) -> CliResult<()> {
    let params = parse_params(&a.params)?;
    let insts = regsubmod::bench::generate(&a.family, &params)?;
    match a.out {
        None if insts.len() == 1 => println!("{}", insts[0].to_json()),
        None => {
            let all: Vec<_> = insts.iter().map(|i| i.to_value()).collect();
            println!("{}", serde_json::to_string_pretty(&all).expect("instances serialize"));
        }
        Some(path) if insts.len() == 1 => std::fs::write(&path, insts[0].to_json() + "\n")?,
        Some(path) => {
            let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("instance").to_string();
            let ext = path.extension().and_then(|s| s.to_str()).unwrap_or("json").to_string();
            for (i, inst) in insts.iter().enumerate() {
                std::fs::write(path.with_file_name(format!("{stem}-{i}.{ext}")), inst.to_json() + "\n")?;
            }
        }
    }
    Ok(())
}
