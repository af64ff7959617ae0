//! Algorithm registry and the `solve` command.

use crate::{out, CliError, CliResult, SolveArgs};
use regsubmod::contgreedy::*;
use regsubmod::cutlp::{directed_cut_lp, undirected_cut_lp};
use regsubmod::doublegreedy::{deterministic_dg, index_order, oblivious_dicut, randomized_dg};
use regsubmod::matroid::pipage_round;
use regsubmod::setfn::{elements, Repr};
use regsubmod::{Constraint, Instance, Mask};
use std::time::Instant;

pub struct Algo {
    pub name: &'static str,
    pub guarantee: &'static str,
    pub setting: &'static str,
}

pub const ALGOS: &[Algo] = &[
    Algo { name: "brute", guarantee: "(1, 1); with --alpha, --beta: exact max of α·f + β·ℓ", setting: "any, n ≤ 20" },
    Algo { name: "deterministic-dg", guarantee: "(1/(r+1+1/r), (r+1)/(r+1+1/r)) and (0, 1)", setting: "ℓ ≥ 0, unconstrained" },
    Algo { name: "randomized-dg", guarantee: "(2/(r+2+1/r), (r+2)/(r+2+1/r)) for every r ≥ 1, in expectation", setting: "ℓ ≥ 0, unconstrained" },
    Algo { name: "oblivious-dicut", guarantee: "(β(1−β), β) in expectation", setting: "directed cut f, unconstrained" },
    Algo { name: "cut-lp", guarantee: "(0.5, 1) in expectation", setting: "undirected cut f, matroid or none" },
    Algo { name: "dicut-lp", guarantee: "(0.5, 1) in expectation", setting: "directed cut f, unconstrained" },
    Algo { name: "measured-cg", guarantee: "(1/e, 1) for ℓ ≤ 0, (1/e, 1−1/e) for ℓ ≥ 0 at tf = 1", setting: "matroid or none" },
    Algo { name: "aided-mcg", guarantee: "building block; combined through the nonpos table", setting: "ℓ ≤ 0, matroid or none" },
    Algo { name: "pipeline-nonpos", guarantee: "(α(β), β) from `table --name nonpos`, e.g. (0.3856, 1)", setting: "ℓ ≤ 0, matroid or none" },
    Algo { name: "pipeline-nonneg-csm", guarantee: "(1/e, 1−1/e)", setting: "ℓ ≥ 0, matroid" },
    Algo { name: "pipeline-unconstrained", guarantee: "(1/(e+1), e/(e+1)) ≈ (0.2689, 0.7311) at t = 1", setting: "any-sign ℓ, matroid" },
    Algo { name: "pipeline-0280", guarantee: "(0.280, 0.7)", setting: "any-sign ℓ, matroid" },
    Algo { name: "pipeline-nonneg-usm", guarantee: "(0.3856, 1)", setting: "ℓ ≥ 0, unconstrained" },
];

pub fn help_table() -> String {
    let mut s = String::from("Algorithms (--algo), with (α, β) guarantees:\n");
    for a in ALGOS {
        s.push_str(&format!("  {:<24} {}  [{}]\n", a.name, a.guarantee, a.setting));
    }
    s.push_str("\nExit codes: 0 ok, 1 usage, 2 parse, 3 capability, 4 verification failure.");
    s
}

fn load(path: &std::path::Path) -> CliResult<Instance> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    Instance::from_json(&text).map_err(|e| {
        let mut c = CliError::from(e);
        c.msg = format!("{}: {}", path.display(), c.msg);
        c
    })
}

fn need_unconstrained(inst: &Instance, algo: &str) -> CliResult<()> {
    match inst.constraint {
        Constraint::None => Ok(()),
        Constraint::Matroid(_) => Err(CliError::usage(format!("{algo} does not take a matroid constraint"))),
    }
}

fn need_matroid(inst: &Instance, algo: &str) -> CliResult<()> {
    match inst.constraint {
        Constraint::Matroid(_) => Ok(()),
        Constraint::None => Err(CliError::usage(format!("{algo} needs a matroid constraint"))),
    }
}

fn marginal(samples: usize) -> MarginalMode {
    if samples == 0 {
        MarginalMode::Auto
    } else {
        MarginalMode::Sampled(samples)
    }
}

/// Runs the algorithm and returns the chosen set plus the parameters that
/// went into it.
fn dispatch(inst: &Instance, a: &SolveArgs) -> CliResult<(Mask, String)> {
    let n = inst.n();
    let (f, ell, p) = (&inst.f, &inst.ell, inst.polytope());
    let order = index_order(n);
    let pcfg = || -> CliResult<PipelineConfig> {
        let grid = match a.grid.as_str() {
            "full" => GuessGrid::Full,
            "geometric" => GuessGrid::Geometric,
            g => return Err(CliError::usage(format!("unknown grid `{g}`; valid: full, geometric"))),
        };
        Ok(PipelineConfig { steps: a.steps, eps: a.eps, grid, marginal: marginal(a.samples), seed: a.seed, ..Default::default() })
    };
    let pipeline_params = format!("steps={} eps={} grid={} samples={}", a.steps, a.eps, a.grid, a.samples);
    let cg = |ts: f64, tf: f64| CgConfig { t_s: ts, t_f: tf, steps: a.steps, marginal: marginal(a.samples), seed: a.seed };
    Ok(match a.algo.as_str() {
        "brute" => (regsubmod::bench::brute_force_opt(inst, a.alpha, a.beta)?.0, format!("alpha={} beta={}", a.alpha, a.beta)),
        "deterministic-dg" => {
            need_unconstrained(inst, &a.algo)?;
            (deterministic_dg(f, ell, a.r, &order)?.0, format!("r={}", a.r))
        }
        "randomized-dg" => {
            need_unconstrained(inst, &a.algo)?;
            (randomized_dg(f, ell, &order, a.seed)?.0, String::new())
        }
        "oblivious-dicut" => {
            need_unconstrained(inst, &a.algo)?;
            (oblivious_dicut(f, ell, a.beta, a.seed)?, format!("beta={}", a.beta))
        }
        "cut-lp" => {
            if !matches!(f.repr(), Repr::UndirectedCut(_)) {
                return Err(CliError::usage("cut-lp needs an undirected cut function"));
            }
            (undirected_cut_lp(f, ell, &p, a.seed)?.set, String::new())
        }
        "dicut-lp" => {
            need_unconstrained(inst, &a.algo)?;
            if !f.is_directed_cut() {
                return Err(CliError::usage("dicut-lp needs a directed cut function"));
            }
            (directed_cut_lp(f, ell, a.seed)?.set, String::new())
        }
        "measured-cg" => {
            let y = distorted_measured_cg(f, ell, &p, &cg(0.0, a.tf))?;
            (pipage_round(&p, f, ell, &y, a.seed)?, format!("tf={} steps={}", a.tf, a.steps))
        }
        "aided-mcg" => {
            let ls = LocalSearchConfig { marginal: marginal(a.samples), seed: a.seed, ..Default::default() };
            let z = local_search(f, Some(ell), &p, &ls)?.z;
            let y = aided_mcg(f, Some(ell), &z, &p, &cg(a.ts, a.tf))?;
            (pipage_round(&p, f, ell, &y, a.seed)?, format!("ts={} tf={} steps={}", a.ts, a.tf, a.steps))
        }
        "pipeline-nonpos" => (pipeline_nonpos(f, ell, &p, &pcfg()?)?.set, pipeline_params),
        "pipeline-nonneg-csm" => {
            need_matroid(inst, &a.algo)?;
            (pipeline_nonneg_csm(f, ell, &p, &pcfg()?)?.set, pipeline_params)
        }
        "pipeline-unconstrained" => (pipeline_unconstrained(f, ell, &p, a.t, &pcfg()?)?.set, format!("t={} {pipeline_params}", a.t)),
        "pipeline-0280" => {
            need_matroid(inst, &a.algo)?;
            (pipeline_0280(f, ell, &p, &pcfg()?)?.set, pipeline_params)
        }
        "pipeline-nonneg-usm" => {
            need_unconstrained(inst, &a.algo)?;
            (pipeline_nonneg_usm_beta1(f, ell, &pcfg()?)?.set, pipeline_params)
        }
        other => {
            let names: Vec<&str> = ALGOS.iter().map(|a| a.name).collect();
            return Err(CliError::usage(format!("unknown algorithm `{other}`; valid: {}", names.join(", "))));
        }
    })
}

pub fn solve(a: &SolveArgs) -> CliResult<()> {
    let inst = load(&a.instance)?;
    let t = Instant::now();
    let (set, params) = dispatch(&inst, a)?;
    let ms = t.elapsed().as_secs_f64() * 1e3;
    let elems: Vec<String> = elements(set).iter().map(|u| u.to_string()).collect();
    let mut w = out::Csv::open(a.out.as_deref(), &["algorithm", "params", "set", "elements", "f", "ell", "total", "runtime_ms", "seed"])?;
    w.row(&[
        a.algo.clone(),
        params,
        set.to_string(),
        elems.join(" "),
        out::num(inst.f.eval(set)),
        out::num(inst.ell.eval(set)),
        out::num(inst.value(set)),
        format!("{ms:.3}"),
        a.seed.to_string(),
    ])?;
    w.finish()
}
