//! Verification suites. Each prints `suite,check,passed,total,status` rows
//! and the command exits 4 if any row fails.

use crate::{out, CliError, CliResult, VerifyArgs, EXIT_VERIFY};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regsubmod::bench::{brute_force_opt, random_cut, random_dicut, with_constraint, EllDist, WeightDist};
use regsubmod::contgreedy::{measured_cg_trajectory, CgConfig, MarginalMode};
use regsubmod::cutlp::{dicut_lp_vertex, directed_cut_lp, is_half_integral, undirected_cut_lp, HALF_INTEGRAL_TOL};
use regsubmod::doublegreedy::{deterministic_dg, exact_dg_expectation, index_order};
use regsubmod::guarantees::{alpha_comb, alpha_nonpos};
use regsubmod::setfn::Repr;
use regsubmod::sgap::*;
use regsubmod::{Instance, Mask, Matroid};

pub const SUITES: &[&str] = &["dg-invariants", "cg-trajectory", "cutlp", "tables", "sgap-tables", "limits"];

const TOL: f64 = 1e-9;

#[derive(Default)]
struct Tally {
    rows: Vec<(String, usize, usize)>,
}

impl Tally {
    fn add(&mut self, check: &str, ok: bool) {
        match self.rows.iter_mut().find(|r| r.0 == check) {
            Some(r) => {
                r.1 += usize::from(ok);
                r.2 += 1;
            }
            None => self.rows.push((check.to_string(), usize::from(ok), 1)),
        }
    }
}

fn best(inst: &Instance, alpha: f64, beta: f64) -> CliResult<f64> {
    Ok(brute_force_opt(inst, alpha, beta)?.1)
}

/// Case `i` of a suite seeded with `seed`.
fn case_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64)
}

fn random_instance(seed: u64, n: usize, ell: EllDist) -> CliResult<Instance> {
    let w = WeightDist::Uniform(0.0, 1.0);
    Ok(if seed % 2 == 0 { random_dicut(n, 0.4, w, ell, seed)? } else { random_cut(n, 0.4, w, ell, seed)? })
}

fn dg_invariants(a: &VerifyArgs, t: &mut Tally) -> CliResult<()> {
    for i in 0..a.cases {
        let s = case_seed(a.seed, i);
        let n = 2 + i % 9;
        let r = [1.0, 2.0, 4.0][i % 3];
        let inst = random_instance(s, n, EllDist::NonNegative(1.0))?;
        let order = index_order(n);
        let (set, tr) = deterministic_dg(&inst.f, &inst.ell, r, &order)?;
        let (mut px, mut py): (Mask, Mask) = (0, (1 << n) - 1);
        let mut nested = true;
        for st in &tr.steps {
            nested &= st.gain_x - st.gain_y >= -TOL && px & !st.x == 0 && st.x & !st.y == 0 && st.y & !py == 0;
            px = st.x;
            py = st.y;
        }
        t.add("trace nested, X_n = Y_n", nested && px == py && px == set);
        let d = r + 1.0 + 1.0 / r;
        let v = inst.value(set);
        t.add("deterministic (1/d, (r+1)/d)", v >= best(&inst, 1.0 / d, (r + 1.0) / d)? - TOL);
        t.add("deterministic (0, 1)", v >= best(&inst, 0.0, 1.0)? - TOL);
        let e = exact_dg_expectation(&inst.f, &inst.ell, &order)?;
        let mut ok = true;
        for r in [1.0, 2.0, 4.0, 8.0] {
            let d = r + 2.0 + 1.0 / r;
            ok &= e >= best(&inst, 2.0 / d, (r + 2.0) / d)? - TOL;
        }
        t.add("randomized expectation", ok);
    }
    Ok(())
}

fn cg_trajectory(a: &VerifyArgs, t: &mut Tally) -> CliResult<()> {
    for i in 0..a.cases {
        let s = case_seed(a.seed, i);
        let n = 3 + i % 5;
        let base = random_instance(s, n, EllDist::Mixed(0.5))?;
        let inst = with_constraint(base, Matroid::uniform(n, 1 + i % (n - 1))?)?;
        let p = inst.polytope();
        let cfg = CgConfig { steps: a.steps, marginal: MarginalMode::Exact, ..CgConfig::new(1.0) };
        let delta = cfg.delta();
        let traj = measured_cg_trajectory(&inst.f, Some(&inst.ell), true, &p, &cfg)?;
        t.add("length steps+1", traj.len() == a.steps + 1);
        let (mut mono, mut cap, mut feas) = (true, true, true);
        for (k, w) in traj.windows(2).enumerate() {
            mono &= w[1].iter().zip(&w[0]).all(|(b, a)| b >= a);
            let bound = 1.0 - (1.0 - delta).powi(k as i32 + 1);
            cap &= w[1].iter().all(|&v| v <= bound + 1e-12);
            let time = (k + 1) as f64 * delta;
            let scaled: Vec<f64> = w[1].iter().map(|v| v / time).collect();
            feas &= p.contains_point(&scaled, 1e-7)?;
        }
        t.add("monotone", mono);
        t.add("y ≤ 1 − (1−δ)^i", cap);
        t.add("y(t)/t ∈ P", feas);
    }
    Ok(())
}

fn cutlp(a: &VerifyArgs, t: &mut Tally) -> CliResult<()> {
    for i in 0..a.cases {
        let s = case_seed(a.seed, i);
        let n = 3 + i % 6;
        let w = WeightDist::Uniform(0.0, 1.0);
        if i % 2 == 0 {
            let base = random_cut(n, 0.5, w, EllDist::Mixed(0.5), s)?;
            let inst = with_constraint(base, Matroid::uniform(n, 1 + i % n)?)?;
            let r = undirected_cut_lp(&inst.f, &inst.ell, &inst.polytope(), s)?;
            t.add("undirected ½f + ℓ", inst.feasible(r.set) && r.expected >= best(&inst, 0.5, 1.0)? - TOL);
        } else {
            let inst = random_dicut(n, 0.4, w, EllDist::Mixed(0.5), s)?;
            let r = directed_cut_lp(&inst.f, &inst.ell, s)?;
            t.add("directed ½f + ℓ", r.expected >= best(&inst, 0.5, 1.0)? - TOL);
            t.add("directed LP half-integral", is_half_integral(&r.x, HALF_INTEGRAL_TOL));
            let m = match inst.f.repr() {
                Repr::DirectedCut(es) => es.len(),
                _ => unreachable!("random_dicut builds a directed cut"),
            };
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let cx: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let cc: Vec<f64> = (0..m).map(|_| rng.gen_range(-0.2..1.0)).collect();
            t.add("random-objective vertex half-integral", dicut_lp_vertex(&inst.f, &cx, &cc).is_ok());
        }
    }
    Ok(())
}

fn tables(t: &mut Tally) -> CliResult<()> {
    for (beta, want) in [(0.7, 0.3478), (0.8, 0.3630), (0.9, 0.3757), (1.0, 0.3856), (1.1, 0.3925), (1.2, 0.3967), (1.3, 0.3982), (1.4, 0.3982)] {
        t.add("nonpos α(β) ± 0.001", (alpha_nonpos(beta)?.alpha - want).abs() <= 1e-3);
    }
    for (beta, want) in [(0.85, 0.4749), (0.9, 0.4493), (0.95, 0.4226), (1.0, 0.3856)] {
        t.add("nonneg-comb α(β) ± 0.001", (alpha_comb(beta)?.alpha - want).abs() <= 1e-3);
    }
    Ok(())
}

fn sgap_tables(t: &mut Tally) -> CliResult<()> {
    let signed = SgapParams::new(SignMode::NonPositive);
    for (beta, want) in [(0.1, 0.0935), (0.6, 0.3846), (1.0, 0.4773)] {
        t.add("inapprox-nonpos ± 0.002", (outer_min(beta, &signed)?.alpha - want).abs() <= 2e-3);
    }
    let free = SgapParams::new(SignMode::Unconstrained);
    for (beta, want) in [(0.8, 0.4295), (1.0, 0.4392)] {
        t.add("inapprox-unconstrained ± 0.002", (outer_min(beta, &free)?.alpha - want).abs() <= 2e-3);
    }
    Ok(())
}

fn limits(t: &mut Tally) -> CliResult<()> {
    t.add("2ln2 sup β ≥ 1.376", limit_two_ln_two(&default_two_ln_two_schedule())?.1 >= 1.376);
    t.add("sqrt2 inf β ≤ 0.9434", limit_sqrt2(&default_sqrt2_schedule())?.1 <= 0.9434);
    t.add("hyperedge α bound 0.4074", (hyperedge_0408().alpha_bound - 0.4074).abs() <= 1e-4);
    t.add("cardinality max F̂ < 0.478", cardinality_0478_check(KAPPA_0478)?.0 < 0.478);
    Ok(())
}

pub fn run(a: &VerifyArgs) -> CliResult<()> {
    let mut t = Tally::default();
    match a.suite.as_str() {
        "dg-invariants" => dg_invariants(a, &mut t)?,
        "cg-trajectory" => cg_trajectory(a, &mut t)?,
        "cutlp" => cutlp(a, &mut t)?,
        "tables" => tables(&mut t)?,
        "sgap-tables" => sgap_tables(&mut t)?,
        "limits" => limits(&mut t)?,
        other => return Err(CliError::usage(format!("unknown suite `{other}`; valid: {}", SUITES.join(", ")))),
    }
    let mut w = out::Csv::open(a.out.as_deref(), &["suite", "check", "passed", "total", "status"])?;
    let mut all = true;
    for (check, passed, total) in &t.rows {
        let ok = passed == total;
        all &= ok;
        w.row(&[a.suite.clone(), check.clone(), passed.to_string(), total.to_string(), if ok { "pass" } else { "FAIL" }.to_string()])?;
    }
    w.finish()?;
    if all {
        Ok(())
    } else {
        Err(CliError { code: EXIT_VERIFY, msg: format!("suite {} failed", a.suite) })
    }
}
