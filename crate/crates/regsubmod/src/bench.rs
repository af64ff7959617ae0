//! Brute-force oracles and instance generators.

use crate::error::{Error, Result};
use crate::instance::{Constraint, Instance};
use crate::matroid::Matroid;
use crate::setfn::{full_mask, Edge, HyperEdge, LinearFn, Mask, Repr, SubmodularFn};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const BRUTE_MAX_N: usize = 20;

/// Exhaustive maximizer of `α·f(S) + β·ℓ(S)` over feasible `S`. Ties keep
/// the smallest bitmask.
pub fn brute_force_opt(inst: &Instance, alpha: f64, beta: f64) -> Result<(Mask, f64)> {
    let n = inst.n();
    if n > BRUTE_MAX_N {
        return Err(Error::Capability(format!("brute force needs n ≤ {BRUTE_MAX_N}, got {n}")));
    }
    let mut best = (0, f64::NEG_INFINITY);
    for s in 0..=full_mask(n) {
        if !inst.feasible(s) {
            continue;
        }
        let v = alpha * inst.f.eval(s) + beta * inst.ell.eval(s);
        if v > best.1 {
            best = (s, v);
        }
    }
    Ok(best)
}

/// A second, independent maximizer for unconstrained directed cuts: walks
/// subsets in Gray-code order and updates the cut value incrementally
/// from adjacency lists.
pub fn brute_force_dicut_gray(f: &SubmodularFn, ell: &LinearFn, alpha: f64, beta: f64) -> Result<(Mask, f64)> {
    let Repr::DirectedCut(edges) = f.repr() else {
        return Err(Error::Contract("Gray-code oracle needs a directed cut".into()));
    };
    let n = f.n();
    if n > BRUTE_MAX_N {
        return Err(Error::Capability(format!("brute force needs n ≤ {BRUTE_MAX_N}, got {n}")));
    }
    let mut out: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    let mut inc: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for e in edges.iter().filter(|e| e.a != e.b) {
        out[e.a].push((e.b, e.w));
        inc[e.b].push((e.a, e.w));
    }
    let mut inside = vec![false; n];
    let (mut cut, mut lin) = (0.0, 0.0);
    let mut s: Mask = 0;
    let mut best = (0, 0.0);
    for i in 1u64..(1u64 << n) {
        let v = i.trailing_zeros() as usize;
        let sign = if inside[v] { -1.0 } else { 1.0 };
        // Arcs v→b count when b is outside; arcs a→v stop counting once v joins.
        let d_out: f64 = out[v].iter().filter(|(b, _)| !inside[*b]).map(|(_, w)| w).sum();
        let d_in: f64 = inc[v].iter().filter(|(a, _)| inside[*a]).map(|(_, w)| w).sum();
        cut += sign * (d_out - d_in);
        lin += sign * ell.weights[v];
        inside[v] = !inside[v];
        s ^= 1 << v;
        let val = alpha * cut + beta * lin;
        if val > best.1 + 1e-12 || ((val - best.1).abs() <= 1e-12 && s < best.0) {
            best = (s, val);
        }
    }
    Ok(best)
}

fn pos(x: f64, what: &str) -> Result<f64> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(Error::Contract(format!("{what} must be positive, got {x}")))
    }
}

/// Two hyperedges plus an undirected edge, each hyperedge tail replaced by
/// `t` copies, under the cardinality constraint `t + 1`.
///
/// Elements: `a = 0`, `b = 1`, then `a_{i,j} = 2 + i·t + j` and
/// `b_{i,j} = 2 + k·t + i·t + j`. The copy-averaged hyperedge is written
/// exactly as the mean of `t^k` ordinary hyperedges.
pub fn gharan_vondrak(k: usize, t: usize, kappa: f64) -> Result<Instance> {
    if k == 0 || t == 0 || !(0.0..=1.0).contains(&kappa) {
        return Err(Error::Contract("need k, t ≥ 1 and κ ∈ [0,1]".into()));
    }
    let n = 2 + 2 * k * t;
    let combos = t.checked_pow(k as u32).filter(|&c| c <= 4096);
    let Some(combos) = combos else {
        return Err(Error::Capability("t^k must be at most 4096".into()));
    };
    if n > crate::setfn::MAX_N {
        return Err(Error::Capability(format!("n = {n} exceeds 64")));
    }
    let mut hyper = Vec::with_capacity(2 * combos);
    for (side, centre) in [(0usize, 0usize), (1, 1)] {
        for c in 0..combos {
            let mut tails: Mask = 0;
            let mut rest = c;
            for i in 0..k {
                let j = rest % t;
                rest /= t;
                tails |= 1 << (2 + side * k * t + i * t + j);
            }
            hyper.push(HyperEdge { tails, heads: 1 << centre, w: kappa / combos as f64 });
        }
    }
    // The undirected edge {a, b} as two one-element hyperedges of weight 1−κ.
    hyper.push(HyperEdge { tails: 1, heads: 2, w: 1.0 - kappa });
    hyper.push(HyperEdge { tails: 2, heads: 1, w: 1.0 - kappa });
    let f = SubmodularFn::hyper_directed_cut(n, hyper)?;
    Instance::new(f, LinearFn::zero(n), Constraint::Matroid(Matroid::uniform(n, t + 1)?))
}

/// Index of `a_{i,j}` (`side = 0`) or `b_{i,j}` (`side = 1`) in [`gharan_vondrak`].
pub fn gv_index(k: usize, t: usize, side: usize, i: usize, j: usize) -> usize {
    2 + side * k * t + i * t + j
}

/// Two arcs `u1→u2` (weight `r + ε/2`) and `u2→u1` (weight 1), `ℓ = (0, r)`.
pub fn dg_tight_det(r: f64, eps: f64) -> Result<Instance> {
    if !(r >= 1.0) {
        return Err(Error::Contract("r must be ≥ 1".into()));
    }
    pos(eps, "ε")?;
    let f = SubmodularFn::directed_cut(2, vec![Edge { a: 0, b: 1, w: r + eps / 2.0 }, Edge { a: 1, b: 0, w: 1.0 }])?;
    Instance::unconstrained(f, LinearFn::new(vec![0.0, r])?)
}

fn star(n: usize, r: f64) -> Result<SubmodularFn> {
    let m = (n - 1) as f64;
    let hub = n - 1;
    let mut edges = Vec::with_capacity(2 * (n - 1));
    for i in 0..hub {
        edges.push(Edge { a: i, b: hub, w: r / m });
        edges.push(Edge { a: hub, b: i, w: 1.0 / m });
    }
    SubmodularFn::directed_cut(n, edges)
}

fn star_args(n: usize, r: f64) -> Result<()> {
    if n > crate::setfn::MAX_N {
        return Err(Error::Contract("need 2 ≤ n ≤ 64".into()));
    }
    closed_form_args(n, r)
}

/// The closed forms never build a mask, so any `n ≥ 2` works.
fn closed_form_args(n: usize, r: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::Contract("need n ≥ 2".into()));
    }
    if !(r >= 1.0) {
        return Err(Error::Contract("r must be ≥ 1".into()));
    }
    Ok(())
}

/// Star digraph on `u_1..u_n` with hub `u_n`: arcs `u_i→u_n` of weight
/// `r/(n−1)` and `u_n→u_i` of weight `1/(n−1)`; `ℓ(u_n) = r − 1`.
pub fn dg_tight_rand(n: usize, r: f64) -> Result<Instance> {
    star_args(n, r)?;
    let mut ell = vec![0.0; n];
    ell[n - 1] = r - 1.0;
    Instance::unconstrained(star(n, r)?, LinearFn::new(ell)?)
}

/// The same star with `ℓ(u_i) = (1−r)/(n−1)` for `i < n` and `ℓ(u_n) = 0`.
pub fn dg_rand_bad(n: usize, r: f64) -> Result<Instance> {
    star_args(n, r)?;
    let mut ell = vec![(1.0 - r) / (n - 1) as f64; n];
    ell[n - 1] = 0.0;
    Instance::unconstrained(star(n, r)?, LinearFn::new(ell)?)
}

/// Exact expected value of randomized double greedy (index order) on a
/// star instance. Every spoke `u_i` is kept independently with the same
/// probability, so only the kept fraction `φ` matters; the hub is then
/// kept iff doing so strictly increases the value.
fn star_expectation(n: usize, keep: f64, with_hub: impl Fn(f64) -> f64, without_hub: impl Fn(f64) -> f64) -> f64 {
    let m = n - 1;
    // Log space: (1 − keep)^m underflows for large m.
    let mut log_pmf = vec![m as f64 * (1.0 - keep).ln(); m + 1];
    for k in 0..m {
        log_pmf[k + 1] = log_pmf[k] + ((m - k) as f64 / (k + 1) as f64).ln() + (keep / (1.0 - keep)).ln();
    }
    log_pmf
        .iter()
        .map(|l| l.exp())
        .enumerate()
        .map(|(k, p)| {
            let phi = k as f64 / m as f64;
            let (a, b) = (with_hub(phi), without_hub(phi));
            p * if a > b { a } else { b }
        })
        .sum()
}

/// `E[f + ℓ]` of randomized double greedy on [`dg_tight_rand`]: spokes are
/// kept w.p. `r/(r+1)`; the outcome is `max(rφ, r − φ)`.
pub fn dg_tight_rand_expectation(n: usize, r: f64) -> Result<f64> {
    closed_form_args(n, r)?;
    Ok(star_expectation(n, r / (r + 1.0), |phi| r - phi, |phi| r * phi))
}

/// `E[f + ℓ]` on [`dg_rand_bad`]: spokes kept w.p. `1/(r+1)`; the outcome
/// is `max(φ, 1 − rφ)`.
pub fn dg_rand_bad_expectation(n: usize, r: f64) -> Result<f64> {
    closed_form_args(n, r)?;
    Ok(star_expectation(n, 1.0 / (r + 1.0), |phi| 1.0 - r * phi, |phi| phi))
}

/// The pair of two-vertex instances that defeat any deterministic online
/// rule: `u_1` looks identical in both, yet keeping it loses on the first
/// and dropping it loses on the second.
pub fn online_bad(alpha: f64) -> Result<(Instance, Instance)> {
    pos(alpha, "α")?;
    let f = || SubmodularFn::directed_cut(2, vec![Edge { a: 0, b: 1, w: alpha / 2.0 }, Edge { a: 1, b: 0, w: 1.0 }]);
    Ok((
        Instance::unconstrained(f()?, LinearFn::new(vec![0.0, 0.0])?)?,
        Instance::unconstrained(f()?, LinearFn::new(vec![0.0, -1.0])?)?,
    ))
}

/// One generalized hyperedge with tails `a_1..a_k` (`0..k`) and heads
/// `b_1..b_k` (`k..2k`), `ℓ(a_i) = −0.2037`, `ℓ(b_i) = 0.2037`.
pub fn hyperedge_0408(k: usize) -> Result<Instance> {
    if k == 0 || 2 * k > crate::setfn::MAX_N {
        return Err(Error::Contract("need 1 ≤ k ≤ 32".into()));
    }
    let n = 2 * k;
    let tails = full_mask(k);
    let f = SubmodularFn::hyper_directed_cut(n, vec![HyperEdge { tails, heads: tails << k, w: 1.0 }])?;
    let w = crate::sgap::ELL_0408;
    let ell = (0..n).map(|u| if u < k { -w } else { w }).collect();
    Instance::unconstrained(f, LinearFn::new(ell)?)
}

/// `k` disjoint arcs `a_i → b_i` (`a_i = i`, `b_i = k + i`) under the
/// partition matroid "at most one `a`, at most `k−1` `b`s", with
/// `ℓ(a_i) = 0`, `ℓ(b_i) = 1/k`.
pub fn csm_dicut_arcs(k: usize) -> Result<Instance> {
    if k < 2 || 2 * k > crate::setfn::MAX_N {
        return Err(Error::Contract("need 2 ≤ k ≤ 32".into()));
    }
    let n = 2 * k;
    let f = SubmodularFn::directed_cut(n, (0..k).map(|i| Edge { a: i, b: k + i, w: 1.0 }).collect())?;
    let m = Matroid::partition(n, vec![(0..k).collect(), (k..n).collect()], vec![1, k - 1])?;
    let ell = (0..n).map(|u| if u < k { 0.0 } else { 1.0 / k as f64 }).collect();
    Instance::new(f, LinearFn::new(ell)?, Constraint::Matroid(m))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightDist {
    Unit,
    Uniform(f64, f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EllDist {
    Zero,
    /// `U[0, s]`.
    NonNegative(f64),
    /// `U[−s, 0]`.
    NonPositive(f64),
    /// `U[−s, s]`.
    Mixed(f64),
}

impl EllDist {
    fn sample(self, n: usize, rng: &mut impl Rng) -> Vec<f64> {
        (0..n)
            .map(|_| match self {
                EllDist::Zero => 0.0,
                EllDist::NonNegative(s) => rng.gen::<f64>() * s,
                EllDist::NonPositive(s) => -rng.gen::<f64>() * s,
                EllDist::Mixed(s) => (2.0 * rng.gen::<f64>() - 1.0) * s,
            })
            .collect()
    }
}

fn random_edges(n: usize, density: f64, weights: WeightDist, directed: bool, rng: &mut impl Rng) -> Vec<Edge> {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || (!directed && b < a) {
                continue;
            }
            if rng.gen::<f64>() < density {
                let w = match weights {
                    WeightDist::Unit => 1.0,
                    WeightDist::Uniform(lo, hi) => lo + (hi - lo) * rng.gen::<f64>(),
                };
                edges.push(Edge { a, b, w });
            }
        }
    }
    edges
}

fn check_random(n: usize, density: f64) -> Result<()> {
    if n == 0 || n > crate::setfn::MAX_N || !(0.0..=1.0).contains(&density) {
        return Err(Error::Contract("need 1 ≤ n ≤ 64 and density in [0,1]".into()));
    }
    Ok(())
}

/// Erdős–Rényi style digraph; each ordered pair is an arc w.p. `density`.
pub fn random_dicut(n: usize, density: f64, weights: WeightDist, ell: EllDist, seed: u64) -> Result<Instance> {
    check_random(n, density)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = random_edges(n, density, weights, true, &mut rng);
    let ell = ell.sample(n, &mut rng);
    Instance::unconstrained(SubmodularFn::directed_cut(n, edges)?, LinearFn::new(ell)?)
}

/// Undirected counterpart of [`random_dicut`].
pub fn random_cut(n: usize, density: f64, weights: WeightDist, ell: EllDist, seed: u64) -> Result<Instance> {
    check_random(n, density)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = random_edges(n, density, weights, false, &mut rng);
    let ell = ell.sample(n, &mut rng);
    Instance::unconstrained(SubmodularFn::undirected_cut(n, edges)?, LinearFn::new(ell)?)
}

/// A random uniform (`k ∈ [1, n]`) or partition matroid.
pub fn random_matroid(n: usize, seed: u64) -> Result<Matroid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if rng.gen::<bool>() {
        return Matroid::uniform(n, rng.gen_range(1..=n));
    }
    let blocks = rng.gen_range(1..=n.min(3));
    let mut parts = vec![Vec::new(); blocks];
    for u in 0..n {
        parts[rng.gen_range(0..blocks)].push(u);
    }
    parts.retain(|p| !p.is_empty());
    let caps = parts.iter().map(|p| rng.gen_range(1..=p.len())).collect();
    Matroid::partition(n, parts, caps)
}

/// Attach a constraint to an instance.
pub fn with_constraint(inst: Instance, m: Matroid) -> Result<Instance> {
    Instance::new(inst.f, inst.ell, Constraint::Matroid(m))
}

/// Names accepted by [`generate`].
pub const FAMILIES: &[&str] =
    &["gharan-vondrak", "dg-tight-det", "dg-tight-rand", "online-bad", "dg-rand-bad", "hyperedge-0408", "csm-dicut-arcs", "random-dicut", "random-cut"];

/// Named generator with `key=value` parameters, for the command line.
pub fn generate(family: &str, params: &std::collections::BTreeMap<String, String>) -> Result<Vec<Instance>> {
    let get = |k: &str, d: f64| -> Result<f64> {
        params.get(k).map_or(Ok(d), |v| v.parse::<f64>().map_err(|_| Error::Parse(format!("parameter {k}={v} is not a number"))))
    };
    let geti = |k: &str, d: usize| -> Result<usize> {
        params.get(k).map_or(Ok(d), |v| v.parse::<usize>().map_err(|_| Error::Parse(format!("parameter {k}={v} is not an integer"))))
    };
    let ell_dist = || -> Result<EllDist> {
        let s = get("ell-scale", 1.0)?;
        Ok(match params.get("ell").map(String::as_str).unwrap_or("mixed") {
            "zero" => EllDist::Zero,
            "nonneg" => EllDist::NonNegative(s),
            "nonpos" => EllDist::NonPositive(s),
            "mixed" => EllDist::Mixed(s),
            o => return Err(Error::Parse(format!("unknown ell distribution {o}; use zero|nonneg|nonpos|mixed"))),
        })
    };
    let wd = || -> Result<WeightDist> { Ok(WeightDist::Uniform(get("wmin", 0.0)?, get("wmax", 1.0)?)) };
    Ok(match family {
        "gharan-vondrak" => vec![gharan_vondrak(geti("k", 2)?, geti("t", 1)?, get("kappa", crate::sgap::KAPPA_0478)?)?],
        "dg-tight-det" => vec![dg_tight_det(get("r", 2.0)?, get("eps", 0.1)?)?],
        "dg-tight-rand" => vec![dg_tight_rand(geti("n", 41)?, get("r", 4.0)?)?],
        "online-bad" => {
            let (a, b) = online_bad(get("alpha", 0.5)?)?;
            vec![a, b]
        }
        "dg-rand-bad" => vec![dg_rand_bad(geti("n", 41)?, get("r", 9.0)?)?],
        "hyperedge-0408" => vec![hyperedge_0408(geti("k", 4)?)?],
        "csm-dicut-arcs" => vec![csm_dicut_arcs(geti("k", 5)?)?],
        "random-dicut" => vec![random_dicut(geti("n", 8)?, get("density", 0.4)?, wd()?, ell_dist()?, get("seed", 0.0)? as u64)?],
        "random-cut" => vec![random_cut(geti("n", 8)?, get("density", 0.4)?, wd()?, ell_dist()?, get("seed", 0.0)? as u64)?],
        o => return Err(Error::Contract(format!("unknown family {o}; valid: {}", FAMILIES.join(", ")))),
    })
}
