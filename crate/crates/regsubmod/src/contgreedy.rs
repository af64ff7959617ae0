//! Continuous greedy variants, fractional local search, the guessing step
//! and the composite pipelines built from them.
//!
//! Every variant follows the measured update `y ← y + δ·z∘(1−y)`, where the
//! direction `z ∈ P` maximizes a linear weight built from the residual
//! gains `(1−y)∘∇F(y)`:
//!
//! | variant   | weight                                        |
//! |-----------|-----------------------------------------------|
//! | measured  | `(1−y)∘∇F + ℓ` (ℓ optional)                   |
//! | distorted | `e^{t−t_f}·(1−y)∘∇F + ℓ`                      |
//! | aided     | either of the above, with `Z` forbidden for `t < t_s` |

use crate::error::{Error, Result};
use crate::matroid::{maximize_linear, maximize_linear_avoiding, pipage_round, trivial_approx, Polytope};
use crate::setfn::{full_mask, LinearFn, Mask, Repr, SubmodularFn, ENUM_MAX_N};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Exact gradients are used up to this size for tabulated functions.
pub const EXACT_GRADIENT_MAX_N: usize = 14;
pub const DEFAULT_STEPS: usize = 200;
pub const DEFAULT_GRADIENT_SAMPLES: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MarginalMode {
    /// Exact when cheap (closed form, or a table with `n ≤ 14`), else sampled.
    Auto,
    Exact,
    Sampled(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CgConfig {
    pub t_s: f64,
    pub t_f: f64,
    pub steps: usize,
    pub marginal: MarginalMode,
    pub seed: u64,
}

impl CgConfig {
    pub fn new(t_f: f64) -> Self {
        Self { t_s: 0.0, t_f, steps: DEFAULT_STEPS, marginal: MarginalMode::Auto, seed: 0 }
    }

    pub fn aided(t_s: f64, t_f: f64) -> Self {
        Self { t_s, ..Self::new(t_f) }
    }

    pub fn delta(&self) -> f64 {
        self.t_f / self.steps as f64
    }

    fn validate(&self) -> Result<()> {
        if !(self.t_s >= 0.0 && self.t_f >= self.t_s && self.steps > 0) {
            return Err(Error::Contract(format!(
                "need 0 ≤ t_s ≤ t_f and steps > 0 (t_s={}, t_f={}, steps={})",
                self.t_s, self.t_f, self.steps
            )));
        }
        Ok(())
    }
}

/// Gradient oracle honoring the marginal mode.
struct Grad<'a> {
    f: &'a SubmodularFn,
    samples: Option<usize>,
    rng: ChaCha8Rng,
}

impl<'a> Grad<'a> {
    fn new(f: &'a SubmodularFn, mode: MarginalMode, seed: u64) -> Result<Self> {
        let tabulated = matches!(f.repr(), Repr::Table(_));
        let samples = match mode {
            MarginalMode::Exact => {
                if tabulated && f.n() > ENUM_MAX_N {
                    return Err(Error::Capability("exact gradient needs n ≤ 24".into()));
                }
                None
            }
            MarginalMode::Sampled(s) => Some(s.max(1)),
            MarginalMode::Auto => (tabulated && f.n() > EXACT_GRADIENT_MAX_N).then_some(DEFAULT_GRADIENT_SAMPLES),
        };
        Ok(Self { f, samples, rng: ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15) })
    }

    fn at(&mut self, y: &[f64]) -> Result<Vec<f64>> {
        match self.samples {
            None => self.f.gradient(y),
            Some(s) => Ok(self.f.gradient_sampled(y, s, &mut self.rng)),
        }
    }
}

/// One discretized measured run from `y = 0`. Returns the points after
/// each step whose index is listed in `record` (step 0 is the start).
#[allow(clippy::too_many_arguments)]
fn run(
    f: &SubmodularFn,
    ell: Option<&LinearFn>,
    distorted: bool,
    aid: Mask,
    p: &Polytope,
    t_s: f64,
    t_f: f64,
    delta: f64,
    record: &[usize],
    grad: &mut Grad,
) -> Result<Vec<Vec<f64>>> {
    let n = f.n();
    let total = (t_f / delta).round() as usize;
    let mut y = vec![0.0; n];
    let mut out = Vec::with_capacity(record.len());
    let mut next = 0;
    for k in 0..=total {
        while next < record.len() && record[next] == k {
            out.push(y.clone());
            next += 1;
        }
        if k == total {
            break;
        }
        let t = k as f64 * delta;
        let g = grad.at(&y)?;
        let coef = if distorted { (t - t_f).exp() } else { 1.0 };
        let w: Vec<f64> = (0..n)
            .map(|u| coef * (1.0 - y[u]) * g[u] + ell.map_or(0.0, |l| l.weights[u]))
            .collect();
        let forbidden = if t < t_s - 1e-12 { aid } else { 0 };
        let z = maximize_linear_avoiding(p, &w, forbidden)?;
        for u in 0..n {
            y[u] += delta * z[u] * (1.0 - y[u]);
        }
    }
    Ok(out)
}

fn run_final(
    f: &SubmodularFn,
    ell: Option<&LinearFn>,
    distorted: bool,
    aid: Mask,
    p: &Polytope,
    cfg: &CgConfig,
) -> Result<Vec<f64>> {
    cfg.validate()?;
    let mut grad = Grad::new(f, cfg.marginal, cfg.seed)?;
    let mut pts = run(f, ell, distorted, aid, p, cfg.t_s, cfg.t_f, cfg.delta(), &[cfg.steps], &mut grad)?;
    Ok(pts.pop().expect("final point recorded"))
}

/// Measured continuous greedy; `y(t_f) ∈ t_f·P` by construction.
pub fn measured_cg(f: &SubmodularFn, ell: Option<&LinearFn>, p: &Polytope, cfg: &CgConfig) -> Result<Vec<f64>> {
    run_final(f, ell, false, 0, p, cfg)
}

/// Every intermediate point of a measured run, `y(0), y(δ), …, y(t_f)`.
pub fn measured_cg_trajectory(f: &SubmodularFn, ell: Option<&LinearFn>, distorted: bool, p: &Polytope, cfg: &CgConfig) -> Result<Vec<Vec<f64>>> {
    cfg.validate()?;
    let mut grad = Grad::new(f, cfg.marginal, cfg.seed)?;
    let record: Vec<usize> = (0..=cfg.steps).collect();
    run(f, ell, distorted, 0, p, cfg.t_s, cfg.t_f, cfg.delta(), &record, &mut grad)
}

/// Measured continuous greedy on the distorted objective `e^{t−t_f}F + L`.
pub fn distorted_measured_cg(f: &SubmodularFn, ell: &LinearFn, p: &Polytope, cfg: &CgConfig) -> Result<Vec<f64>> {
    run_final(f, Some(ell), true, 0, p, cfg)
}

/// Aided measured continuous greedy. A set `Z ~ R(z)` is drawn with the
/// config seed (an integral `z` gives its support); the run avoids `Z`
/// during `[0, t_s)`. With `ell` present the distorted objective is used.
pub fn aided_mcg(f: &SubmodularFn, ell: Option<&LinearFn>, z: &[f64], p: &Polytope, cfg: &CgConfig) -> Result<Vec<f64>> {
    if !p.contains_point(z, 1e-7)? {
        return Err(Error::Contract("aiding point z must lie in the polytope".into()));
    }
    let zset = crate::matroid::sample_round(z, cfg.seed ^ 0x2545_f491_4f6c_dd1d);
    aided_mcg_with_set(f, ell, zset, p, cfg)
}

pub fn aided_mcg_with_set(f: &SubmodularFn, ell: Option<&LinearFn>, zset: Mask, p: &Polytope, cfg: &CgConfig) -> Result<Vec<f64>> {
    run_final(f, ell, ell.is_some(), zset, p, cfg)
}

#[derive(Debug, Clone, PartialEq)]
pub struct LocalSearchConfig {
    /// Stop once the Frank–Wolfe gap is below `tol_rel / n` times the value.
    pub tol_rel: f64,
    /// Iteration cap; `None` means `10^5 · n`.
    pub max_iter: Option<usize>,
    pub marginal: MarginalMode,
    pub seed: u64,
}

impl Default for LocalSearchConfig {
    fn default() -> Self {
        Self { tol_rel: 1e-4, max_iter: None, marginal: MarginalMode::Auto, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LocalSearchResult {
    pub z: Vec<f64>,
    pub iterations: usize,
    /// The iteration cap was hit before the gap closed.
    pub hit_cap: bool,
}

/// Fractional local search for a stationary point of `F (+ L)` over `p`.
///
/// Each iteration takes the linear maximizer `v` of the current gradient and
/// line-searches the segment `[z, v]`. At termination
/// `⟨∇(F+L)(z), v − z⟩ ≤ tol_rel/n · (F+L)(z)` for every `v ∈ P`, which is
/// what the two local-optimality inequalities need.
pub fn local_search(f: &SubmodularFn, ell: Option<&LinearFn>, p: &Polytope, cfg: &LocalSearchConfig) -> Result<LocalSearchResult> {
    let n = f.n();
    let zero = vec![0.0; n];
    let mut z = if p.contains_point(&zero, 1e-12)? { zero } else { maximize_linear(p, &vec![0.0; n])? };
    let mut grad = Grad::new(f, cfg.marginal, cfg.seed)?;
    let value = |x: &[f64]| -> Result<f64> { Ok(f.multilinear(x)? + ell.map_or(0.0, |l| l.dot(x))) };
    let cap = cfg.max_iter.unwrap_or(100_000 * n);
    let mut cur = value(&z)?;
    for it in 0..cap {
        let mut g = grad.at(&z)?;
        if let Some(l) = ell {
            g.iter_mut().zip(&l.weights).for_each(|(a, b)| *a += b);
        }
        let v = maximize_linear(p, &g)?;
        let d: Vec<f64> = v.iter().zip(&z).map(|(a, b)| a - b).collect();
        let gap: f64 = g.iter().zip(&d).map(|(a, b)| a * b).sum();
        if gap <= cfg.tol_rel / n as f64 * cur.abs().max(1e-12) {
            return Ok(LocalSearchResult { z, iterations: it, hit_cap: false });
        }
        let at = |gamma: f64| -> Vec<f64> { z.iter().zip(&d).map(|(a, b)| (a + gamma * b).clamp(0.0, 1.0)).collect() };
        let (mut best_g, mut best_v) = (0.0, cur);
        let mut gamma = 1.0;
        for _ in 0..40 {
            let val = value(&at(gamma))?;
            if val > best_v {
                best_g = gamma;
                best_v = val;
            }
            gamma *= 0.5;
        }
        if best_g > 0.0 {
            // Golden-section polish around the best dyadic step.
            let (mut lo, mut hi) = (best_g * 0.5, (best_g * 2.0).min(1.0));
            let phi = 0.618_033_988_749_895;
            for _ in 0..30 {
                let a = hi - phi * (hi - lo);
                let b = lo + phi * (hi - lo);
                if value(&at(a))? >= value(&at(b))? {
                    hi = b;
                } else {
                    lo = a;
                }
            }
            let mid = 0.5 * (lo + hi);
            let vm = value(&at(mid))?;
            if vm > best_v {
                best_g = mid;
                best_v = vm;
            }
        }
        if best_g == 0.0 || best_v <= cur {
            return Ok(LocalSearchResult { z, iterations: it, hit_cap: false });
        }
        z = at(best_g);
        cur = best_v;
    }
    Ok(LocalSearchResult { z, iterations: cap, hit_cap: true })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GuessMode {
    /// Guess `ℓ(OPT)` for a non-positive `ℓ`.
    Nonpositive,
    /// Guess `ℓ_−(OPT)` for an arbitrary `ℓ`.
    NegativePart,
}

/// `{0} ∪ {ℓ(u)·kε : u ∈ N, k ∈ [⌈1/ε⌉, ⌈n/ε⌉]}`, deduplicated, descending.
pub fn guess_ell_values(ell: &LinearFn, eps: f64, mode: GuessMode) -> Result<Vec<f64>> {
    if !(eps > 0.0) {
        return Err(Error::Contract("ε must be positive".into()));
    }
    let w = match mode {
        GuessMode::Nonpositive => {
            if !ell.nonpositive() {
                return Err(Error::Contract("ℓ must be non-positive".into()));
            }
            ell.clone()
        }
        GuessMode::NegativePart => ell.minus_part(),
    };
    let n = w.n() as f64;
    let (k0, k1) = ((1.0 / eps).ceil() as i64, (n / eps).ceil() as i64);
    let mut out = vec![0.0];
    for &lu in &w.weights {
        if lu < 0.0 {
            out.extend((k0..=k1).map(|k| lu * k as f64 * eps));
        }
    }
    out.sort_by(|a, b| b.total_cmp(a));
    out.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * (1.0 + b.abs()));
    Ok(out)
}

/// Which guesses a pipeline tries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GuessGrid {
    /// The full grid of [`guess_ell_values`]; guesses below `ℓ(N)` (where the
    /// cut is vacuous) collapse into one.
    Full,
    /// A geometric grid `{0} ∪ {−m(1+ε)^k}` from the smallest non-zero
    /// `|ℓ_u|` down to `ℓ(N)`. It has the same `(1+ε)` covering property
    /// with far fewer points.
    Geometric,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineConfig {
    /// Discretization steps per unit of time (`δ = 1/steps`).
    pub steps: usize,
    pub eps: f64,
    pub grid: GuessGrid,
    pub marginal: MarginalMode,
    pub seed: u64,
    /// `(t_s, t_f)` pairs; `None` picks each pipeline's default.
    pub pairs: Option<Vec<(f64, f64)>>,
    pub local: LocalSearchConfig,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            steps: DEFAULT_STEPS,
            eps: 0.1,
            grid: GuessGrid::Full,
            marginal: MarginalMode::Auto,
            seed: 0,
            pairs: None,
            local: LocalSearchConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineResult {
    pub set: Mask,
    pub value: f64,
    /// Number of rounded candidates compared.
    pub candidates: usize,
}

/// `{(x/20, y/20) : 0 ≤ x ≤ y ≤ 40}` read as `t_s ≤ t_f`, optionally capped
/// at `t_f ≤ 1`.
pub fn nonpos_pairs(max_tf: f64) -> Vec<(f64, f64)> {
    let mut v = Vec::new();
    for y in 0..=40 {
        for x in 0..=y {
            let (ts, tf) = (x as f64 / 20.0, y as f64 / 20.0);
            if tf <= max_tf + 1e-12 {
                v.push((ts, tf));
            }
        }
    }
    v
}

/// `{(0.1x, 1) : 0 ≤ x ≤ 10}`.
pub fn nonneg_csm_pairs() -> Vec<(f64, f64)> {
    (0..=10).map(|x| (0.1 * x as f64, 1.0)).collect()
}

fn mix(seed: u64, a: u64, b: u64) -> u64 {
    let mut z = seed ^ a.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ b.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

struct Best {
    set: Mask,
    value: f64,
    count: usize,
}

impl Best {
    fn empty() -> Self {
        Self { set: 0, value: 0.0, count: 0 }
    }

    fn offer(&mut self, set: Mask, value: f64) {
        self.count += 1;
        if value > self.value + 1e-12 || (value > self.value - 1e-12 && set < self.set && value > 0.0) {
            self.set = set;
            self.value = value;
        }
    }

    fn merge(mut self, o: Best) -> Best {
        let count = self.count + o.count;
        self.offer(o.set, o.value);
        self.count = count;
        self
    }

    fn result(self) -> PipelineResult {
        PipelineResult { set: self.set, value: self.value, candidates: self.count }
    }
}

fn round_candidate(orig: &Polytope, f: &SubmodularFn, ell: &LinearFn, y: &[f64], seed: u64, best: &mut Best) -> Result<()> {
    let s = pipage_round(orig, f, ell, y, seed)?;
    best.offer(s, f.eval(s) + ell.eval(s));
    Ok(())
}

/// Guesses to try for `ℓ_g` (already restricted to its negative part).
fn pipeline_guesses(ell_neg: &LinearFn, cfg: &PipelineConfig) -> Result<Vec<Option<f64>>> {
    let floor: f64 = ell_neg.weights.iter().sum();
    let raw = match cfg.grid {
        GuessGrid::Full => guess_ell_values(ell_neg, cfg.eps, GuessMode::Nonpositive)?,
        GuessGrid::Geometric => {
            let m = ell_neg.weights.iter().filter(|&&w| w < 0.0).map(|w| -w).fold(f64::INFINITY, f64::min);
            let mut v = vec![0.0];
            if m.is_finite() {
                let mut w = -m;
                while w > floor * (1.0 + cfg.eps) {
                    v.push(w);
                    w *= 1.0 + cfg.eps;
                }
            }
            v
        }
    };
    // A guess at or below ℓ(N) leaves the polytope unchanged.
    let mut out: Vec<Option<f64>> = raw.into_iter().filter(|&w| w > floor + 1e-12).map(Some).collect();
    out.push(None);
    Ok(out)
}

/// The non-positive-ℓ pipeline: guess `ℓ(OPT)`, run local search and aided
/// measured continuous greedy on `P ∩ {L(x) ≥ w}` for every `(t_s, t_f)`
/// pair, round everything against `P` and keep the best (or `∅`).
///
/// On the cube `t_f` may reach 2; under a matroid pairs with `t_f > 1` are
/// dropped. Runs sharing `t_s` share their trajectory prefix, so all `t_f`
/// for one `t_s` come from a single run with step `δ = 1/steps`.
pub fn pipeline_nonpos(f: &SubmodularFn, ell: &LinearFn, p: &Polytope, cfg: &PipelineConfig) -> Result<PipelineResult> {
    if !ell.nonpositive() {
        return Err(Error::Contract("pipeline_nonpos needs ℓ ≤ 0".into()));
    }
    let orig = p.original();
    let max_tf = if orig.base.is_none() { 2.0 } else { 1.0 };
    let pairs: Vec<(f64, f64)> = match &cfg.pairs {
        Some(v) => {
            if v.iter().any(|&(s, t)| s > t + 1e-12 || t > max_tf + 1e-12) {
                return Err(Error::Contract(format!("pairs need t_s ≤ t_f ≤ {max_tf}")));
            }
            v.clone()
        }
        None => nonpos_pairs(max_tf),
    };
    let guesses = pipeline_guesses(ell, cfg)?;
    let delta = 1.0 / cfg.steps as f64;
    let step_of = |t: f64| (t / delta).round() as usize;
    let mut starts: Vec<f64> = pairs.iter().map(|p| p.0).collect();
    starts.sort_by(f64::total_cmp);
    starts.dedup_by(|a, b| (*a - *b).abs() < 1e-12);

    let per_guess = |(gi, guess): (usize, &Option<f64>)| -> Result<Best> {
        let pw = match guess {
            Some(w) => orig.with_cut(ell.weights.clone(), *w),
            None => orig.clone(),
        };
        let mut best = Best::empty();
        let ls = local_search(f, None, &pw, &cfg.local)?;
        round_candidate(&orig, f, ell, &ls.z, mix(cfg.seed, gi as u64, 0), &mut best)?;
        let zset = crate::matroid::sample_round(&ls.z, mix(cfg.seed, gi as u64, 1));
        for (si, &ts) in starts.iter().enumerate() {
            let mut ends: Vec<usize> = pairs.iter().filter(|q| (q.0 - ts).abs() < 1e-12).map(|q| step_of(q.1)).collect();
            ends.sort_unstable();
            ends.dedup();
            let t_end = *ends.last().expect("non-empty") as f64 * delta;
            let mut grad = Grad::new(f, cfg.marginal, mix(cfg.seed, gi as u64, 2 + si as u64))?;
            let pts = run(f, None, false, zset, &pw, ts, t_end, delta, &ends, &mut grad)?;
            for (k, y) in pts.iter().enumerate() {
                round_candidate(&orig, f, ell, y, mix(cfg.seed, gi as u64, 1000 + (si * 1000 + k) as u64), &mut best)?;
            }
        }
        Ok(best)
    };
    let results: Vec<Result<Best>> = guesses.par_iter().enumerate().map(per_guess).collect();
    let mut best = Best::empty();
    for r in results {
        best = best.merge(r?);
    }
    Ok(best.result())
}

/// The non-negative-ℓ matroid pipeline: best of the linear optimum, the
/// local-search point and distorted aided runs over `(t_s, 1)` pairs.
pub fn pipeline_nonneg_csm(f: &SubmodularFn, ell: &LinearFn, p: &Polytope, cfg: &PipelineConfig) -> Result<PipelineResult> {
    if !ell.nonnegative() {
        return Err(Error::Contract("pipeline_nonneg_csm needs ℓ ≥ 0".into()));
    }
    let orig = p.original();
    let pairs = cfg.pairs.clone().unwrap_or_else(nonneg_csm_pairs);
    aided_family(f, ell, &orig, &orig, &pairs, cfg, 0)
}

/// Shared body of the non-negative and 0.280 pipelines for one polytope.
fn aided_family(
    f: &SubmodularFn,
    ell: &LinearFn,
    orig: &Polytope,
    pw: &Polytope,
    pairs: &[(f64, f64)],
    cfg: &PipelineConfig,
    salt: u64,
) -> Result<PipelineResult> {
    let mut best = Best::empty();
    let triv = trivial_approx(ell, orig);
    best.offer(triv, f.eval(triv) + ell.eval(triv));
    let ls = local_search(f, Some(ell), pw, &cfg.local)?;
    round_candidate(orig, f, ell, &ls.z, mix(cfg.seed, salt, 0), &mut best)?;
    let zset = crate::matroid::sample_round(&ls.z, mix(cfg.seed, salt, 1));
    for (i, &(ts, tf)) in pairs.iter().enumerate() {
        if ts > tf + 1e-12 || tf > 1.0 + 1e-12 {
            return Err(Error::Contract("pairs need t_s ≤ t_f ≤ 1".into()));
        }
        let steps = ((tf * cfg.steps as f64).round() as usize).max(1);
        let c = CgConfig { t_s: ts, t_f: tf, steps, marginal: cfg.marginal, seed: mix(cfg.seed, salt, 2 + i as u64) };
        let y = if tf == 0.0 { vec![0.0; f.n()] } else { aided_mcg_with_set(f, Some(ell), zset, pw, &c)? };
        round_candidate(orig, f, ell, &y, mix(cfg.seed, salt, 100 + i as u64), &mut best)?;
    }
    Ok(best.result())
}

/// Best of distorted measured continuous greedy run to `t_f = t` and the
/// linear optimum. Under a matroid `t ≤ 1` is required.
pub fn pipeline_unconstrained(f: &SubmodularFn, ell: &LinearFn, p: &Polytope, t: f64, cfg: &PipelineConfig) -> Result<PipelineResult> {
    let orig = p.original();
    if orig.base.is_some() && t > 1.0 + 1e-12 {
        return Err(Error::Contract("t ≤ 1 under a matroid constraint".into()));
    }
    if !(t >= 0.0) {
        return Err(Error::Contract("t must be non-negative".into()));
    }
    let mut best = Best::empty();
    let triv = trivial_approx(ell, &orig);
    best.offer(triv, f.eval(triv) + ell.eval(triv));
    if t > 0.0 {
        let steps = ((t * cfg.steps as f64).round() as usize).max(1);
        let c = CgConfig { t_s: 0.0, t_f: t, steps, marginal: cfg.marginal, seed: cfg.seed };
        let y = distorted_measured_cg(f, ell, &orig, &c)?;
        round_candidate(&orig, f, ell, &y, mix(cfg.seed, 0, 1), &mut best)?;
    }
    Ok(best.result())
}

/// The non-negative pipeline wrapped in a guess of `ℓ_−(OPT)`, with the
/// single pair `(0.205, 0.955)` by default.
pub fn pipeline_0280(f: &SubmodularFn, ell: &LinearFn, p: &Polytope, cfg: &PipelineConfig) -> Result<PipelineResult> {
    let orig = p.original();
    let pairs = cfg.pairs.clone().unwrap_or_else(|| vec![(0.205, 0.955)]);
    let neg = ell.minus_part();
    let guesses = pipeline_guesses(&neg, cfg)?;
    let results: Vec<Result<PipelineResult>> = guesses
        .par_iter()
        .enumerate()
        .map(|(gi, guess)| {
            let pw = match guess {
                Some(w) => orig.with_cut(neg.weights.clone(), *w),
                None => orig.clone(),
            };
            aided_family(f, ell, &orig, &pw, &pairs, cfg, gi as u64)
        })
        .collect();
    let mut best = Best::empty();
    for r in results {
        let r = r?;
        best = best.merge(Best { set: r.set, value: r.value, count: r.candidates });
    }
    Ok(best.result())
}

/// Non-negative ℓ without constraints: solve `(f(N∖·), −ℓ)` with the
/// non-positive pipeline and complement the answer.
pub fn pipeline_nonneg_usm_beta1(f: &SubmodularFn, ell: &LinearFn, cfg: &PipelineConfig) -> Result<PipelineResult> {
    if !ell.nonnegative() {
        return Err(Error::Contract("pipeline_nonneg_usm_beta1 needs ℓ ≥ 0".into()));
    }
    let (g, m) = crate::setfn::complement_transform(f, ell)?;
    let r = pipeline_nonpos(&g, &m, &Polytope::cube(f.n()), cfg)?;
    let set = full_mask(f.n()) & !r.set;
    Ok(PipelineResult { set, value: f.eval(set) + ell.eval(set), candidates: r.candidates })
}

/// Draws used by tests that need a reproducible fractional point.
pub fn random_point(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    (0..n).map(|_| rng.gen()).collect()
}
