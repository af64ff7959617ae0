//! Symmetry-gap searches for the hardness numbers.
//!
//! The symmetrized objective of the two-hyperedge instance reduces to
//! `F̂(q, p) = (1−κ)·2q(1−q) + 2κ(1−q)(1−e^{−p})`. With linear weights `ℓ_p`
//! on the hyperedge tails and `ℓ_q` on the two centres, the gap value for
//! a given `β` is
//!
//! ```text
//! min_{κ, ℓ_p, ℓ_q}  max_{q ∈ [0,1], p ≥ 0} [F̂(q,p) + 2pℓ_p + 2qℓ_q] − β(ℓ_p + ℓ_q)
//! ```
//!
//! For fixed `(q, p)` the bracket is affine in `(κ, ℓ_p, ℓ_q)`, so the outer
//! function is convex and the coarse-grid-then-pattern-search minimizer
//! below converges to the global minimum.

use crate::error::{Error, Result};

pub const P_MAX: f64 = 5.0;
pub const COARSE_STEP: f64 = 0.01;
pub const FINE_STEP: f64 = 1e-4;
pub const KAPPA_0478: f64 = 0.3513;
pub const ELL_0408: f64 = 0.2037;

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Maximizes a function on `[a, b]` assumed unimodal there.
pub fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, iters: usize) -> (f64, f64) {
    let mut c = b - GOLDEN * (b - a);
    let mut d = a + GOLDEN * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..iters {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - GOLDEN * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + GOLDEN * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// `F̂(q, p)`; `k = None` is the `k → ∞` limit with `e^{−p}`.
pub fn fhat(q: f64, p: f64, kappa: f64, k: Option<usize>) -> Result<f64> {
    if !(0.0..=1.0).contains(&q) || !(0.0..=1.0).contains(&kappa) || !(p >= 0.0) {
        return Err(Error::Contract(format!("fhat domain: q={q}, p={p}, κ={kappa}")));
    }
    let hit = match k {
        None => 1.0 - (-p).exp(),
        Some(k) => {
            if k == 0 || p > k as f64 {
                return Err(Error::Contract(format!("fhat needs 0 ≤ p ≤ k, got p={p}, k={k}")));
            }
            1.0 - (1.0 - p / k as f64).powi(k as i32)
        }
    };
    Ok((1.0 - kappa) * 2.0 * q * (1.0 - q) + 2.0 * kappa * (1.0 - q) * hit)
}

/// `max_q [(1−κ)2q(1−q) + 2κ(1−q)s + 2qℓ_q]` for a fixed hit probability
/// `s`, via the clamped vertex of the parabola.
#[inline]
fn best_q(kappa: f64, s: f64, ell_q: f64) -> (f64, f64) {
    let val = |q: f64| (1.0 - kappa) * 2.0 * q * (1.0 - q) + 2.0 * kappa * (1.0 - q) * s + 2.0 * q * ell_q;
    let a = 1.0 - kappa;
    if a <= 1e-12 {
        let (v0, v1) = (val(0.0), val(1.0));
        return if v1 > v0 { (1.0, v1) } else { (0.0, v0) };
    }
    let q = ((a - kappa * s + ell_q) / (2.0 * a)).clamp(0.0, 1.0);
    (q, val(q))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InnerMax {
    pub value: f64,
    pub q: f64,
    pub p: f64,
}

/// `max_{q ∈ [0,1], p ∈ [0, p_max]} [F̂(q,p) + 2pℓ_p + 2qℓ_q]`. `q` is
/// analytic; `p` comes from a grid of step `1e−4` and a golden-section
/// polish around the best grid point.
pub fn inner_max(kappa: f64, ell_p: f64, ell_q: f64, p_max: f64) -> InnerMax {
    inner_max_step(kappa, ell_p, ell_q, p_max, FINE_STEP)
}

pub fn inner_max_step(kappa: f64, ell_p: f64, ell_q: f64, p_max: f64, step: f64) -> InnerMax {
    let at = |p: f64| {
        let (q, v) = best_q(kappa, 1.0 - (-p).exp(), ell_q);
        (q, v + 2.0 * p * ell_p)
    };
    let m = (p_max / step).round() as usize;
    let (mut bp, mut bv) = (0.0, f64::NEG_INFINITY);
    for i in 0..=m {
        let p = (i as f64 * step).min(p_max);
        let v = at(p).1;
        if v > bv {
            bv = v;
            bp = p;
        }
    }
    let (lo, hi) = ((bp - step).max(0.0), (bp + step).min(p_max));
    let (gp, gv) = golden_max(|p| at(p).1, lo, hi, 40);
    if gv > bv {
        bp = gp;
    }
    let (q, value) = at(bp);
    InnerMax { value, q, p: bp }
}

/// Coarse inner maximizer over a fixed `p` grid with tabulated `1−e^{−p}`.
struct CoarseInner {
    p: Vec<f64>,
    s: Vec<f64>,
}

impl CoarseInner {
    fn new(p_max: f64, step: f64) -> Self {
        let m = (p_max / step).round() as usize;
        let p: Vec<f64> = (0..=m).map(|i| (i as f64 * step).min(p_max)).collect();
        let s = p.iter().map(|p| 1.0 - (-p).exp()).collect();
        Self { p, s }
    }

    fn max(&self, kappa: f64, ell_p: f64, ell_q: f64) -> f64 {
        self.p
            .iter()
            .zip(&self.s)
            .map(|(&p, &s)| best_q(kappa, s, ell_q).1 + 2.0 * p * ell_p)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignMode {
    /// `ℓ_q ≤ 0` (non-positive ℓ overall).
    NonPositive,
    /// `ℓ_q` may be positive.
    Unconstrained,
}

/// Search ranges and resolutions.
#[derive(Debug, Clone, PartialEq)]
pub struct SgapParams {
    pub kappa: (f64, f64),
    pub ell_p: (f64, f64),
    pub ell_q: (f64, f64),
    pub p_max: f64,
    pub coarse_step: f64,
    pub fine_step: f64,
}

impl SgapParams {
    pub fn new(mode: SignMode) -> Self {
        Self {
            kappa: (0.0, 1.0),
            ell_p: (-1.0, 0.0),
            ell_q: (-0.7, if mode == SignMode::NonPositive { 0.0 } else { 0.7 }),
            p_max: P_MAX,
            coarse_step: COARSE_STEP,
            fine_step: FINE_STEP,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = self.p_max >= 2.0 * std::f64::consts::LN_2 + 1.0
            && self.coarse_step > 0.0
            && self.fine_step > 0.0
            && self.kappa.0 >= 0.0
            && self.kappa.1 <= 1.0
            && [self.kappa, self.ell_p, self.ell_q].iter().all(|r| r.0 <= r.1);
        if ok {
            Ok(())
        } else {
            Err(Error::Contract("invalid symmetry-gap search ranges".into()))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OuterMin {
    pub beta: f64,
    pub alpha: f64,
    pub kappa: f64,
    pub ell_p: f64,
    pub ell_q: f64,
    /// Inner maximizer at the reported parameters.
    pub q: f64,
    pub p: f64,
}

/// `α(β) = min inner_max(κ,ℓ_p,ℓ_q) − β(ℓ_p+ℓ_q)` over the ranges in
/// `params`: a coarse grid, then a pattern search over all 26 neighbour
/// directions with the step halved down to `fine_step`.
pub fn outer_min(beta: f64, params: &SgapParams) -> Result<OuterMin> {
    params.validate()?;
    if !(beta >= 0.0) {
        return Err(Error::Contract("β must be non-negative".into()));
    }
    let grid = |r: (f64, f64)| -> Vec<f64> {
        let m = ((r.1 - r.0) / params.coarse_step).round() as usize;
        (0..=m).map(|i| (r.0 + i as f64 * params.coarse_step).min(r.1)).collect()
    };
    let coarse = CoarseInner::new(params.p_max, params.coarse_step);
    let mut best = (f64::INFINITY, [0.0; 3]);
    for &k in &grid(params.kappa) {
        for &lp in &grid(params.ell_p) {
            for &lq in &grid(params.ell_q) {
                let v = coarse.max(k, lp, lq) - beta * (lp + lq);
                if v < best.0 {
                    best = (v, [k, lp, lq]);
                }
            }
        }
    }
    let ranges = [params.kappa, params.ell_p, params.ell_q];
    let obj = |x: &[f64; 3]| inner_max(x[0], x[1], x[2], params.p_max).value - beta * (x[1] + x[2]);
    let mut x = best.1;
    let mut fx = obj(&x);
    let mut step = params.coarse_step;
    let dirs: Vec<[f64; 3]> = (0..27)
        .filter(|&i| i != 13)
        .map(|i| [(i / 9) as f64 - 1.0, ((i / 3) % 3) as f64 - 1.0, (i % 3) as f64 - 1.0])
        .collect();
    while step >= params.fine_step * 0.999 {
        loop {
            let mut improved = false;
            for d in &dirs {
                let mut y = x;
                for c in 0..3 {
                    y[c] = (x[c] + step * d[c]).clamp(ranges[c].0, ranges[c].1);
                }
                let fy = obj(&y);
                if fy < fx - 1e-13 {
                    x = y;
                    fx = fy;
                    improved = true;
                }
            }
            if !improved {
                break;
            }
        }
        step *= 0.5;
    }
    let im = inner_max(x[0], x[1], x[2], params.p_max);
    Ok(OuterMin { beta, alpha: im.value - beta * (x[1] + x[2]), kappa: x[0], ell_p: x[1], ell_q: x[2], q: im.q, p: im.p })
}

/// `h(p) = (κ(2e^{−p}−1) − κ²e^{−2p}) / (4(1−κ))` and its first two derivatives.
pub fn h_two_ln_two(p: f64, kappa: f64) -> (f64, f64, f64) {
    let e = (-p).exp();
    let d = 4.0 * (1.0 - kappa);
    let h = (kappa * (2.0 * e - 1.0) - kappa * kappa * e * e) / d;
    let h1 = (-2.0 * kappa * e + 2.0 * kappa * kappa * e * e) / d;
    let h2 = (2.0 * kappa * e - 4.0 * kappa * kappa * e * e) / d;
    (h, h1, h2)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitPoint {
    pub p_star: f64,
    pub kappa: f64,
    pub ell_p: f64,
    /// The certified `β` at this point of the schedule.
    pub beta: f64,
}

/// One point of the `(0.5, 2ln2)` schedule: `ℓ_p = h′(p*)` puts the
/// minimum of `h(p) − pℓ_p` at `p*`, and `β = 2(h(p*) − p*ℓ_p)/(−ℓ_p)`.
pub fn two_ln_two_point(p_star: f64, kappa: f64) -> Result<LimitPoint> {
    if !(kappa > 0.0 && kappa < 0.5 && p_star > 0.0) {
        return Err(Error::Contract("need κ ∈ (0, 0.5) and p* > 0".into()));
    }
    let (h, h1, _) = h_two_ln_two(p_star, kappa);
    let ell_p = h1;
    Ok(LimitPoint { p_star, kappa, ell_p, beta: 2.0 * (h - p_star * ell_p) / (-ell_p) })
}

/// The schedule `p* = ln2 − 10^{−j}`, `κ = 10^{−j−1}` for `j = 1..=4`;
/// returns every point and the largest `β`.
pub fn limit_two_ln_two(p_star_grid: &[(f64, f64)]) -> Result<(Vec<LimitPoint>, f64)> {
    let pts: Vec<LimitPoint> = p_star_grid.iter().map(|&(p, k)| two_ln_two_point(p, k)).collect::<Result<_>>()?;
    let sup = pts.iter().map(|p| p.beta).fold(f64::NEG_INFINITY, f64::max);
    Ok((pts, sup))
}

pub fn default_two_ln_two_schedule() -> Vec<(f64, f64)> {
    (1..=4).map(|j| (std::f64::consts::LN_2 - 10f64.powi(-j), 10f64.powi(-j - 1))).collect()
}

/// `g(p) = max_q [(1−κ)2q(1−q) + 2κ(1−q)(1−(1−p/2)²)]` and `g′(p)`.
pub fn g_sqrt2(p: f64, kappa: f64) -> (f64, f64) {
    let s = 1.0 - (1.0 - p / 2.0).powi(2);
    let (q, v) = best_q(kappa, s, 0.0);
    // Envelope theorem: only the explicit p-dependence through s counts.
    (v, 2.0 * kappa * (1.0 - q) * (1.0 - p / 2.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sqrt2Point {
    pub p_star: f64,
    pub kappa: f64,
    pub ell_p: f64,
    /// `max_{0≤p≤2}[g(p) − 2pℓ_p]`.
    pub max_value: f64,
    /// Whether `max < 0.5 − 2p*ℓ_p` holds.
    pub holds: bool,
    /// `β* = (max + 4ℓ_p − 0.5)/(3ℓ_p)`, bounded above by `(4−2p*)/3`.
    pub beta: f64,
}

/// One point of the `(0.5, 2√2/3)` schedule with `k = 2`.
pub fn sqrt2_point(p_star: f64, kappa: f64) -> Result<Sqrt2Point> {
    if !(p_star > 0.0 && p_star < 2.0 - std::f64::consts::SQRT_2 && kappa > 0.0 && kappa < 1.0) {
        return Err(Error::Contract("need p* ∈ (0, 2−√2) and κ ∈ (0,1)".into()));
    }
    let ell_p = g_sqrt2(p_star, kappa).1 / 2.0;
    let obj = |p: f64| g_sqrt2(p, kappa).0 - 2.0 * p * ell_p;
    let m = 20_000;
    let (mut bp, mut bv) = (0.0, f64::NEG_INFINITY);
    for i in 0..=m {
        let p = 2.0 * i as f64 / m as f64;
        let v = obj(p);
        if v > bv {
            bv = v;
            bp = p;
        }
    }
    let (_, gv) = golden_max(obj, (bp - 1e-4).max(0.0), (bp + 1e-4).min(2.0), 50);
    let max_value = bv.max(gv);
    Ok(Sqrt2Point {
        p_star,
        kappa,
        ell_p,
        max_value,
        holds: max_value < 0.5 - 2.0 * p_star * ell_p,
        beta: (max_value + 4.0 * ell_p - 0.5) / (3.0 * ell_p),
    })
}

/// Schedule `p* = 2−√2 − 10^{−j}` with `κ` small enough that `g(p*) < ½`.
pub fn default_sqrt2_schedule() -> Vec<(f64, f64)> {
    (1..=3)
        .map(|j| {
            let p = 2.0 - std::f64::consts::SQRT_2 - 10f64.powi(-j);
            let s = 1.0 - (1.0 - p / 2.0).powi(2);
            (p, (0.5 - s).min(0.1))
        })
        .collect()
}

/// Returns every schedule point and the smallest certified `β`.
pub fn limit_sqrt2(p_star_grid: &[(f64, f64)]) -> Result<(Vec<Sqrt2Point>, f64)> {
    let pts: Vec<Sqrt2Point> = p_star_grid.iter().map(|&(p, k)| sqrt2_point(p, k)).collect::<Result<_>>()?;
    let inf = pts.iter().filter(|p| p.holds).map(|p| p.beta).fold(f64::INFINITY, f64::min);
    Ok((pts, inf))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyperedge0408 {
    /// `max_{p,q ≥ 0} [(1−e^{−p})(1−e^{−q}) − w(p+q)]` found numerically.
    pub max_value: f64,
    pub argmax: (f64, f64),
    /// `2w`, the resulting bound on `α`.
    pub alpha_bound: f64,
}

/// Confirms the generalized-hyperedge objective peaks at `p = q = 0`.
pub fn hyperedge_0408() -> Hyperedge0408 {
    let w = ELL_0408;
    let obj = |p: f64, q: f64| (1.0 - (-p).exp()) * (1.0 - (-q).exp()) - w * (p + q);
    let (mut best, mut arg) = (f64::NEG_INFINITY, (0.0, 0.0));
    let m = 500;
    for i in 0..=m {
        let p = P_MAX * i as f64 / m as f64;
        // Objective is concave in q for fixed p; polish q by golden section.
        let (q, v) = golden_max(|q| obj(p, q), 0.0, P_MAX, 60);
        let v0 = obj(p, 0.0);
        let (q, v) = if v0 >= v { (0.0, v0) } else { (q, v) };
        if v > best {
            best = v;
            arg = (p, q);
        }
    }
    Hyperedge0408 { max_value: best, argmax: arg, alpha_bound: 2.0 * w }
}

/// Gap condition of the `k`-disjoint-arcs construction: `α + β(k−1)/k > 1`.
pub fn csm_beta1_check(k: usize, alpha: f64, beta: f64) -> Result<bool> {
    if k < 2 {
        return Err(Error::Contract("k must be at least 2".into()));
    }
    Ok(alpha + beta * (k - 1) as f64 / k as f64 > 1.0)
}

/// `max_{q ∈ [0,1], p ∈ [0,½]} F̂(q, p)` in the `k → ∞` limit, with its argmax.
pub fn cardinality_0478_check(kappa: f64) -> Result<(f64, f64, f64)> {
    if !(0.0..=1.0).contains(&kappa) {
        return Err(Error::Contract("κ must lie in [0,1]".into()));
    }
    let at = |p: f64| best_q(kappa, 1.0 - (-p).exp(), 0.0);
    let m = 5000;
    let (mut bp, mut bv) = (0.0, f64::NEG_INFINITY);
    for i in 0..=m {
        let p = 0.5 * i as f64 / m as f64;
        let v = at(p).1;
        if v > bv {
            bv = v;
            bp = p;
        }
    }
    let (gp, gv) = golden_max(|p| at(p).1, (bp - 1e-4).max(0.0), (bp + 1e-4).min(0.5), 50);
    if gv > bv {
        bp = gp;
        bv = gv;
    }
    Ok((bv, at(bp).0, bp))
}
