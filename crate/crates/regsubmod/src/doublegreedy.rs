//! Double greedy on `g = f + ℓ` and the oblivious online dicut rule.
//!
//! Both variants sweep the elements once, keeping `X ⊆ Y` with `X₀ = ∅`,
//! `Y₀ = N`, and decide each element from `a = g(u|X)` and
//! `b′ = g(u|Y∖{u})`.

use crate::error::{Error, Result};
use crate::setfn::{contains, full_mask, LinearFn, Mask, Repr, SubmodularFn};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest ground set for the exact decision-tree expectation.
pub const EXACT_DG_MAX_N: usize = 14;

#[derive(Debug, Clone, PartialEq)]
pub struct DgStep {
    pub element: usize,
    /// `g(u | X_{i−1})`.
    pub gain_x: f64,
    /// `g(u | Y_{i−1} ∖ {u})`.
    pub gain_y: f64,
    pub a: f64,
    pub b: f64,
    /// Probability of keeping the element (0 or 1 for the deterministic rule).
    pub keep_prob: f64,
    pub kept: bool,
    pub x: Mask,
    pub y: Mask,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DgTrace {
    pub steps: Vec<DgStep>,
    pub set: Mask,
}

fn g(f: &SubmodularFn, ell: &LinearFn, s: Mask) -> f64 {
    f.eval(s) + ell.eval(s)
}

/// Checks that `order` is a permutation of the ground set.
fn check_order(n: usize, order: &[usize]) -> Result<()> {
    let mut seen = 0u64;
    for &u in order {
        if u >= n || contains(seen, u) {
            return Err(Error::Contract("order must be a permutation of the ground set".into()));
        }
        seen |= 1 << u;
    }
    if order.len() != n {
        return Err(Error::Contract("order must list every element".into()));
    }
    Ok(())
}

pub fn index_order(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn gains(f: &SubmodularFn, ell: &LinearFn, u: usize, x: Mask, y: Mask) -> (f64, f64) {
    let gx = g(f, ell, x | 1 << u) - g(f, ell, x);
    let yu = y & !(1 << u);
    let gy = g(f, ell, y) - g(f, ell, yu);
    (gx, gy)
}

/// Keeps `u` iff `g(u|X) ≥ −r·g(u|Y∖{u})`. With `r = 1` this is the
/// classic deterministic double greedy.
pub fn deterministic_dg(f: &SubmodularFn, ell: &LinearFn, r: f64, order: &[usize]) -> Result<(Mask, DgTrace)> {
    if !(r >= 1.0) {
        return Err(Error::Contract(format!("r must be ≥ 1, got {r}")));
    }
    let n = f.n();
    check_order(n, order)?;
    let (mut x, mut y) = (0, full_mask(n));
    let mut steps = Vec::with_capacity(n);
    for &u in order {
        let (gx, gy) = gains(f, ell, u, x, y);
        let kept = gx >= -r * gy;
        if kept {
            x |= 1 << u;
        } else {
            y &= !(1 << u);
        }
        steps.push(DgStep { element: u, gain_x: gx, gain_y: gy, a: gx, b: -gy, keep_prob: f64::from(u8::from(kept)), kept, x, y });
    }
    Ok((x, DgTrace { steps, set: x }))
}

/// `a/(a+b)` with `a = max(g(u|X),0)`, `b = max(−g(u|Y∖u),0)`; `a = b = 0`
/// excludes the element.
fn keep_probability(gx: f64, gy: f64) -> (f64, f64, f64) {
    let a = gx.max(0.0);
    let b = (-gy).max(0.0);
    let p = if a + b > 0.0 { a / (a + b) } else { 0.0 };
    (a, b, p)
}

pub fn randomized_dg(f: &SubmodularFn, ell: &LinearFn, order: &[usize], seed: u64) -> Result<(Mask, DgTrace)> {
    let n = f.n();
    check_order(n, order)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut x, mut y) = (0, full_mask(n));
    let mut steps = Vec::with_capacity(n);
    for &u in order {
        let (gx, gy) = gains(f, ell, u, x, y);
        let (a, b, p) = keep_probability(gx, gy);
        let kept = p >= 1.0 || (p > 0.0 && rng.gen::<f64>() < p);
        if kept {
            x |= 1 << u;
        } else {
            y &= !(1 << u);
        }
        steps.push(DgStep { element: u, gain_x: gx, gain_y: gy, a, b, keep_prob: p, kept, x, y });
    }
    Ok((x, DgTrace { steps, set: x }))
}

/// Exact `E[f(X_n) + ℓ(X_n)]` of randomized double greedy, by walking the
/// whole decision tree.
pub fn exact_dg_expectation(f: &SubmodularFn, ell: &LinearFn, order: &[usize]) -> Result<f64> {
    let n = f.n();
    if n > EXACT_DG_MAX_N {
        return Err(Error::Capability(format!("exact expectation needs n ≤ {EXACT_DG_MAX_N}")));
    }
    check_order(n, order)?;
    fn walk(f: &SubmodularFn, ell: &LinearFn, order: &[usize], x: Mask, y: Mask) -> f64 {
        let Some((&u, rest)) = order.split_first() else {
            return g(f, ell, x);
        };
        let (gx, gy) = gains(f, ell, u, x, y);
        let (_, _, p) = keep_probability(gx, gy);
        let mut e = 0.0;
        if p > 0.0 {
            e += p * walk(f, ell, rest, x | 1 << u, y);
        }
        if p < 1.0 {
            e += (1.0 - p) * walk(f, ell, rest, x, y & !(1 << u));
        }
        e
    }
    Ok(walk(f, ell, order, 0, full_mask(n)))
}

fn dicut_edges(f: &SubmodularFn) -> Result<&[crate::setfn::Edge]> {
    match f.repr() {
        Repr::DirectedCut(es) => Ok(es),
        _ => Err(Error::Contract("oblivious rule needs a directed cut function".into())),
    }
}

/// Selection probability of each vertex: `β` iff `(1−β)·out(v) + ℓ(v) ≥ 0`.
pub fn oblivious_probabilities(f: &SubmodularFn, ell: &LinearFn, beta: f64) -> Result<Vec<f64>> {
    if !(0.0..=1.0).contains(&beta) {
        return Err(Error::Contract(format!("β must lie in [0,1], got {beta}")));
    }
    let es = dicut_edges(f)?;
    let mut out = vec![0.0; f.n()];
    for e in es {
        if e.a != e.b {
            out[e.a] += e.w;
        }
    }
    Ok((0..f.n()).map(|v| if (1.0 - beta) * out[v] + ell.weights[v] >= 0.0 { beta } else { 0.0 }).collect())
}

pub fn oblivious_dicut(f: &SubmodularFn, ell: &LinearFn, beta: f64, seed: u64) -> Result<Mask> {
    let p = oblivious_probabilities(f, ell, beta)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(p.iter().enumerate().fold(0, |m, (v, &pv)| if pv >= 1.0 || (pv > 0.0 && rng.gen::<f64>() < pv) { m | 1 << v } else { m }))
}

/// Closed-form expectation: selections are independent, so each arc
/// contributes `w·p_a·(1−p_b)`.
pub fn oblivious_dicut_expectation(f: &SubmodularFn, ell: &LinearFn, beta: f64) -> Result<f64> {
    let p = oblivious_probabilities(f, ell, beta)?;
    let cut: f64 = dicut_edges(f)?.iter().filter(|e| e.a != e.b).map(|e| e.w * p[e.a] * (1.0 - p[e.b])).sum();
    Ok(cut + ell.dot(&p))
}
