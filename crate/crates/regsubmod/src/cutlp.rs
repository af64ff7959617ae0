//! LP-based (½, 1)-approximations for cut functions.
//!
//! Both LPs maximize `½·f̂(x) + L(x)` where `f̂` relaxes each edge's cut
//! indicator by a variable `c_e`. Undirected edges use
//! `c ≤ min(x_a + x_b, 2 − x_a − x_b)`, which satisfies `F ≥ ½f̂` everywhere.
//! Directed arcs use `c ≤ min(x_a, 1 − x_b)`, where `F ≥ ½f̂` only holds at
//! half-integral points; the unconstrained dicut polytope has half-integral
//! vertices, so a simplex vertex is all we need.

use crate::error::{Error, Result};
use crate::lp::{LinearProgram, Outcome, Relation, Sense};
use crate::matroid::{pipage_round, sample_round, Polytope};
use crate::setfn::{Edge, LinearFn, Mask, Repr, SubmodularFn};

pub const HALF_INTEGRAL_TOL: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq)]
pub struct CutLpResult {
    /// Optimal `x*`.
    pub x: Vec<f64>,
    /// Edge variables at the optimum, in edge order (self-loops get 0).
    pub c: Vec<f64>,
    pub lp_value: f64,
    /// Rounded set.
    pub set: Mask,
    /// `F(x*) + L(x*)`, the exact expected value of independent rounding.
    pub expected: f64,
}

fn undirected_edges(f: &SubmodularFn) -> Result<&[Edge]> {
    match f.repr() {
        Repr::UndirectedCut(es) => Ok(es),
        _ => Err(Error::Contract("undirected_cut_lp needs an undirected cut function".into())),
    }
}

fn directed_edges(f: &SubmodularFn) -> Result<&[Edge]> {
    match f.repr() {
        Repr::DirectedCut(es) => Ok(es),
        _ => Err(Error::Contract("directed_cut_lp needs a directed cut function".into())),
    }
}

/// `Σ w·min(x_a + x_b, 2 − x_a − x_b)` over non-loop edges.
pub fn fhat_cut(f: &SubmodularFn, x: &[f64]) -> Result<f64> {
    Ok(undirected_edges(f)?.iter().filter(|e| e.a != e.b).map(|e| e.w * (x[e.a] + x[e.b]).min(2.0 - x[e.a] - x[e.b])).sum())
}

/// `Σ w·min(x_a, 1 − x_b)` over non-loop arcs.
pub fn fhat_dicut(f: &SubmodularFn, x: &[f64]) -> Result<f64> {
    Ok(directed_edges(f)?.iter().filter(|e| e.a != e.b).map(|e| e.w * x[e.a].min(1.0 - x[e.b])).sum())
}

pub fn is_half_integral(x: &[f64], tol: f64) -> bool {
    x.iter().all(|&v| [0.0, 0.5, 1.0].iter().any(|h| (v - h).abs() <= tol))
}

/// Builds the cut LP over `x ∈ [0,1]^n`; returns the program, the `x`
/// variable indices and one `c` index per edge (`None` for loops).
fn build(n: usize, edges: &[Edge], directed: bool, cx: &[f64], cc: &[f64]) -> (LinearProgram, Vec<usize>, Vec<Option<usize>>) {
    let mut lp = LinearProgram::new(Sense::Max);
    let xs: Vec<usize> = (0..n).map(|u| lp.add_var(cx[u], 0.0, 1.0)).collect();
    let cs = edges
        .iter()
        .zip(cc)
        .map(|(e, &w)| {
            if e.a == e.b {
                return None;
            }
            let c = lp.add_var(w, 0.0, f64::INFINITY);
            if directed {
                lp.add_constraint(vec![(c, 1.0), (xs[e.a], -1.0)], Relation::Le, 0.0);
                lp.add_constraint(vec![(c, 1.0), (xs[e.b], 1.0)], Relation::Le, 1.0);
            } else {
                lp.add_constraint(vec![(c, 1.0), (xs[e.a], -1.0), (xs[e.b], -1.0)], Relation::Le, 0.0);
                lp.add_constraint(vec![(c, 1.0), (xs[e.a], 1.0), (xs[e.b], 1.0)], Relation::Le, 2.0);
            }
            Some(c)
        })
        .collect();
    (lp, xs, cs)
}

fn solve(lp: &LinearProgram) -> Result<(Vec<f64>, f64)> {
    match lp.solve()? {
        Outcome::Optimal { x, value } => Ok((x, value)),
        Outcome::Infeasible => Err(Error::Infeasible("cut LP is infeasible".into())),
        Outcome::Unbounded => Err(Error::Numeric("cut LP reported unbounded".into())),
    }
}

fn split(sol: &[f64], xs: &[usize], cs: &[Option<usize>]) -> (Vec<f64>, Vec<f64>) {
    let x = xs.iter().map(|&i| sol[i].clamp(0.0, 1.0)).collect();
    let c = cs.iter().map(|c| c.map_or(0.0, |i| sol[i])).collect();
    (x, c)
}

/// Solves the undirected LP jointly with `x ∈ p` and pipage-rounds `x*`.
/// The rounded set satisfies `f(S) + ℓ(S) ≥ F(x*) + L(x*) ≥ LP value`.
pub fn undirected_cut_lp(f: &SubmodularFn, ell: &LinearFn, p: &Polytope, seed: u64) -> Result<CutLpResult> {
    let edges = undirected_edges(f)?;
    let p = p.original();
    let cc: Vec<f64> = edges.iter().map(|e| 0.5 * e.w).collect();
    let (mut lp, xs, cs) = build(f.n(), edges, false, &ell.weights, &cc);
    p.add_membership(&mut lp, &xs)?;
    let (sol, lp_value) = solve(&lp)?;
    let (x, c) = split(&sol, &xs, &cs);
    let set = pipage_round(&p, f, ell, &x, seed)?;
    let expected = f.multilinear(&x)? + ell.dot(&x);
    Ok(CutLpResult { x, c, lp_value, set, expected })
}

/// A vertex of the unconstrained dicut polytope maximizing
/// `⟨cx, x⟩ + ⟨cc, c⟩`. Fails loudly if the vertex is not half-integral.
pub fn dicut_lp_vertex(f: &SubmodularFn, cx: &[f64], cc: &[f64]) -> Result<(Vec<f64>, Vec<f64>, f64)> {
    let edges = directed_edges(f)?;
    if cx.len() != f.n() || cc.len() != edges.len() {
        return Err(Error::Structural("objective length mismatch".into()));
    }
    let (lp, xs, cs) = build(f.n(), edges, true, cx, cc);
    let (sol, value) = solve(&lp)?;
    let (x, c) = split(&sol, &xs, &cs);
    if !is_half_integral(&x, HALF_INTEGRAL_TOL) || !is_half_integral(&c, HALF_INTEGRAL_TOL) {
        return Err(Error::Numeric(format!("dicut LP vertex is not half-integral: x = {x:?}")));
    }
    Ok((x, c, value))
}

/// Solves the dicut LP at a vertex and rounds by independent sampling.
/// `expected` is the exact mean of the rounded value.
pub fn directed_cut_lp(f: &SubmodularFn, ell: &LinearFn, seed: u64) -> Result<CutLpResult> {
    let cc: Vec<f64> = directed_edges(f)?.iter().map(|e| 0.5 * e.w).collect();
    let (x, c, lp_value) = dicut_lp_vertex(f, &ell.weights, &cc)?;
    // Snap to exact halves so the expectation is computed at the vertex.
    let x: Vec<f64> = x.iter().map(|v| (v * 2.0).round() / 2.0).collect();
    let set = sample_round(&x, seed);
    let expected = f.multilinear(&x)? + ell.dot(&x);
    Ok(CutLpResult { x, c, lp_value, set, expected })
}
