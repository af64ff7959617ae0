//! Matroids, their polytopes, halfspace cuts and rounding.

use crate::error::{Error, Result};
use crate::lp::{LinearProgram, Relation, Sense};
use crate::setfn::{contains, elements, full_mask, LinearFn, Mask, SubmodularFn};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest ground set for explicit independence families.
pub const EXPLICIT_MAX_N: usize = 16;
/// Ties between pipage directions within this margin are broken at random.
pub const PIPAGE_TIE_TOL: f64 = 1e-12;
const SNAP: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum Matroid {
    Uniform { n: usize, k: usize },
    Partition { n: usize, blocks: Vec<Vec<usize>>, caps: Vec<usize>, block_of: Vec<usize> },
    Explicit { n: usize, independent: Vec<Mask>, indep: Vec<bool>, rank: Vec<u8> },
}

impl Matroid {
    pub fn uniform(n: usize, k: usize) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::Structural(format!("ground set size {n} outside 1..=64")));
        }
        Ok(Matroid::Uniform { n, k })
    }

    /// `blocks` must partition `{0, …, n−1}`.
    pub fn partition(n: usize, blocks: Vec<Vec<usize>>, caps: Vec<usize>) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::Structural(format!("ground set size {n} outside 1..=64")));
        }
        if blocks.len() != caps.len() {
            return Err(Error::Structural("one cap per block required".into()));
        }
        let mut block_of = vec![usize::MAX; n];
        for (b, blk) in blocks.iter().enumerate() {
            for &u in blk {
                if u >= n || block_of[u] != usize::MAX {
                    return Err(Error::Structural(format!("element {u} out of range or in two blocks")));
                }
                block_of[u] = b;
            }
        }
        if block_of.contains(&usize::MAX) {
            return Err(Error::Structural("blocks do not cover the ground set".into()));
        }
        Ok(Matroid::Partition { n, blocks, caps, block_of })
    }

    /// Builds from a list of independent sets and audits the matroid axioms.
    pub fn explicit(n: usize, independent: Vec<Mask>) -> Result<Self> {
        if n == 0 || n > EXPLICIT_MAX_N {
            return Err(Error::Capability(format!("explicit matroids need 1 ≤ n ≤ {EXPLICIT_MAX_N}")));
        }
        let size = 1usize << n;
        let mut indep = vec![false; size];
        for &s in &independent {
            if s as usize >= size {
                return Err(Error::Structural(format!("independent set {s:#x} outside ground set")));
            }
            indep[s as usize] = true;
        }
        if !indep[0] {
            return Err(Error::Structural("family must contain the empty set".into()));
        }
        for s in 0..size {
            if indep[s] {
                for u in 0..n {
                    if s >> u & 1 == 1 && !indep[s & !(1 << u)] {
                        return Err(Error::Structural(format!("family not downward closed at {s:#x}")));
                    }
                }
            }
        }
        let mut rank = vec![0u8; size];
        for s in 1..size {
            rank[s] = if indep[s] {
                s.count_ones() as u8
            } else {
                (0..n).filter(|u| s >> u & 1 == 1).map(|u| rank[s & !(1 << u)]).max().unwrap_or(0)
            };
        }
        // Exchange axiom: every independent I is a maximum independent subset
        // of the largest set in which it is maximal.
        for i in 0..size {
            if !indep[i] {
                continue;
            }
            let ext = (0..n).filter(|&u| i >> u & 1 == 0 && indep[i | 1 << u]).fold(0usize, |m, u| m | 1 << u);
            let span = (size - 1) & !ext;
            if rank[span] as u32 != i.count_ones() {
                return Err(Error::Structural(format!("exchange axiom fails for independent set {i:#x}")));
            }
        }
        let mut list: Vec<Mask> = (0..size as Mask).filter(|&s| indep[s as usize]).collect();
        list.sort_unstable();
        Ok(Matroid::Explicit { n, independent: list, indep, rank })
    }

    pub fn n(&self) -> usize {
        match self {
            Matroid::Uniform { n, .. } | Matroid::Partition { n, .. } | Matroid::Explicit { n, .. } => *n,
        }
    }

    pub fn is_independent(&self, s: Mask) -> bool {
        match self {
            Matroid::Uniform { k, .. } => s.count_ones() as usize <= *k,
            Matroid::Partition { blocks, caps, .. } => blocks
                .iter()
                .zip(caps)
                .all(|(b, &c)| b.iter().filter(|&&u| contains(s, u)).count() <= c),
            Matroid::Explicit { indep, .. } => (s as usize) < indep.len() && indep[s as usize],
        }
    }

    pub fn rank(&self, s: Mask) -> usize {
        match self {
            Matroid::Uniform { k, .. } => (s.count_ones() as usize).min(*k),
            Matroid::Partition { blocks, caps, .. } => blocks
                .iter()
                .zip(caps)
                .map(|(b, &c)| b.iter().filter(|&&u| contains(s, u)).count().min(c))
                .sum(),
            Matroid::Explicit { rank, .. } => rank[s as usize] as usize,
        }
    }

    /// Greedy maximum-weight independent set over positive weights.
    pub fn greedy(&self, w: &[f64]) -> Mask {
        let mut order: Vec<usize> = (0..self.n()).filter(|&u| w[u] > 0.0).collect();
        order.sort_by(|&a, &b| w[b].total_cmp(&w[a]).then(a.cmp(&b)));
        let mut s = 0;
        for u in order {
            if self.is_independent(s | 1 << u) {
                s |= 1 << u;
            }
        }
        s
    }

    /// All independent sets, enumerated. Needs a small ground set.
    pub fn independent_sets(&self) -> Result<Vec<Mask>> {
        match self {
            Matroid::Explicit { independent, .. } => Ok(independent.clone()),
            _ => {
                let n = self.n();
                if n > 24 {
                    return Err(Error::Capability(format!("cannot enumerate independent sets for n={n}")));
                }
                Ok((0..1u64 << n).filter(|&s| self.is_independent(s)).collect())
            }
        }
    }
}

/// `{x : ⟨w, x⟩ ≥ c}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Halfspace {
    pub w: Vec<f64>,
    pub c: f64,
}

/// `scale · P(base) ∩ cuts`, where a missing base means the unit cube.
#[derive(Debug, Clone, PartialEq)]
pub struct Polytope {
    pub n: usize,
    pub base: Option<Matroid>,
    pub cuts: Vec<Halfspace>,
    pub scale: f64,
}

impl Polytope {
    pub fn cube(n: usize) -> Self {
        Self { n, base: None, cuts: Vec::new(), scale: 1.0 }
    }

    pub fn matroid(m: Matroid) -> Self {
        Self { n: m.n(), base: Some(m), cuts: Vec::new(), scale: 1.0 }
    }

    pub fn with_cut(&self, w: Vec<f64>, c: f64) -> Self {
        let mut p = self.clone();
        p.cuts.push(Halfspace { w, c });
        p
    }

    pub fn scaled(&self, t: f64) -> Self {
        let mut p = self.clone();
        p.scale = t;
        p
    }

    /// The polytope without cuts or scaling.
    pub fn original(&self) -> Self {
        Self { n: self.n, base: self.base.clone(), cuts: Vec::new(), scale: 1.0 }
    }

    pub fn is_independent(&self, s: Mask) -> bool {
        self.base.as_ref().map_or(s & !full_mask(self.n) == 0, |m| m.is_independent(s))
    }

    /// Adds membership constraints for `x` (variables `xs`) to `lp`.
    /// Explicit matroids use the convex-hull formulation with one weight per
    /// independent set.
    pub fn add_membership(&self, lp: &mut LinearProgram, xs: &[usize]) -> Result<()> {
        let t = self.scale;
        match &self.base {
            None => {
                for &x in xs {
                    lp.add_constraint(vec![(x, 1.0)], Relation::Le, t);
                }
            }
            Some(Matroid::Uniform { k, .. }) => {
                for &x in xs {
                    lp.add_constraint(vec![(x, 1.0)], Relation::Le, t);
                }
                lp.add_constraint(xs.iter().map(|&x| (x, 1.0)).collect(), Relation::Le, t * *k as f64);
            }
            Some(Matroid::Partition { blocks, caps, .. }) => {
                for &x in xs {
                    lp.add_constraint(vec![(x, 1.0)], Relation::Le, t);
                }
                for (b, &c) in blocks.iter().zip(caps) {
                    lp.add_constraint(b.iter().map(|&u| (xs[u], 1.0)).collect(), Relation::Le, t * c as f64);
                }
            }
            Some(Matroid::Explicit { independent, .. }) => {
                let lambdas: Vec<usize> = independent.iter().map(|_| lp.add_var(0.0, 0.0, f64::INFINITY)).collect();
                lp.add_constraint(lambdas.iter().map(|&l| (l, 1.0)).collect(), Relation::Eq, t);
                for (u, &x) in xs.iter().enumerate() {
                    let mut row: Vec<(usize, f64)> = independent
                        .iter()
                        .zip(&lambdas)
                        .filter(|(s, _)| contains(**s, u))
                        .map(|(_, &l)| (l, 1.0))
                        .collect();
                    row.push((x, -1.0));
                    lp.add_constraint(row, Relation::Eq, 0.0);
                }
            }
        }
        for h in &self.cuts {
            lp.add_constraint(xs.iter().zip(&h.w).map(|(&x, &w)| (x, w)).collect(), Relation::Ge, h.c);
        }
        Ok(())
    }

    /// Membership test within `tol`.
    pub fn contains_point(&self, x: &[f64], tol: f64) -> Result<bool> {
        if x.iter().any(|&v| v < -tol) {
            return Ok(false);
        }
        for h in &self.cuts {
            if h.w.iter().zip(x).map(|(a, b)| a * b).sum::<f64>() < h.c - tol {
                return Ok(false);
            }
        }
        let t = self.scale;
        match &self.base {
            None => Ok(x.iter().all(|&v| v <= t + tol)),
            Some(Matroid::Uniform { k, .. }) => Ok(x.iter().all(|&v| v <= t + tol) && x.iter().sum::<f64>() <= t * *k as f64 + tol),
            Some(Matroid::Partition { blocks, caps, .. }) => Ok(x.iter().all(|&v| v <= t + tol)
                && blocks.iter().zip(caps).all(|(b, &c)| b.iter().map(|&u| x[u]).sum::<f64>() <= t * c as f64 + tol)),
            Some(m @ Matroid::Explicit { .. }) => {
                let plain = Polytope { n: self.n, base: Some(m.clone()), cuts: Vec::new(), scale: t };
                let mut lp = LinearProgram::new(Sense::Max);
                let xs: Vec<usize> = x.iter().map(|&v| lp.add_var(0.0, v, v)).collect();
                plain.add_membership(&mut lp, &xs)?;
                Ok(lp.solve()?.optimal().is_some())
            }
        }
    }
}

/// Argmax of `⟨w, x⟩` over `p`. Pure matroid polytopes use the greedy
/// algorithm and return an integral vertex (times the scale); cut polytopes
/// go through the LP, with a fractional-knapsack shortcut for a cube with a
/// single non-positive cut.
pub fn maximize_linear(p: &Polytope, w: &[f64]) -> Result<Vec<f64>> {
    maximize_linear_avoiding(p, w, 0)
}

/// As [`maximize_linear`] with the coordinates in `forbidden` fixed to 0.
pub fn maximize_linear_avoiding(p: &Polytope, w: &[f64], forbidden: Mask) -> Result<Vec<f64>> {
    let n = p.n;
    if w.len() != n {
        return Err(Error::Structural("weight vector length mismatch".into()));
    }
    let t = p.scale;
    if p.cuts.is_empty() {
        let ww: Vec<f64> = (0..n).map(|u| if contains(forbidden, u) { 0.0 } else { w[u] }).collect();
        let s = match &p.base {
            None => ww.iter().enumerate().filter(|(_, &v)| v > 0.0).fold(0, |m, (u, _)| m | 1 << u),
            Some(m) => m.greedy(&ww),
        };
        return Ok((0..n).map(|u| if contains(s, u) { t } else { 0.0 }).collect());
    }
    if p.base.is_none() && p.cuts.len() == 1 && p.cuts[0].w.iter().all(|&a| a <= 0.0) && p.cuts[0].c <= 0.0 {
        return Ok(knapsack(&p.cuts[0], w, t, forbidden));
    }
    let mut lp = LinearProgram::new(Sense::Max);
    let xs: Vec<usize> = (0..n)
        .map(|u| lp.add_var(w[u], 0.0, if contains(forbidden, u) { 0.0 } else { f64::INFINITY }))
        .collect();
    p.add_membership(&mut lp, &xs)?;
    match lp.solve()?.optimal() {
        Some((x, _)) => Ok(x[..n].iter().map(|v| v.clamp(0.0, t)).collect()),
        None => Err(Error::Infeasible("polytope is empty after cuts".into())),
    }
}

/// Fractional knapsack: max ⟨w,x⟩ over x ∈ [0,t]^n with Σ a_u x_u ≥ c,
/// a ≤ 0, c ≤ 0. Zero-cost items are taken first, then by ratio.
fn knapsack(h: &Halfspace, w: &[f64], t: f64, forbidden: Mask) -> Vec<f64> {
    let n = w.len();
    let mut x = vec![0.0; n];
    let mut budget = -h.c;
    let mut paid: Vec<usize> = Vec::new();
    for u in 0..n {
        if w[u] <= 0.0 || contains(forbidden, u) {
            continue;
        }
        if h.w[u] >= 0.0 {
            x[u] = t;
        } else {
            paid.push(u);
        }
    }
    paid.sort_by(|&a, &b| (w[b] / -h.w[b]).total_cmp(&(w[a] / -h.w[a])).then(a.cmp(&b)));
    for u in paid {
        let cost = -h.w[u];
        let take = (budget / cost).min(t).max(0.0);
        x[u] = take;
        budget -= take * cost;
        if budget <= 0.0 {
            break;
        }
    }
    x
}

/// Independent Bernoulli rounding `R(x)`.
pub fn sample_round(x: &[f64], seed: u64) -> Mask {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    crate::setfn::sample_set(x, &mut rng)
}

fn snap(x: &mut [f64]) {
    for v in x.iter_mut() {
        if v.abs() <= SNAP {
            *v = 0.0;
        } else if (1.0 - *v).abs() <= SNAP {
            *v = 1.0;
        }
    }
}

fn is_frac(v: f64) -> bool {
    v > 0.0 && v < 1.0
}

/// Counts the moves a pipage run made; exposed for invariant tests.
#[derive(Debug, Clone, PartialEq)]
pub struct PipageReport {
    pub set: Mask,
    pub moves: usize,
}

/// Pipage rounding against the original (uncut) polytope.
///
/// Every move goes along `e_i − e_j` (or `e_i`), along which `F + L` is
/// convex, and keeps the better endpoint. The result therefore satisfies
/// `f(S) + ℓ(S) ≥ F(x) + L(x)` deterministically; the seed only breaks ties.
pub fn pipage_round(p: &Polytope, f: &SubmodularFn, ell: &LinearFn, x: &[f64], seed: u64) -> Result<Mask> {
    Ok(pipage_round_report(p, f, ell, x, seed)?.set)
}

pub fn pipage_round_report(p: &Polytope, f: &SubmodularFn, ell: &LinearFn, x: &[f64], seed: u64) -> Result<PipageReport> {
    if !p.cuts.is_empty() {
        return Err(Error::Contract("pipage rounding runs against the original matroid polytope".into()));
    }
    if x.len() != p.n {
        return Err(Error::Structural("point length mismatch".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut y = x.to_vec();
    snap(&mut y);
    let value = |y: &[f64]| -> Result<f64> { Ok(f.multilinear(y)? + ell.dot(y)) };
    let mut pick = |a: &[f64], b: &[f64]| -> Result<bool> {
        let (va, vb) = (value(a)?, value(b)?);
        Ok(if (va - vb).abs() <= PIPAGE_TIE_TOL { rng.gen::<bool>() } else { va > vb })
    };
    let moves = match &p.base {
        Some(Matroid::Explicit { n, rank, .. }) => pipage_explicit(*n, rank, &mut y, &mut pick)?,
        base => {
            let block_of: Vec<usize> = match base {
                None => (0..p.n).collect(),
                Some(Matroid::Uniform { n, .. }) => vec![0; *n],
                Some(Matroid::Partition { block_of, .. }) => block_of.clone(),
                Some(Matroid::Explicit { .. }) => unreachable!(),
            };
            pipage_blocks(&block_of, &mut y, &mut pick)?
        }
    };
    let s = crate::setfn::point::to_mask(&y);
    if !p.is_independent(s) {
        return Err(Error::Numeric("pipage produced a dependent set".into()));
    }
    Ok(PipageReport { set: s, moves })
}

type Picker<'a> = dyn FnMut(&[f64], &[f64]) -> Result<bool> + 'a;

/// Uniform and partition matroids: blocks with integral caps. A block with
/// one fractional coordinate can always round it up.
fn pipage_blocks(block_of: &[usize], y: &mut Vec<f64>, pick: &mut Picker) -> Result<usize> {
    let mut moves = 0;
    loop {
        let frac: Vec<usize> = (0..y.len()).filter(|&u| is_frac(y[u])).collect();
        let Some(&i) = frac.first() else { break };
        let partner = frac.iter().copied().find(|&j| j != i && block_of[j] == block_of[i]);
        let (mut up, mut down) = (y.clone(), y.clone());
        match partner {
            Some(j) => {
                let e1 = (1.0 - y[i]).min(y[j]);
                up[i] += e1;
                up[j] -= e1;
                let e2 = y[i].min(1.0 - y[j]);
                down[i] -= e2;
                down[j] += e2;
            }
            None => {
                up[i] = 1.0;
                down[i] = 0.0;
            }
        }
        snap(&mut up);
        snap(&mut down);
        *y = if pick(&up, &down)? { up } else { down };
        moves += 1;
        if moves > 4 * y.len() + 4 {
            return Err(Error::Numeric("pipage failed to terminate".into()));
        }
    }
    Ok(moves)
}

/// Explicit matroids: tight sets come from the tabulated rank function.
fn pipage_explicit(n: usize, rank: &[u8], y: &mut Vec<f64>, pick: &mut Picker) -> Result<usize> {
    let size = 1usize << n;
    let mut moves = 0;
    let mut sums = vec![0.0; size];
    loop {
        let frac: Vec<usize> = (0..n).filter(|&u| is_frac(y[u])).collect();
        let Some(&i) = frac.first() else { break };
        for s in 1..size {
            let low = s.trailing_zeros() as usize;
            sums[s] = sums[s & (s - 1)] + y[low];
        }
        let slack = |s: usize| rank[s] as f64 - sums[s];
        // Smallest tight set containing i: intersection of all of them.
        let mut tight = usize::MAX;
        for s in (0..size).filter(|s| s >> i & 1 == 1) {
            if slack(s) <= 1e-9 {
                tight &= s;
            }
        }
        let (mut up, mut down) = (y.clone(), y.clone());
        if tight == usize::MAX {
            let room = (0..size).filter(|s| s >> i & 1 == 1).map(slack).fold(1.0 - y[i], f64::min);
            up[i] += room.max(0.0);
            down[i] = 0.0;
        } else {
            let j = frac
                .iter()
                .copied()
                .find(|&j| j != i && tight >> j & 1 == 1)
                .ok_or_else(|| Error::Numeric("tight set with a single fractional element".into()))?;
            let lim = |a: usize, b: usize| {
                (0..size)
                    .filter(|s| s >> a & 1 == 1 && s >> b & 1 == 0)
                    .map(slack)
                    .fold((1.0 - y[a]).min(y[b]), f64::min)
                    .max(0.0)
            };
            let (e1, e2) = (lim(i, j), lim(j, i));
            up[i] += e1;
            up[j] -= e1;
            down[i] -= e2;
            down[j] += e2;
        }
        snap(&mut up);
        snap(&mut down);
        *y = if pick(&up, &down)? { up } else { down };
        moves += 1;
        if moves > 4 * n * n + 4 {
            return Err(Error::Numeric("pipage failed to terminate".into()));
        }
    }
    Ok(moves)
}

/// Linear-optimum independent set: the (0, 1)-approximation.
pub fn trivial_approx(ell: &LinearFn, p: &Polytope) -> Mask {
    let orig = p.original();
    match &orig.base {
        None => ell.positive_mask(),
        Some(m) => m.greedy(&ell.weights),
    }
}

/// All elements of `s`, as a convenience for reports.
pub fn members(s: Mask) -> Vec<usize> {
    elements(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfn::Edge;

    fn arcs_matroid(k: usize) -> Matroid {
        let a: Vec<usize> = (0..k).collect();
        let b: Vec<usize> = (k..2 * k).collect();
        Matroid::partition(2 * k, vec![a, b], vec![1, k - 1]).unwrap()
    }

    #[test]
    fn independence_examples() {
        let u = Matroid::uniform(3, 2).unwrap();
        assert!(!u.is_independent(0b111));
        assert!(u.is_independent(0));
        let m = arcs_matroid(4);
        // {a_1, b_2, b_3, b_4}
        assert!(m.is_independent(0b1110_0001));
        assert!(!m.is_independent(0b0000_0011));
        assert!(!m.is_independent(0b1111_0000));
    }

    #[test]
    fn explicit_audit() {
        // Graphic matroid of a triangle: any two edges.
        let m = Matroid::explicit(3, vec![0, 1, 2, 4, 3, 5, 6]).unwrap();
        assert_eq!(m.rank(0b111), 2);
        assert!(Matroid::explicit(3, vec![1, 2]).is_err());
        assert!(Matroid::explicit(3, vec![0, 3]).is_err());
        // {0,1} and {2} are both maximal: exchange fails.
        assert!(Matroid::explicit(3, vec![0, 1, 2, 4, 3]).is_err());
    }

    #[test]
    fn greedy_uniform_and_linear_max() {
        let p = Polytope::matroid(Matroid::uniform(4, 2).unwrap());
        let x = maximize_linear(&p, &[1.0; 4]).unwrap();
        assert_eq!(x.iter().sum::<f64>(), 2.0);
        assert_eq!(trivial_approx(&LinearFn::new(vec![3.0, 1.0, 2.0]).unwrap(), &Polytope::matroid(Matroid::uniform(3, 2).unwrap())), 0b101);
    }

    #[test]
    fn cube_cut_respected_or_infeasible() {
        let ell = [-1.0, -2.0, -0.5];
        let p = Polytope::cube(3).with_cut(ell.to_vec(), -1.5);
        let x = maximize_linear(&p, &[1.0, 1.0, 1.0]).unwrap();
        assert!(ell.iter().zip(&x).map(|(a, b)| a * b).sum::<f64>() >= -1.5 - 1e-9);
        let q = Polytope::cube(2).with_cut(vec![1.0, 1.0], 3.0);
        assert!(matches!(maximize_linear(&q, &[1.0, 1.0]), Err(Error::Infeasible(_))));
    }

    #[test]
    fn knapsack_matches_lp() {
        let ell = vec![-1.0, -0.2, -3.0, 0.0, -0.7];
        let w = [0.5, 0.3, 2.0, -1.0, 0.4];
        let p = Polytope::cube(5).with_cut(ell.clone(), -1.1);
        let fast = maximize_linear(&p, &w).unwrap();
        let mut lp = LinearProgram::new(Sense::Max);
        let xs: Vec<usize> = w.iter().map(|&c| lp.add_var(c, 0.0, f64::INFINITY)).collect();
        p.add_membership(&mut lp, &xs).unwrap();
        let (_, v) = lp.solve().unwrap().optimal().unwrap();
        let vf: f64 = fast.iter().zip(&w).map(|(a, b)| a * b).sum();
        assert!((v - vf).abs() < 1e-9, "{v} vs {vf}");
    }

    #[test]
    fn pipage_integral_is_identity_and_modular_exact() {
        let f = SubmodularFn::zero(4).unwrap();
        let ell = LinearFn::new(vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        let p = Polytope::matroid(Matroid::uniform(4, 2).unwrap());
        assert_eq!(pipage_round(&p, &f, &ell, &[1.0, 0.0, 0.0, 1.0], 0).unwrap(), 0b1001);
        let s = pipage_round(&p, &f, &ell, &[0.5; 4], 0).unwrap();
        assert_eq!(s.count_ones(), 2);
        assert!(ell.eval(s) >= 5.0 - 1e-9);
    }

    #[test]
    fn pipage_explicit_matroid() {
        let m = Matroid::explicit(3, vec![0, 1, 2, 4, 3, 5, 6]).unwrap();
        let p = Polytope::matroid(m);
        let f = SubmodularFn::directed_cut(3, vec![Edge { a: 0, b: 1, w: 1.0 }, Edge { a: 2, b: 0, w: 0.7 }]).unwrap();
        let ell = LinearFn::new(vec![0.1, -0.2, 0.3]).unwrap();
        let x = [2.0 / 3.0; 3];
        let s = pipage_round(&p, &f, &ell, &x, 3).unwrap();
        assert!(p.is_independent(s));
        assert!(f.eval(s) + ell.eval(s) >= f.multilinear(&x).unwrap() + ell.dot(&x) - 1e-9);
    }

    #[test]
    fn membership_explicit_and_down_closed() {
        let m = Matroid::explicit(3, vec![0, 1, 2, 4, 3, 5, 6]).unwrap();
        let p = Polytope::matroid(m);
        assert!(p.contains_point(&[2.0 / 3.0; 3], 1e-9).unwrap());
        assert!(!p.contains_point(&[0.9; 3], 1e-9).unwrap());
        assert!(p.contains_point(&[0.3, 0.0, 0.6], 1e-9).unwrap());
    }
}
