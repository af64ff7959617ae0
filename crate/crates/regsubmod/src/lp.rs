//! Dense two-phase tableau simplex with Bland's rule.
//!
//! Optimal answers are basic feasible solutions, i.e. vertices of the
//! feasible polyhedron; the half-integral cut LPs rely on that. Variable
//! bounds become substitutions plus explicit rows, so a vertex of the
//! standard form is a vertex of the original program.

use crate::error::{Error, Result};

/// Pivot and feasibility tolerance.
pub const PIVOT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    /// Sparse row: `(variable, coefficient)`.
    pub row: Vec<(usize, f64)>,
    pub rel: Relation,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: Vec<f64>,
    pub constraints: Vec<Constraint>,
    /// Per-variable `[lo, hi]`; infinities allowed.
    pub bounds: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Optimal { x: Vec<f64>, value: f64 },
    Infeasible,
    Unbounded,
}

impl Outcome {
    pub fn optimal(self) -> Option<(Vec<f64>, f64)> {
        match self {
            Outcome::Optimal { x, value } => Some((x, value)),
            _ => None,
        }
    }
}

impl LinearProgram {
    pub fn new(sense: Sense) -> Self {
        Self { sense, objective: Vec::new(), constraints: Vec::new(), bounds: Vec::new() }
    }

    /// Adds a variable and returns its index.
    pub fn add_var(&mut self, cost: f64, lo: f64, hi: f64) -> usize {
        self.objective.push(cost);
        self.bounds.push((lo, hi));
        self.objective.len() - 1
    }

    pub fn add_constraint(&mut self, row: Vec<(usize, f64)>, rel: Relation, rhs: f64) {
        self.constraints.push(Constraint { row, rel, rhs });
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    /// Largest violation of any constraint or bound at `x`.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let mut worst = 0.0f64;
        for c in &self.constraints {
            let lhs: f64 = c.row.iter().map(|&(j, a)| a * x[j]).sum();
            let v = match c.rel {
                Relation::Le => lhs - c.rhs,
                Relation::Ge => c.rhs - lhs,
                Relation::Eq => (lhs - c.rhs).abs(),
            };
            worst = worst.max(v);
        }
        for (&(lo, hi), &xj) in self.bounds.iter().zip(x) {
            worst = worst.max(lo - xj).max(xj - hi);
        }
        worst
    }

    /// Number of constraints and bounds tight at `x` within `tol`.
    pub fn tight_count(&self, x: &[f64], tol: f64) -> usize {
        let rows = self
            .constraints
            .iter()
            .filter(|c| (c.row.iter().map(|&(j, a)| a * x[j]).sum::<f64>() - c.rhs).abs() <= tol)
            .count();
        let bounds: usize = self
            .bounds
            .iter()
            .zip(x)
            .map(|(&(lo, hi), &xj)| usize::from((xj - lo).abs() <= tol) + usize::from((xj - hi).abs() <= tol))
            .sum();
        rows + bounds
    }

    pub fn solve(&self) -> Result<Outcome> {
        solve(self)
    }
}

/// How an original variable is recovered: `x = offset + Σ sign·y_col`.
#[derive(Debug, Clone)]
struct VarMap {
    offset: f64,
    cols: Vec<(usize, f64)>,
}

pub fn solve(lp: &LinearProgram) -> Result<Outcome> {
    let nv = lp.num_vars();
    if lp.bounds.len() != nv {
        return Err(Error::Structural("bounds/objective length mismatch".into()));
    }
    for c in &lp.constraints {
        if c.row.iter().any(|&(j, a)| j >= nv || !a.is_finite()) || !c.rhs.is_finite() {
            return Err(Error::Structural("constraint references unknown variable or non-finite value".into()));
        }
    }

    // Substitute bounds so every structural column is ≥ 0.
    let mut maps = Vec::with_capacity(nv);
    let mut ncols = 0;
    let mut bound_rows: Vec<(usize, f64)> = Vec::new();
    for &(lo, hi) in &lp.bounds {
        if lo > hi {
            return Ok(Outcome::Infeasible);
        }
        let map = if lo.is_finite() {
            let c = ncols;
            ncols += 1;
            if hi.is_finite() {
                bound_rows.push((c, hi - lo));
            }
            VarMap { offset: lo, cols: vec![(c, 1.0)] }
        } else if hi.is_finite() {
            let c = ncols;
            ncols += 1;
            VarMap { offset: hi, cols: vec![(c, -1.0)] }
        } else {
            let c = ncols;
            ncols += 2;
            VarMap { offset: 0.0, cols: vec![(c, 1.0), (c + 1, -1.0)] }
        };
        maps.push(map);
    }

    // Rows over structural columns: (dense coeffs, relation, rhs).
    let mut rows: Vec<(Vec<f64>, Relation, f64)> = Vec::new();
    for c in &lp.constraints {
        let mut a = vec![0.0; ncols];
        let mut rhs = c.rhs;
        for &(j, coef) in &c.row {
            rhs -= coef * maps[j].offset;
            for &(col, s) in &maps[j].cols {
                a[col] += coef * s;
            }
        }
        rows.push((a, c.rel, rhs));
    }
    for &(col, width) in &bound_rows {
        let mut a = vec![0.0; ncols];
        a[col] = 1.0;
        rows.push((a, Relation::Le, width));
    }

    let mut cost = vec![0.0; ncols];
    let sign = if lp.sense == Sense::Max { 1.0 } else { -1.0 };
    let mut const_term = 0.0;
    for j in 0..nv {
        const_term += lp.objective[j] * maps[j].offset;
        for &(col, s) in &maps[j].cols {
            cost[col] += sign * lp.objective[j] * s;
        }
    }

    let y = match Tableau::run(rows, ncols, &cost)? {
        Phase::Infeasible => return Ok(Outcome::Infeasible),
        Phase::Unbounded => return Ok(Outcome::Unbounded),
        Phase::Optimal(y) => y,
    };
    let x: Vec<f64> = maps
        .iter()
        .map(|m| m.offset + m.cols.iter().map(|&(c, s)| s * y[c]).sum::<f64>())
        .collect();
    let value = const_term + (0..nv).map(|j| lp.objective[j] * (x[j] - maps[j].offset)).sum::<f64>();
    let viol = lp.max_violation(&x);
    if viol > 1e-6 * (1.0 + x.iter().fold(0.0f64, |a, b| a.max(b.abs()))) {
        return Err(Error::Numeric(format!("solution violates constraints by {viol:e}")));
    }
    Ok(Outcome::Optimal { x, value })
}

enum Phase {
    Optimal(Vec<f64>),
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// `m` rows of `width + 1` entries; the last entry is the rhs.
    a: Vec<Vec<f64>>,
    basis: Vec<usize>,
    width: usize,
    /// Columns at or beyond this index are artificial.
    first_artificial: usize,
}

impl Tableau {
    fn run(rows: Vec<(Vec<f64>, Relation, f64)>, ncols: usize, cost: &[f64]) -> Result<Phase> {
        let m = rows.len();
        let n_slack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let first_art = ncols + n_slack;
        // Normalize to rhs ≥ 0 and count artificials.
        let mut norm = Vec::with_capacity(m);
        for (mut a, mut rel, mut b) in rows {
            if b < 0.0 {
                a.iter_mut().for_each(|v| *v = -*v);
                b = -b;
                rel = match rel {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
            }
            norm.push((a, rel, b));
        }
        let n_art = norm.iter().filter(|r| r.1 != Relation::Le).count();
        let width = first_art + n_art;
        let mut tab = Tableau { a: Vec::with_capacity(m), basis: Vec::with_capacity(m), width, first_artificial: first_art };
        let (mut slack, mut art) = (ncols, first_art);
        for (a, rel, b) in norm {
            let mut row = vec![0.0; width + 1];
            row[..ncols].copy_from_slice(&a);
            row[width] = b;
            match rel {
                Relation::Le => {
                    row[slack] = 1.0;
                    tab.basis.push(slack);
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -1.0;
                    slack += 1;
                    row[art] = 1.0;
                    tab.basis.push(art);
                    art += 1;
                }
                Relation::Eq => {
                    row[art] = 1.0;
                    tab.basis.push(art);
                    art += 1;
                }
            }
            tab.a.push(row);
        }

        if n_art > 0 {
            let mut c1 = vec![0.0; width];
            c1[first_art..].iter_mut().for_each(|v| *v = -1.0);
            let scale = 1.0 + tab.a.iter().map(|r| r[width]).fold(0.0, f64::max);
            match tab.optimize(&c1, width)? {
                None => return Err(Error::Numeric("phase one reported unbounded".into())),
                Some(v) if v < -1e-8 * scale => return Ok(Phase::Infeasible),
                Some(_) => {}
            }
            tab.evict_artificials();
        }
        let mut c2 = vec![0.0; width];
        c2[..ncols].copy_from_slice(cost);
        match tab.optimize(&c2, first_art)? {
            None => Ok(Phase::Unbounded),
            Some(_) => {
                let mut y = vec![0.0; ncols];
                for (i, &b) in tab.basis.iter().enumerate() {
                    if b < ncols {
                        y[b] = tab.a[i][width].max(0.0);
                    }
                }
                Ok(Phase::Optimal(y))
            }
        }
    }

    /// Maximizes `cost · y` with entering columns restricted to `< allowed`.
    /// Returns the optimal value, or `None` when unbounded.
    fn optimize(&mut self, cost: &[f64], allowed: usize) -> Result<Option<f64>> {
        let w = self.width;
        // Reduced costs d_j = c_j − c_B B⁻¹ A_j; d[w] holds −value.
        let mut d: Vec<f64> = cost.iter().copied().chain(std::iter::once(0.0)).collect();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = cost[b];
            if cb != 0.0 {
                for (dj, aij) in d.iter_mut().zip(&self.a[i]) {
                    *dj -= cb * aij;
                }
            }
        }
        let cap = 50_000 + 200 * (self.a.len() + w);
        for _ in 0..cap {
            // Bland: lowest-index improving column.
            let Some(enter) = (0..allowed).find(|&j| d[j] > PIVOT_TOL) else {
                return Ok(Some(-d[w]));
            };
            // Ratio test, ties broken by lowest basic index.
            let mut leave: Option<(usize, f64)> = None;
            for (i, row) in self.a.iter().enumerate() {
                let aij = row[enter];
                if aij > PIVOT_TOL {
                    let ratio = row[w] / aij;
                    leave = match leave {
                        None => Some((i, ratio)),
                        Some((k, r)) => {
                            if ratio < r - 1e-12 || (ratio <= r + 1e-12 && self.basis[i] < self.basis[k]) {
                                Some((i, ratio))
                            } else {
                                Some((k, r))
                            }
                        }
                    };
                }
            }
            let Some((r, _)) = leave else {
                return Ok(None);
            };
            self.pivot(r, enter, &mut d);
        }
        Err(Error::Numeric(format!("simplex exceeded {cap} pivots")))
    }

    fn pivot(&mut self, r: usize, c: usize, d: &mut [f64]) {
        let p = self.a[r][c];
        self.a[r].iter_mut().for_each(|v| *v /= p);
        let prow = self.a[r].clone();
        for (i, row) in self.a.iter_mut().enumerate() {
            if i != r {
                eliminate(row, &prow, c);
            }
        }
        eliminate(d, &prow, c);
        self.basis[r] = c;
    }

    /// Pivots zero-level artificials out of the basis; drops redundant rows.
    fn evict_artificials(&mut self) {
        let mut i = 0;
        while i < self.a.len() {
            if self.basis[i] >= self.first_artificial {
                let col = (0..self.first_artificial).find(|&j| self.a[i][j].abs() > PIVOT_TOL);
                match col {
                    Some(j) => {
                        let mut dummy = vec![0.0; self.width + 1];
                        self.pivot(i, j, &mut dummy);
                    }
                    None => {
                        self.a.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }
}

fn eliminate(row: &mut [f64], prow: &[f64], c: usize) {
    let f = row[c];
    if f == 0.0 {
        return;
    }
    for (v, p) in row.iter_mut().zip(prow) {
        *v -= f * p;
        if v.abs() < 1e-14 {
            *v = 0.0;
        }
    }
    row[c] = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_variable() {
        let mut lp = LinearProgram::new(Sense::Max);
        let x = lp.add_var(1.0, 0.0, f64::INFINITY);
        lp.add_constraint(vec![(x, 1.0)], Relation::Le, 3.0);
        let (sol, v) = lp.solve().unwrap().optimal().unwrap();
        assert!((sol[0] - 3.0).abs() < 1e-12 && (v - 3.0).abs() < 1e-12);
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(Sense::Max);
        let x = lp.add_var(1.0, 0.0, f64::INFINITY);
        lp.add_constraint(vec![(x, 1.0)], Relation::Ge, 5.0);
        assert_eq!(lp.solve().unwrap(), Outcome::Unbounded);
        lp.add_constraint(vec![(x, 1.0)], Relation::Le, 4.0);
        assert_eq!(lp.solve().unwrap(), Outcome::Infeasible);
    }

    #[test]
    fn free_and_negative_bounds() {
        // min x + y with x free, y ≤ −1, x − y ≥ 2, x ≥ −10 via a row.
        let mut lp = LinearProgram::new(Sense::Min);
        let x = lp.add_var(1.0, f64::NEG_INFINITY, f64::INFINITY);
        let y = lp.add_var(1.0, f64::NEG_INFINITY, -1.0);
        lp.add_constraint(vec![(x, 1.0), (y, -1.0)], Relation::Ge, 2.0);
        lp.add_constraint(vec![(x, 1.0)], Relation::Ge, -10.0);
        lp.add_constraint(vec![(y, 1.0)], Relation::Ge, -6.0);
        let (sol, v) = lp.solve().unwrap().optimal().unwrap();
        assert!((v + 10.0).abs() < 1e-9, "{v} {sol:?}");
    }

    #[test]
    fn equality_and_redundant_rows() {
        let mut lp = LinearProgram::new(Sense::Max);
        let x = lp.add_var(1.0, 0.0, 1.0);
        let y = lp.add_var(2.0, 0.0, 1.0);
        lp.add_constraint(vec![(x, 1.0), (y, 1.0)], Relation::Eq, 1.0);
        lp.add_constraint(vec![(x, 2.0), (y, 2.0)], Relation::Eq, 2.0);
        let (sol, v) = lp.solve().unwrap().optimal().unwrap();
        assert!((v - 2.0).abs() < 1e-12);
        assert!((sol[1] - 1.0).abs() < 1e-12);
    }
}
