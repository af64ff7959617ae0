//! Guarantee LPs: each algorithm run contributes a point whose coordinates
//! bound the returned value in some basis of quantities; the best `α` for a
//! given `β` is the largest first coordinate over convex combinations that
//! satisfy the basis-specific side constraints.

use crate::error::{Error, Result};
use crate::lp::{LinearProgram, Outcome, Relation, Sense};

/// Coordinate bases of the guarantee LPs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// `[f(OPT), F(z∧1_OPT), F(z∨1_OPT), L(OPT)]`.
    NonPositive,
    /// `[f(OPT), F(z∧1_OPT), F(z∨1_OPT), L+(OPT∖z), L+(OPT∧z)]`.
    NonNegative,
    /// The non-negative basis plus `[L−(OPT∖z), L−(OPT∧z)]`.
    Mixed,
    /// `[f(OPT), ℓ(OPT), ℓ(N)]`.
    Combination,
}

impl Basis {
    pub fn dim(self) -> usize {
        match self {
            Basis::NonPositive => 4,
            Basis::NonNegative => 5,
            Basis::Mixed => 7,
            Basis::Combination => 3,
        }
    }

    pub fn labels(self) -> &'static [&'static str] {
        match self {
            Basis::NonPositive => &["f(OPT)", "F(z^OPT)", "F(zvOPT)", "L(OPT)"],
            Basis::NonNegative => &["f(OPT)", "F(z^OPT)", "F(zvOPT)", "L+(OPT-z)", "L+(OPT^z)"],
            Basis::Mixed => &["f(OPT)", "F(z^OPT)", "F(zvOPT)", "L+(OPT-z)", "L+(OPT^z)", "L-(OPT-z)", "L-(OPT^z)"],
            Basis::Combination => &["f(OPT)", "l(OPT)", "l(N)"],
        }
    }
}

/// Where a hull point came from.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    EmptySet,
    LocalSearch1,
    LocalSearch2,
    Aided { t_s: f64, t_f: f64 },
    DoubleGreedy { r: f64 },
    NonPositiveRow { beta: f64 },
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::EmptySet => write!(f, "empty"),
            Provenance::LocalSearch1 => write!(f, "local1"),
            Provenance::LocalSearch2 => write!(f, "local2"),
            Provenance::Aided { t_s, t_f } => write!(f, "aided(ts={t_s:.3};tf={t_f:.3})"),
            Provenance::DoubleGreedy { r } => write!(f, "dg(r={r:.2})"),
            Provenance::NonPositiveRow { beta } => write!(f, "nonpos(beta={beta:.2})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GuaranteePoint {
    pub basis: Basis,
    pub coords: Vec<f64>,
    pub provenance: Provenance,
}

impl GuaranteePoint {
    pub fn new(basis: Basis, coords: Vec<f64>, provenance: Provenance) -> Result<Self> {
        if coords.len() != basis.dim() {
            return Err(Error::Structural(format!("{basis:?} points have {} coordinates, got {}", basis.dim(), coords.len())));
        }
        Ok(Self { basis, coords, provenance })
    }
}

/// A linear side constraint `Σ c_i x_i (rel) rhs` on the hull point.
#[derive(Debug, Clone, PartialEq)]
pub struct SideConstraint {
    pub coeffs: Vec<(usize, f64)>,
    pub rel: Relation,
    pub rhs: f64,
}

impl SideConstraint {
    pub fn ge(i: usize, rhs: f64) -> Self {
        Self { coeffs: vec![(i, 1.0)], rel: Relation::Ge, rhs }
    }

    pub fn le(i: usize, rhs: f64) -> Self {
        Self { coeffs: vec![(i, 1.0)], rel: Relation::Le, rhs }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GuaranteeSolution {
    pub alpha: f64,
    /// The optimal hull point.
    pub x: Vec<f64>,
    /// Non-zero combination weights as `(point index, λ)`.
    pub weights: Vec<(usize, f64)>,
}

fn check_order(t_s: f64, t_f: f64) -> Result<()> {
    if !(0.0 <= t_s && t_s <= t_f) {
        return Err(Error::Contract(format!("need 0 ≤ t_s ≤ t_f, got ({t_s}, {t_f})")));
    }
    Ok(())
}

/// Aided measured continuous greedy: coefficients of `f(OPT)`,
/// `F(z∧1_OPT)`, `F(z∨1_OPT)` in `e^{−t_f}∫ e^t G(t) dt`, plus `t_f` for
/// `L(OPT)`.
pub fn aided_coeffs(t_s: f64, t_f: f64) -> Result<[f64; 4]> {
    check_order(t_s, t_f)?;
    let (a, b) = ((t_s - t_f).exp(), (-t_f).exp());
    Ok([a * (1.0 + t_f - t_s) - b, b - a, b * (1.0 + t_f) - a * (1.0 + t_f - t_s), t_f])
}

/// The distorted aided run for non-negative ℓ: `f` coefficients as above,
/// then `(1−e^{−t_f}, 1−e^{t_s−t_f})` for `L+(OPT∖z)` and `L+(OPT∧z)`.
pub fn distorted_aided_coeffs(t_s: f64, t_f: f64) -> Result<[f64; 5]> {
    if t_f > 1.0 {
        return Err(Error::Contract("distorted aided runs need t_f ≤ 1".into()));
    }
    let c = aided_coeffs(t_s, t_f)?;
    Ok([c[0], c[1], c[2], 1.0 - (-t_f).exp(), 1.0 - (t_s - t_f).exp()])
}

/// The mixed-sign variant, appending `(t_f, t_f − t_s)` for the `L−` terms.
pub fn distorted_aided_coeffs7(t_s: f64, t_f: f64) -> Result<[f64; 7]> {
    let c = distorted_aided_coeffs(t_s, t_f)?;
    Ok([c[0], c[1], c[2], c[3], c[4], t_f, t_f - t_s])
}

/// The three `f`-side coefficients by composite Simpson quadrature of
/// `e^{−t_f}∫_0^{t_f} e^t·G(t) dt`, where `G` is the aided growth bound.
/// Used to cross-check the closed form.
pub fn aided_coeffs_quadrature(t_s: f64, t_f: f64, intervals: usize) -> Result<[f64; 3]> {
    check_order(t_s, t_f)?;
    // Coefficients of (f(OPT), f(OPT∩Z), f(OPT∪Z)) inside the integrand.
    let early = |t: f64| [t.exp(), -t.exp(), -(t.exp() - 1.0)];
    let late = |_t: f64| [t_s.exp(), 0.0, -(t_s.exp() - 1.0)];
    fn simpson(g: impl Fn(f64) -> [f64; 3], a: f64, b: f64, m: usize) -> [f64; 3] {
        let m = m + m % 2;
        let h = (b - a) / m as f64;
        let mut acc = [0.0; 3];
        for i in 0..=m {
            let w = if i == 0 || i == m { 1.0 } else if i % 2 == 1 { 4.0 } else { 2.0 };
            let v = g(a + i as f64 * h);
            for j in 0..3 {
                acc[j] += w * v[j];
            }
        }
        acc.map(|s| s * h / 3.0)
    }
    let (x, y) = (simpson(early, 0.0, t_s, intervals), simpson(late, t_s, t_f, intervals));
    let scale = (-t_f).exp();
    Ok([scale * (x[0] + y[0]), scale * (x[1] + y[1]), scale * (x[2] + y[2])])
}

/// Maximizes the first coordinate over convex combinations of `points`
/// subject to `side`.
pub fn solve_guarantee_lp(points: &[GuaranteePoint], side: &[SideConstraint]) -> Result<GuaranteeSolution> {
    let Some(first) = points.first() else {
        return Err(Error::Contract("the hull needs at least one point".into()));
    };
    let basis = first.basis;
    if points.iter().any(|p| p.basis != basis) {
        return Err(Error::Structural("hull points mix bases".into()));
    }
    let d = basis.dim();
    if side.iter().flat_map(|s| &s.coeffs).any(|&(i, _)| i >= d) {
        return Err(Error::Structural("side constraint refers to a missing coordinate".into()));
    }
    let mut lp = LinearProgram::new(Sense::Max);
    let vars: Vec<usize> = points.iter().map(|p| lp.add_var(p.coords[0], 0.0, f64::INFINITY)).collect();
    lp.add_constraint(vars.iter().map(|&v| (v, 1.0)).collect(), Relation::Eq, 1.0);
    for s in side {
        let row = points
            .iter()
            .zip(&vars)
            .map(|(p, &v)| (v, s.coeffs.iter().map(|&(i, c)| c * p.coords[i]).sum::<f64>()))
            .filter(|&(_, c)| c != 0.0)
            .collect();
        lp.add_constraint(row, s.rel, s.rhs);
    }
    match lp.solve()? {
        Outcome::Optimal { x: lam, value } => {
            let mut x = vec![0.0; d];
            let mut weights = Vec::new();
            for (i, (&l, p)) in lam.iter().zip(points).enumerate() {
                if l > 1e-12 {
                    weights.push((i, l));
                    for j in 0..d {
                        x[j] += l * p.coords[j];
                    }
                }
            }
            weights.sort_by(|a, b| b.1.total_cmp(&a.1));
            Ok(GuaranteeSolution { alpha: value, x, weights })
        }
        Outcome::Infeasible => Err(Error::Infeasible("β is outside the achievable range of this hull".into())),
        Outcome::Unbounded => Err(Error::Numeric("guarantee LP reported unbounded over a simplex".into())),
    }
}

fn point(basis: Basis, coords: &[f64], provenance: Provenance) -> GuaranteePoint {
    GuaranteePoint { basis, coords: coords.to_vec(), provenance }
}

/// Empty set plus the two local-search inequalities.
pub fn nonpos_anchors() -> Vec<GuaranteePoint> {
    vec![
        point(Basis::NonPositive, &[0.0, 0.0, 0.0, 0.0], Provenance::EmptySet),
        point(Basis::NonPositive, &[0.0, 0.5, 0.5, 1.0], Provenance::LocalSearch1),
        point(Basis::NonPositive, &[0.0, 1.0, 0.0, 1.0], Provenance::LocalSearch2),
    ]
}

/// Anchors plus one aided point per `(t_s, t_f)` pair.
pub fn nonpos_points(pairs: &[(f64, f64)]) -> Result<Vec<GuaranteePoint>> {
    let mut pts = nonpos_anchors();
    for &(t_s, t_f) in pairs {
        pts.push(point(Basis::NonPositive, &aided_coeffs(t_s, t_f)?, Provenance::Aided { t_s, t_f }));
    }
    Ok(pts)
}

pub fn nonpos_side(beta: f64) -> Vec<SideConstraint> {
    vec![SideConstraint::ge(1, 0.0), SideConstraint::ge(2, 0.0), SideConstraint::le(3, beta)]
}

/// `α(β)` for non-positive ℓ with the pair grid `t_s ≤ t_f ≤ 2`, step 1/20.
pub fn alpha_nonpos(beta: f64) -> Result<GuaranteeSolution> {
    let pts = nonpos_points(&crate::contgreedy::nonpos_pairs(2.0))?;
    solve_guarantee_lp(&pts, &nonpos_side(beta))
}

/// `α(β)` for non-negative ℓ under a matroid with pairs `(0.1x, 1)`.
pub fn alpha_nonneg_csm(beta: f64) -> Result<GuaranteeSolution> {
    let b = Basis::NonNegative;
    let mut pts = vec![
        point(b, &[0.0, 0.0, 0.0, 1.0, 1.0], Provenance::EmptySet),
        point(b, &[0.0, 0.5, 0.5, 0.5, 1.0], Provenance::LocalSearch1),
        point(b, &[0.0, 1.0, 0.0, 0.0, 1.0], Provenance::LocalSearch2),
    ];
    for (t_s, t_f) in crate::contgreedy::nonneg_csm_pairs() {
        pts.push(point(b, &distorted_aided_coeffs(t_s, t_f)?, Provenance::Aided { t_s, t_f }));
    }
    let side = vec![SideConstraint::ge(1, 0.0), SideConstraint::ge(2, 0.0), SideConstraint::ge(3, beta), SideConstraint::ge(4, beta)];
    solve_guarantee_lp(&pts, &side)
}

/// `α(β)` for mixed-sign ℓ under a matroid with the single pair
/// `(0.205, 0.955)` (or any pairs given).
pub fn alpha_mixed(beta: f64, pairs: &[(f64, f64)]) -> Result<GuaranteeSolution> {
    let b = Basis::Mixed;
    // The first anchor is the linear optimum, which also covers the empty set.
    let mut pts = vec![
        point(b, &[0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0], Provenance::EmptySet),
        point(b, &[0.0, 0.5, 0.5, 0.5, 1.0, 1.0, 1.0], Provenance::LocalSearch1),
        point(b, &[0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0], Provenance::LocalSearch2),
    ];
    for &(t_s, t_f) in pairs {
        pts.push(point(b, &distorted_aided_coeffs7(t_s, t_f)?, Provenance::Aided { t_s, t_f }));
    }
    let side = vec![
        SideConstraint::ge(1, 0.0),
        SideConstraint::ge(2, 0.0),
        SideConstraint::ge(3, beta),
        SideConstraint::ge(4, beta),
        SideConstraint::le(5, beta),
        SideConstraint::le(6, beta),
    ];
    solve_guarantee_lp(&pts, &side)
}

/// `ℛ = {1 + 0.1j : 0 ≤ j ≤ 90}`.
pub fn default_r_grid() -> Vec<f64> {
    (0..=90).map(|j| 1.0 + 0.1 * j as f64).collect()
}

/// Randomized double greedy at parameter `r²`, written in the
/// `[f(OPT), ℓ(OPT), ℓ(N)]` basis: `(2, 2, r²)/(r + 1/r)²`.
pub fn dg_hull_points(r_grid: &[f64]) -> Result<Vec<GuaranteePoint>> {
    r_grid
        .iter()
        .map(|&r| {
            if !(r >= 1.0) {
                return Err(Error::Contract(format!("r must be ≥ 1, got {r}")));
            }
            let d = (r + 1.0 / r).powi(2);
            Ok(point(Basis::Combination, &[2.0 / d, 2.0 / d, r * r / d], Provenance::DoubleGreedy { r }))
        })
        .collect()
}

/// Non-positive rows `(α(β′), β′, 1 − β′)` for `β′ = 1 + 0.01x`, `0 ≤ x ≤ 30`.
pub fn nonpos_row_points() -> Result<Vec<GuaranteePoint>> {
    let pts = nonpos_points(&crate::contgreedy::nonpos_pairs(2.0))?;
    (0..=30)
        .map(|x| {
            let bp = 1.0 + 0.01 * x as f64;
            let a = solve_guarantee_lp(&pts, &nonpos_side(bp))?.alpha;
            Ok(point(Basis::Combination, &[a, bp, 1.0 - bp], Provenance::NonPositiveRow { beta: bp }))
        })
        .collect()
}

pub fn comb_side(beta: f64) -> Vec<SideConstraint> {
    vec![SideConstraint { coeffs: vec![(1, 1.0), (2, 1.0)], rel: Relation::Ge, rhs: beta }, SideConstraint::ge(2, 0.0)]
}

/// `α(β)` for non-negative ℓ without constraints, combining double greedy
/// with the complemented non-positive algorithm.
pub fn alpha_comb(beta: f64) -> Result<GuaranteeSolution> {
    let mut pts = dg_hull_points(&default_r_grid())?;
    pts.extend(nonpos_row_points()?);
    solve_guarantee_lp(&pts, &comb_side(beta))
}

/// Readable summary of the heaviest points in a solution.
pub fn witness(points: &[GuaranteePoint], sol: &GuaranteeSolution) -> String {
    sol.weights.iter().map(|&(i, l)| format!("{:.4}*{}", l, points[i].provenance)).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_examples() {
        let c = aided_coeffs(0.372, 1.0).unwrap();
        assert!((c[0] - ((-0.628f64).exp() * 1.628 - (-1f64).exp())).abs() < 1e-12);
        assert!((c[0] - 0.5010).abs() < 5e-4);
        assert_eq!(aided_coeffs(0.0, 0.0).unwrap(), [0.0; 4]);
        let e = (-1f64).exp();
        let c = aided_coeffs(0.0, 1.0).unwrap();
        assert!((c[0] - e).abs() < 1e-15 && c[1] == 0.0 && c[2].abs() < 1e-15 && c[3] == 1.0);
        assert!(aided_coeffs(0.5, 0.4).is_err());
    }

    #[test]
    fn distorted_coefficients() {
        let c = distorted_aided_coeffs(0.0, 0.6).unwrap();
        assert_eq!(c[3], c[4]);
        let c = distorted_aided_coeffs(1.0, 1.0).unwrap();
        assert!((c[3] - (1.0 - (-1f64).exp())).abs() < 1e-15 && c[4] == 0.0);
        let c = distorted_aided_coeffs7(0.205, 0.955).unwrap();
        assert!((c[5] - 0.955).abs() < 1e-15 && (c[6] - 0.75).abs() < 1e-12);
    }

    #[test]
    fn merged_listing_reconciles() {
        // The three-term listing's first entry merges the first two
        // coefficients; its second entry is the third coefficient.
        for &(ts, tf) in &[(0.1, 0.5), (0.35, 1.0), (1.0, 1.7)] {
            let (a, b) = (f64::exp(ts - tf), f64::exp(-tf));
            let first = a + tf * a - ts * a - b - a + b;
            let second = -a - tf * a + ts * a + b + tf * b;
            let c = aided_coeffs(ts, tf).unwrap();
            assert!((first - (c[0] + c[1])).abs() < 1e-14);
            assert!((second - c[2]).abs() < 1e-14);
        }
    }

    #[test]
    fn anchors_alone_give_zero() {
        let sol = solve_guarantee_lp(&nonpos_anchors(), &nonpos_side(0.0)).unwrap();
        assert_eq!(sol.alpha, 0.0);
        assert_eq!(sol.x, vec![0.0; 4]);
    }

    #[test]
    fn dg_points() {
        let p = dg_hull_points(&[1.0, 1e6]).unwrap();
        assert_eq!(p[0].coords, vec![0.5, 0.5, 0.25]);
        assert!(p[1].coords[0] < 1e-11 && (p[1].coords[2] - 1.0).abs() < 1e-11);
        assert!(dg_hull_points(&[0.5]).is_err());
    }
}
