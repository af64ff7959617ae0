mod common;

use common::{best, mixed_instance};
use proptest::prelude::*;
use regsubmod::bench::{random_dicut, random_matroid, with_constraint, EllDist, WeightDist};
use regsubmod::contgreedy::*;
use regsubmod::matroid::trivial_approx;
use regsubmod::setfn::{full_mask, indicator, point};
use regsubmod::{Instance, LinearFn, Matroid, Polytope, SubmodularFn};

const INV_E: f64 = 0.36787944117144233;

fn exact(t_f: f64, steps: usize) -> CgConfig {
    CgConfig { steps, marginal: MarginalMode::Exact, ..CgConfig::new(t_f) }
}

fn fl(inst: &Instance, x: &[f64]) -> f64 {
    inst.f.multilinear(x).unwrap() + inst.ell.dot(x)
}

fn matroid_instance(seed: u64, n: usize, ell: EllDist) -> Instance {
    let base = mixed_instance(seed, n, ell);
    let k = 1 + (seed as usize) % (n - 1);
    with_constraint(base, Matroid::uniform(n, k).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn trajectory_shape(seed in any::<u64>(), n in 3usize..8, t_f in 0.2..2.0f64) {
        let inst = matroid_instance(seed, n, EllDist::Mixed(0.5));
        let p = if t_f > 1.0 { Polytope::cube(n) } else { inst.polytope() };
        let cfg = exact(t_f, 40);
        let delta = cfg.delta();
        let traj = measured_cg_trajectory(&inst.f, Some(&inst.ell), true, &p, &cfg).unwrap();
        prop_assert_eq!(traj.len(), 41);
        for (i, w) in traj.windows(2).enumerate() {
            prop_assert!(w[1].iter().zip(&w[0]).all(|(b, a)| b >= a));
            let t = (i + 1) as f64 * delta;
            let cap = 1.0 - (1.0 - delta).powi(i as i32 + 1);
            prop_assert!(w[1].iter().all(|&v| v <= cap + 1e-12));
            let scaled: Vec<f64> = w[1].iter().map(|v| v / t).collect();
            prop_assert!(p.contains_point(&scaled, 1e-7).unwrap());
        }
    }

    #[test]
    fn zero_ell_distortion_is_invisible(seed in any::<u64>(), n in 3usize..8) {
        let inst = matroid_instance(seed, n, EllDist::Zero);
        let p = inst.polytope();
        let a = measured_cg(&inst.f, None, &p, &exact(1.0, 50)).unwrap();
        let b = distorted_measured_cg(&inst.f, &LinearFn::zero(n), &p, &exact(1.0, 50)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn local_search_is_locally_optimal(seed in any::<u64>(), n in 3usize..8) {
        let inst = random_dicut(n, 0.5, WeightDist::Uniform(0.0, 1.0), EllDist::Zero, seed).unwrap();
        let cfg = LocalSearchConfig { marginal: MarginalMode::Exact, ..Default::default() };
        let res = local_search(&inst.f, None, &Polytope::cube(n), &cfg).unwrap();
        prop_assert!(!res.hit_cap);
        let opt = best(&inst, 1.0, 0.0);
        let fz = inst.f.multilinear(&res.z).unwrap();
        for s in 0..=full_mask(n) {
            let one = indicator(n, s);
            let lo = inst.f.multilinear(&point::meet(&res.z, &one)).unwrap();
            let hi = inst.f.multilinear(&point::join(&res.z, &one)).unwrap();
            prop_assert!(fz >= 0.5 * lo + 0.5 * hi - 0.05 * opt);
            prop_assert!(fz >= lo - 0.05 * opt);
        }
    }

    #[test]
    fn guess_grid_brackets_every_subset(w in prop::collection::vec(-3.0..0.0f64, 1..9), eps in 0.05..1.0f64) {
        let ell = LinearFn::new(w).unwrap();
        let grid = guess_ell_values(&ell, eps, GuessMode::Nonpositive).unwrap();
        for s in 0..=full_mask(ell.n()) {
            let v = ell.eval(s);
            prop_assert!(grid.iter().any(|&g| v >= g - 1e-12 && g >= (1.0 + eps) * v - 1e-12), "no guess for {}", v);
        }
    }

    #[test]
    fn trivial_approx_is_the_linear_optimum(seed in any::<u64>(), n in 2usize..9) {
        let m = random_matroid(n, seed).unwrap();
        let inst = with_constraint(random_dicut(n, 0.0, WeightDist::Unit, EllDist::Mixed(1.0), seed).unwrap(), m.clone()).unwrap();
        let s = trivial_approx(&inst.ell, &Polytope::matroid(m.clone()));
        prop_assert!(m.is_independent(s));
        prop_assert!((inst.ell.eval(s) - best(&inst, 0.0, 1.0)).abs() < 1e-12);
    }
}

#[test]
fn measured_cg_reaches_one_over_e() {
    for seed in 0..20 {
        let inst = random_dicut(8, 0.4, WeightDist::Uniform(0.0, 1.0), EllDist::Zero, seed).unwrap();
        let y = measured_cg(&inst.f, None, &Polytope::cube(8), &exact(1.0, 200)).unwrap();
        assert!(inst.f.multilinear(&y).unwrap() >= (INV_E - 0.03) * best(&inst, 1.0, 0.0));
    }
}

#[test]
fn distorted_guarantees_at_one() {
    for seed in 0..20 {
        for (ed, beta) in [(EllDist::NonPositive(0.5), 1.0), (EllDist::NonNegative(0.5), 1.0 - INV_E)] {
            let inst = matroid_instance(seed, 8, ed);
            let y = distorted_measured_cg(&inst.f, &inst.ell, &inst.polytope(), &exact(1.0, 200)).unwrap();
            assert!(fl(&inst, &y) >= best(&inst, INV_E - 0.03, beta), "seed {seed}");
        }
    }
}

#[test]
fn aided_bound_for_integral_z() {
    let ts: f64 = 0.372;
    let c = (ts - 1.0).exp();
    for seed in 0..12 {
        let inst = random_dicut(7, 0.5, WeightDist::Uniform(0.0, 1.0), EllDist::Zero, seed).unwrap();
        let (opt, fopt) = regsubmod::bench::brute_force_opt(&inst, 1.0, 0.0).unwrap();
        for z in [0u64, 0b1010101, 0b0001111, seed & 0x7f] {
            let y = aided_mcg_with_set(&inst.f, None, z, &Polytope::cube(7), &CgConfig { marginal: MarginalMode::Exact, ..CgConfig::aided(ts, 1.0) })
                .unwrap();
            let bound = c
                * ((2.0 - ts - (-ts).exp() - 0.03) * fopt
                    - (1.0 - (-ts).exp()) * inst.f.eval(z & opt)
                    - (2.0 - ts - 2.0 * (-ts).exp()) * inst.f.eval(z | opt));
            assert!(inst.f.multilinear(&y).unwrap() >= bound, "seed {seed} z {z:b}");
        }
    }
}

#[test]
fn aided_boundaries() {
    let inst = random_dicut(6, 0.5, WeightDist::Uniform(0.0, 1.0), EllDist::Zero, 2).unwrap();
    let p = Polytope::cube(6);
    let plain = measured_cg(&inst.f, None, &p, &exact(1.0, 50)).unwrap();
    let aided = aided_mcg_with_set(&inst.f, None, 0b110011, &p, &CgConfig { t_s: 0.0, ..exact(1.0, 50) }).unwrap();
    assert_eq!(plain, aided);
    let all_out = aided_mcg_with_set(&inst.f, None, 0b110011, &p, &CgConfig { t_s: 1.0, ..exact(1.0, 50) }).unwrap();
    assert!(all_out.iter().enumerate().all(|(u, &v)| 0b110011 >> u & 1 == 0 || v == 0.0));
    assert!(aided_mcg(&inst.f, None, &[1.0; 6], &Polytope::matroid(Matroid::uniform(6, 2).unwrap()), &exact(1.0, 10)).is_err());
}

#[test]
fn pipelines_on_degenerate_inputs() {
    let n = 6;
    let zero = SubmodularFn::zero(n).unwrap();
    let neg = LinearFn::new(vec![-0.3; n]).unwrap();
    let cfg = PipelineConfig { grid: GuessGrid::Geometric, ..Default::default() };
    let r = pipeline_nonpos(&zero, &neg, &Polytope::cube(n), &cfg).unwrap();
    assert_eq!((r.set, r.value), (0, 0.0));

    let pos = LinearFn::new(vec![0.5, 0.1, 0.9, 0.0, 0.3, 0.7]).unwrap();
    let m = Polytope::matroid(Matroid::uniform(n, 2).unwrap());
    let r = pipeline_nonneg_csm(&zero, &pos, &m, &cfg).unwrap();
    assert!((r.value - 1.6).abs() < 1e-12);
    let r = pipeline_nonneg_usm_beta1(&zero, &pos, &cfg).unwrap();
    assert!((r.value - 2.5).abs() < 1e-12);
    assert!(pipeline_unconstrained(&zero, &pos, &m, 1.5, &cfg).is_err());
    assert!(pipeline_nonpos(&zero, &pos, &m, &cfg).is_err());
}

#[test]
fn pipeline_0280_matches_csm_when_ell_is_nonnegative() {
    for seed in 0..5 {
        let inst = matroid_instance(seed, 7, EllDist::NonNegative(0.5));
        let cfg = PipelineConfig { pairs: Some(nonneg_csm_pairs()), seed, ..Default::default() };
        let a = pipeline_0280(&inst.f, &inst.ell, &inst.polytope(), &cfg).unwrap();
        let b = pipeline_nonneg_csm(&inst.f, &inst.ell, &inst.polytope(), &cfg).unwrap();
        assert_eq!((a.set, a.value), (b.set, b.value));
    }
}

#[test]
fn pipeline_f_only_bounds() {
    let cfg = PipelineConfig { grid: GuessGrid::Geometric, ..Default::default() };
    for seed in 0..8 {
        let inst = mixed_instance(seed, 7, EllDist::Zero);
        let r = pipeline_nonpos(&inst.f, &inst.ell, &Polytope::cube(7), &cfg).unwrap();
        assert!(r.value >= 0.37 * best(&inst, 1.0, 0.0));
        let m = matroid_instance(seed, 7, EllDist::Zero);
        let r = pipeline_nonneg_csm(&m.f, &m.ell, &m.polytope(), &cfg).unwrap();
        assert!(r.value >= 0.35 * best(&m, 1.0, 0.0));
    }
}

#[test]
fn nonneg_unconstrained_beta_one() {
    let cfg = PipelineConfig { grid: GuessGrid::Geometric, ..Default::default() };
    for seed in 0..10 {
        let inst = mixed_instance(seed, 7, EllDist::NonNegative(0.5));
        let r = pipeline_nonneg_usm_beta1(&inst.f, &inst.ell, &cfg).unwrap();
        assert!((inst.value(r.set) - r.value).abs() < 1e-12);
        assert!(r.value >= best(&inst, 0.35, 1.0), "seed {seed}");
    }
}

#[test]
fn sampled_marginals_still_work() {
    let inst = random_dicut(8, 0.4, WeightDist::Uniform(0.0, 1.0), EllDist::Zero, 1).unwrap();
    let cfg = CgConfig { marginal: MarginalMode::Sampled(500), seed: 3, ..CgConfig::new(1.0) };
    let y = measured_cg(&inst.f, None, &Polytope::cube(8), &cfg).unwrap();
    assert!(inst.f.multilinear(&y).unwrap() >= (INV_E - 0.05) * best(&inst, 1.0, 0.0));
}
