mod common;

use common::{best, mixed_instance};
use proptest::prelude::*;
use regsubmod::bench::{
    dg_rand_bad, dg_rand_bad_expectation, dg_tight_det, dg_tight_rand, dg_tight_rand_expectation, online_bad, random_dicut, EllDist,
    WeightDist,
};
use regsubmod::doublegreedy::*;
use regsubmod::setfn::Edge;
use regsubmod::{Instance, LinearFn, Mask, SubmodularFn};

fn g(inst: &Instance, s: Mask) -> f64 {
    inst.f.eval(s) + inst.ell.eval(s)
}

/// The classic deterministic double greedy, written from scratch as a
/// reference for the `r = 1` case.
fn reference_dg(inst: &Instance) -> Mask {
    let n = inst.n();
    let (mut x, mut y): (Mask, Mask) = (0, (1 << n) - 1);
    for u in 0..n {
        let a = g(inst, x | 1 << u) - g(inst, x);
        let b = g(inst, y & !(1 << u)) - g(inst, y);
        if a >= b {
            x |= 1 << u;
        } else {
            y &= !(1 << u);
        }
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn trace_invariants(seed in any::<u64>(), n in 2usize..9, r in prop::sample::select(vec![1.0, 2.0, 4.0])) {
        let inst = mixed_instance(seed, n, EllDist::Mixed(1.0));
        let order = index_order(n);
        let (s, tr) = deterministic_dg(&inst.f, &inst.ell, r, &order).unwrap();
        let (_, rtr) = randomized_dg(&inst.f, &inst.ell, &order, seed).unwrap();
        for trace in [&tr, &rtr] {
            let (mut px, mut py): (Mask, Mask) = (0, (1 << n) - 1);
            for st in &trace.steps {
                prop_assert!(st.gain_x - st.gain_y >= -1e-9);
                prop_assert!(px & !st.x == 0 && st.x & !st.y == 0 && st.y & !py == 0);
                px = st.x;
                py = st.y;
            }
            prop_assert_eq!(px, py);
        }
        prop_assert_eq!(s, tr.set);
    }

    #[test]
    fn r1_matches_reference(seed in any::<u64>(), n in 2usize..9) {
        let inst = mixed_instance(seed, n, EllDist::Mixed(1.0));
        prop_assert_eq!(deterministic_dg(&inst.f, &inst.ell, 1.0, &index_order(n)).unwrap().0, reference_dg(&inst));
    }

    #[test]
    fn per_step_inequality(seed in any::<u64>(), n in 2usize..8, r in prop::sample::select(vec![1.0, 2.0, 4.0])) {
        let inst = mixed_instance(seed, n, EllDist::NonNegative(1.0));
        let (opt, _) = regsubmod::bench::brute_force_opt(&inst, 1.0, 1.0).unwrap();
        let (_, tr) = deterministic_dg(&inst.f, &inst.ell, r, &index_order(n)).unwrap();
        let (mut px, mut py): (Mask, Mask) = (0, (1 << n) - 1);
        for st in &tr.steps {
            let before = (opt | px) & py;
            let after = (opt | st.x) & st.y;
            let lhs = g(&inst, before) - g(&inst, after);
            let rhs = (g(&inst, st.x) - g(&inst, px)) / r + r * (g(&inst, st.y) - g(&inst, py));
            prop_assert!(lhs <= rhs + 1e-9, "step {}: {} > {}", st.element, lhs, rhs);
            px = st.x;
            py = st.y;
        }
    }

    #[test]
    fn randomized_matches_exact_in_mean(seed in 0u64..1000) {
        let inst = mixed_instance(seed, 6, EllDist::Mixed(0.5));
        let order = index_order(6);
        let exact = exact_dg_expectation(&inst.f, &inst.ell, &order).unwrap();
        let runs = 2000;
        let vals: Vec<f64> = (0..runs).map(|s| g(&inst, randomized_dg(&inst.f, &inst.ell, &order, s).unwrap().0)).collect();
        let mean = vals.iter().sum::<f64>() / runs as f64;
        let var = vals.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (runs - 1) as f64;
        prop_assert!((mean - exact).abs() <= 4.0 * (var / runs as f64).sqrt() + 1e-9);
    }

    #[test]
    fn oblivious_expectation_is_exact(seed in any::<u64>(), beta in 0.0..=1.0f64) {
        let inst = random_dicut(6, 0.5, WeightDist::Uniform(0.0, 1.0), EllDist::Mixed(0.5), seed).unwrap();
        let p = oblivious_probabilities(&inst.f, &inst.ell, beta).unwrap();
        let by_sum: f64 = regsubmod::setfn::subset_probabilities(&p).iter().enumerate().map(|(s, q)| q * g(&inst, s as Mask)).sum();
        prop_assert!((by_sum - oblivious_dicut_expectation(&inst.f, &inst.ell, beta).unwrap()).abs() < 1e-9);
    }
}

#[test]
fn oblivious_trivial_betas() {
    let inst = random_dicut(7, 0.4, WeightDist::Unit, EllDist::Mixed(1.0), 5).unwrap();
    assert_eq!(oblivious_dicut(&inst.f, &inst.ell, 0.0, 1).unwrap(), 0);
    let s = oblivious_dicut(&inst.f, &inst.ell, 1.0, 1).unwrap();
    assert_eq!(s, inst.ell.positive_mask() | (0..7).filter(|&v| inst.ell.weights[v] == 0.0).fold(0, |m, v| m | 1 << v));
    assert!((oblivious_dicut_expectation(&inst.f, &inst.ell, 1.0).unwrap() - g(&inst, s)).abs() < 1e-12);
    let g_ = SubmodularFn::undirected_cut(2, vec![]).unwrap();
    assert!(oblivious_dicut(&g_, &LinearFn::zero(2), 0.5, 0).is_err());
}

#[test]
fn deterministic_instances_have_point_expectation() {
    // ℓ strongly positive on every element: every step keeps with probability 1.
    let inst = mixed_instance(7, 6, EllDist::Zero);
    let ell = LinearFn::new(vec![100.0; 6]).unwrap();
    let e = exact_dg_expectation(&inst.f, &ell, &index_order(6)).unwrap();
    let (s, _) = randomized_dg(&inst.f, &ell, &index_order(6), 3).unwrap();
    assert_eq!(s, 0b111111);
    assert!((e - (inst.f.eval(s) + ell.eval(s))).abs() < 1e-12);
}

#[test]
fn single_edge_trace() {
    let f = SubmodularFn::directed_cut(2, vec![Edge { a: 0, b: 1, w: 1.0 }]).unwrap();
    let (s, tr) = randomized_dg(&f, &LinearFn::zero(2), &[0, 1], 0).unwrap();
    assert_eq!(s, 0b01);
    assert_eq!((tr.steps[0].a, tr.steps[0].b, tr.steps[0].keep_prob), (1.0, 0.0, 1.0));
    assert_eq!(tr.steps[1].keep_prob, 0.0);
}

#[test]
fn bad_arguments() {
    let inst = mixed_instance(0, 4, EllDist::Zero);
    assert!(deterministic_dg(&inst.f, &inst.ell, 0.5, &index_order(4)).is_err());
    assert!(deterministic_dg(&inst.f, &inst.ell, 1.0, &[0, 1, 1, 2]).is_err());
    let big = random_dicut(15, 0.2, WeightDist::Unit, EllDist::Zero, 0).unwrap();
    assert!(matches!(exact_dg_expectation(&big.f, &big.ell, &index_order(15)), Err(regsubmod::Error::Capability(_))));
}

#[test]
fn tight_deterministic_value() {
    for &(r, eps) in &[(1.0, 0.1), (2.0, 0.1), (4.0, 0.02)] {
        let inst = dg_tight_det(r, eps).unwrap();
        let (s, _) = deterministic_dg(&inst.f, &inst.ell, r, &[0, 1]).unwrap();
        assert_eq!(s, 0b01);
        assert!((g(&inst, s) - (r + eps / 2.0)).abs() < 1e-12);
        // OPT = {u_2} has f = 1, ℓ = r.
        assert!((g(&inst, 0b10) - (1.0 + r)).abs() < 1e-12);
    }
}

#[test]
fn star_expectations_agree_with_tree_walk() {
    for n in [5, 9, 12] {
        for r in [1.0, 2.0, 4.0] {
            let t = dg_tight_rand(n, r).unwrap();
            let e = exact_dg_expectation(&t.f, &t.ell, &index_order(n)).unwrap();
            assert!((e - dg_tight_rand_expectation(n, r).unwrap()).abs() < 1e-9);
            let b = dg_rand_bad(n, r).unwrap();
            let e = exact_dg_expectation(&b.f, &b.ell, &index_order(n)).unwrap();
            assert!((e - dg_rand_bad_expectation(n, r).unwrap()).abs() < 1e-9);
        }
    }
}

#[test]
fn online_pair_defeats_both_choices() {
    for alpha in [0.1, 0.5, 1.0] {
        let (keep_loses, drop_loses) = online_bad(alpha).unwrap();
        // Keeping u_1 caps the value at α/2 while {u_2} is worth 1.
        let keep_best = [0b01u64, 0b11].iter().map(|&s| g(&keep_loses, s)).fold(f64::MIN, f64::max);
        assert!(keep_best <= alpha / 2.0 + 1e-12);
        assert!(alpha * keep_loses.f.eval(0b10) > keep_best);
        // Dropping u_1 caps the value at 0 while {u_1} is worth α/2.
        let drop_best = [0b00u64, 0b10].iter().map(|&s| g(&drop_loses, s)).fold(f64::MIN, f64::max);
        assert!(drop_best <= 1e-12);
        assert!(alpha * drop_loses.f.eval(0b01) > drop_best);
        assert!(best(&drop_loses, alpha, 1.0) >= alpha * alpha / 2.0);
    }
}
