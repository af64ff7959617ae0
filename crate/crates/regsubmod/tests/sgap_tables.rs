use regsubmod::bench::gharan_vondrak;
use regsubmod::setfn::full_mask;
use regsubmod::sgap::*;

/// Point of the concrete instance where `a, b` get `q` and every tail copy
/// gets `p/k`.
fn symmetric_point(k: usize, q: f64, p: f64) -> Vec<f64> {
    let mut x = vec![p / k as f64; 2 + 2 * k];
    x[0] = q;
    x[1] = q;
    x
}

#[test]
fn nonpositive_table_rows() {
    // (β, α, κ, ℓ_p, ℓ_q)
    let rows = [(0.1, 0.0935, 0.6705, -0.6095, -0.2680), (0.6, 0.3846, 0.6388, -0.34, 0.0), (1.0, 0.4773, 0.3515, -0.1294, 0.0)];
    let params = SgapParams::new(SignMode::NonPositive);
    let mut prev = 0.0;
    for (beta, alpha, kappa, lp, lq) in rows {
        let t = std::time::Instant::now();
        let r = outer_min(beta, &params).unwrap();
        assert!(t.elapsed().as_secs() < 120);
        assert!((r.alpha - alpha).abs() <= 2e-3, "β={beta}: {r:?}");
        assert!((r.kappa - kappa).abs() <= 0.01 && (r.ell_p - lp).abs() <= 0.01 && (r.ell_q - lq).abs() <= 0.01, "β={beta}: {r:?}");
        assert!(r.alpha >= prev);
        prev = r.alpha;
    }
}

#[test]
fn unconstrained_sign_rows() {
    let free = SgapParams::new(SignMode::Unconstrained);
    for (beta, alpha) in [(0.8, 0.4295), (1.0, 0.4392)] {
        let r = outer_min(beta, &free).unwrap();
        assert!((r.alpha - alpha).abs() <= 2e-3, "β={beta}: {r:?}");
        let signed = outer_min(beta, &SgapParams::new(SignMode::NonPositive)).unwrap();
        assert!(signed.alpha >= r.alpha - 1e-9);
    }
}

#[test]
fn inner_max_at_table_parameters() {
    let m = inner_max(0.3515, -0.1294, 0.0, P_MAX);
    assert!((m.value + 0.1294 - 0.4773).abs() <= 2e-3);
    let m = inner_max(0.5888, -0.18, 0.21, P_MAX);
    assert!((m.value - (-0.18 + 0.21) - 0.4392).abs() <= 2e-3);
    assert!(m.p < P_MAX - 1e-3);
    let classic = inner_max(0.0, 0.0, 0.0, P_MAX);
    assert!((classic.value - 0.5).abs() < 1e-9 && (classic.q - 0.5).abs() < 1e-6);
}

#[test]
fn limits() {
    let (_, sup) = limit_two_ln_two(&default_two_ln_two_schedule()).unwrap();
    assert!(sup >= 1.376 && sup <= 2.0 * std::f64::consts::LN_2 + 1e-9, "{sup}");
    let mid = two_ln_two_point(0.5, 0.01).unwrap();
    assert!(mid.beta > 1.0 && mid.beta <= 2.0 * std::f64::consts::LN_2);

    let (_, low) = limit_sqrt2(&default_sqrt2_schedule()).unwrap();
    assert!(low <= 0.9434 && low >= 2.0 * 2f64.sqrt() / 3.0 - 1e-9, "{low}");
    // At p* = ½ the schedule's ceiling (4 − 2p*)/3 is exactly 1.
    let at_half = sqrt2_point(0.5, 0.01).unwrap();
    assert!(at_half.holds && at_half.beta <= 1.0 + 1e-12 && at_half.beta > 2.0 * 2f64.sqrt() / 3.0, "{at_half:?}");

    let h = hyperedge_0408();
    assert!(h.max_value.abs() < 1e-12 && h.argmax == (0.0, 0.0));
    assert!((h.alpha_bound - 0.4074).abs() < 1e-4);
    let e = (1.0 - (-0.1f64).exp()).powi(2) - 0.2 * ELL_0408;
    assert!(e < 0.0);

    let (v, _, p) = cardinality_0478_check(KAPPA_0478).unwrap();
    assert!(v < 0.478 && v > 0.47, "{v}");
    assert!(p <= 0.5 + 1e-12);
}

#[test]
fn h_is_convex() {
    for kappa in [0.01, 0.1, 0.4] {
        for i in 0..=300 {
            assert!(h_two_ln_two(i as f64 * 0.01, kappa).2 > 0.0);
        }
    }
}

#[test]
fn csm_gap_condition() {
    assert!(!csm_beta1_check(2, 0.5 + 1e-3, 0.5).unwrap());
    let eps = 0.05;
    let first = (2..200).find(|&k| csm_beta1_check(k, eps, 1.0).unwrap()).unwrap();
    assert_eq!(first, 21);
}

#[test]
fn formula_matches_concrete_instance() {
    let kappa = KAPPA_0478;
    for k in 1..=6 {
        let inst = gharan_vondrak(k, 1, kappa).unwrap();
        for qi in 0..=10 {
            for pi in 0..=10 {
                let (q, p) = (qi as f64 / 10.0, k as f64 * pi as f64 / 10.0);
                let exact = inst.f.multilinear(&symmetric_point(k, q, p)).unwrap();
                assert!((fhat(q, p, kappa, Some(k)).unwrap() - exact).abs() < 1e-9, "k={k} q={q} p={p}");
            }
        }
    }
}

#[test]
fn symmetrized_optimum_is_dominated() {
    let kappa = KAPPA_0478;
    for k in 1..=5 {
        let inst = gharan_vondrak(k, 1, kappa).unwrap();
        let opt = (0..=full_mask(inst.n())).filter(|&s| inst.feasible(s)).map(|s| inst.f.eval(s)).fold(0.0, f64::max);
        assert!((opt - 1.0).abs() < 1e-12);
        // Symmetric points of the cardinality-2 polytope: 2q + 2p ≤ 2.
        for qi in 0..=20 {
            for pi in 0..=(20 - qi) {
                let (q, p) = (qi as f64 / 20.0, pi as f64 / 20.0);
                assert!(fhat(q, p, kappa, Some(k)).unwrap() <= opt + 1e-12);
            }
        }
    }
}
