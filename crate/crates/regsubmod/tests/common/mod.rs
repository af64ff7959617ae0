//! Seeded instance families shared by the integration suites.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regsubmod::bench::{random_cut, random_dicut, EllDist, WeightDist};
use regsubmod::setfn::{full_mask, CoverItem};
use regsubmod::{Instance, LinearFn, SubmodularFn};

/// Cycles through directed cuts, undirected cuts and weighted coverage so
/// every suite sees more than one representation.
pub fn mixed_instance(seed: u64, n: usize, ell: EllDist) -> Instance {
    let w = WeightDist::Uniform(0.0, 1.0);
    match seed % 3 {
        0 => random_dicut(n, 0.4, w, ell, seed).unwrap(),
        1 => random_cut(n, 0.4, w, ell, seed).unwrap(),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let items = (0..2 * n).map(|_| CoverItem { covered_by: rng.gen_range(1..=full_mask(n)), w: rng.gen() }).collect();
            let f = SubmodularFn::coverage(n, items).unwrap();
            let base = random_dicut(n, 0.0, w, ell, seed).unwrap();
            Instance::unconstrained(f, LinearFn::new(base.ell.weights).unwrap()).unwrap()
        }
    }
}

/// `max_S [α·f(S) + β·ℓ(S)]` over feasible sets.
pub fn best(inst: &Instance, alpha: f64, beta: f64) -> f64 {
    regsubmod::bench::brute_force_opt(inst, alpha, beta).unwrap().1
}
