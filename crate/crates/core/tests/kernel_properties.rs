use std::sync::Arc;

use proptest::prelude::*;
use rand::Rng;

use dingtri_core::algcore::{Algebra, Side};
use dingtri_core::fuzz::{case_rng, random_matrix, random_module};
use dingtri_core::homalg::{ext_dim, ext_dims, pd, pd_with_cover, Cover, HomDim};
use dingtri_core::linfield::FieldPrime;
use dingtri_core::modrep::{
    dual_module, hom_over, hom_over_left, is_isomorphic, tensor_over, tensor_over_right, IsoVerdict,
};
use dingtri_core::rings;
use dingtri_core::trimat::TriMatRing;

fn field(p: u64) -> FieldPrime {
    FieldPrime::new(p).unwrap()
}

fn small_algebras() -> Vec<Arc<Algebra>> {
    vec![
        rings::dual_numbers(field(2)),
        rings::dual_numbers(field(3)),
        Arc::new(Algebra::upper_triangular(field(2))),
        Arc::new(Algebra::upper_triangular(field(3))),
        Arc::new(Algebra::truncated_polynomial(field(2), 3)),
    ]
}

fn small_rings() -> Vec<Arc<TriMatRing>> {
    vec![
        Arc::new(rings::t_of_dual_numbers(field(2))),
        Arc::new(rings::t_of_dual_numbers(field(3))),
        Arc::new(rings::t2(field(5))),
        Arc::new(rings::mixed(field(2))),
    ]
}

/// `Some(v)` for a finite value within `k`, else `None`.
fn within(h: HomDim, k: usize) -> Option<Option<usize>> {
    match h {
        HomDim::NegInfinity => Some(None),
        HomDim::Finite(v) if v <= k => Some(Some(v)),
        _ => None,
    }
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 500,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn rank_nullity(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5, 7, 31]), r in 0usize..9, c in 0usize..9) {
        let mut rng = case_rng(seed, 0);
        let f = field(p);
        let mut m = random_matrix(f, r, c, &mut rng);
        if rng.gen_bool(0.5) && r > 1 {
            for j in 0..c {
                let v = m.get(0, j);
                m.set(r - 1, j, v);
            }
        }
        let rank = m.rank();
        prop_assert_eq!(rank + m.kernel().dim(), c);
        prop_assert_eq!(m.image().dim(), rank);
        prop_assert_eq!(m.transpose().rank(), rank);
        prop_assert!(m.mul(&m.kernel().inclusion()).is_zero());
    }

    #[test]
    fn pd_does_not_depend_on_the_resolution(seed in any::<u64>()) {
        let mut rng = case_rng(seed, 1);
        let algs = small_algebras();
        let alg = &algs[rng.gen_range(0..algs.len())];
        let side = if rng.gen_bool(0.5) { Side::Left } else { Side::Right };
        let m = random_module(alg, side, 3, &mut rng);
        let reduced = within(pd(&m, 8), 2);
        let canonical = within(pd_with_cover(&m, 2, Cover::Canonical), 2);
        let generators = within(pd_with_cover(&m, 2, Cover::Generators), 2);
        prop_assert_eq!(reduced, canonical);
        prop_assert_eq!(canonical, generators);
    }

    #[test]
    fn ext_is_self_dual(seed in any::<u64>()) {
        let mut rng = case_rng(seed, 2);
        let algs = small_algebras();
        let alg = &algs[rng.gen_range(0..algs.len())];
        let side = if rng.gen_bool(0.5) { Side::Left } else { Side::Right };
        let m = random_module(alg, side, 3, &mut rng);
        let n = random_module(alg, side, 3, &mut rng);
        let i = rng.gen_range(0..=3);
        let direct = ext_dim(&m, &n, i).unwrap();
        prop_assert_eq!(direct, ext_dim(&dual_module(&n), &dual_module(&m), i).unwrap());
        prop_assert_eq!(direct, ext_dims(&m, &n, 3).unwrap()[i]);
    }

    #[test]
    fn hom_and_tensor_are_dual(seed in any::<u64>()) {
        let mut rng = case_rng(seed, 3);
        let rs = small_rings();
        let ring = &rs[rng.gen_range(0..rs.len())];
        let u = ring.u();

        let m = random_module(ring.a(), Side::Left, 3, &mut rng);
        let lhs = dual_module(&tensor_over(u, &m).unwrap().module);
        let rhs = hom_over(u, &dual_module(&m)).unwrap().module;
        let verdict = is_isomorphic(&lhs, &rhs).unwrap();
        prop_assert!(matches!(verdict, IsoVerdict::Yes(_)), "left: {:?}", verdict);

        let w = random_module(ring.b(), Side::Right, 3, &mut rng);
        let lhs = dual_module(&tensor_over_right(&w, u).unwrap().module);
        let rhs = hom_over_left(u, &dual_module(&w)).unwrap().module;
        let verdict = is_isomorphic(&lhs, &rhs).unwrap();
        prop_assert!(matches!(verdict, IsoVerdict::Yes(_)), "right: {:?}", verdict);
    }
}
