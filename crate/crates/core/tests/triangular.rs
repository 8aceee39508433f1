use std::sync::Arc;

use dingtri_core::algcore::Side;
use dingtri_core::fuzz::{case_rng, random_left_triple, random_module, random_right_triple};
use dingtri_core::homalg::{is_injective, is_projective};
use dingtri_core::linfield::FieldPrime;
use dingtri_core::modrep::{dual_module, is_isomorphic};
use dingtri_core::rings;
use dingtri_core::trimat::{
    adjunction_check, check_triple_morphism, counit_p, is_flat_triple, is_fp_injective_triple, is_injective_triple,
    is_projective_triple, module_to_right_triple, module_to_triple, unit_h, TriMatRing,
};

fn suite() -> Vec<Arc<TriMatRing>> {
    let f2 = FieldPrime::new(2).unwrap();
    let f3 = FieldPrime::new(3).unwrap();
    vec![
        Arc::new(rings::t_of_dual_numbers(f2)),
        Arc::new(rings::t_of_dual_numbers(f3)),
        Arc::new(rings::t2(f2)),
        Arc::new(rings::mixed(f2)),
    ]
}

#[test]
fn structure_tests_match_direct_tests() {
    let mut counts = [0usize; 4];
    for (r, ring) in suite().iter().enumerate() {
        for k in 0..60 {
            let mut rng = case_rng(r as u64, k);
            let m = random_left_triple(ring, 3, &mut rng);
            let direct = is_projective(&m.to_module());
            assert_eq!(is_projective_triple(&m).verdict, direct, "ring {r} case {k}");
            assert_eq!(is_flat_triple(&m).verdict, direct);
            counts[direct as usize] += 1;

            let w = random_right_triple(ring, 3, &mut rng);
            let direct = is_injective(&w.to_module());
            assert_eq!(is_injective_triple(&w).verdict, direct, "ring {r} case {k}");
            assert_eq!(is_fp_injective_triple(&w).verdict, direct);
            counts[2 + direct as usize] += 1;
        }
    }
    assert!(counts.iter().all(|&c| c > 0), "{counts:?}");
}

#[test]
fn adjunctions_hold() {
    for (r, ring) in suite().iter().enumerate() {
        for k in 0..40 {
            let mut rng = case_rng(100 + r as u64, k);
            let x1 = random_module(ring.a(), Side::Left, 3, &mut rng);
            let x2 = random_module(ring.b(), Side::Left, 3, &mut rng);
            let m = random_left_triple(ring, 3, &mut rng);
            let report = adjunction_check(&x1, &x2, &m).unwrap();
            assert!(report.holds, "ring {r} case {k}: {report:?}");
            assert_eq!(report.left_adjoint.0, report.left_adjoint.1);
            assert_eq!(report.right_adjoint.0, report.right_adjoint.1);

            let (pq, f1, f2) = counit_p(&m).unwrap();
            check_triple_morphism(&pq, &m, &f1, &f2).unwrap();
            let (hq, g1, g2) = unit_h(&m).unwrap();
            check_triple_morphism(&m, &hq, &g1, &g2).unwrap();
        }
    }
}

#[test]
fn triples_and_modules_correspond() {
    for (r, ring) in suite().iter().enumerate() {
        for k in 0..30 {
            let mut rng = case_rng(200 + r as u64, k);
            let m = random_left_triple(ring, 3, &mut rng);
            let back = module_to_triple(ring, &m.to_module()).unwrap();
            assert_eq!(back.to_module(), m.to_module());

            let w = random_right_triple(ring, 3, &mut rng);
            let back = module_to_right_triple(ring, &w.to_module()).unwrap();
            assert_eq!(back.to_module(), w.to_module());

            // the dual of a triple is the triple of the dual module
            let dual = module_to_right_triple(ring, &dual_module(&m.to_module())).unwrap();
            assert!(is_isomorphic(&dual.to_module(), &m.dual().to_module())
                .unwrap()
                .is_yes());
        }
    }
}
