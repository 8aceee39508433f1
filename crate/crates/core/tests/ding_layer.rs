use std::sync::Arc;

use dingtri_core::algcore::Side;
use dingtri_core::dinghom::{DimKind, Ding, Outcome, Verdict};
use dingtri_core::fuzz::{case_rng, random_left_triple, random_module, random_right_triple};
use dingtri_core::homalg::{ext_dim, Cover, HomDim};
use dingtri_core::linfield::{FMatrix, FieldPrime};
use dingtri_core::modrep::{direct_sum, dual_module, kernel_module, Bimodule, FdModule, ModuleMorphism};
use dingtri_core::rings;
use dingtri_core::trimat::{build_ring, functor_p, LeftTriple, TriMatRing};

fn gf2() -> FieldPrime {
    FieldPrime::new(2).unwrap()
}

struct TR {
    ring: Arc<TriMatRing>,
    r: FdModule,
    s: FdModule,
    z: FdModule,
}

fn t_of_r() -> TR {
    let ring = Arc::new(rings::t_of_dual_numbers(gf2()));
    let alg = ring.a().clone();
    let s = FdModule::new(
        alg.clone(),
        Side::Left,
        1,
        vec![FMatrix::identity(gf2(), 1), FMatrix::zeros(gf2(), 1, 1)],
    )
    .unwrap();
    TR {
        r: FdModule::free(&alg, Side::Left, 1),
        z: FdModule::zero(&alg, Side::Left),
        s,
        ring,
    }
}

fn zero_phi(ring: &Arc<TriMatRing>, m1: &FdModule, m2: &FdModule) -> LeftTriple {
    let cols = dingtri_core::modrep::tensor_over(ring.u(), m1).unwrap().dim();
    LeftTriple::new(ring, m1.clone(), m2.clone(), FMatrix::zeros(gf2(), m2.dim(), cols)).unwrap()
}

/// Gorenstein projective dimension over an Iwanaga-Gorenstein algebra of
/// dimension `d`: the largest `i` with `Ext^i(M, Λ) != 0`, computed with the
/// cochain complex of a free resolution and no syzygy reduction.
fn oracle_dpd(m: &FdModule, d: usize) -> HomDim {
    if m.dim() == 0 {
        return HomDim::NegInfinity;
    }
    let reg = FdModule::free(m.alg(), m.side(), 1);
    let top = (1..=d + 1).filter(|&i| ext_dim(m, &reg, i).unwrap() != 0).max();
    HomDim::Finite(top.unwrap_or(0))
}

#[test]
fn derived_dimensions_over_t_of_r() {
    let TR { ring, r, s, z } = t_of_r();
    let ding = Ding::new(32);
    let d = ding.gate(ring.t()).value().unwrap();
    assert_eq!(d, 1);
    let cases = [
        (zero_phi(&ring, &s, &z), HomDim::Finite(1)),
        (functor_p(&ring, &s, &z).unwrap(), HomDim::Finite(0)),
        (zero_phi(&ring, &r, &z), HomDim::Finite(1)),
    ];
    for (m, expected) in cases {
        let both = ding.dpd_left_triple(&m);
        assert_eq!(both.module, Ok(expected));
        assert_eq!(both.componentwise, Ok(expected));
        assert_eq!(oracle_dpd(&m.to_module(), d), expected);
        assert_eq!(ding.dpd_with_cover(&m.to_module(), Cover::Padded), Ok(expected));
    }
}

#[test]
fn dpd_agrees_with_ext_oracle_on_random_triples() {
    let ring = Arc::new(rings::t_of_dual_numbers(gf2()));
    let ding = Ding::new(16);
    let mut seen = std::collections::BTreeSet::new();
    for k in 0..60 {
        let mut rng = case_rng(11, k);
        let m = random_left_triple(&ring, 3, &mut rng);
        let x = m.to_module();
        let dpd = ding.dpd(&x).unwrap();
        assert_eq!(dpd, oracle_dpd(&x, 1), "case {k}");
        seen.insert(format!("{dpd}"));
    }
    assert!(seen.len() >= 2, "{seen:?}");
}

#[test]
fn classifier_examples() {
    let TR { ring, s, z, .. } = t_of_r();
    let ding = Ding::new(32);
    let ssid = functor_p(&ring, &s, &z).unwrap();
    let s00 = zero_phi(&ring, &s, &z);
    let zs0 = zero_phi(&ring, &z, &s);
    assert_eq!(ding.classify_ding_projective_triple(&ssid).verdict, Verdict::Bool(true));
    assert_eq!(ding.classify_ding_projective_triple(&s00).verdict, Verdict::Bool(false));
    assert_eq!(ding.classify_ding_projective_triple(&zs0).verdict, Verdict::Bool(true));
    assert_eq!(
        ding.classify_ding_injective_triple(&s00.dual()).verdict,
        Verdict::Bool(false)
    );
    assert_eq!(
        ding.classify_ding_injective_triple(&ssid.dual()).verdict,
        Verdict::Bool(true)
    );
    assert_eq!(ding.did_right_triple(&s00.dual()).module, Ok(HomDim::Finite(1)));
    for m in [&ssid, &s00, &zs0] {
        assert_eq!(ding.verify_thm_3_4(m).outcome, Outcome::Pass);
        assert_eq!(ding.verify_cor_3_5(m).outcome, Outcome::Pass);
        assert_eq!(ding.verify_thm_4_4(&m.dual()).outcome, Outcome::Pass);
        assert_eq!(ding.verify_cor_4_5(&m.dual()).outcome, Outcome::Pass);
    }
}

#[test]
fn reports_carry_the_ledger_and_banner() {
    let TR { ring, s, .. } = t_of_r();
    let ding = Ding::new(32);
    let report = ding.is_ding_projective(&s);
    assert!(report.banner.contains("Gorenstein"));
    assert!(report
        .hypothesis_ledger
        .iter()
        .all(|h| h.status != dingtri_core::dinghom::Status::Failed));
    let json = serde_json::to_value(ding.classify_ding_injective_triple(&zero_phi(&ring, &s, &s).dual())).unwrap();
    let certified = json["hypothesis_ledger"]
        .as_array()
        .unwrap()
        .iter()
        .find(|h| h["hypothesis"].as_str().unwrap().contains("projective or FP-injective"))
        .unwrap();
    assert_eq!(certified["status"], "verified");
    assert_eq!(certified["evidence"]["certified_by"], "pd and fp_id");
}

#[test]
fn global_estimates_and_the_pinch() {
    let TR { ring, r, s, .. } = t_of_r();
    let ding = Ding::new(32);
    let rs = direct_sum(ring.a(), Side::Left, &[r.clone(), s.clone()])
        .unwrap()
        .module;
    let family = [r.clone(), s.clone(), rs];
    let dims: Vec<_> = family.iter().map(|m| ding.dpd(m)).collect();
    let est = ding.global_estimate(ring.a(), &dims, DimKind::Dpd);
    assert_eq!(est.lower_bound, HomDim::Finite(0));
    assert_eq!(est.claimed_upper, HomDim::Finite(0));

    let z = FdModule::zero(ring.a(), Side::Left);
    let triples = [
        zero_phi(&ring, &s, &z),
        functor_p(&ring, &s, &z).unwrap(),
        zero_phi(&ring, &r, &z),
    ];
    let check = ding.verify_bounds_3_9(&ring, &family, &family, &triples);
    assert_eq!(check.outcome, Outcome::Pass);
    assert_eq!(check.evidence["bounds"], serde_json::json!([1, 1]));
    assert_eq!(check.evidence["realized"], 1);
    assert_eq!(check.evidence["pinched"], true);
    assert_eq!(ding.verify_cor_3_10(&ring, &family, &triples).outcome, Outcome::Pass);

    let right: Vec<_> = family.iter().map(dual_module).collect();
    let rtriples: Vec<_> = triples.iter().map(LeftTriple::dual).collect();
    let check = ding.verify_bounds_4_9(&ring, &right, &right, &rtriples);
    assert_eq!(check.outcome, Outcome::Pass);
    assert_eq!(check.evidence["bounds"], serde_json::json!([1, 1]));
}

#[test]
fn zero_bimodule_fails_the_global_precondition_but_classifiers_run() {
    let r = rings::dual_numbers(gf2());
    let ring = Arc::new(build_ring(r.clone(), r.clone(), Bimodule::zero(&r, &r)).unwrap());
    let ding = Ding::new(8);
    let fam = [FdModule::free(&r, Side::Left, 1)];
    assert_eq!(
        ding.verify_bounds_3_9(&ring, &fam, &fam, &[]).outcome,
        Outcome::Inconclusive
    );
    let m = LeftTriple::new(&ring, fam[0].clone(), fam[0].clone(), FMatrix::zeros(gf2(), 2, 0)).unwrap();
    assert_eq!(ding.classify_ding_projective_triple(&m).verdict, Verdict::Bool(true));
    assert_eq!(ding.verify_thm_3_4(&m).outcome, Outcome::Pass);
}

#[test]
fn lemma_properties() {
    let TR { ring, r, s, .. } = t_of_r();
    let ding = Ding::new(32);
    let rr = FdModule::free(ring.a(), Side::Left, 2);
    assert_eq!(ding.property_lemma_3_1(&s, &r).outcome, Outcome::Pass);
    assert_eq!(ding.property_lemma_3_1(&s, &rr).outcome, Outcome::Pass);
    assert_eq!(ding.property_lemma_3_1(&r, &s).outcome, Outcome::Inconclusive);
    let dr = dual_module(&r);
    let ds = dual_module(&s);
    assert_eq!(ding.property_lemma_4_1(&ds, &dr).outcome, Outcome::Pass);
    assert_eq!(ding.property_lemma_3_2(&ring, &dr, &r).outcome, Outcome::Pass);
    assert_eq!(ding.property_lemma_4_2(&ring, &dr).outcome, Outcome::Pass);
    assert_eq!(ding.property_lemma_3_7(&ring, &s).outcome, Outcome::Pass);
    assert_eq!(ding.property_lemma_4_7(&ring, &ds).outcome, Outcome::Pass);

    let zero = Arc::new(build_ring(ring.a().clone(), ring.a().clone(), Bimodule::zero(ring.a(), ring.a())).unwrap());
    assert_eq!(ding.property_lemma_3_2(&zero, &dr, &r).outcome, Outcome::Pass);
    assert_eq!(ding.property_lemma_3_7(&zero, &s).outcome, Outcome::Pass);
}

#[test]
fn ding_injectivity_matches_the_direct_test() {
    let ding = Ding::new(8);
    for ring in [Arc::new(rings::t_of_dual_numbers(gf2())), Arc::new(rings::mixed(gf2()))] {
        for k in 0..40 {
            let mut rng = case_rng(5, k);
            let w = random_right_triple(&ring, 3, &mut rng).to_module();
            assert_eq!(ding.ding_injective(&w), ding.ding_injective_direct(&w), "case {k}");
            let m = random_left_triple(&ring, 3, &mut rng).to_module();
            assert_eq!(ding.ding_injective(&m), ding.ding_injective_direct(&m), "case {k}");
            assert_eq!(ding.did(&w), ding.dpd(&dual_module(&w)));
        }
    }
}

#[test]
fn resolution_independence() {
    let ding = Ding::new(6);
    for ring in [Arc::new(rings::t_of_dual_numbers(gf2())), Arc::new(rings::t2(gf2()))] {
        for k in 0..30 {
            let mut rng = case_rng(9, k);
            let x = random_left_triple(&ring, 2, &mut rng).to_module();
            let reduced = ding.dpd(&x);
            assert_eq!(ding.dpd_with_cover(&x, Cover::Canonical), reduced);
            assert_eq!(ding.dpd_with_cover(&x, Cover::Padded), reduced);
        }
    }
}

#[test]
fn closure_under_sums_and_kernels_of_epimorphisms() {
    let ding = Ding::new(8);
    let ring = Arc::new(rings::t_of_dual_numbers(gf2()));
    let t = ring.t().clone();
    let mut pool = Vec::new();
    for k in 0..80 {
        let mut rng = case_rng(3, k);
        let x = random_left_triple(&ring, 2, &mut rng).to_module();
        if ding.ding_projective(&x) == Ok(true) {
            pool.push(x);
        }
    }
    assert!(pool.len() >= 10);
    for pair in pool.windows(2) {
        let sum = direct_sum(&t, Side::Left, pair).unwrap();
        assert_eq!(ding.ding_projective(&sum.module), Ok(true));
        // the projection onto the second summand is an epimorphism between
        // Ding projectives; so is its composite with a cover
        let p = &sum.projections[1];
        let (k, _) = kernel_module(p);
        assert_eq!(ding.ding_projective(&k), Ok(true));
        let cover = dingtri_core::homalg::generator_cover(&pair[1]);
        let onto = ModuleMorphism::new(cover.source().clone(), pair[1].clone(), cover.matrix().clone()).unwrap();
        assert!(onto.is_epi());
        assert_eq!(ding.ding_projective(&kernel_module(&onto).0), Ok(true));
    }
}

#[test]
fn random_modules_over_self_injective_algebras_are_ding_projective() {
    let ding = Ding::new(8);
    let r = rings::dual_numbers(FieldPrime::new(3).unwrap());
    let mut rng = case_rng(2, 0);
    for _ in 0..50 {
        let m = random_module(&r, Side::Left, 4, &mut rng);
        assert_eq!(ding.ding_projective(&m), Ok(true));
        assert_eq!(ding.ding_injective(&m), Ok(true));
    }
}
