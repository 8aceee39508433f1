//! Ding projective and Ding injective modules, their dimensions, and
//! executable checks of how both behave over triangular matrix algebras.
//!
//! Over a finite-dimensional algebra flat modules are projective and
//! FP-injective modules are injective, so Ding projective means Gorenstein
//! projective and Ding injective means Gorenstein injective. When the algebra
//! is Iwanaga-Gorenstein of dimension `d`, a module `M` is Gorenstein
//! projective iff `Ext^i(M, Λ) = 0` for `1 <= i <= max(d, 1)`. Algebras for
//! which that gate cannot be established get a `gated` verdict instead of a
//! guess.

use std::sync::{Arc, Mutex};

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::algcore::Algebra;
use crate::homalg::{
    ext_dims, fd, fp_id, id, is_injective, is_projective, iwanaga_gorenstein_bound, pd, reduced_syzygy, syzygy_with,
    Cover, HomDim,
};
use crate::modrep::{cokernel_module, dual_module, hom_over, kernel_module, tensor_over, Bimodule, FdModule};
use crate::trimat::{module_to_right_triple, module_to_triple, LeftTriple, RightTriple, TriMatRing};

pub const BANNER: &str = "finite-dimensional algebra: flat = projective and FP-injective = injective, \
so Ding projective/injective coincide with Gorenstein projective/injective";

/// A boolean answer, or the reason none could be given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Bool(bool),
    Gated(String),
}

impl Verdict {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Verdict::Bool(b) => Some(*b),
            Verdict::Gated(_) => None,
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Verdict::Bool(b) => s.serialize_bool(*b),
            Verdict::Gated(reason) => json!({ "gated": reason }).serialize(s),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Checked by computation.
    Verified,
    /// Holds for every finite-dimensional algebra.
    Auto,
    Assumed,
    /// Checked by computation and found not to hold (or not within the cutoff).
    Failed,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Hypothesis {
    pub hypothesis: String,
    pub status: Status,
    pub evidence: Value,
}

impl Hypothesis {
    fn new(hypothesis: &str, status: Status, evidence: Value) -> Self {
        Self {
            hypothesis: hypothesis.to_string(),
            status,
            evidence,
        }
    }

    fn auto(hypothesis: &str, why: &str) -> Self {
        Self::new(hypothesis, Status::Auto, json!(why))
    }

    fn finite(hypothesis: &str, value: HomDim) -> Self {
        let status = if value.is_finite() {
            Status::Verified
        } else {
            Status::Failed
        };
        Self::new(hypothesis, status, json!(value))
    }

    fn holds(hypothesis: &str, ok: bool, evidence: Value) -> Self {
        Self::new(hypothesis, if ok { Status::Verified } else { Status::Failed }, evidence)
    }
}

fn first_failure(ledger: &[Hypothesis]) -> Option<String> {
    ledger
        .iter()
        .find(|h| h.status == Status::Failed)
        .map(|h| format!("hypothesis not satisfied: {}", h.hypothesis))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DingReport {
    pub verdict: Verdict,
    pub hypothesis_ledger: Vec<Hypothesis>,
    pub evidence: Value,
    pub banner: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

/// Result of checking one statement on one instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub outcome: Outcome,
    pub hypothesis_ledger: Vec<Hypothesis>,
    pub evidence: Value,
}

impl Check {
    fn inconclusive(ledger: Vec<Hypothesis>, reason: impl Into<String>, mut evidence: Value) -> Self {
        evidence["reason"] = json!(reason.into());
        Self {
            outcome: Outcome::Inconclusive,
            hypothesis_ledger: ledger,
            evidence,
        }
    }

    fn decided(ok: bool, ledger: Vec<Hypothesis>, evidence: Value) -> Self {
        Self {
            outcome: if ok { Outcome::Pass } else { Outcome::Fail },
            hypothesis_ledger: ledger,
            evidence,
        }
    }
}

/// Why no dimension or verdict could be computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gated(pub String);

pub type DimResult = Result<HomDim, Gated>;

pub fn dim_json(d: &DimResult) -> Value {
    match d {
        Ok(h) => json!(h),
        Err(Gated(reason)) => json!({ "gated": reason }),
    }
}

fn bool_json(b: &Result<bool, Gated>) -> Value {
    match b {
        Ok(b) => json!(b),
        Err(Gated(reason)) => json!({ "gated": reason }),
    }
}

/// Facts about `U` that the triple classifiers and bounds depend on.
#[derive(Clone, Debug)]
pub struct RingFacts {
    pub u_nonzero: bool,
    /// `pd(U_A)`, which is also its flat dimension.
    pub u_right_pd: HomDim,
    /// `id(U_A)`, which is also its FP-injective dimension.
    pub u_right_id: HomDim,
    /// `pd(_B U)`, which is also its flat dimension.
    pub u_left_pd: HomDim,
}

impl RingFacts {
    fn u_left_projective(&self) -> bool {
        matches!(self.u_left_pd, HomDim::Finite(0) | HomDim::NegInfinity)
    }
}

/// Row of a triple classification, kept for the verifiers.
struct Classified {
    report: DingReport,
    /// `(U ⊗ M1, M2)` resp. `(Hom(U, W1), W2)` tested together once the
    /// verdict is true.
    tail: Option<(Result<bool, Gated>, Result<bool, Gated>)>,
}

/// Shared state for Ding computations: the cutoff and caches of per-algebra
/// and per-ring facts. Safe to use from several threads.
pub struct Ding {
    cutoff: usize,
    gates: Mutex<Vec<(Arc<Algebra>, HomDim)>>,
    facts: Mutex<Vec<(TriMatRing, Arc<RingFacts>)>>,
}

impl Ding {
    pub fn new(cutoff: usize) -> Self {
        assert!(cutoff >= 1, "cutoff must be positive");
        Self {
            cutoff,
            gates: Mutex::new(Vec::new()),
            facts: Mutex::new(Vec::new()),
        }
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Iwanaga-Gorenstein dimension of `alg`, cached.
    pub fn gate(&self, alg: &Arc<Algebra>) -> HomDim {
        if let Some((_, g)) = self.gates.lock().unwrap().iter().find(|(a, _)| **a == **alg) {
            return *g;
        }
        let g = iwanaga_gorenstein_bound(alg, self.cutoff);
        self.gates.lock().unwrap().push((alg.clone(), g));
        g
    }

    fn require_gate(&self, alg: &Arc<Algebra>) -> Result<usize, Gated> {
        match self.gate(alg) {
            HomDim::Finite(d) => Ok(d),
            other => Err(Gated(format!(
                "Iwanaga-Gorenstein gate not established for an algebra of dimension {} (got {other})",
                alg.dim()
            ))),
        }
    }

    fn gate_hypothesis(&self, alg: &Arc<Algebra>) -> Hypothesis {
        Hypothesis::finite(
            "Iwanaga-Gorenstein: id of both regular modules finite and equal",
            self.gate(alg),
        )
    }

    pub fn ring_facts(&self, ring: &TriMatRing) -> Arc<RingFacts> {
        if let Some((_, f)) = self.facts.lock().unwrap().iter().find(|(r, _)| r == ring) {
            return f.clone();
        }
        let u = ring.u();
        let right = u.as_right_module();
        let facts = Arc::new(RingFacts {
            u_nonzero: u.dim() > 0,
            u_right_pd: pd(&right, self.cutoff),
            u_right_id: id(&right, self.cutoff),
            u_left_pd: pd(&u.as_left_module(), self.cutoff),
        });
        self.facts.lock().unwrap().push((ring.clone(), facts.clone()));
        facts
    }

    fn ext_against_regular(&self, m: &FdModule) -> Result<(bool, Value), Gated> {
        let d = self.require_gate(m.alg())?;
        let reg = FdModule::free(m.alg(), m.side(), 1);
        let exts = ext_dims(m, &reg, d.max(1)).expect("same category");
        let ok = exts[1..].iter().all(|&e| e == 0);
        Ok((ok, json!({ "gorenstein_dimension": d, "ext_regular": &exts[1..] })))
    }

    pub fn ding_projective(&self, m: &FdModule) -> Result<bool, Gated> {
        self.ext_against_regular(m).map(|(ok, _)| ok)
    }

    pub fn ding_injective(&self, w: &FdModule) -> Result<bool, Gated> {
        self.ding_projective(&dual_module(w))
    }

    pub fn is_ding_projective(&self, m: &FdModule) -> DingReport {
        let ledger = vec![
            self.gate_hypothesis(m.alg()),
            Hypothesis::auto("flat modules are projective", "finite-dimensional algebras are perfect"),
        ];
        let (verdict, evidence) = match self.ext_against_regular(m) {
            Ok((ok, ev)) => (Verdict::Bool(ok), ev),
            Err(Gated(r)) => (Verdict::Gated(r), json!({})),
        };
        DingReport {
            verdict,
            hypothesis_ledger: ledger,
            evidence,
            banner: BANNER,
        }
    }

    /// Ding injectivity of `w`, decided through its field dual.
    pub fn is_ding_injective(&self, w: &FdModule) -> DingReport {
        let mut report = self.is_ding_projective(&dual_module(w));
        report.hypothesis_ledger.push(Hypothesis::auto(
            "FP-injective modules are injective",
            "finite-dimensional algebras are Noetherian",
        ));
        report.evidence = json!({ "via_dual": report.evidence });
        report
    }

    /// Ding injectivity tested directly: `Ext^i(E, w) = 0` for the injective
    /// cogenerator `E` on the side of `w`.
    pub fn ding_injective_direct(&self, w: &FdModule) -> Result<bool, Gated> {
        let d = self.require_gate(w.alg())?;
        let cogenerator = dual_module(&FdModule::free(w.alg(), w.side().flip(), 1));
        let exts = ext_dims(&cogenerator, w, d.max(1)).expect("same category");
        Ok(exts[1..].iter().all(|&e| e == 0))
    }

    /// Ding projective dimension along reduced syzygies.
    pub fn dpd(&self, m: &FdModule) -> DimResult {
        if m.dim() == 0 {
            return Ok(HomDim::NegInfinity);
        }
        self.require_gate(m.alg())?;
        let mut cur = m.clone();
        for n in 0..=self.cutoff {
            if self.ding_projective(&cur)? {
                return Ok(HomDim::Finite(n));
            }
            cur = reduced_syzygy(&cur);
        }
        Ok(HomDim::ExceedsCutoff {
            cutoff: self.cutoff,
            periodic: false,
        })
    }

    /// Ding projective dimension along unreduced syzygies of the given cover
    /// kind. Agrees with [`Ding::dpd`] whatever resolution is used.
    pub fn dpd_with_cover(&self, m: &FdModule, kind: Cover) -> DimResult {
        if m.dim() == 0 {
            return Ok(HomDim::NegInfinity);
        }
        self.require_gate(m.alg())?;
        let mut cur = m.clone();
        for n in 0..=self.cutoff {
            if self.ding_projective(&cur)? {
                return Ok(HomDim::Finite(n));
            }
            cur = syzygy_with(&cur, kind);
        }
        Ok(HomDim::ExceedsCutoff {
            cutoff: self.cutoff,
            periodic: false,
        })
    }

    pub fn did(&self, w: &FdModule) -> DimResult {
        self.dpd(&dual_module(w))
    }

    fn ledger_left(&self, ring: &TriMatRing) -> Vec<Hypothesis> {
        let f = self.ring_facts(ring);
        vec![
            Hypothesis::finite("U_A has finite flat dimension", f.u_right_pd),
            Hypothesis::finite("_BU has finite flat dimension", f.u_left_pd),
            Hypothesis::auto("flat modules are projective", "finite-dimensional algebras are perfect"),
        ]
    }

    fn u_right_finite(f: &RingFacts) -> Hypothesis {
        let by_pd = f.u_right_pd.is_finite();
        let by_id = f.u_right_id.is_finite();
        let certified_by = match (by_pd, by_id) {
            (true, true) => "pd and fp_id",
            (true, false) => "pd",
            (false, true) => "fp_id",
            (false, false) => "none",
        };
        Hypothesis::holds(
            "U_A has finite projective or FP-injective dimension",
            by_pd || by_id,
            json!({ "pd": f.u_right_pd, "fp_id": f.u_right_id, "certified_by": certified_by }),
        )
    }

    fn ledger_right(&self, ring: &TriMatRing) -> Vec<Hypothesis> {
        let f = self.ring_facts(ring);
        vec![
            Hypothesis::auto("T is right coherent", "finite-dimensional algebras are Noetherian"),
            Hypothesis::finite("_BU has finite flat dimension", f.u_left_pd),
            Hypothesis::auto("U_A is finitely presented", "finite-dimensional"),
            Self::u_right_finite(&f),
            Hypothesis::auto(
                "FP-injective modules are injective",
                "finite-dimensional algebras are Noetherian",
            ),
        ]
    }

    fn classify_left(&self, m: &LeftTriple) -> Classified {
        let ring = m.ring();
        let ledger = self.ledger_left(ring);
        let phi_rank = m.phi().rank();
        let tensor_dim = m.tensor().dim();
        let mono = phi_rank == tensor_dim;
        let mut evidence = json!({ "phi_rank": phi_rank, "tensor_dim": tensor_dim, "phi_mono": mono });
        let done = |verdict, ledger, evidence, tail| Classified {
            report: DingReport {
                verdict,
                hypothesis_ledger: ledger,
                evidence,
                banner: BANNER,
            },
            tail,
        };
        if let Some(reason) = first_failure(&ledger) {
            return done(Verdict::Gated(reason), ledger, evidence, None);
        }
        let m1 = self.ding_projective(m.m1());
        let coker = cokernel_module(&m.phi_morphism()).0;
        let ck = self.ding_projective(&coker);
        evidence["m1_ding_projective"] = bool_json(&m1);
        evidence["cokernel_ding_projective"] = bool_json(&ck);
        evidence["cokernel_dim"] = json!(coker.dim());
        match (m1, ck) {
            (Ok(a), Ok(b)) => {
                let verdict = a && b && mono;
                let tail = verdict.then(|| (self.ding_projective(&m.tensor().module), self.ding_projective(m.m2())));
                if let Some((t, m2)) = &tail {
                    evidence["tail"] =
                        json!({ "tensor_ding_projective": bool_json(t), "m2_ding_projective": bool_json(m2) });
                }
                done(Verdict::Bool(verdict), ledger, evidence, tail)
            }
            (Err(Gated(r)), _) | (_, Err(Gated(r))) => done(Verdict::Gated(r), ledger, evidence, None),
        }
    }

    /// Componentwise Ding projectivity of a left triple: `M1` and
    /// `M2 / im φ` Ding projective and `φ` injective.
    pub fn classify_ding_projective_triple(&self, m: &LeftTriple) -> DingReport {
        self.classify_left(m).report
    }

    fn classify_right(&self, w: &RightTriple) -> Classified {
        let ring = w.ring();
        let ledger = self.ledger_right(ring);
        let (hom, tilde) = w.phi_tilde();
        let rank = tilde.rank();
        let epi = rank == hom.dim();
        let mut evidence = json!({ "phi_tilde_rank": rank, "hom_dim": hom.dim(), "phi_tilde_epi": epi });
        let done = |verdict, ledger, evidence, tail| Classified {
            report: DingReport {
                verdict,
                hypothesis_ledger: ledger,
                evidence,
                banner: BANNER,
            },
            tail,
        };
        if let Some(reason) = first_failure(&ledger) {
            return done(Verdict::Gated(reason), ledger, evidence, None);
        }
        let w1 = self.ding_injective(w.w1());
        let ker = kernel_module(&tilde).0;
        let kk = self.ding_injective(&ker);
        evidence["w1_ding_injective"] = bool_json(&w1);
        evidence["kernel_ding_injective"] = bool_json(&kk);
        evidence["kernel_dim"] = json!(ker.dim());
        match (w1, kk) {
            (Ok(a), Ok(b)) => {
                let verdict = a && b && epi;
                let tail = verdict.then(|| (self.ding_injective(&hom.module), self.ding_injective(w.w2())));
                if let Some((h, w2)) = &tail {
                    evidence["tail"] =
                        json!({ "hom_ding_injective": bool_json(h), "w2_ding_injective": bool_json(w2) });
                }
                done(Verdict::Bool(verdict), ledger, evidence, tail)
            }
            (Err(Gated(r)), _) | (_, Err(Gated(r))) => done(Verdict::Gated(r), ledger, evidence, None),
        }
    }

    /// Componentwise Ding injectivity of a right triple: `W1` and `ker φ̃`
    /// Ding injective and `φ̃` surjective.
    pub fn classify_ding_injective_triple(&self, w: &RightTriple) -> DingReport {
        self.classify_right(w).report
    }

    /// Ding projective dimension of a left triple, computed over `T` and
    /// componentwise along triple syzygies.
    pub fn dpd_left_triple(&self, m: &LeftTriple) -> TripleDim {
        let module = self.dpd(&m.to_module());
        let componentwise = self.dpd_componentwise(m);
        TripleDim::new(module, componentwise)
    }

    fn dpd_componentwise(&self, m: &LeftTriple) -> DimResult {
        if m.dim() == 0 {
            return Ok(HomDim::NegInfinity);
        }
        let mut cur = m.clone();
        for n in 0..=self.cutoff {
            match self.classify_ding_projective_triple(&cur).verdict {
                Verdict::Bool(true) => return Ok(HomDim::Finite(n)),
                Verdict::Bool(false) => {}
                Verdict::Gated(r) => return Err(Gated(r)),
            }
            let next = reduced_syzygy(&cur.to_module());
            cur = module_to_triple(m.ring(), &next).expect("syzygy of a T-module");
        }
        Ok(HomDim::ExceedsCutoff {
            cutoff: self.cutoff,
            periodic: false,
        })
    }

    /// Ding injective dimension of a right triple, computed over `T` and
    /// componentwise along triple cosyzygies.
    pub fn did_right_triple(&self, w: &RightTriple) -> TripleDim {
        let module = self.did(&w.to_module());
        let componentwise = self.did_componentwise(w);
        TripleDim::new(module, componentwise)
    }

    fn did_componentwise(&self, w: &RightTriple) -> DimResult {
        if w.dim() == 0 {
            return Ok(HomDim::NegInfinity);
        }
        let mut cur = w.clone();
        for n in 0..=self.cutoff {
            match self.classify_ding_injective_triple(&cur).verdict {
                Verdict::Bool(true) => return Ok(HomDim::Finite(n)),
                Verdict::Bool(false) => {}
                Verdict::Gated(r) => return Err(Gated(r)),
            }
            let cosyzygy = dual_module(&reduced_syzygy(&dual_module(&cur.to_module())));
            cur = module_to_right_triple(w.ring(), &cosyzygy).expect("cosyzygy of a T-module");
        }
        Ok(HomDim::ExceedsCutoff {
            cutoff: self.cutoff,
            periodic: false,
        })
    }

    /// Direct test over `T` against the componentwise classification, plus the
    /// tail equivalence `U ⊗ M1` vs `M2` when both sides say yes.
    pub fn verify_thm_3_4(&self, m: &LeftTriple) -> Check {
        let lhs = self.ding_projective(&m.to_module());
        let Classified { report, tail } = self.classify_left(m);
        let mut evidence =
            json!({ "direct": bool_json(&lhs), "componentwise": report.verdict, "classifier": report.evidence });
        let ledger = report.hypothesis_ledger;
        let rhs = match report.verdict {
            Verdict::Bool(b) => b,
            Verdict::Gated(r) => return Check::inconclusive(ledger, r, evidence),
        };
        let lhs = match lhs {
            Ok(b) => b,
            Err(Gated(r)) => return Check::inconclusive(ledger, r, evidence),
        };
        let mut ok = lhs == rhs;
        if let Some((t, m2)) = tail {
            let agree = t == m2;
            evidence["tail_agrees"] = json!(agree);
            ok &= agree;
        }
        Check::decided(ok, ledger, evidence)
    }

    pub fn verify_thm_4_4(&self, w: &RightTriple) -> Check {
        let lhs = self.ding_injective(&w.to_module());
        let Classified { report, tail } = self.classify_right(w);
        let mut evidence =
            json!({ "direct": bool_json(&lhs), "componentwise": report.verdict, "classifier": report.evidence });
        let ledger = report.hypothesis_ledger;
        let rhs = match report.verdict {
            Verdict::Bool(b) => b,
            Verdict::Gated(r) => return Check::inconclusive(ledger, r, evidence),
        };
        let lhs = match lhs {
            Ok(b) => b,
            Err(Gated(r)) => return Check::inconclusive(ledger, r, evidence),
        };
        let mut ok = lhs == rhs;
        if let Some((h, w2)) = tail {
            let agree = h == w2;
            evidence["tail_agrees"] = json!(agree);
            ok &= agree;
        }
        Check::decided(ok, ledger, evidence)
    }

    /// The three equivalent conditions for a left module over `T(R)`.
    pub fn verify_cor_3_5(&self, m: &LeftTriple) -> Check {
        let ring = m.ring();
        let ledger = vec![Hypothesis::holds("T = T(R)", is_t_of(ring), json!(null))];
        if !is_t_of(ring) {
            return Check::inconclusive(ledger, "ring is not of the form [[R,0],[R,R]]", json!({}));
        }
        let mono = m.phi().rank() == m.tensor().dim();
        let coker = cokernel_module(&m.phi_morphism()).0;
        let parts = (
            self.ding_projective(&m.to_module()),
            self.ding_projective(m.m1()),
            self.ding_projective(m.m2()),
            self.ding_projective(&coker),
        );
        let (Ok(whole), Ok(m1), Ok(m2), Ok(ck)) = parts else {
            return Check::inconclusive(ledger, "gated", json!({}));
        };
        let c2 = m1 && ck && mono;
        let c3 = m2 && ck && mono;
        Check::decided(
            whole == c2 && c2 == c3,
            ledger,
            json!({ "condition_1": whole, "condition_2": c2, "condition_3": c3 }),
        )
    }

    pub fn verify_cor_4_5(&self, w: &RightTriple) -> Check {
        let ring = w.ring();
        let ledger = vec![Hypothesis::holds("T = T(R)", is_t_of(ring), json!(null))];
        if !is_t_of(ring) {
            return Check::inconclusive(ledger, "ring is not of the form [[R,0],[R,R]]", json!({}));
        }
        let (hom, tilde) = w.phi_tilde();
        let epi = tilde.rank() == hom.dim();
        let ker = kernel_module(&tilde).0;
        let parts = (
            self.ding_injective(&w.to_module()),
            self.ding_injective(w.w1()),
            self.ding_injective(w.w2()),
            self.ding_injective(&ker),
        );
        let (Ok(whole), Ok(w1), Ok(w2), Ok(kk)) = parts else {
            return Check::inconclusive(ledger, "gated", json!({}));
        };
        let c2 = w1 && kk && epi;
        let c3 = w2 && kk && epi;
        Check::decided(
            whole == c2 && c2 == c3,
            ledger,
            json!({ "condition_1": whole, "condition_2": c2, "condition_3": c3 }),
        )
    }

    fn ledger_bounds_left(&self, ring: &TriMatRing) -> Vec<Hypothesis> {
        let f = self.ring_facts(ring);
        let gate_b = self.gate(ring.b());
        vec![
            Hypothesis::holds("_BU is projective", f.u_left_projective(), json!({ "pd": f.u_left_pd })),
            Hypothesis::finite("U_A has finite flat dimension", f.u_right_pd),
            Hypothesis::new(
                "lDPD(B) is finite",
                if gate_b.is_finite() {
                    Status::Verified
                } else {
                    Status::Failed
                },
                json!({ "certified_by_gorenstein_dimension": gate_b }),
            ),
        ]
    }

    fn ledger_bounds_right(&self, ring: &TriMatRing) -> Vec<Hypothesis> {
        let f = self.ring_facts(ring);
        let gate_b = self.gate(ring.b());
        vec![
            Hypothesis::auto("T is right coherent", "finite-dimensional algebras are Noetherian"),
            Hypothesis::new(
                "rDID(B) is finite",
                if gate_b.is_finite() {
                    Status::Verified
                } else {
                    Status::Failed
                },
                json!({ "certified_by_gorenstein_dimension": gate_b }),
            ),
            Hypothesis::holds("_BU is flat", f.u_left_projective(), json!({ "pd": f.u_left_pd })),
            Hypothesis::auto("U_A is finitely presented", "finite-dimensional"),
            Self::u_right_finite(&f),
        ]
    }

    /// `max{d(X1), d(X2)} <= d(X) <= max{d(X1) + 1, d(X2)}`.
    fn sandwich(ledger: Vec<Hypothesis>, d1: DimResult, d2: DimResult, whole: TripleDim) -> Check {
        let mut evidence = json!({
            "component_1": dim_json(&d1),
            "component_2": dim_json(&d2),
            "whole": whole,
        });
        if let Some(reason) = first_failure(&ledger) {
            return Check::inconclusive(ledger, reason, evidence);
        }
        if !whole.agree {
            evidence["reason"] = json!("module and componentwise dimensions disagree");
            return Check::decided(false, ledger, evidence);
        }
        let (Ok(d1), Ok(d2), Ok(d)) = (d1, d2, whole.module.clone()) else {
            return Check::inconclusive(ledger, "gated", evidence);
        };
        if !(d1.is_finite() && d2.is_finite() && d.is_finite()) {
            return Check::inconclusive(ledger, "dimension exceeds cutoff", evidence);
        }
        let lower = d1.max(d2);
        let upper = d1.succ().max(d2);
        evidence["lower_bound"] = json!(lower);
        evidence["upper_bound"] = json!(upper);
        let ok = lower.le(d) == Some(true) && d.le(upper) == Some(true);
        Check::decided(ok, ledger, evidence)
    }

    pub fn verify_bounds_3_8(&self, m: &LeftTriple) -> Check {
        let ledger = self.ledger_bounds_left(m.ring());
        let (d1, d2) = (self.dpd(m.m1()), self.dpd(m.m2()));
        Self::sandwich(ledger, d1, d2, self.dpd_left_triple(m))
    }

    pub fn verify_bounds_4_8(&self, w: &RightTriple) -> Check {
        let ledger = self.ledger_bounds_right(w.ring());
        let (d1, d2) = (self.did(w.w1()), self.did(w.w2()));
        Self::sandwich(ledger, d1, d2, self.did_right_triple(w))
    }

    /// Supremum of a dimension over a family, excluding gated members.
    pub fn global_estimate(&self, alg: &Arc<Algebra>, dims: &[DimResult], kind: DimKind) -> GlobalDimEstimate {
        let mut lower = HomDim::NegInfinity;
        let mut excluded = 0;
        for d in dims {
            match d {
                Ok(h) => lower = lower.max(*h),
                Err(_) => excluded += 1,
            }
        }
        GlobalDimEstimate {
            kind,
            family_size: dims.len(),
            excluded,
            lower_bound: lower,
            claimed_upper: self.gate(alg),
            label: "estimate",
        }
    }

    fn global_sandwich(
        &self,
        ring: &TriMatRing,
        ledger: Vec<Hypothesis>,
        est: [GlobalDimEstimate; 3],
        members_t: &[DimResult],
    ) -> Check {
        let [ea, eb, et] = est;
        let certified_lower = ea.claimed_upper.max(eb.claimed_upper).max(HomDim::Finite(1));
        let certified_upper = ea.claimed_upper.succ().max(eb.claimed_upper);
        let estimate_lower = ea.lower_bound.max(eb.lower_bound).max(HomDim::Finite(1));
        let estimate_upper = ea.lower_bound.succ().max(eb.lower_bound);
        let gate_t = self.gate(ring.t());
        let mut evidence = json!({
            "estimates": { "A": ea, "B": eb, "T": et },
            "bounds": [estimate_lower, estimate_upper],
            "realized": et.lower_bound,
            "certified": {
                "A": ea.claimed_upper,
                "B": eb.claimed_upper,
                "T": gate_t,
                "bounds": [certified_lower, certified_upper],
            },
        });
        if let Some(reason) = first_failure(&ledger) {
            return Check::inconclusive(ledger, reason, evidence);
        }
        if !certified_upper.is_finite() {
            return Check::inconclusive(ledger, "global dimensions of A or B not certified", evidence);
        }
        let mut violations = Vec::new();
        for (i, d) in members_t.iter().enumerate() {
            if let Ok(d) = d {
                if d.le(certified_upper) == Some(false) {
                    violations.push(i);
                }
            }
        }
        let within = |x: HomDim| certified_lower.le(x) == Some(true) && x.le(certified_upper) == Some(true);
        let t_ok = !gate_t.is_finite() || within(gate_t);
        let components_ok =
            ea.lower_bound.le(ea.claimed_upper) != Some(false) && eb.lower_bound.le(eb.claimed_upper) != Some(false);
        evidence["violating_members"] = json!(violations);
        evidence["pinched"] = json!(estimate_lower == estimate_upper && et.lower_bound == estimate_upper);
        Check::decided(violations.is_empty() && t_ok && components_ok, ledger, evidence)
    }

    /// Global bound `max{lDPD(A), lDPD(B), 1} <= lDPD(T) <= max{lDPD(A)+1, lDPD(B)}`
    /// over module families for `A`, `B` and `T`.
    pub fn verify_bounds_3_9(
        &self,
        ring: &TriMatRing,
        family_a: &[FdModule],
        family_b: &[FdModule],
        family_t: &[LeftTriple],
    ) -> Check {
        let f = self.ring_facts(ring);
        let ledger = vec![
            Hypothesis::holds("_BU is nonzero", f.u_nonzero, json!({ "dim": ring.u().dim() })),
            Hypothesis::holds("_BU is projective", f.u_left_projective(), json!({ "pd": f.u_left_pd })),
            Hypothesis::finite("U_A has finite flat dimension", f.u_right_pd),
        ];
        if !f.u_nonzero {
            return Check::inconclusive(ledger, "precondition failed: U = 0", json!({}));
        }
        let da: Vec<DimResult> = family_a.iter().map(|m| self.dpd(m)).collect();
        let db: Vec<DimResult> = family_b.iter().map(|m| self.dpd(m)).collect();
        let dt: Vec<DimResult> = family_t.iter().map(|m| self.dpd(&m.to_module())).collect();
        let est = [
            self.global_estimate(ring.a(), &da, DimKind::Dpd),
            self.global_estimate(ring.b(), &db, DimKind::Dpd),
            self.global_estimate(ring.t(), &dt, DimKind::Dpd),
        ];
        self.global_sandwich(ring, ledger, est, &dt)
    }

    pub fn verify_bounds_4_9(
        &self,
        ring: &TriMatRing,
        family_a: &[FdModule],
        family_b: &[FdModule],
        family_t: &[RightTriple],
    ) -> Check {
        let f = self.ring_facts(ring);
        let ledger = vec![
            Hypothesis::auto("T is right coherent", "finite-dimensional algebras are Noetherian"),
            Hypothesis::holds("_BU is nonzero", f.u_nonzero, json!({ "dim": ring.u().dim() })),
            Hypothesis::holds("_BU is flat", f.u_left_projective(), json!({ "pd": f.u_left_pd })),
            Hypothesis::auto("U_A is finitely presented", "finite-dimensional"),
            Self::u_right_finite(&f),
        ];
        if !f.u_nonzero {
            return Check::inconclusive(ledger, "precondition failed: U = 0", json!({}));
        }
        let da: Vec<DimResult> = family_a.iter().map(|w| self.did(w)).collect();
        let db: Vec<DimResult> = family_b.iter().map(|w| self.did(w)).collect();
        let dt: Vec<DimResult> = family_t.iter().map(|w| self.did(&w.to_module())).collect();
        let est = [
            self.global_estimate(ring.a(), &da, DimKind::Did),
            self.global_estimate(ring.b(), &db, DimKind::Did),
            self.global_estimate(ring.t(), &dt, DimKind::Did),
        ];
        self.global_sandwich(ring, ledger, est, &dt)
    }

    /// Local and global bounds over `T(R)`: the sandwich for every triple and
    /// `max{lDPD(R), 1} <= lDPD(T(R)) <= lDPD(R) + 1`.
    pub fn verify_cor_3_10(&self, ring: &TriMatRing, family_r: &[FdModule], triples: &[LeftTriple]) -> Check {
        let ledger = vec![Hypothesis::holds("T = T(R)", is_t_of(ring), json!(null))];
        if !is_t_of(ring) {
            return Check::inconclusive(ledger, "ring is not of the form [[R,0],[R,R]]", json!({}));
        }
        let local: Vec<Check> = triples.iter().map(|m| self.verify_bounds_3_8(m)).collect();
        let global = self.verify_bounds_3_9(ring, family_r, family_r, triples);
        Self::combine(ledger, local, global)
    }

    pub fn verify_cor_4_10(&self, ring: &TriMatRing, family_r: &[FdModule], triples: &[RightTriple]) -> Check {
        let ledger = vec![Hypothesis::holds("T = T(R)", is_t_of(ring), json!(null))];
        if !is_t_of(ring) {
            return Check::inconclusive(ledger, "ring is not of the form [[R,0],[R,R]]", json!({}));
        }
        let local: Vec<Check> = triples.iter().map(|w| self.verify_bounds_4_8(w)).collect();
        let global = self.verify_bounds_4_9(ring, family_r, family_r, triples);
        Self::combine(ledger, local, global)
    }

    fn combine(ledger: Vec<Hypothesis>, local: Vec<Check>, global: Check) -> Check {
        let outcomes: Vec<Outcome> = local.iter().map(|c| c.outcome).chain([global.outcome]).collect();
        let evidence = json!({ "local": local, "global": global });
        if outcomes.contains(&Outcome::Fail) {
            Check::decided(false, ledger, evidence)
        } else if outcomes.contains(&Outcome::Inconclusive) {
            Check::inconclusive(ledger, "some part inconclusive", evidence)
        } else {
            Check::decided(true, ledger, evidence)
        }
    }

    /// Ding projective `x` has `Ext^i(x, g) = 0` for `1 <= i <= cutoff` when
    /// `g` has finite flat dimension.
    pub fn property_lemma_3_1(&self, x: &FdModule, g: &FdModule) -> Check {
        let dp = self.ding_projective(x);
        let fd_g = fd(g, self.cutoff);
        let ledger = vec![
            Hypothesis::new(
                "x is Ding projective",
                if dp == Ok(true) {
                    Status::Verified
                } else {
                    Status::Failed
                },
                bool_json(&dp),
            ),
            Hypothesis::finite("g has finite flat dimension", fd_g),
        ];
        if let Some(reason) = first_failure(&ledger) {
            return Check::inconclusive(ledger, reason, json!({}));
        }
        let exts = ext_dims(x, g, self.cutoff).expect("same category");
        Check::decided(exts[1..].iter().all(|&e| e == 0), ledger, json!({ "ext": &exts[1..] }))
    }

    /// Ding injective `x` has `Ext^i(g, x) = 0` for `1 <= i <= cutoff` when
    /// `g` has finite FP-injective dimension.
    pub fn property_lemma_4_1(&self, x: &FdModule, g: &FdModule) -> Check {
        let di = self.ding_injective(x);
        let fpid = fp_id(g, self.cutoff);
        let ledger = vec![
            Hypothesis::new(
                "x is Ding injective",
                if di == Ok(true) {
                    Status::Verified
                } else {
                    Status::Failed
                },
                bool_json(&di),
            ),
            Hypothesis::finite("g has finite FP-injective dimension", fpid),
        ];
        if let Some(reason) = first_failure(&ledger) {
            return Check::inconclusive(ledger, reason, json!({}));
        }
        let exts = ext_dims(g, x, self.cutoff).expect("same category");
        Check::decided(exts[1..].iter().all(|&e| e == 0), ledger, json!({ "ext": &exts[1..] }))
    }

    fn finite_conclusion(ledger: Vec<Hypothesis>, values: Value, dims: &[HomDim]) -> Check {
        if dims
            .iter()
            .any(|d| matches!(d, HomDim::ExceedsCutoff { periodic: true, .. }))
        {
            return Check::decided(false, ledger, values);
        }
        if dims.iter().all(|d| d.is_finite()) {
            Check::decided(true, ledger, values)
        } else {
            Check::inconclusive(ledger, "dimension exceeds cutoff", values)
        }
    }

    /// `Hom_A(U, e)` has finite injective dimension for injective `e`, and
    /// `U ⊗_A f` has finite flat dimension for flat `f`.
    pub fn property_lemma_3_2(&self, ring: &TriMatRing, e: &FdModule, f: &FdModule) -> Check {
        let facts = self.ring_facts(ring);
        let ledger = vec![
            Hypothesis::finite("_BU has finite flat dimension", facts.u_left_pd),
            Hypothesis::holds("e is an injective right A-module", is_injective(e), json!(null)),
            Hypothesis::holds("f is a flat left A-module", is_projective(f), json!(null)),
        ];
        if let Some(reason) = first_failure(&ledger) {
            return Check::inconclusive(ledger, reason, json!({}));
        }
        let hom = hom_over(ring.u(), e).expect("right A-module");
        let ten = tensor_over(ring.u(), f).expect("left A-module");
        let (i, t) = (id(&hom.module, self.cutoff), fd(&ten.module, self.cutoff));
        Self::finite_conclusion(ledger, json!({ "id_hom": i, "fd_tensor": t }), &[i, t])
    }

    /// `Hom_A(U, g)` has finite FP-injective dimension for FP-injective `g`.
    pub fn property_lemma_4_2(&self, ring: &TriMatRing, g: &FdModule) -> Check {
        let facts = self.ring_facts(ring);
        let ledger = vec![
            Hypothesis::auto(
                "A and B are right coherent",
                "finite-dimensional algebras are Noetherian",
            ),
            Hypothesis::auto("U_A is finitely presented", "finite-dimensional"),
            Hypothesis::finite("_BU has finite flat dimension", facts.u_left_pd),
            Hypothesis::holds("g is an FP-injective right A-module", is_injective(g), json!(null)),
        ];
        if let Some(reason) = first_failure(&ledger) {
            return Check::inconclusive(ledger, reason, json!({}));
        }
        let hom = hom_over(ring.u(), g).expect("right A-module");
        let v = fp_id(&hom.module, self.cutoff);
        Self::finite_conclusion(ledger, json!({ "fp_id_hom": v }), &[v])
    }

    /// `U ⊗_A x` is Ding projective for Ding projective `x`.
    pub fn property_lemma_3_7(&self, ring: &TriMatRing, x: &FdModule) -> Check {
        let mut ledger = self.ledger_bounds_left(ring);
        let dp = self.ding_projective(x);
        ledger.push(Hypothesis::new(
            "x is Ding projective",
            if dp == Ok(true) {
                Status::Verified
            } else {
                Status::Failed
            },
            bool_json(&dp),
        ));
        if let Some(reason) = first_failure(&ledger) {
            return Check::inconclusive(ledger, reason, json!({}));
        }
        let ten = tensor_over(ring.u(), x).expect("left A-module");
        match self.ding_projective(&ten.module) {
            Ok(b) => Check::decided(
                b,
                ledger,
                json!({ "tensor_dim": ten.dim(), "tensor_ding_projective": b }),
            ),
            Err(Gated(r)) => Check::inconclusive(ledger, r, json!({})),
        }
    }

    /// `Hom_A(U, h)` is Ding injective for Ding injective `h`.
    pub fn property_lemma_4_7(&self, ring: &TriMatRing, h: &FdModule) -> Check {
        let mut ledger = self.ledger_bounds_right(ring);
        let di = self.ding_injective(h);
        ledger.push(Hypothesis::new(
            "h is Ding injective",
            if di == Ok(true) {
                Status::Verified
            } else {
                Status::Failed
            },
            bool_json(&di),
        ));
        if let Some(reason) = first_failure(&ledger) {
            return Check::inconclusive(ledger, reason, json!({}));
        }
        let hom = hom_over(ring.u(), h).expect("right A-module");
        match self.ding_injective(&hom.module) {
            Ok(b) => Check::decided(b, ledger, json!({ "hom_dim": hom.dim(), "hom_ding_injective": b })),
            Err(Gated(r)) => Check::inconclusive(ledger, r, json!({})),
        }
    }
}

/// Whether `T = [[R, 0], [R, R]]` with `R` acting on itself.
pub fn is_t_of(ring: &TriMatRing) -> bool {
    ring.a() == ring.b() && *ring.u() == Bimodule::regular(ring.a())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DimKind {
    Dpd,
    Did,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalDimEstimate {
    pub kind: DimKind,
    pub family_size: usize,
    /// Gated members left out of the supremum.
    pub excluded: usize,
    /// Largest dimension realized by the family.
    pub lower_bound: HomDim,
    /// The Iwanaga-Gorenstein dimension, which equals the global dimension.
    pub claimed_upper: HomDim,
    pub label: &'static str,
}

/// A triple's dimension by both routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleDim {
    pub module: DimResult,
    pub componentwise: DimResult,
    pub agree: bool,
}

impl TripleDim {
    fn new(module: DimResult, componentwise: DimResult) -> Self {
        let agree = match (&module, &componentwise) {
            (Ok(a), Ok(b)) => a == b,
            _ => true,
        };
        Self {
            module,
            componentwise,
            agree,
        }
    }
}

impl Serialize for TripleDim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        json!({
            "module": dim_json(&self.module),
            "componentwise": dim_json(&self.componentwise),
            "agree": self.agree,
        })
        .serialize(s)
    }
}
