//! The `analyze`, `verify` and `fuzz` commands, each producing one JSON
//! record per checked object.

use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use dingtri_core::dinghom::{dim_json, Check, Ding, DingReport, Hypothesis, Outcome};
use dingtri_core::fuzz;
use dingtri_core::homalg::{id, is_injective, is_projective, pd};
use dingtri_core::modrep::FdModule;
use dingtri_core::par::{self, Exec};
use dingtri_core::trimat::{is_injective_triple, is_projective_triple, LeftTriple, RightTriple, TriMatRing};

use crate::instance::{Instance, Task, Triple};

pub const THEOREMS: [&str; 16] = [
    "3.4", "3.8", "3.9", "4.4", "4.8", "4.9", "cor3.5", "cor4.5", "cor3.10", "cor4.10", "lem3.1", "lem3.2", "lem3.7",
    "lem4.1", "lem4.2", "lem4.7",
];

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("unknown theorem id '{0}'")]
    UnknownTheorem(String),
    #[error("missing required object: {0}")]
    Missing(String),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::UnknownTheorem(_) => 2,
            CommandError::Missing(_) => 4,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub cutoff: usize,
    pub timings: bool,
    pub exec: Exec,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            cutoff: 32,
            timings: false,
            exec: Exec::Parallel,
        }
    }
}

/// One line of a report.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub task: String,
    pub instance: String,
    pub verdict: Value,
    pub hypothesis_ledger: Vec<Hypothesis>,
    pub evidence: Value,
    pub timings: Option<Value>,
}

impl Record {
    pub fn outcome(&self) -> Option<Outcome> {
        match self.verdict.as_str()? {
            "pass" => Some(Outcome::Pass),
            "fail" => Some(Outcome::Fail),
            "inconclusive" => Some(Outcome::Inconclusive),
            _ => None,
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

fn timed<F: FnOnce() -> Record>(opts: &Options, f: F) -> Record {
    let start = Instant::now();
    let mut record = f();
    if opts.timings {
        record.timings = Some(json!({ "ms": start.elapsed().as_secs_f64() * 1e3 }));
    }
    record
}

fn check_record(task: &str, instance: &str, check: Check) -> Record {
    Record {
        task: task.to_string(),
        instance: instance.to_string(),
        verdict: json!(check.outcome),
        hypothesis_ledger: check.hypothesis_ledger,
        evidence: check.evidence,
        timings: None,
    }
}

fn merge_ledgers(a: Vec<Hypothesis>, b: Vec<Hypothesis>) -> Vec<Hypothesis> {
    let mut out = a;
    for h in b {
        if !out.iter().any(|x| x.hypothesis == h.hypothesis) {
            out.push(h);
        }
    }
    out
}

fn analyze_module(ding: &Ding, m: &FdModule, cutoff: usize) -> (Value, Vec<Hypothesis>, Value) {
    let dp: DingReport = ding.is_ding_projective(m);
    let di: DingReport = ding.is_ding_injective(m);
    let verdict = json!({
        "projective": is_projective(m),
        "injective": is_injective(m),
        "ding_projective": dp.verdict,
        "ding_injective": di.verdict,
    });
    let evidence = json!({
        "algebra_dim": m.alg().dim(),
        "side": m.side().to_string(),
        "dim": m.dim(),
        "pd": pd(m, cutoff),
        "id": id(m, cutoff),
        "dpd": dim_json(&ding.dpd(m)),
        "did": dim_json(&ding.did(m)),
        "ding_projective": dp.evidence,
        "ding_injective": di.evidence,
        "banner": dp.banner,
    });
    (
        verdict,
        merge_ledgers(dp.hypothesis_ledger, di.hypothesis_ledger),
        evidence,
    )
}

fn ring_name(inst: &Instance, ring: &Arc<TriMatRing>) -> String {
    inst.rings
        .iter()
        .find(|(_, r)| Arc::ptr_eq(r, ring))
        .map(|(n, _)| n.clone())
        .unwrap_or_default()
}

fn analyze_left(ding: &Ding, m: &LeftTriple, cutoff: usize) -> (Value, Vec<Hypothesis>, Value) {
    let x = m.to_module();
    let classified = ding.classify_ding_projective_triple(m);
    let (_, module_ledger, module_evidence) = analyze_module(ding, &x, cutoff);
    let di = ding.is_ding_injective(&x);
    let verdict = json!({
        "projective": is_projective(&x),
        "injective": is_injective(&x),
        "ding_projective": classified.verdict,
        "ding_injective": di.verdict,
    });
    let evidence = json!({
        "side": "left",
        "dims": [m.m1().dim(), m.m2().dim()],
        "pd": module_evidence["pd"],
        "id": module_evidence["id"],
        "dpd": ding.dpd_left_triple(m),
        "did": module_evidence["did"],
        "structure": is_projective_triple(m),
        "classifier": classified.evidence,
        "direct": module_evidence["ding_projective"],
        "banner": classified.banner,
    });
    (
        verdict,
        merge_ledgers(classified.hypothesis_ledger, module_ledger),
        evidence,
    )
}

fn analyze_right(ding: &Ding, w: &RightTriple, cutoff: usize) -> (Value, Vec<Hypothesis>, Value) {
    let x = w.to_module();
    let classified = ding.classify_ding_injective_triple(w);
    let (_, module_ledger, module_evidence) = analyze_module(ding, &x, cutoff);
    let dp = ding.is_ding_projective(&x);
    let verdict = json!({
        "projective": is_projective(&x),
        "injective": is_injective(&x),
        "ding_projective": dp.verdict,
        "ding_injective": classified.verdict,
    });
    let evidence = json!({
        "side": "right",
        "dims": [w.w1().dim(), w.w2().dim()],
        "pd": module_evidence["pd"],
        "id": module_evidence["id"],
        "dpd": module_evidence["dpd"],
        "did": ding.did_right_triple(w),
        "structure": is_injective_triple(w),
        "classifier": classified.evidence,
        "direct": module_evidence["ding_injective"],
        "banner": classified.banner,
    });
    (
        verdict,
        merge_ledgers(classified.hypothesis_ledger, module_ledger),
        evidence,
    )
}

enum Object<'a> {
    Module(&'a FdModule),
    Triple(&'a Triple),
}

/// Every module, then every triple, in declaration order.
pub fn analyze(inst: &Instance, opts: &Options) -> Vec<Record> {
    let ding = Ding::new(opts.cutoff);
    let objects: Vec<(&String, Object)> = inst
        .modules
        .iter()
        .map(|(n, m)| (n, Object::Module(m)))
        .chain(inst.triples.iter().map(|(n, t)| (n, Object::Triple(t))))
        .collect();
    par::map(opts.exec, &objects, |(name, obj)| {
        timed(opts, || {
            let (verdict, ledger, mut evidence) = match obj {
                Object::Module(m) => analyze_module(&ding, m, opts.cutoff),
                Object::Triple(Triple::Left(m)) => analyze_left(&ding, m, opts.cutoff),
                Object::Triple(Triple::Right(w)) => analyze_right(&ding, w, opts.cutoff),
            };
            if let Object::Triple(t) = obj {
                evidence["ring"] = json!(ring_name(inst, t.ring()));
            }
            Record {
                task: "analyze".into(),
                instance: name.to_string(),
                verdict,
                hypothesis_ledger: ledger,
                evidence,
                timings: None,
            }
        })
    })
}

fn left_triples<'a>(inst: &'a Instance, family: Option<&str>) -> Result<Vec<(String, &'a LeftTriple)>, CommandError> {
    let names: Vec<&String> = match family {
        Some(f) => family_members(inst, f)?.iter().collect(),
        None => inst.triples.keys().collect(),
    };
    Ok(names
        .into_iter()
        .filter_map(|n| match inst.triples.get(n) {
            Some(Triple::Left(m)) => Some((n.clone(), m)),
            _ => None,
        })
        .collect())
}

fn right_triples<'a>(inst: &'a Instance, family: Option<&str>) -> Result<Vec<(String, &'a RightTriple)>, CommandError> {
    let names: Vec<&String> = match family {
        Some(f) => family_members(inst, f)?.iter().collect(),
        None => inst.triples.keys().collect(),
    };
    Ok(names
        .into_iter()
        .filter_map(|n| match inst.triples.get(n) {
            Some(Triple::Right(w)) => Some((n.clone(), w)),
            _ => None,
        })
        .collect())
}

fn family_members<'a>(inst: &'a Instance, name: &str) -> Result<&'a Vec<String>, CommandError> {
    inst.families
        .get(name)
        .ok_or_else(|| CommandError::Missing(format!("family '{name}'")))
}

fn family_modules(inst: &Instance, name: &str) -> Result<Vec<FdModule>, CommandError> {
    Ok(family_members(inst, name)?
        .iter()
        .filter_map(|n| inst.modules.get(n).cloned())
        .collect())
}

fn required<'a>(task: &'a Task, key: &str) -> Result<&'a str, CommandError> {
    task.arg(key).ok_or_else(|| {
        CommandError::Missing(format!(
            "argument '{key}' of a {} task",
            task.theorem.as_deref().unwrap_or("?")
        ))
    })
}

fn module<'a>(inst: &'a Instance, task: &Task, key: &str) -> Result<&'a FdModule, CommandError> {
    let name = required(task, key)?;
    inst.modules
        .get(name)
        .ok_or_else(|| CommandError::Missing(format!("module '{name}'")))
}

fn ring<'a>(inst: &'a Instance, task: &Task) -> Result<&'a Arc<TriMatRing>, CommandError> {
    let name = required(task, "ring")?;
    inst.rings
        .get(name)
        .ok_or_else(|| CommandError::Missing(format!("ring '{name}'")))
}

fn task_name(task: &Task, index: usize) -> String {
    task.arg("name")
        .map(str::to_string)
        .unwrap_or_else(|| format!("task-{index}"))
}

/// Check one verifier per applicable object. Triple theorems run on every
/// triple of the matching side (or on the family named by a matching task);
/// the rest run once per matching task.
pub fn verify(inst: &Instance, theorem: &str, opts: &Options) -> Result<Vec<Record>, CommandError> {
    if !THEOREMS.contains(&theorem) {
        return Err(CommandError::UnknownTheorem(theorem.to_string()));
    }
    let ding = Ding::new(opts.cutoff);
    let label = format!("verify {theorem}");
    let tasks: Vec<(usize, &Task)> = inst
        .tasks
        .iter()
        .enumerate()
        .filter(|(_, t)| t.command == "verify" && t.theorem.as_deref() == Some(theorem))
        .collect();
    let family = tasks.first().and_then(|(_, t)| t.arg("triples"));

    let records = match theorem {
        "3.4" | "3.8" | "cor3.5" => {
            let items = left_triples(inst, family)?;
            par::map(opts.exec, &items, |(name, m)| {
                timed(opts, || {
                    let check = match theorem {
                        "3.4" => ding.verify_thm_3_4(m),
                        "3.8" => ding.verify_bounds_3_8(m),
                        _ => ding.verify_cor_3_5(m),
                    };
                    check_record(&label, name, check)
                })
            })
        }
        "4.4" | "4.8" | "cor4.5" => {
            let items = right_triples(inst, family)?;
            par::map(opts.exec, &items, |(name, w)| {
                timed(opts, || {
                    let check = match theorem {
                        "4.4" => ding.verify_thm_4_4(w),
                        "4.8" => ding.verify_bounds_4_8(w),
                        _ => ding.verify_cor_4_5(w),
                    };
                    check_record(&label, name, check)
                })
            })
        }
        _ => {
            let mut out = Vec::new();
            for (i, task) in &tasks {
                let start = Instant::now();
                let check = task_check(inst, &ding, theorem, task)?;
                let mut record = check_record(&label, &task_name(task, *i), check);
                if opts.timings {
                    record.timings = Some(json!({ "ms": start.elapsed().as_secs_f64() * 1e3 }));
                }
                out.push(record);
            }
            out
        }
    };
    if records.is_empty() {
        return Err(CommandError::Missing(format!("no objects for theorem {theorem}")));
    }
    Ok(records)
}

fn task_check(inst: &Instance, ding: &Ding, theorem: &str, task: &Task) -> Result<Check, CommandError> {
    Ok(match theorem {
        "3.9" => {
            let r = ring(inst, task)?;
            let fa = family_modules(inst, required(task, "family_a")?)?;
            let fb = family_modules(inst, required(task, "family_b")?)?;
            let ft: Vec<LeftTriple> = left_triples(inst, Some(required(task, "family_t")?))?
                .into_iter()
                .map(|(_, m)| m.clone())
                .collect();
            ding.verify_bounds_3_9(r, &fa, &fb, &ft)
        }
        "4.9" => {
            let r = ring(inst, task)?;
            let fa = family_modules(inst, required(task, "family_a")?)?;
            let fb = family_modules(inst, required(task, "family_b")?)?;
            let ft: Vec<RightTriple> = right_triples(inst, Some(required(task, "family_t")?))?
                .into_iter()
                .map(|(_, w)| w.clone())
                .collect();
            ding.verify_bounds_4_9(r, &fa, &fb, &ft)
        }
        "cor3.10" => {
            let r = ring(inst, task)?;
            let fr = family_modules(inst, required(task, "family_r")?)?;
            let ts: Vec<LeftTriple> = left_triples(inst, task.arg("triples"))?
                .into_iter()
                .filter(|(_, m)| Arc::ptr_eq(m.ring(), r))
                .map(|(_, m)| m.clone())
                .collect();
            ding.verify_cor_3_10(r, &fr, &ts)
        }
        "cor4.10" => {
            let r = ring(inst, task)?;
            let fr = family_modules(inst, required(task, "family_r")?)?;
            let ts: Vec<RightTriple> = right_triples(inst, task.arg("triples"))?
                .into_iter()
                .filter(|(_, w)| Arc::ptr_eq(w.ring(), r))
                .map(|(_, w)| w.clone())
                .collect();
            ding.verify_cor_4_10(r, &fr, &ts)
        }
        "lem3.1" => ding.property_lemma_3_1(module(inst, task, "x")?, module(inst, task, "g")?),
        "lem4.1" => ding.property_lemma_4_1(module(inst, task, "x")?, module(inst, task, "g")?),
        "lem3.2" => ding.property_lemma_3_2(ring(inst, task)?, module(inst, task, "e")?, module(inst, task, "f")?),
        "lem4.2" => ding.property_lemma_4_2(ring(inst, task)?, module(inst, task, "g")?),
        "lem3.7" => ding.property_lemma_3_7(ring(inst, task)?, module(inst, task, "x")?),
        "lem4.7" => ding.property_lemma_4_7(ring(inst, task)?, module(inst, task, "h")?),
        other => return Err(CommandError::UnknownTheorem(other.to_string())),
    })
}

#[derive(Clone, Debug)]
pub struct FuzzParams {
    pub ring: Option<String>,
    pub seed: u64,
    pub count: usize,
    pub max_dim: usize,
}

/// The ring to fuzz over: the named one, else the ring of the first fuzz
/// task, else the first ring in the file.
pub fn fuzz_ring<'a>(
    inst: &'a Instance,
    name: Option<&str>,
) -> Result<(&'a String, &'a Arc<TriMatRing>), CommandError> {
    let from_task = inst
        .tasks
        .iter()
        .find(|t| t.command == "fuzz")
        .and_then(|t| t.arg("ring"));
    match name.or(from_task) {
        Some(n) => inst
            .rings
            .get_key_value(n)
            .ok_or_else(|| CommandError::Missing(format!("ring '{n}'"))),
        None => inst
            .rings
            .first()
            .ok_or_else(|| CommandError::Missing("a ring to fuzz over".into())),
    }
}

/// Random left and right triples over one ring, each checked against the
/// characterizations and the dimension bounds. Four records per case.
pub fn fuzz(inst: &Instance, params: &FuzzParams, opts: &Options) -> Result<Vec<Record>, CommandError> {
    let (name, ring) = fuzz_ring(inst, params.ring.as_deref())?;
    let ding = Ding::new(opts.cutoff);
    let indices: Vec<usize> = (0..params.count).collect();
    let per_case = par::map(opts.exec, &indices, |&k| {
        let case = fuzz::generate(ring, params.seed, k, params.max_dim);
        let instance = format!("{name}/seed-{}/case-{k}", params.seed);
        let left_dims = json!([case.left.m1().dim(), case.left.m2().dim(), case.left.phi().rank()]);
        let right_dims = json!([case.right.w1().dim(), case.right.w2().dim(), case.right.phi().rank()]);
        let run = |theorem: &str, f: &dyn Fn() -> Check, dims: &Value| {
            timed(opts, || {
                let mut r = check_record(&format!("fuzz {theorem}"), &instance, f());
                r.evidence["generated"] = json!({ "dims_and_phi_rank": dims });
                r
            })
        };
        vec![
            run("3.4", &|| ding.verify_thm_3_4(&case.left), &left_dims),
            run("3.8", &|| ding.verify_bounds_3_8(&case.left), &left_dims),
            run("4.4", &|| ding.verify_thm_4_4(&case.right), &right_dims),
            run("4.8", &|| ding.verify_bounds_4_8(&case.right), &right_dims),
        ]
    });
    Ok(per_case.into_iter().flatten().collect())
}

/// Exit status for a list of verifier records: 1 on any failure, 5 when
/// every record is inconclusive, 0 otherwise.
pub fn verify_status(records: &[Record]) -> i32 {
    let outcomes: Vec<Option<Outcome>> = records.iter().map(Record::outcome).collect();
    if outcomes.contains(&Some(Outcome::Fail)) {
        1
    } else if !outcomes.is_empty() && outcomes.iter().all(|o| *o == Some(Outcome::Inconclusive)) {
        5
    } else {
        0
    }
}

/// Counts of pass, fail and inconclusive records.
pub fn tally(records: &[Record]) -> (usize, usize, usize) {
    let mut t = (0, 0, 0);
    for r in records {
        match r.outcome() {
            Some(Outcome::Pass) => t.0 += 1,
            Some(Outcome::Fail) => t.1 += 1,
            Some(Outcome::Inconclusive) => t.2 += 1,
            None => {}
        }
    }
    t
}
