//! Instance files: named algebras, bimodules, rings, modules, triples,
//! families and tasks in one JSON document.
//!
//! Matrices are row-major integer arrays and are reduced mod `p`. Objects may
//! only refer to objects declared before them.

use std::path::Path;
use std::sync::Arc;

use indexmap::IndexMap;
use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use dingtri_core::algcore::{Algebra, Side};
use dingtri_core::linfield::{FMatrix, FieldPrime};
use dingtri_core::modrep::{dual_module, tensor_over, tensor_over_right, Bimodule, FdModule};
use dingtri_core::trimat::{build_ring, LeftTriple, RightTriple, TriMatRing};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unresolved reference: {0}")]
    Unresolved(String),
    #[error("{what} '{name}': {source}")]
    Invalid {
        what: &'static str,
        name: String,
        source: dingtri_core::Error,
    },
}

impl LoadError {
    pub fn exit_code(&self) -> i32 {
        match self {
            LoadError::Invalid { .. } => 2,
            LoadError::Io { .. } | LoadError::Parse(_) => 3,
            LoadError::Unresolved(_) => 4,
        }
    }
}

type Matrix = Vec<Vec<i64>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    field: u64,
    #[serde(default)]
    algebras: IndexMap<String, RawAlgebra>,
    #[serde(default)]
    bimodules: IndexMap<String, RawBimodule>,
    #[serde(default)]
    rings: IndexMap<String, RawRing>,
    #[serde(default)]
    modules: IndexMap<String, RawModule>,
    #[serde(default)]
    triples: IndexMap<String, RawTriple>,
    #[serde(default)]
    families: IndexMap<String, Vec<String>>,
    #[serde(default)]
    tasks: Vec<Task>,
}

#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum RawAlgebra {
    Explicit {
        dim: usize,
        /// `structure[i][j]` holds the coordinates of `e_i e_j`.
        structure: Vec<Vec<Vec<i64>>>,
        one: Vec<i64>,
    },
    Builtin {
        builtin: Builtin,
        #[serde(default)]
        degree: Option<usize>,
    },
}

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "snake_case")]
enum Builtin {
    Ground,
    DualNumbers,
    TruncatedPolynomial,
    UpperTriangular,
}

#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum RawBimodule {
    Regular {
        regular: String,
    },
    Explicit {
        left: String,
        right: String,
        dim: usize,
        left_action: Vec<Matrix>,
        right_action: Vec<Matrix>,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRing {
    a: String,
    b: String,
    u: String,
}

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "lowercase")]
enum RawSide {
    Left,
    Right,
}

impl From<RawSide> for Side {
    fn from(s: RawSide) -> Side {
        match s {
            RawSide::Left => Side::Left,
            RawSide::Right => Side::Right,
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum RawModule {
    Explicit {
        /// An algebra name, or a ring name for modules over the assembled ring.
        algebra: String,
        side: RawSide,
        dim: usize,
        action: Vec<Matrix>,
    },
    Free {
        free: String,
        side: RawSide,
        #[serde(default = "one")]
        copies: usize,
    },
    Dual {
        dual: String,
    },
}

fn one() -> usize {
    1
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTriple {
    ring: String,
    side: RawSide,
    #[serde(alias = "w1")]
    m1: String,
    #[serde(alias = "w2")]
    m2: String,
    /// The structure map in the canonical basis of the tensor product.
    #[serde(default)]
    phi: Option<Matrix>,
    /// Alternatively, the action of each basis element of `U`.
    #[serde(default)]
    components: Option<Vec<Matrix>>,
}

/// A task line: a command, an optional theorem id and named arguments.
#[derive(Clone, Debug, Deserialize)]
pub struct Task {
    pub command: String,
    #[serde(default)]
    pub theorem: Option<String>,
    #[serde(flatten)]
    pub args: IndexMap<String, Value>,
}

impl Task {
    pub fn arg(&self, key: &str) -> Option<&str> {
        self.args.get(key).and_then(Value::as_str)
    }

    pub fn arg_u64(&self, key: &str) -> Option<u64> {
        self.args.get(key).and_then(Value::as_u64)
    }
}

#[derive(Clone, Debug)]
pub enum Triple {
    Left(LeftTriple),
    Right(RightTriple),
}

impl Triple {
    pub fn ring(&self) -> &Arc<TriMatRing> {
        match self {
            Triple::Left(m) => m.ring(),
            Triple::Right(w) => w.ring(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub field: FieldPrime,
    pub algebras: IndexMap<String, Arc<Algebra>>,
    pub bimodules: IndexMap<String, Bimodule>,
    pub rings: IndexMap<String, Arc<TriMatRing>>,
    pub modules: IndexMap<String, FdModule>,
    pub triples: IndexMap<String, Triple>,
    pub families: IndexMap<String, Vec<String>>,
    pub tasks: Vec<Task>,
}

/// Task arguments that name other objects.
const REFERENCE_KEYS: [&str; 12] = [
    "ring", "family", "family_a", "family_b", "family_t", "family_r", "triples", "x", "g", "e", "f", "h",
];

fn matrix(f: FieldPrime, rows: usize, cols: usize, m: &Matrix) -> dingtri_core::Result<FMatrix> {
    if m.len() != rows {
        return Err(dingtri_core::Error::DimensionMismatch(format!(
            "matrix has {} rows, expected {rows}",
            m.len()
        )));
    }
    FMatrix::from_rows(f, cols, m)
}

fn square_all(f: FieldPrime, n: usize, ms: &[Matrix]) -> dingtri_core::Result<Vec<FMatrix>> {
    ms.iter().map(|m| matrix(f, n, n, m)).collect()
}

pub fn load(path: &Path) -> Result<Instance, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse(&text)
}

pub fn parse(text: &str) -> Result<Instance, LoadError> {
    let raw: RawInstance = serde_json::from_str(text).map_err(|e| LoadError::Parse(e.to_string()))?;
    build(raw)
}

fn invalid(what: &'static str, name: &str) -> impl FnOnce(dingtri_core::Error) -> LoadError {
    let name = name.to_string();
    move |source| LoadError::Invalid { what, name, source }
}

fn lookup<'a, T>(map: &'a IndexMap<String, T>, name: &str, what: &str, owner: &str) -> Result<&'a T, LoadError> {
    map.get(name)
        .ok_or_else(|| LoadError::Unresolved(format!("{what} '{name}' referenced by '{owner}'")))
}

fn build(raw: RawInstance) -> Result<Instance, LoadError> {
    let field = FieldPrime::new(raw.field).map_err(invalid("field", &raw.field.to_string()))?;

    let mut algebras = IndexMap::new();
    for (name, a) in &raw.algebras {
        let alg = match a {
            RawAlgebra::Explicit { dim, structure, one } => {
                let n = *dim;
                let shape_ok = structure.len() == n
                    && structure
                        .iter()
                        .all(|row| row.len() == n && row.iter().all(|v| v.len() == n))
                    && one.len() == n;
                if !shape_ok {
                    return Err(invalid("algebra", name)(dingtri_core::Error::InvalidAlgebra(
                        dingtri_core::algcore::Violation::Shape {
                            detail: format!("expected a {n}x{n}x{n} table and an identity of length {n}"),
                        },
                    )));
                }
                let c = structure.iter().flatten().flatten().map(|&v| field.reduce(v)).collect();
                let unit = one.iter().map(|&v| field.reduce(v)).collect();
                Algebra::new(field, n, c, unit).map_err(invalid("algebra", name))?
            }
            RawAlgebra::Builtin { builtin, degree } => match builtin {
                Builtin::Ground => Algebra::ground(field),
                Builtin::DualNumbers => Algebra::truncated_polynomial(field, 2),
                Builtin::TruncatedPolynomial => {
                    let d = degree.ok_or_else(|| {
                        LoadError::Parse(format!("algebra '{name}': truncated_polynomial needs a degree"))
                    })?;
                    if d == 0 {
                        return Err(LoadError::Parse(format!("algebra '{name}': degree must be positive")));
                    }
                    Algebra::truncated_polynomial(field, d)
                }
                Builtin::UpperTriangular => Algebra::upper_triangular(field),
            },
        };
        algebras.insert(name.clone(), Arc::new(alg));
    }

    let mut bimodules = IndexMap::new();
    for (name, b) in &raw.bimodules {
        let bim = match b {
            RawBimodule::Regular { regular } => Bimodule::regular(lookup(&algebras, regular, "algebra", name)?),
            RawBimodule::Explicit {
                left,
                right,
                dim,
                left_action,
                right_action,
            } => {
                let l = lookup(&algebras, left, "algebra", name)?;
                let r = lookup(&algebras, right, "algebra", name)?;
                let la = square_all(field, *dim, left_action).map_err(invalid("bimodule", name))?;
                let ra = square_all(field, *dim, right_action).map_err(invalid("bimodule", name))?;
                Bimodule::new(l.clone(), r.clone(), *dim, la, ra).map_err(invalid("bimodule", name))?
            }
        };
        bimodules.insert(name.clone(), bim);
    }

    let mut rings = IndexMap::new();
    for (name, r) in &raw.rings {
        let a = lookup(&algebras, &r.a, "algebra", name)?.clone();
        let b = lookup(&algebras, &r.b, "algebra", name)?.clone();
        let u = lookup(&bimodules, &r.u, "bimodule", name)?.clone();
        let ring = build_ring(a, b, u).map_err(invalid("ring", name))?;
        rings.insert(name.clone(), Arc::new(ring));
    }

    let algebra_or_ring = |name: &str, owner: &str| -> Result<Arc<Algebra>, LoadError> {
        if let Some(a) = algebras.get(name) {
            Ok(a.clone())
        } else if let Some(r) = rings.get(name) {
            Ok(r.t().clone())
        } else {
            Err(LoadError::Unresolved(format!(
                "algebra or ring '{name}' referenced by '{owner}'"
            )))
        }
    };

    let mut modules: IndexMap<String, FdModule> = IndexMap::new();
    for (name, m) in &raw.modules {
        let module = match m {
            RawModule::Explicit {
                algebra,
                side,
                dim,
                action,
            } => {
                let alg = algebra_or_ring(algebra, name)?;
                let act = square_all(field, *dim, action).map_err(invalid("module", name))?;
                FdModule::new(alg, (*side).into(), *dim, act).map_err(invalid("module", name))?
            }
            RawModule::Free { free, side, copies } => {
                FdModule::free(&algebra_or_ring(free, name)?, (*side).into(), *copies)
            }
            RawModule::Dual { dual } => dual_module(lookup(&modules, dual, "module", name)?),
        };
        modules.insert(name.clone(), module);
    }

    let mut triples = IndexMap::new();
    for (name, t) in &raw.triples {
        let ring = lookup(&rings, &t.ring, "ring", name)?;
        let first = lookup(&modules, &t.m1, "module", name)?.clone();
        let second = lookup(&modules, &t.m2, "module", name)?.clone();
        let bad = invalid("triple", name);
        let triple = match (t.side, &t.phi, &t.components) {
            (_, Some(_), Some(_)) => {
                return Err(LoadError::Parse(format!(
                    "triple '{name}': give phi or components, not both"
                )))
            }
            (RawSide::Left, _, Some(cs)) => {
                let comps = cs
                    .iter()
                    .map(|c| matrix(field, second.dim(), first.dim(), c))
                    .collect::<dingtri_core::Result<Vec<_>>>()
                    .map_err(invalid("triple", name))?;
                Triple::Left(LeftTriple::from_components(ring, first, second, &comps).map_err(bad)?)
            }
            (RawSide::Right, _, Some(cs)) => {
                let comps = cs
                    .iter()
                    .map(|c| matrix(field, first.dim(), second.dim(), c))
                    .collect::<dingtri_core::Result<Vec<_>>>()
                    .map_err(invalid("triple", name))?;
                Triple::Right(RightTriple::from_components(ring, first, second, &comps).map_err(bad)?)
            }
            (RawSide::Left, phi, None) => {
                let cols = tensor_over(ring.u(), &first).map_err(invalid("triple", name))?.dim();
                let phi = match phi {
                    Some(p) => matrix(field, second.dim(), cols, p).map_err(invalid("triple", name))?,
                    None => FMatrix::zeros(field, second.dim(), cols),
                };
                Triple::Left(LeftTriple::new(ring, first, second, phi).map_err(bad)?)
            }
            (RawSide::Right, phi, None) => {
                let cols = tensor_over_right(&second, ring.u())
                    .map_err(invalid("triple", name))?
                    .dim();
                let phi = match phi {
                    Some(p) => matrix(field, first.dim(), cols, p).map_err(invalid("triple", name))?,
                    None => FMatrix::zeros(field, first.dim(), cols),
                };
                Triple::Right(RightTriple::new(ring, first, second, phi).map_err(bad)?)
            }
        };
        triples.insert(name.clone(), triple);
    }

    for (name, members) in &raw.families {
        for m in members {
            if !modules.contains_key(m) && !triples.contains_key(m) {
                return Err(LoadError::Unresolved(format!("member '{m}' of family '{name}'")));
            }
        }
    }

    for (i, task) in raw.tasks.iter().enumerate() {
        for key in REFERENCE_KEYS {
            let Some(target) = task.arg(key) else { continue };
            let known = rings.contains_key(target)
                || modules.contains_key(target)
                || triples.contains_key(target)
                || raw.families.contains_key(target);
            if !known {
                return Err(LoadError::Unresolved(format!(
                    "'{target}' in argument '{key}' of task {i}"
                )));
            }
        }
    }

    Ok(Instance {
        field,
        algebras,
        bimodules,
        rings,
        modules,
        triples,
        families: raw.families,
        tasks: raw.tasks,
    })
}
