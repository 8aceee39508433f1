//! Free covers, syzygies, projectivity, Ext and the classical homological
//! dimensions.
//!
//! Syzygies used for dimension counting are *reduced*: after taking the kernel
//! of a generator cover, every projective direct summand is split off. This
//! keeps modules small along a resolution and turns "is `Ω^n M` projective?"
//! into "is the reduced `Ω^n M` zero?". Schanuel's lemma makes the answers
//! independent of which covers were used.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::algcore::{Algebra, Side};
use crate::error::Result;
use crate::linfield::{FMatrix, Subspace};
use crate::modrep::{
    cover_matrix, dual_module, hom_basis, hom_dim, irredundant_generators, is_isomorphic, kernel_module, submodule,
    FdModule, IsoVerdict, ModuleMorphism,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomDim {
    /// Dimension of the zero module.
    NegInfinity,
    Finite(usize),
    /// No finite value found up to `cutoff`. `periodic` means a syzygy repeated
    /// up to isomorphism, which proves the dimension is infinite.
    ExceedsCutoff {
        cutoff: usize,
        periodic: bool,
    },
}

impl HomDim {
    pub fn is_finite(self) -> bool {
        !matches!(self, HomDim::ExceedsCutoff { .. })
    }

    pub fn value(self) -> Option<usize> {
        match self {
            HomDim::Finite(n) => Some(n),
            _ => None,
        }
    }

    /// Maximum with `NegInfinity` as the identity; an unresolved value wins.
    pub fn max(self, other: HomDim) -> HomDim {
        use HomDim::*;
        match (self, other) {
            (NegInfinity, x) | (x, NegInfinity) => x,
            (Finite(a), Finite(b)) => Finite(a.max(b)),
            (e @ ExceedsCutoff { .. }, Finite(_)) | (Finite(_), e @ ExceedsCutoff { .. }) => e,
            (
                ExceedsCutoff {
                    cutoff: a,
                    periodic: pa,
                },
                ExceedsCutoff {
                    cutoff: b,
                    periodic: pb,
                },
            ) => ExceedsCutoff {
                cutoff: a.max(b),
                periodic: pa || pb,
            },
        }
    }

    /// `self + 1`, keeping `NegInfinity` fixed.
    pub fn succ(self) -> HomDim {
        match self {
            HomDim::Finite(n) => HomDim::Finite(n + 1),
            other => other,
        }
    }

    /// `self <= other` when it can be decided.
    pub fn le(self, other: HomDim) -> Option<bool> {
        use HomDim::*;
        match (self, other) {
            (NegInfinity, _) => Some(true),
            (_, NegInfinity) => Some(false),
            (Finite(a), Finite(b)) => Some(a <= b),
            (Finite(_), ExceedsCutoff { periodic: true, .. }) => Some(true),
            (ExceedsCutoff { periodic: true, .. }, Finite(_)) => Some(false),
            _ => None,
        }
    }
}

impl fmt::Display for HomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomDim::NegInfinity => write!(f, "-inf"),
            HomDim::Finite(n) => write!(f, "{n}"),
            HomDim::ExceedsCutoff { cutoff, periodic: true } => write!(f, ">{cutoff} (periodic, infinite)"),
            HomDim::ExceedsCutoff {
                cutoff,
                periodic: false,
            } => write!(f, ">{cutoff} (unknown)"),
        }
    }
}

impl Serialize for HomDim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match self {
            HomDim::NegInfinity => s.serialize_str("-inf"),
            HomDim::Finite(n) => s.serialize_u64(*n as u64),
            HomDim::ExceedsCutoff { cutoff, periodic } => {
                let mut map = s.serialize_map(Some(2))?;
                map.serialize_entry("exceeds_cutoff", cutoff)?;
                map.serialize_entry("provably_infinite", periodic)?;
                map.end()
            }
        }
    }
}

/// Which free module covers a module when resolving it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cover {
    /// `Λ^{dim m}`, generator `i` onto basis vector `i`.
    Canonical,
    /// One generator per element of an irredundant generating set.
    Generators,
    /// `Λ^{2 dim m}`: the canonical cover taken twice.
    Padded,
}

pub fn cover(m: &FdModule, kind: Cover) -> ModuleMorphism {
    let basis = |reps: usize| -> Vec<Vec<u32>> {
        (0..reps * m.dim())
            .map(|i| {
                let mut v = vec![0; m.dim()];
                v[i % m.dim()] = 1;
                v
            })
            .collect()
    };
    let gens = match kind {
        Cover::Canonical => basis(1),
        Cover::Padded => basis(2),
        Cover::Generators => irredundant_generators(m),
    };
    let free = FdModule::free(m.alg(), m.side(), gens.len());
    ModuleMorphism::from_parts(free, m.clone(), cover_matrix(m, &gens))
}

pub fn free_cover(m: &FdModule) -> ModuleMorphism {
    cover(m, Cover::Canonical)
}

pub fn generator_cover(m: &FdModule) -> ModuleMorphism {
    cover(m, Cover::Generators)
}

/// Kernel of the canonical free cover.
pub fn syzygy(m: &FdModule) -> FdModule {
    syzygy_with(m, Cover::Canonical)
}

pub fn syzygy_with(m: &FdModule, kind: Cover) -> FdModule {
    kernel_module(&cover(m, kind)).0
}

/// Syzygy with every projective summand removed.
pub fn reduced_syzygy(m: &FdModule) -> FdModule {
    strip_projective_summands(&syzygy_with(m, Cover::Generators)).0
}

/// Spanning set of the endomorphisms of `m` that factor through a projective
/// module: `Λ -> m` (determined by an element of `m`) after `m -> Λ`.
fn projective_endomorphisms(m: &FdModule) -> Vec<FMatrix> {
    let reg = FdModule::free(m.alg(), m.side(), 1);
    let to_free = hom_basis(m, &reg).expect("same category");
    if to_free.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(m.dim() * to_free.len());
    for t in 0..m.dim() {
        let mut unit = vec![0; m.dim()];
        unit[t] = 1;
        let from_free = cover_matrix(m, &[unit]);
        for h in &to_free {
            let phi = from_free.mul(h);
            if !phi.is_zero() {
                out.push(phi);
            }
        }
    }
    out
}

/// Whether every element of the span of `gens` is nilpotent, decided by
/// checking that some power of the ideal they span vanishes.
fn spans_nilpotent_ideal(gens: &[FMatrix], dim: usize) -> bool {
    let f = gens[0].field();
    let mut power = Subspace::from_vectors(f, dim * dim, &gens.iter().map(FMatrix::vectorize).collect::<Vec<_>>());
    loop {
        if power.dim() == 0 {
            return true;
        }
        let mut products = Vec::with_capacity(power.dim() * gens.len());
        for k in 0..power.dim() {
            let x = FMatrix::from_vec(f, dim, dim, power.basis_vector(k)).expect("shape");
            for g in gens {
                products.push(x.mul(g).vectorize());
            }
        }
        let next = Subspace::from_vectors(f, dim * dim, &products);
        if next.dim() == power.dim() {
            return false;
        }
        power = next;
    }
}

const STRIP_SEED: u64 = 0x5eed_0001;

fn find_non_nilpotent(gens: &[FMatrix], dim: usize, rng: &mut ChaCha8Rng) -> Option<FMatrix> {
    if gens.is_empty() {
        return None;
    }
    if let Some(g) = gens.iter().find(|g| !g.is_nilpotent()) {
        return Some(g.clone());
    }
    let f = gens[0].field();
    let random_element = |rng: &mut ChaCha8Rng| {
        let coeffs: Vec<u32> = gens.iter().map(|_| rng.gen_range(0..f.p())).collect();
        FMatrix::combination(f, (dim, dim), gens, &coeffs)
    };
    for _ in 0..16 {
        let x = random_element(rng);
        if !x.is_nilpotent() {
            return Some(x);
        }
    }
    if spans_nilpotent_ideal(gens, dim) {
        return None;
    }
    // A non-nil ideal: a uniform element is non-nilpotent with probability >= 1/2.
    (0..256).map(|_| random_element(rng)).find(|x| !x.is_nilpotent())
}

/// Splits off projective summands until none is left. The flag is false only
/// if the randomized search gave up on an ideal known not to be nilpotent.
pub fn strip_projective_summands(m: &FdModule) -> (FdModule, bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(STRIP_SEED);
    let mut cur = m.clone();
    loop {
        if cur.dim() == 0 {
            return (cur, true);
        }
        let gens = projective_endomorphisms(&cur);
        if gens.is_empty() {
            return (cur, true);
        }
        match find_non_nilpotent(&gens, cur.dim(), &mut rng) {
            Some(phi) => {
                // Fitting: cur = im(phi^n) ⊕ ker(phi^n), the image being projective.
                let psi = phi.pow(cur.dim() as u64);
                cur = submodule(&cur, &psi.kernel()).0;
            }
            None if spans_nilpotent_ideal(&gens, cur.dim()) => return (cur, true),
            None => return (cur, false),
        }
    }
}

/// True iff a free cover of `m` splits.
pub fn is_projective(m: &FdModule) -> bool {
    if m.dim() == 0 {
        return true;
    }
    let f = m.field();
    let n = m.alg().dim();
    let gens = irredundant_generators(m);
    let pi = cover_matrix(m, &gens);
    let reg = FdModule::free(m.alg(), m.side(), 1);
    let to_free = hom_basis(m, &reg).expect("same category");
    if to_free.is_empty() {
        return false;
    }
    let mut columns = Vec::with_capacity(gens.len() * to_free.len());
    for k in 0..gens.len() {
        let block = pi.block(0, k * n, m.dim(), n);
        for h in &to_free {
            columns.push(block.mul(h).vectorize());
        }
    }
    let system = FMatrix::from_columns(f, m.dim() * m.dim(), &columns);
    let target = FMatrix::column_vector(f, &FMatrix::identity(f, m.dim()).vectorize());
    system.solve(&target).expect("shape").is_some()
}

/// Injective iff the field dual is projective.
pub fn is_injective(m: &FdModule) -> bool {
    is_projective(&dual_module(m))
}

pub fn pd(m: &FdModule, cutoff: usize) -> HomDim {
    if m.dim() == 0 {
        return HomDim::NegInfinity;
    }
    if is_projective(m) {
        return HomDim::Finite(0);
    }
    let (mut cur, _) = strip_projective_summands(m);
    let mut history = vec![cur.clone()];
    for n in 1..=cutoff {
        let (next, complete) = strip_projective_summands(&syzygy_with(&cur, Cover::Generators));
        if next.dim() == 0 || (!complete && is_projective(&next)) {
            return HomDim::Finite(n);
        }
        let repeats = history
            .iter()
            .any(|h| h.dim() == next.dim() && matches!(is_isomorphic(h, &next), Ok(IsoVerdict::Yes(_))));
        if repeats {
            return HomDim::ExceedsCutoff { cutoff, periodic: true };
        }
        history.push(next.clone());
        cur = next;
    }
    HomDim::ExceedsCutoff {
        cutoff,
        periodic: false,
    }
}

/// Projective dimension along raw (unreduced) syzygies of the chosen cover.
/// Without reduction there is no periodicity detection.
pub fn pd_with_cover(m: &FdModule, cutoff: usize, kind: Cover) -> HomDim {
    if m.dim() == 0 {
        return HomDim::NegInfinity;
    }
    let mut cur = m.clone();
    for n in 0..=cutoff {
        if is_projective(&cur) {
            return HomDim::Finite(n);
        }
        cur = syzygy_with(&cur, kind);
    }
    HomDim::ExceedsCutoff {
        cutoff,
        periodic: false,
    }
}

pub fn id(m: &FdModule, cutoff: usize) -> HomDim {
    pd(&dual_module(m), cutoff)
}

/// Flat dimension; flat and projective agree for finite-dimensional modules.
pub fn fd(m: &FdModule, cutoff: usize) -> HomDim {
    pd(m, cutoff)
}

/// FP-injective dimension; equals `id` over a Noetherian algebra.
pub fn fp_id(m: &FdModule, cutoff: usize) -> HomDim {
    id(m, cutoff)
}

/// A truncated free resolution `F_len -> ... -> F_0 -> target -> 0`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub target: FdModule,
    /// `differentials[0]: F_0 -> target`, `differentials[j]: F_j -> F_{j-1}`.
    pub differentials: Vec<ModuleMorphism>,
}

impl Resolution {
    pub fn new(m: &FdModule, length: usize, kind: Cover) -> Self {
        let mut differentials = Vec::with_capacity(length + 1);
        let d0 = cover(m, kind);
        let (mut k, mut incl) = kernel_module(&d0);
        differentials.push(d0);
        for _ in 0..length {
            let c = cover(&k, kind);
            let d =
                ModuleMorphism::from_parts(c.source().clone(), incl.target().clone(), incl.matrix().mul(c.matrix()));
            let (k2, incl2) = kernel_module(&c);
            differentials.push(d);
            k = k2;
            incl = ModuleMorphism::from_parts(k.clone(), c.source().clone(), incl2.matrix().clone());
        }
        Self {
            target: m.clone(),
            differentials,
        }
    }

    pub fn length(&self) -> usize {
        self.differentials.len().saturating_sub(1)
    }

    /// Number of free generators of each `F_j`.
    pub fn ranks(&self) -> Vec<usize> {
        let n = self.target.alg().dim();
        self.differentials.iter().map(|d| d.source().dim() / n).collect()
    }

    /// Surjectivity onto the target, vanishing composites and exactness at
    /// every inner joint.
    pub fn verify(&self) -> bool {
        let Some(d0) = self.differentials.first() else {
            return true;
        };
        if !d0.is_epi() {
            return false;
        }
        for w in self.differentials.windows(2) {
            let (outer, inner) = (&w[0], &w[1]);
            if !outer.matrix().mul(inner.matrix()).is_zero() {
                return false;
            }
            let kernel_dim = outer.source().dim() - outer.rank();
            if inner.rank() != kernel_dim {
                return false;
            }
        }
        true
    }
}

/// Coordinates of `d(gen_k)` in block `l` of a map between free modules.
fn free_map_entry(d: &FMatrix, one: &[u32], n: usize, l: usize, k: usize) -> Vec<u32> {
    let f = d.field();
    let mut out = vec![0u32; n];
    for (r, o) in out.iter_mut().enumerate() {
        let row = d.row(l * n + r);
        let mut acc = 0;
        for (c, &x) in one.iter().enumerate() {
            acc = f.add(acc, f.mul(row[k * n + c], x));
        }
        *o = acc;
    }
    out
}

/// The map `Hom(F_{j-1}, n) -> Hom(F_j, n)` induced by `d: F_j -> F_{j-1}`,
/// with `Hom(Λ^g, n) = n^g`.
fn induced_cochain_map(d: &ModuleMorphism, n: &FdModule) -> FMatrix {
    let alg = n.alg();
    let na = alg.dim();
    let (gs, gt) = (d.source().dim() / na, d.target().dim() / na);
    let dn = n.dim();
    let mut out = FMatrix::zeros(n.field(), gs * dn, gt * dn);
    for k in 0..gs {
        for l in 0..gt {
            let a = free_map_entry(d.matrix(), alg.one(), na, l, k);
            if a.iter().any(|&x| x != 0) {
                out.set_block(k * dn, l * dn, &n.act_element(&a));
            }
        }
    }
    out
}

/// `dim Ext^i(m, n)` as cohomology of `Hom(F, n)` over a free resolution.
pub fn ext_dim(m: &FdModule, n: &FdModule, i: usize) -> Result<usize> {
    if i == 0 {
        return hom_dim(m, n);
    }
    if !m.same_category(n) {
        return Err(crate::Error::AlgebraMismatch);
    }
    let res = Resolution::new(m, i + 1, Cover::Generators);
    let ranks = res.ranks();
    let into = induced_cochain_map(&res.differentials[i + 1], n).rank();
    let from = induced_cochain_map(&res.differentials[i], n).rank();
    Ok(ranks[i] * n.dim() - into - from)
}

/// `[dim Ext^0(m, n), ..., dim Ext^max_i(m, n)]` by dimension shifting along
/// reduced syzygies.
pub fn ext_dims(m: &FdModule, n: &FdModule, max_i: usize) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(max_i + 1);
    let mut hom_cur = hom_dim(m, n)?;
    out.push(hom_cur);
    let mut cur = m.clone();
    for _ in 1..=max_i {
        if cur.dim() == 0 {
            out.push(0);
            continue;
        }
        let c = generator_cover(&cur);
        let g = c.source().dim() / cur.alg().dim();
        let (k, _) = kernel_module(&c);
        let ext1 = hom_dim(&k, n)? + hom_cur - g * n.dim();
        out.push(ext1);
        cur = strip_projective_summands(&k).0;
        hom_cur = hom_dim(&cur, n)?;
    }
    Ok(out)
}

/// The common value of `id` of the left and right regular modules, when both
/// are finite and agree.
pub fn iwanaga_gorenstein_bound(alg: &Arc<Algebra>, cutoff: usize) -> HomDim {
    let left = id(&FdModule::free(alg, Side::Left, 1), cutoff);
    let right = id(&FdModule::free(alg, Side::Right, 1), cutoff);
    match (left, right) {
        (HomDim::Finite(a), HomDim::Finite(b)) if a == b => HomDim::Finite(a),
        (HomDim::ExceedsCutoff { .. }, _) => left,
        (_, HomDim::ExceedsCutoff { .. }) => right,
        _ => HomDim::ExceedsCutoff {
            cutoff,
            periodic: false,
        },
    }
}
