//! Triangular matrix algebras `T = [[A, 0], [U, B]]` and their modules as
//! triples.
//!
//! The basis of `T` lists `A`, then `U`, then `B`. A left `T`-module is a
//! triple `(M1, M2, φ: U ⊗_A M1 -> M2)`, a right one is
//! `(W1, W2, φ: W2 ⊗_B U -> W1)`. In both cases `φ` is stored as a matrix out
//! of the tensor module computed by [`tensor_over`] / [`tensor_over_right`],
//! so its columns are indexed by that module's canonical basis.

use std::ops::Range;
use std::sync::Arc;

use serde::Serialize;

use crate::algcore::{Algebra, Side};
use crate::error::{Error, Result};
use crate::homalg::{is_injective, is_projective};
use crate::linfield::{FMatrix, FieldPrime, Subspace};
use crate::modrep::{
    check_morphism, cokernel_module, direct_sum, hom_dim, hom_over, hom_over_left, kernel_module, tensor_map,
    tensor_over, tensor_over_right, Bimodule, FdModule, HomModule, ModuleMorphism, Tensor,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriMatRing {
    a: Arc<Algebra>,
    b: Arc<Algebra>,
    u: Bimodule,
    t: Arc<Algebra>,
}

pub fn build_ring(a: Arc<Algebra>, b: Arc<Algebra>, u: Bimodule) -> Result<TriMatRing> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().p(), b.field().p()));
    }
    if **u.right_alg() != *a || **u.left_alg() != *b {
        return Err(Error::InvalidBimodule(
            "U must be a (B, A)-bimodule for the given A and B".into(),
        ));
    }
    let f = a.field();
    let (na, nu, nb) = (a.dim(), u.dim(), b.dim());
    let n = na + nu + nb;
    let mut c = vec![0u32; n * n * n];
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    for i in 0..na {
        for j in 0..na {
            for k in 0..na {
                c[idx(i, j, k)] = a.constant(i, j, k);
            }
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            for k in 0..nb {
                c[idx(na + nu + i, na + nu + j, na + nu + k)] = b.constant(i, j, k);
            }
        }
    }
    for s in 0..nu {
        // u_s · a_j = ρ(a_j) u_s
        for j in 0..na {
            let r = u.right_action(j);
            for k in 0..nu {
                c[idx(na + s, j, na + k)] = r.get(k, s);
            }
        }
        // b_i · u_s = λ(b_i) u_s
        for i in 0..nb {
            let l = u.left_action(i);
            for k in 0..nu {
                c[idx(na + nu + i, na + s, na + k)] = l.get(k, s);
            }
        }
    }
    let mut one = a.one().to_vec();
    one.extend(std::iter::repeat_n(0, nu));
    one.extend_from_slice(b.one());
    let t = Algebra::new(f, n, c, one)?;
    Ok(TriMatRing {
        a,
        b,
        u,
        t: Arc::new(t),
    })
}

impl TriMatRing {
    pub fn a(&self) -> &Arc<Algebra> {
        &self.a
    }

    pub fn b(&self) -> &Arc<Algebra> {
        &self.b
    }

    pub fn u(&self) -> &Bimodule {
        &self.u
    }

    pub fn t(&self) -> &Arc<Algebra> {
        &self.t
    }

    pub fn field(&self) -> FieldPrime {
        self.a.field()
    }

    pub fn a_range(&self) -> Range<usize> {
        0..self.a.dim()
    }

    pub fn u_range(&self) -> Range<usize> {
        self.a.dim()..self.a.dim() + self.u.dim()
    }

    pub fn b_range(&self) -> Range<usize> {
        let s = self.a.dim() + self.u.dim();
        s..s + self.b.dim()
    }

    /// Coordinates of `(1_A, 0, 0)`.
    pub fn idempotent_a(&self) -> Vec<u32> {
        let mut e = vec![0; self.t.dim()];
        e[self.a_range()].copy_from_slice(self.a.one());
        e
    }

    /// Coordinates of `(0, 0, 1_B)`.
    pub fn idempotent_b(&self) -> Vec<u32> {
        let mut e = vec![0; self.t.dim()];
        let r = self.b_range();
        e[r].copy_from_slice(self.b.one());
        e
    }
}

fn expect_module(m: &FdModule, alg: &Arc<Algebra>, side: Side, what: &str) -> Result<()> {
    if m.side() != side || **m.alg() != **alg {
        return Err(Error::InvalidTriple(format!(
            "{what} is not a {side} module over the expected algebra"
        )));
    }
    Ok(())
}

/// A left `T`-module `(M1, M2, φ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftTriple {
    ring: Arc<TriMatRing>,
    m1: FdModule,
    m2: FdModule,
    tensor: Tensor,
    phi: FMatrix,
}

impl LeftTriple {
    pub fn new(ring: &Arc<TriMatRing>, m1: FdModule, m2: FdModule, phi: FMatrix) -> Result<Self> {
        expect_module(&m1, &ring.a, Side::Left, "M1")?;
        expect_module(&m2, &ring.b, Side::Left, "M2")?;
        let tensor = tensor_over(&ring.u, &m1)?;
        if phi.shape() != (m2.dim(), tensor.dim()) {
            return Err(Error::InvalidTriple(format!(
                "phi is {:?}, expected {}x{}",
                phi.shape(),
                m2.dim(),
                tensor.dim()
            )));
        }
        check_morphism(&ModuleMorphism::from_parts(
            tensor.module.clone(),
            m2.clone(),
            phi.clone(),
        ))
        .map_err(|e| Error::InvalidTriple(format!("phi is not B-linear: {e}")))?;
        Ok(Self {
            ring: ring.clone(),
            m1,
            m2,
            tensor,
            phi,
        })
    }

    /// Builds the triple from the maps `Φ_s = φ(u_s ⊗ -) : M1 -> M2`.
    pub fn from_components(ring: &Arc<TriMatRing>, m1: FdModule, m2: FdModule, comps: &[FMatrix]) -> Result<Self> {
        let tensor = tensor_over(&ring.u, &m1)?;
        let ambient = FMatrix::from_columns(
            ring.field(),
            m2.dim(),
            &(0..comps.len())
                .flat_map(|s| (0..m1.dim()).map(move |t| (s, t)))
                .map(|(s, t)| comps[s].column(t))
                .collect::<Vec<_>>(),
        );
        let phi = ambient.mul(&tensor.section);
        if phi.mul(&tensor.projection) != ambient {
            return Err(Error::InvalidTriple("components do not factor through U ⊗_A M1".into()));
        }
        Self::new(ring, m1, m2, phi)
    }

    pub fn zero(ring: &Arc<TriMatRing>) -> Self {
        let m1 = FdModule::zero(&ring.a, Side::Left);
        let m2 = FdModule::zero(&ring.b, Side::Left);
        Self::new(ring, m1, m2, FMatrix::zeros(ring.field(), 0, 0)).expect("zero triple")
    }

    pub fn ring(&self) -> &Arc<TriMatRing> {
        &self.ring
    }

    pub fn m1(&self) -> &FdModule {
        &self.m1
    }

    pub fn m2(&self) -> &FdModule {
        &self.m2
    }

    pub fn phi(&self) -> &FMatrix {
        &self.phi
    }

    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }

    pub fn dim(&self) -> usize {
        self.m1.dim() + self.m2.dim()
    }

    pub fn phi_morphism(&self) -> ModuleMorphism {
        ModuleMorphism::from_parts(self.tensor.module.clone(), self.m2.clone(), self.phi.clone())
    }

    /// `Φ_s : M1 -> M2`, `x ↦ φ(u_s ⊗ x)`, for every basis vector `u_s`.
    pub fn components(&self) -> Vec<FMatrix> {
        let amb = self.phi.mul(&self.tensor.projection);
        let d1 = self.m1.dim();
        (0..self.ring.u.dim())
            .map(|s| amb.block(0, s * d1, self.m2.dim(), d1))
            .collect()
    }

    pub fn to_module(&self) -> FdModule {
        triple_to_module(self)
    }

    /// `M1 -> Hom_B(U, M2)`, `x ↦ (u ↦ φ(u ⊗ x))`.
    pub fn phi_tilde(&self) -> (HomModule, ModuleMorphism) {
        let hom = hom_over_left(&self.ring.u, &self.m2).expect("M2 is a left B-module");
        let comps = self.components();
        let cols: Vec<Vec<u32>> = (0..self.m1.dim())
            .map(|t| {
                let cols: Vec<Vec<u32>> = comps.iter().map(|c| c.column(t)).collect();
                let map = FMatrix::from_columns(self.ring.field(), self.m2.dim(), &cols);
                hom.coords_of(&map).expect("φ(- ⊗ x) is B-linear")
            })
            .collect();
        let matrix = FMatrix::from_columns(self.ring.field(), hom.dim(), &cols);
        let mor = ModuleMorphism::from_parts(self.m1.clone(), hom.module.clone(), matrix);
        (hom, mor)
    }

    /// The field dual, a right triple with `φ(f ⊗ u) = f ∘ φ(u ⊗ -)`.
    pub fn dual(&self) -> RightTriple {
        let comps: Vec<FMatrix> = self.components().iter().map(FMatrix::transpose).collect();
        RightTriple::from_components(
            &self.ring,
            crate::modrep::dual_module(&self.m1),
            crate::modrep::dual_module(&self.m2),
            &comps,
        )
        .expect("dual of a valid triple")
    }
}

/// A right `T`-module `(W1, W2, φ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightTriple {
    ring: Arc<TriMatRing>,
    w1: FdModule,
    w2: FdModule,
    tensor: Tensor,
    phi: FMatrix,
}

impl RightTriple {
    pub fn new(ring: &Arc<TriMatRing>, w1: FdModule, w2: FdModule, phi: FMatrix) -> Result<Self> {
        expect_module(&w1, &ring.a, Side::Right, "W1")?;
        expect_module(&w2, &ring.b, Side::Right, "W2")?;
        let tensor = tensor_over_right(&w2, &ring.u)?;
        if phi.shape() != (w1.dim(), tensor.dim()) {
            return Err(Error::InvalidTriple(format!(
                "phi is {:?}, expected {}x{}",
                phi.shape(),
                w1.dim(),
                tensor.dim()
            )));
        }
        check_morphism(&ModuleMorphism::from_parts(
            tensor.module.clone(),
            w1.clone(),
            phi.clone(),
        ))
        .map_err(|e| Error::InvalidTriple(format!("phi is not A-linear: {e}")))?;
        Ok(Self {
            ring: ring.clone(),
            w1,
            w2,
            tensor,
            phi,
        })
    }

    /// Builds the triple from the maps `Ψ_s = φ(- ⊗ u_s) : W2 -> W1`.
    pub fn from_components(ring: &Arc<TriMatRing>, w1: FdModule, w2: FdModule, comps: &[FMatrix]) -> Result<Self> {
        let tensor = tensor_over_right(&w2, &ring.u)?;
        let du = comps.len();
        let ambient = FMatrix::from_columns(
            ring.field(),
            w1.dim(),
            &(0..w2.dim())
                .flat_map(|t| (0..du).map(move |s| (s, t)))
                .map(|(s, t)| comps[s].column(t))
                .collect::<Vec<_>>(),
        );
        let phi = ambient.mul(&tensor.section);
        if phi.mul(&tensor.projection) != ambient {
            return Err(Error::InvalidTriple("components do not factor through W2 ⊗_B U".into()));
        }
        Self::new(ring, w1, w2, phi)
    }

    pub fn zero(ring: &Arc<TriMatRing>) -> Self {
        let w1 = FdModule::zero(&ring.a, Side::Right);
        let w2 = FdModule::zero(&ring.b, Side::Right);
        Self::new(ring, w1, w2, FMatrix::zeros(ring.field(), 0, 0)).expect("zero triple")
    }

    pub fn ring(&self) -> &Arc<TriMatRing> {
        &self.ring
    }

    pub fn w1(&self) -> &FdModule {
        &self.w1
    }

    pub fn w2(&self) -> &FdModule {
        &self.w2
    }

    pub fn phi(&self) -> &FMatrix {
        &self.phi
    }

    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }

    pub fn dim(&self) -> usize {
        self.w1.dim() + self.w2.dim()
    }

    /// `Ψ_s : W2 -> W1`, `y ↦ φ(y ⊗ u_s)`.
    pub fn components(&self) -> Vec<FMatrix> {
        let amb = self.phi.mul(&self.tensor.projection);
        let (d1, d2, du) = (self.w1.dim(), self.w2.dim(), self.ring.u.dim());
        (0..du)
            .map(|s| {
                let cols: Vec<Vec<u32>> = (0..d2).map(|t| amb.column(t * du + s)).collect();
                FMatrix::from_columns(self.ring.field(), d1, &cols)
            })
            .collect()
    }

    pub fn to_module(&self) -> FdModule {
        right_triple_to_module(self)
    }

    /// `W2 -> Hom_A(U, W1)`, `y ↦ (u ↦ φ(y ⊗ u))`.
    pub fn phi_tilde(&self) -> (HomModule, ModuleMorphism) {
        let hom = hom_over(&self.ring.u, &self.w1).expect("W1 is a right A-module");
        let comps = self.components();
        let cols: Vec<Vec<u32>> = (0..self.w2.dim())
            .map(|t| {
                let cols: Vec<Vec<u32>> = comps.iter().map(|c| c.column(t)).collect();
                let map = FMatrix::from_columns(self.ring.field(), self.w1.dim(), &cols);
                hom.coords_of(&map).expect("φ(y ⊗ -) is A-linear")
            })
            .collect();
        let matrix = FMatrix::from_columns(self.ring.field(), hom.dim(), &cols);
        let mor = ModuleMorphism::from_parts(self.w2.clone(), hom.module.clone(), matrix);
        (hom, mor)
    }

    /// The field dual, a left triple with `φ(u ⊗ f) = f ∘ φ(- ⊗ u)`.
    pub fn dual(&self) -> LeftTriple {
        let comps: Vec<FMatrix> = self.components().iter().map(FMatrix::transpose).collect();
        LeftTriple::from_components(
            &self.ring,
            crate::modrep::dual_module(&self.w1),
            crate::modrep::dual_module(&self.w2),
            &comps,
        )
        .expect("dual of a valid triple")
    }
}

pub fn triple_to_module(m: &LeftTriple) -> FdModule {
    let ring = &m.ring;
    let f = ring.field();
    let (d1, d2) = (m.m1.dim(), m.m2.dim());
    let d = d1 + d2;
    let mut action = Vec::with_capacity(ring.t.dim());
    for i in ring.a_range() {
        let mut x = FMatrix::zeros(f, d, d);
        x.set_block(0, 0, m.m1.action(i));
        action.push(x);
    }
    for c in m.components() {
        let mut x = FMatrix::zeros(f, d, d);
        x.set_block(d1, 0, &c);
        action.push(x);
    }
    for i in 0..ring.b.dim() {
        let mut x = FMatrix::zeros(f, d, d);
        x.set_block(d1, d1, m.m2.action(i));
        action.push(x);
    }
    FdModule::from_parts(ring.t.clone(), Side::Left, d, action)
}

pub fn right_triple_to_module(w: &RightTriple) -> FdModule {
    let ring = &w.ring;
    let f = ring.field();
    let (d1, d2) = (w.w1.dim(), w.w2.dim());
    let d = d1 + d2;
    let mut action = Vec::with_capacity(ring.t.dim());
    for i in ring.a_range() {
        let mut x = FMatrix::zeros(f, d, d);
        x.set_block(0, 0, w.w1.action(i));
        action.push(x);
    }
    for c in w.components() {
        let mut x = FMatrix::zeros(f, d, d);
        x.set_block(0, d1, &c);
        action.push(x);
    }
    for i in 0..ring.b.dim() {
        let mut x = FMatrix::zeros(f, d, d);
        x.set_block(d1, d1, w.w2.action(i));
        action.push(x);
    }
    FdModule::from_parts(ring.t.clone(), Side::Right, d, action)
}

/// The pieces `e_A X` and `e_B X` of a `T`-module with their restricted actions.
struct Pieces {
    sub1: Subspace,
    sub2: Subspace,
    p1: FdModule,
    p2: FdModule,
}

fn split_module(ring: &Arc<TriMatRing>, x: &FdModule, side: Side) -> Result<Pieces> {
    if x.side() != side || **x.alg() != *ring.t {
        return Err(Error::InvalidTriple(format!("not a {side} module over T")));
    }
    let sub1 = x.act_element(&ring.idempotent_a()).image();
    let sub2 = x.act_element(&ring.idempotent_b()).image();
    let restrict = |sub: &Subspace, range: Range<usize>| -> Vec<FMatrix> {
        let incl = sub.inclusion();
        range
            .map(|i| sub.coords_matrix(&x.action(i).mul(&incl)).expect("e X is stable"))
            .collect()
    };
    let p1 = FdModule::from_parts(ring.a.clone(), side, sub1.dim(), restrict(&sub1, ring.a_range()));
    let p2 = FdModule::from_parts(ring.b.clone(), side, sub2.dim(), restrict(&sub2, ring.b_range()));
    Ok(Pieces { sub1, sub2, p1, p2 })
}

/// Reads off `(e_A X, e_B X, u ⊗ x ↦ u·x)` from a left `T`-module.
pub fn module_to_triple(ring: &Arc<TriMatRing>, x: &FdModule) -> Result<LeftTriple> {
    let Pieces { sub1, sub2, p1, p2 } = split_module(ring, x, Side::Left)?;
    let incl1 = sub1.inclusion();
    let comps: Vec<FMatrix> = ring
        .u_range()
        .map(|s| {
            sub2.coords_matrix(&x.action(s).mul(&incl1))
                .expect("U e_A X lies in e_B X")
        })
        .collect();
    LeftTriple::from_components(ring, p1, p2, &comps)
}

/// Reads off `(X e_A, X e_B, x ⊗ u ↦ x·u)` from a right `T`-module.
pub fn module_to_right_triple(ring: &Arc<TriMatRing>, x: &FdModule) -> Result<RightTriple> {
    let Pieces { sub1, sub2, p1, p2 } = split_module(ring, x, Side::Right)?;
    let incl2 = sub2.inclusion();
    let comps: Vec<FMatrix> = ring
        .u_range()
        .map(|s| {
            sub1.coords_matrix(&x.action(s).mul(&incl2))
                .expect("X e_B U lies in X e_A")
        })
        .collect();
    RightTriple::from_components(ring, p1, p2, &comps)
}

/// `p(X1, X2) = (X1, (U ⊗ X1) ⊕ X2)` with `φ` the injection of the first summand.
pub fn functor_p(ring: &Arc<TriMatRing>, x1: &FdModule, x2: &FdModule) -> Result<LeftTriple> {
    expect_module(x2, &ring.b, Side::Left, "X2")?;
    let t = tensor_over(&ring.u, x1)?;
    let sum = direct_sum(&ring.b, Side::Left, &[t.module.clone(), x2.clone()])?;
    let phi = sum.injections[0].matrix().clone();
    LeftTriple::new(ring, x1.clone(), sum.module, phi)
}

/// `h(X1, X2) = (X1 ⊕ Hom_B(U, X2), X2)` with `φ(u ⊗ (x, g)) = g(u)`.
pub fn functor_h(ring: &Arc<TriMatRing>, x1: &FdModule, x2: &FdModule) -> Result<LeftTriple> {
    expect_module(x1, &ring.a, Side::Left, "X1")?;
    let hom = hom_over_left(&ring.u, x2)?;
    let m1 = direct_sum(&ring.a, Side::Left, &[x1.clone(), hom.module.clone()])?.module;
    let f = ring.field();
    let (d1, dh, d2) = (x1.dim(), hom.dim(), x2.dim());
    let basis: Vec<FMatrix> = (0..dh)
        .map(|r| {
            let mut c = vec![0; dh];
            c[r] = 1;
            hom.map(&c)
        })
        .collect();
    let comps: Vec<FMatrix> = (0..ring.u.dim())
        .map(|s| {
            let mut c = FMatrix::zeros(f, d2, d1 + dh);
            for (r, g) in basis.iter().enumerate() {
                for row in 0..d2 {
                    c.set(row, d1 + r, g.get(row, s));
                }
            }
            c
        })
        .collect();
    LeftTriple::from_components(ring, m1, x2.clone(), &comps)
}

/// `q(M) = (M1, M2)`.
pub fn functor_q(m: &LeftTriple) -> (FdModule, FdModule) {
    (m.m1.clone(), m.m2.clone())
}

/// Checks that `(f1, f2)` is a morphism of left triples: both components are
/// module maps and `φ^N ∘ (1 ⊗ f1) = f2 ∘ φ^M`.
pub fn check_triple_morphism(m: &LeftTriple, n: &LeftTriple, f1: &FMatrix, f2: &FMatrix) -> Result<()> {
    let g1 = ModuleMorphism::new(m.m1.clone(), n.m1.clone(), f1.clone())?;
    ModuleMorphism::new(m.m2.clone(), n.m2.clone(), f2.clone())?;
    let one_f1 = tensor_map(&m.ring.u, &g1, &m.tensor, &n.tensor);
    if n.phi.mul(&one_f1) != f2.mul(&m.phi) {
        return Err(Error::InvalidTriple("the naturality square does not commute".into()));
    }
    Ok(())
}

/// The counit `p(q(M)) -> M`, given by `(1, [φ, 1])`.
pub fn counit_p(m: &LeftTriple) -> Result<(LeftTriple, FMatrix, FMatrix)> {
    let pq = functor_p(&m.ring, &m.m1, &m.m2)?;
    let f1 = FMatrix::identity(m.ring.field(), m.m1.dim());
    let f2 = m.phi.hstack(&FMatrix::identity(m.ring.field(), m.m2.dim()));
    Ok((pq, f1, f2))
}

/// The unit `M -> h(q(M))`, given by `([1; φ̃], 1)`.
pub fn unit_h(m: &LeftTriple) -> Result<(LeftTriple, FMatrix, FMatrix)> {
    let hq = functor_h(&m.ring, &m.m1, &m.m2)?;
    let (_, tilde) = m.phi_tilde();
    let f1 = FMatrix::identity(m.ring.field(), m.m1.dim()).vstack(tilde.matrix());
    let f2 = FMatrix::identity(m.ring.field(), m.m2.dim());
    Ok((hq, f1, f2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjunctionReport {
    /// `dim Hom_T(p(X), M)` and `dim Hom_A(X1, M1) + dim Hom_B(X2, M2)`.
    pub left_adjoint: (usize, usize),
    /// `dim Hom_T(M, h(X))` and `dim Hom_A(M1, X1) + dim Hom_B(M2, X2)`.
    pub right_adjoint: (usize, usize),
    pub holds: bool,
}

pub fn adjunction_check(x1: &FdModule, x2: &FdModule, m: &LeftTriple) -> Result<AdjunctionReport> {
    let ring = &m.ring;
    let p = functor_p(ring, x1, x2)?.to_module();
    let h = functor_h(ring, x1, x2)?.to_module();
    let mm = m.to_module();
    let left_adjoint = (hom_dim(&p, &mm)?, hom_dim(x1, &m.m1)? + hom_dim(x2, &m.m2)?);
    let right_adjoint = (hom_dim(&mm, &h)?, hom_dim(&m.m1, x1)? + hom_dim(&m.m2, x2)?);
    Ok(AdjunctionReport {
        left_adjoint,
        right_adjoint,
        holds: left_adjoint.0 == left_adjoint.1 && right_adjoint.0 == right_adjoint.1,
    })
}

/// Componentwise projectivity of a left triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectiveTripleEvidence {
    pub verdict: bool,
    pub m1_projective: bool,
    pub cokernel_projective: bool,
    pub phi_mono: bool,
    pub phi_rank: usize,
    pub tensor_dim: usize,
}

pub fn is_projective_triple(m: &LeftTriple) -> ProjectiveTripleEvidence {
    let phi_rank = m.phi.rank();
    let tensor_dim = m.tensor.dim();
    let m1_projective = is_projective(&m.m1);
    let (coker, _) = cokernel_module(&m.phi_morphism());
    let cokernel_projective = is_projective(&coker);
    let phi_mono = phi_rank == tensor_dim;
    ProjectiveTripleEvidence {
        verdict: m1_projective && cokernel_projective && phi_mono,
        m1_projective,
        cokernel_projective,
        phi_mono,
        phi_rank,
        tensor_dim,
    }
}

/// Flat triples; flat and projective coincide here.
pub fn is_flat_triple(m: &LeftTriple) -> ProjectiveTripleEvidence {
    is_projective_triple(m)
}

/// Componentwise injectivity of a right triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectiveTripleEvidence {
    pub verdict: bool,
    pub w1_injective: bool,
    pub kernel_injective: bool,
    pub phi_tilde_epi: bool,
    pub phi_tilde_rank: usize,
    pub hom_dim: usize,
}

pub fn is_injective_triple(w: &RightTriple) -> InjectiveTripleEvidence {
    let (hom, tilde) = w.phi_tilde();
    let phi_tilde_rank = tilde.rank();
    let w1_injective = is_injective(&w.w1);
    let (ker, _) = kernel_module(&tilde);
    let kernel_injective = is_injective(&ker);
    let phi_tilde_epi = phi_tilde_rank == hom.dim();
    InjectiveTripleEvidence {
        verdict: w1_injective && kernel_injective && phi_tilde_epi,
        w1_injective,
        kernel_injective,
        phi_tilde_epi,
        phi_tilde_rank,
        hom_dim: hom.dim(),
    }
}

/// FP-injective triples; FP-injective and injective coincide here.
pub fn is_fp_injective_triple(w: &RightTriple) -> InjectiveTripleEvidence {
    is_injective_triple(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::is_isomorphic;
    use crate::rings;

    fn simple(r: &Arc<Algebra>, side: Side) -> FdModule {
        let f = r.field();
        FdModule::new(
            r.clone(),
            side,
            1,
            vec![FMatrix::identity(f, 1), FMatrix::zeros(f, 1, 1)],
        )
        .unwrap()
    }

    #[test]
    fn assembled_rings() {
        let tr = rings::t_of_dual_numbers(FieldPrime::new(2).unwrap());
        assert_eq!(tr.t().dim(), 6);
        assert!(tr.t().validate().is_ok());
        let t2 = rings::t2(FieldPrime::new(2).unwrap());
        assert_eq!(t2.t().dim(), 3);
        // basis (e22, e12, e11) of the upper triangular algebra
        let ut = Algebra::upper_triangular(FieldPrime::new(2).unwrap());
        let perm = [1usize, 2, 0];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(t2.t().constant(i, j, k), ut.constant(perm[i], perm[j], perm[k]));
                }
            }
        }
        let r = Arc::new(Algebra::truncated_polynomial(FieldPrime::new(2).unwrap(), 2));
        let prod = build_ring(r.clone(), r.clone(), Bimodule::zero(&r, &r)).unwrap();
        assert_eq!(prod.t().dim(), 4);
        assert!(prod.t().is_commutative());
        let mixed = rings::mixed(FieldPrime::new(2).unwrap());
        assert_eq!(mixed.t().dim(), 7);
    }

    #[test]
    fn mismatched_bimodule_is_rejected() {
        let f = FieldPrime::new(2).unwrap();
        let r = Arc::new(Algebra::truncated_polynomial(f, 2));
        let k = Arc::new(Algebra::ground(f));
        assert!(build_ring(k.clone(), r.clone(), Bimodule::regular(&r)).is_err());
        let f3 = FieldPrime::new(3).unwrap();
        let k3 = Arc::new(Algebra::ground(f3));
        assert!(build_ring(k, k3.clone(), Bimodule::regular(&k3)).is_err());
    }

    #[test]
    fn regular_column_round_trip() {
        let ring = Arc::new(rings::t_of_dual_numbers(FieldPrime::new(2).unwrap()));
        let r = ring.a().clone();
        let reg = FdModule::free(&r, Side::Left, 1);
        let p = functor_p(&ring, &reg, &FdModule::zero(&r, Side::Left)).unwrap();
        let x = p.to_module();
        assert!(is_projective(&x));
        let back = module_to_triple(&ring, &x).unwrap();
        assert!(is_isomorphic(&back.to_module(), &x).unwrap().is_yes());
        let zero = LeftTriple::zero(&ring);
        assert_eq!(zero.to_module().dim(), 0);
        let treg = FdModule::free(ring.t(), Side::Left, 1);
        let split = module_to_triple(&ring, &treg).unwrap();
        assert_eq!((split.m1().dim(), split.m2().dim()), (2, 4));
        assert!(split.phi_morphism().is_mono());
        assert!(is_isomorphic(&split.to_module(), &treg).unwrap().is_yes());
    }

    #[test]
    fn right_round_trip_and_duals() {
        let ring = Arc::new(rings::t_of_dual_numbers(FieldPrime::new(2).unwrap()));
        let treg = FdModule::free(ring.t(), Side::Right, 1);
        let w = module_to_right_triple(&ring, &treg).unwrap();
        assert!(is_isomorphic(&w.to_module(), &treg).unwrap().is_yes());
        let back = w.dual().dual();
        assert_eq!(back, w);
        let d = crate::modrep::dual_module(&w.to_module());
        assert!(is_isomorphic(&w.dual().to_module(), &d).unwrap().is_yes());
    }

    #[test]
    fn phi_tilde_of_multiplication_is_iso() {
        let ring = Arc::new(rings::t_of_dual_numbers(FieldPrime::new(2).unwrap()));
        let r = ring.a().clone();
        let reg = FdModule::free(&r, Side::Right, 1);
        let w = RightTriple::from_components(
            &ring,
            reg.clone(),
            reg.clone(),
            &(0..2).map(|s| r.left_mult(s)).collect::<Vec<_>>(),
        )
        .unwrap();
        let (hom, tilde) = w.phi_tilde();
        assert_eq!(hom.dim(), 2);
        assert!(tilde.is_mono() && tilde.is_epi());
        let zero_phi = RightTriple::new(&ring, reg.clone(), reg, FMatrix::zeros(r.field(), 2, 2)).unwrap();
        assert!(zero_phi.phi_tilde().1.matrix().is_zero());
    }

    #[test]
    fn functor_examples() {
        let f = FieldPrime::new(2).unwrap();
        let ring = Arc::new(rings::t_of_dual_numbers(f));
        let r = ring.a().clone();
        let s = simple(&r, Side::Left);
        let z = FdModule::zero(&r, Side::Left);
        let p = functor_p(&ring, &s, &z).unwrap();
        assert_eq!(p.m2().dim(), 1);
        assert!(p.phi().is_identity());
        let h = functor_h(&ring, &z, &s).unwrap();
        assert_eq!(h.m1().dim(), 1);
        assert_eq!(functor_q(&p), (s.clone(), p.m2().clone()));
        let (pq, f1, f2) = counit_p(&p).unwrap();
        assert!(check_triple_morphism(&pq, &p, &f1, &f2).is_ok());
        let (hq, g1, g2) = unit_h(&p).unwrap();
        assert!(check_triple_morphism(&p, &hq, &g1, &g2).is_ok());
    }

    #[test]
    fn adjunction_examples() {
        let f = FieldPrime::new(2).unwrap();
        let ring = Arc::new(rings::t_of_dual_numbers(f));
        let r = ring.a().clone();
        let s = simple(&r, Side::Left);
        let z = FdModule::zero(&r, Side::Left);
        let m = functor_p(&ring, &s, &z).unwrap();
        let rep = adjunction_check(&z, &z, &m).unwrap();
        assert_eq!(rep.left_adjoint, (0, 0));
        let rep = adjunction_check(&s, &z, &m).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.left_adjoint, (1, 1));
        let reg = FdModule::free(&r, Side::Left, 1);
        let rep = adjunction_check(&reg, &reg, &m).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.left_adjoint.0, m.dim());
    }

    #[test]
    fn structural_examples() {
        let f = FieldPrime::new(2).unwrap();
        let ring = Arc::new(rings::t_of_dual_numbers(f));
        let r = ring.a().clone();
        let s = simple(&r, Side::Left);
        let z = FdModule::zero(&r, Side::Left);
        let reg = FdModule::free(&r, Side::Left, 1);
        assert!(is_projective_triple(&functor_p(&ring, &reg, &z).unwrap()).verdict);
        let s00 = LeftTriple::new(&ring, s.clone(), z.clone(), FMatrix::zeros(f, 0, 1)).unwrap();
        let ev = is_projective_triple(&s00);
        assert!(!ev.verdict && !ev.phi_mono);
        assert_eq!((ev.phi_rank, ev.tensor_dim), (0, 1));
        assert!(
            is_projective_triple(&LeftTriple::new(&ring, z.clone(), reg.clone(), FMatrix::zeros(f, 2, 0)).unwrap())
                .verdict
        );
        let rr = RightTriple::new(
            &ring,
            FdModule::free(&r, Side::Right, 1),
            FdModule::zero(&r, Side::Right),
            FMatrix::zeros(f, 2, 0),
        )
        .unwrap();
        let ev = is_injective_triple(&rr);
        assert!(!ev.verdict && !ev.phi_tilde_epi);
        assert_eq!(ev.hom_dim, 2);
        assert!(is_injective_triple(&RightTriple::zero(&ring)).verdict);
        let proj = functor_p(&ring, &reg, &reg).unwrap();
        assert!(is_injective_triple(&proj.dual()).verdict);
    }
}
