//! Seeded random modules and triples for falsification campaigns.
//!
//! Each case draws from its own ChaCha stream, so case `k` of a campaign is
//! the same whether cases run in parallel, sequentially, or alone.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algcore::{Algebra, Side};
use crate::linfield::{FMatrix, FieldPrime};
use crate::modrep::{
    direct_sum, dual_module, hom_basis, quotient, submodule, tensor_over, tensor_over_right, FdModule,
};
use crate::trimat::{LeftTriple, RightTriple, TriMatRing};

const ATTEMPTS: usize = 64;

pub fn case_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn random_matrix<R: Rng>(f: FieldPrime, rows: usize, cols: usize, rng: &mut R) -> FMatrix {
    let data = (0..rows * cols).map(|_| rng.gen_range(0..f.p())).collect();
    FMatrix::from_vec(f, rows, cols, data).expect("shape matches")
}

pub fn random_invertible<R: Rng>(f: FieldPrime, n: usize, rng: &mut R) -> FMatrix {
    loop {
        let g = random_matrix(f, n, n, rng);
        if g.inverse().is_some() {
            return g;
        }
    }
}

fn random_vector<R: Rng>(f: FieldPrime, n: usize, rng: &mut R) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(0..f.p())).collect()
}

fn candidate<R: Rng>(alg: &Arc<Algebra>, side: Side, depth: usize, rng: &mut R) -> FdModule {
    let f = alg.field();
    let free = FdModule::free(alg, side, rng.gen_range(1..=2));
    let n = free.dim();
    let pick = if depth == 0 {
        rng.gen_range(0..6)
    } else {
        rng.gen_range(0..10)
    };
    match pick {
        0..=2 => {
            let k = rng.gen_range(0..=2);
            let vs: Vec<_> = (0..k).map(|_| random_vector(f, n, rng)).collect();
            quotient(&free, &free.generated(&vs)).0
        }
        3 | 4 => {
            let k = rng.gen_range(1..=2);
            let vs: Vec<_> = (0..k).map(|_| random_vector(f, n, rng)).collect();
            submodule(&free, &free.generated(&vs)).0
        }
        5 => FdModule::zero(alg, side),
        6 | 7 => dual_module(&candidate(alg, side.flip(), depth - 1, rng)),
        _ => {
            let parts = [
                candidate(alg, side, depth - 1, rng),
                candidate(alg, side, depth - 1, rng),
            ];
            direct_sum(alg, side, &parts).expect("same category").module
        }
    }
}

/// A random module of dimension at most `max_dim`, built from quotients,
/// submodules, duals and sums of free modules and presented in a random basis.
pub fn random_module<R: Rng>(alg: &Arc<Algebra>, side: Side, max_dim: usize, rng: &mut R) -> FdModule {
    for _ in 0..ATTEMPTS {
        let m = candidate(alg, side, 1, rng);
        if m.dim() == 0 && rng.gen_bool(0.8) {
            continue;
        }
        if m.dim() <= max_dim {
            let g = random_invertible(alg.field(), m.dim(), rng);
            return m.change_basis(&g).expect("invertible");
        }
    }
    FdModule::zero(alg, side)
}

/// A uniformly random element of `Hom(m, n)`.
pub fn random_hom<R: Rng>(m: &FdModule, n: &FdModule, rng: &mut R) -> FMatrix {
    let f = m.field();
    let basis = hom_basis(m, n).expect("same category");
    let coeffs = random_vector(f, basis.len(), rng);
    FMatrix::combination(f, (n.dim(), m.dim()), &basis, &coeffs)
}

pub fn random_left_triple<R: Rng>(ring: &Arc<TriMatRing>, max_dim: usize, rng: &mut R) -> LeftTriple {
    let m1 = random_module(ring.a(), Side::Left, max_dim, rng);
    let m2 = random_module(ring.b(), Side::Left, max_dim, rng);
    let tensor = tensor_over(ring.u(), &m1).expect("left A-module");
    let phi = random_hom(&tensor.module, &m2, rng);
    LeftTriple::new(ring, m1, m2, phi).expect("phi is B-linear")
}

pub fn random_right_triple<R: Rng>(ring: &Arc<TriMatRing>, max_dim: usize, rng: &mut R) -> RightTriple {
    let w1 = random_module(ring.a(), Side::Right, max_dim, rng);
    let w2 = random_module(ring.b(), Side::Right, max_dim, rng);
    let tensor = tensor_over_right(&w2, ring.u()).expect("right B-module");
    let phi = random_hom(&tensor.module, &w1, rng);
    RightTriple::new(ring, w1, w2, phi).expect("phi is A-linear")
}

/// Case `index` of the campaign with the given seed.
#[derive(Clone, Debug)]
pub struct FuzzCase {
    pub index: usize,
    pub left: LeftTriple,
    pub right: RightTriple,
}

pub fn generate(ring: &Arc<TriMatRing>, seed: u64, index: usize, max_dim: usize) -> FuzzCase {
    let mut rng = case_rng(seed, index as u64);
    let left = random_left_triple(ring, max_dim, &mut rng);
    let right = random_right_triple(ring, max_dim, &mut rng);
    FuzzCase { index, left, right }
}
