//! The bundled example rings.

use std::sync::Arc;

use crate::algcore::Algebra;
use crate::linfield::{FMatrix, FieldPrime};
use crate::modrep::Bimodule;
use crate::trimat::{build_ring, TriMatRing};

/// `k[x]/(x²)` with basis `{1, x}`.
pub fn dual_numbers(f: FieldPrime) -> Arc<Algebra> {
    Arc::new(Algebra::truncated_polynomial(f, 2))
}

/// `T(R) = [[R, 0], [R, R]]` for any algebra `R`.
pub fn t_of(r: &Arc<Algebra>) -> TriMatRing {
    build_ring(r.clone(), r.clone(), Bimodule::regular(r)).expect("regular bimodule")
}

pub fn t_of_dual_numbers(f: FieldPrime) -> TriMatRing {
    t_of(&dual_numbers(f))
}

/// Lower triangular 2x2 matrices over `k`, isomorphic to the upper triangular
/// algebra with basis order `(e22, e12, e11)`.
pub fn t2(f: FieldPrime) -> TriMatRing {
    t_of(&Arc::new(Algebra::ground(f)))
}

/// `[[T2(k), 0], [U, k[x]/(x²)]]` where `U = k[x]/(x²) ⊗ V` and `V` is the
/// one-dimensional right `T2(k)`-module on which `e11` acts by 1.
pub fn mixed(f: FieldPrime) -> TriMatRing {
    let a = Arc::new(Algebra::upper_triangular(f));
    let b = dual_numbers(f);
    let u = mixed_bimodule(&a, &b);
    build_ring(a, b, u).expect("valid bimodule")
}

pub fn mixed_bimodule(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Bimodule {
    let f = a.field();
    let left = (0..b.dim()).map(|i| b.left_mult(i)).collect();
    let right = vec![
        FMatrix::identity(f, 2),
        FMatrix::zeros(f, 2, 2),
        FMatrix::zeros(f, 2, 2),
    ];
    Bimodule::new(b.clone(), a.clone(), 2, left, right).expect("valid bimodule")
}
