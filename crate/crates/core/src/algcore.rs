//! Finite-dimensional associative unital algebras given by structure constants.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linfield::{FMatrix, FieldPrime};
use crate::modrep::FdModule;

/// Which side an algebra acts on a module from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// First failed axiom found by [`Algebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Violation {
    Shape { detail: String },
    Associativity { i: usize, j: usize, l: usize },
    LeftIdentity { i: usize },
    RightIdentity { i: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape { detail } => write!(f, "malformed structure constants: {detail}"),
            Violation::Associativity { i, j, l } => {
                write!(f, "(e{i} e{j}) e{l} != e{i} (e{j} e{l})")
            }
            Violation::LeftIdentity { i } => write!(f, "1 * e{i} != e{i}"),
            Violation::RightIdentity { i } => write!(f, "e{i} * 1 != e{i}"),
        }
    }
}

/// An algebra with basis `e_0..e_{n-1}` and `e_i e_j = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    field: FieldPrime,
    dim: usize,
    structure: Vec<u32>,
    one: Vec<u32>,
}

impl Algebra {
    /// Builds and validates an algebra; `structure` is indexed `[i][j][k]`
    /// flattened row-major.
    pub fn new(field: FieldPrime, dim: usize, structure: Vec<u32>, one: Vec<u32>) -> Result<Self> {
        let alg = Self::new_unchecked(field, dim, structure, one);
        alg.validate().map_err(Error::InvalidAlgebra)?;
        Ok(alg)
    }

    /// Builds without checking the axioms; call [`Algebra::validate`] to report.
    pub fn new_unchecked(field: FieldPrime, dim: usize, structure: Vec<u32>, one: Vec<u32>) -> Self {
        let p = field.p();
        Self {
            field,
            dim,
            structure: structure.into_iter().map(|v| v % p).collect(),
            one: one.into_iter().map(|v| v % p).collect(),
        }
    }

    /// Builds the algebra spanned by a family of square matrices closed under
    /// multiplication, with the identity as basis element `identity_index`.
    pub fn from_matrix_basis(field: FieldPrime, basis: &[FMatrix], identity_index: usize) -> Result<Self> {
        let n = basis.len();
        let rows: Vec<Vec<u32>> = basis.iter().map(|m| m.vectorize()).collect();
        let ambient = rows.first().map_or(0, |r| r.len());
        let span = FMatrix::from_columns(field, ambient, &rows);
        let mut structure = vec![0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = basis[i].mul(&basis[j]).vectorize();
                let b = FMatrix::column_vector(field, &prod);
                let coords = span.solve(&b)?.ok_or_else(|| {
                    Error::InvalidAlgebra(Violation::Shape {
                        detail: format!("product of basis matrices {i} and {j} leaves the span"),
                    })
                })?;
                for k in 0..n {
                    structure[(i * n + j) * n + k] = coords.get(k, 0);
                }
            }
        }
        let mut one = vec![0; n];
        one[identity_index] = 1;
        Self::new(field, n, structure, one)
    }

    /// The ground field GF(p) as a one-dimensional algebra.
    pub fn ground(field: FieldPrime) -> Self {
        Self::new_unchecked(field, 1, vec![1], vec![1])
    }

    /// `GF(p)[x]/(x^n)` on the monomial basis.
    pub fn truncated_polynomial(field: FieldPrime, n: usize) -> Self {
        let mut structure = vec![0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    structure[(i * n + j) * n + i + j] = 1;
                }
            }
        }
        let mut one = vec![0; n];
        one[0] = 1;
        Self::new_unchecked(field, n, structure, one)
    }

    /// Upper triangular 2x2 matrices on the basis `e11, e22, e12`.
    pub fn upper_triangular(field: FieldPrime) -> Self {
        let mut structure = vec![0; 27];
        let mut set = |i: usize, j: usize, k: usize| structure[(i * 3 + j) * 3 + k] = 1;
        set(0, 0, 0);
        set(1, 1, 1);
        set(0, 2, 2);
        set(2, 1, 2);
        Self::new_unchecked(field, 3, structure, vec![1, 1, 0])
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn one(&self) -> &[u32] {
        &self.one
    }

    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn structure(&self) -> &[u32] {
        &self.structure
    }

    pub fn basis_element(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let n = self.dim;
        let mut out = vec![0; n];
        for (i, &xi) in x.iter().enumerate().take(n) {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate().take(n) {
                let xy = f.mul(xi, yj);
                if xy == 0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if c != 0 {
                        *o = f.add(*o, f.mul(xy, c));
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y -> e_i y`: column j holds the coordinates of `e_i e_j`.
    pub fn left_mult(&self, i: usize) -> FMatrix {
        let n = self.dim;
        let mut m = FMatrix::zeros(self.field, n, n);
        for j in 0..n {
            for k in 0..n {
                m.set(k, j, self.constant(i, j, k));
            }
        }
        m
    }

    /// Matrix of `y -> y e_i`.
    pub fn right_mult(&self, i: usize) -> FMatrix {
        let n = self.dim;
        let mut m = FMatrix::zeros(self.field, n, n);
        for j in 0..n {
            for k in 0..n {
                m.set(k, j, self.constant(j, i, k));
            }
        }
        m
    }

    /// Checks shape, all `n^3` associativity identities and the `2n`
    /// identity identities; reports the first failure.
    pub fn validate(&self) -> Result<(), Violation> {
        let n = self.dim;
        if n == 0 {
            return Err(Violation::Shape {
                detail: "algebras must be nonzero".into(),
            });
        }
        if self.structure.len() != n * n * n || self.one.len() != n {
            return Err(Violation::Shape {
                detail: format!(
                    "{} structure constants and {} identity coordinates for dimension {n}",
                    self.structure.len(),
                    self.one.len()
                ),
            });
        }
        let products: Vec<Vec<u32>> = (0..n * n)
            .map(|ij| (0..n).map(|k| self.structure[ij * n + k]).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let lhs = self.mul(&products[i * n + j], &self.basis_element(l));
                    let rhs = self.mul(&self.basis_element(i), &products[j * n + l]);
                    if lhs != rhs {
                        return Err(Violation::Associativity { i, j, l });
                    }
                }
            }
        }
        for i in 0..n {
            let e = self.basis_element(i);
            if self.mul(&self.one, &e) != e {
                return Err(Violation::LeftIdentity { i });
            }
            if self.mul(&e, &self.one) != e {
                return Err(Violation::RightIdentity { i });
            }
        }
        Ok(())
    }

    /// Same basis, product reversed.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let mut structure = vec![0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    structure[(i * n + j) * n + k] = self.constant(j, i, k);
                }
            }
        }
        Algebra {
            field: self.field,
            dim: n,
            structure,
            one: self.one.clone(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        *self == self.opposite()
    }
}

pub fn validate(alg: &Algebra) -> Result<(), Violation> {
    alg.validate()
}

pub fn opposite(alg: &Algebra) -> Algebra {
    alg.opposite()
}

/// The algebra acting on itself by left (resp. right) multiplication.
pub fn regular_module(alg: &Arc<Algebra>, side: Side) -> FdModule {
    FdModule::free(alg, side, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> FieldPrime {
        FieldPrime::new(2).unwrap()
    }

    #[test]
    fn dual_numbers_validate() {
        let r = Algebra::truncated_polynomial(gf2(), 2);
        assert_eq!(r.validate(), Ok(()));
        assert!(r.is_commutative());
        assert_eq!(r.opposite(), r);
    }

    #[test]
    fn upper_triangular_validates_and_is_not_commutative() {
        let t = Algebra::upper_triangular(gf2());
        assert_eq!(t.validate(), Ok(()));
        let op = t.opposite();
        assert_ne!(op, t);
        // e12 * e22 = e12 in T2; in the opposite algebra e22 * e12 = e12.
        assert_eq!(t.constant(2, 1, 2), 1);
        assert_eq!(op.constant(1, 2, 2), 1);
        assert_eq!(op.constant(2, 1, 2), 0);
        assert_eq!(op.validate(), Ok(()));
        assert_eq!(op.opposite(), t);
    }

    #[test]
    fn broken_identity_is_reported() {
        // c[1][1][1] = 1 makes e1 idempotent, but e0 is declared the identity
        // while e0 * e1 = 0.
        let mut structure = vec![0; 8];
        structure[0] = 1;
        structure[7] = 1;
        let alg = Algebra::new_unchecked(gf2(), 2, structure, vec![1, 0]);
        assert_eq!(alg.validate(), Err(Violation::LeftIdentity { i: 1 }));
        assert!(Algebra::new(gf2(), 2, alg.structure().to_vec(), vec![1, 0]).is_err());
    }

    #[test]
    fn broken_associativity_is_reported() {
        // basis {1, x, y}: x*x = y, y*x = x, x*y = y*y = 0, so (xx)x = x but x(xx) = 0
        let n = 3;
        let mut structure = vec![0; n * n * n];
        let mut set = |i: usize, j: usize, k: usize| structure[(i * n + j) * n + k] = 1;
        for i in 0..n {
            set(0, i, i);
            set(i, 0, i);
        }
        set(1, 1, 2);
        set(2, 1, 1);
        let alg = Algebra::new_unchecked(gf2(), n, structure, vec![1, 0, 0]);
        assert_eq!(alg.validate(), Err(Violation::Associativity { i: 1, j: 1, l: 1 }));
    }

    #[test]
    fn multiplication_matrices() {
        let r = Algebra::truncated_polynomial(gf2(), 2);
        let lx = r.left_mult(1);
        assert_eq!(lx.to_rows(), vec![vec![0, 0], vec![1, 0]]);
        let t = Algebra::upper_triangular(gf2());
        for i in 0..3 {
            assert_eq!(t.opposite().left_mult(i), t.right_mult(i));
        }
    }

    #[test]
    fn matrix_basis_recovers_upper_triangular() {
        let f = gf2();
        let e = |r: usize, c: usize| {
            let mut m = FMatrix::zeros(f, 2, 2);
            m.set(r, c, 1);
            m
        };
        let id = FMatrix::identity(f, 2);
        let alg = Algebra::from_matrix_basis(f, &[id, e(0, 1), e(1, 1)], 0).unwrap();
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.validate(), Ok(()));
    }
}
