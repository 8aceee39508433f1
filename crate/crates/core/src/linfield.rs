//! Exact arithmetic over prime fields and the dense matrix kernel.
//!
//! Every other module reduces its questions (hom spaces, kernels, quotients,
//! splitting tests) to the handful of operations here. Elimination always
//! pivots on the first nonzero entry and back-substitutes fully, so every
//! derived object is reproducible bit for bit.

use std::fmt;

use crate::error::{Error, Result};

/// A prime field GF(p) with `2 <= p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldPrime {
    p: u32,
}

impl FieldPrime {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..(1u64 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + (self.p - b) as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in GF({})", self.p);
        self.pow(a, self.p as u64 - 2)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense row-major matrix over GF(p). Zero-row and zero-column shapes are legal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FMatrix {
    field: FieldPrime,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FMatrix<GF({})>{}x{}", self.field.p, self.rows, self.cols)?;
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl FMatrix {
    pub fn zeros(field: FieldPrime, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldPrime, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_vec(field: FieldPrime, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let p = field.p;
        Ok(Self {
            field,
            rows,
            cols,
            data: data.into_iter().map(|v| v % p).collect(),
        })
    }

    /// Builds a matrix from signed rows, reducing every entry mod p.
    /// `cols` fixes the width so that zero-row matrices keep their shape.
    pub fn from_rows(field: FieldPrime, cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row.iter().map(|&v| field.reduce(v)));
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Column vector.
    pub fn column_vector(field: FieldPrime, v: &[u32]) -> Self {
        Self {
            field,
            rows: v.len(),
            cols: 1,
            data: v.iter().map(|x| x % field.p).collect(),
        }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: FieldPrime, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            debug_assert_eq!(c.len(), rows);
            for (i, &v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v;
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> FieldPrime {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p;
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    /// Matrix product; panics on shape mismatch.
    pub fn mul(&self, rhs: &FMatrix) -> FMatrix {
        assert_eq!(
            self.cols, rhs.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let p = self.field.p as u64;
        let mut out = FMatrix::zeros(self.field, self.rows, rhs.cols);
        let mut acc = vec![0u64; rhs.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let row = rhs.row(k);
                for (slot, &b) in acc.iter_mut().zip(row) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for (j, v) in acc.iter().enumerate() {
                out.data[i * rhs.cols + j] = *v as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.field.p as u64;
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let mut s = 0u64;
                for (a, b) in row.iter().zip(v) {
                    s = (s + *a as u64 * *b as u64) % p;
                }
                s as u32
            })
            .collect()
    }

    pub fn add(&self, rhs: &FMatrix) -> FMatrix {
        assert_eq!(self.shape(), rhs.shape());
        let f = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.add(a, b)).collect();
        self.with_data(data)
    }

    pub fn sub(&self, rhs: &FMatrix) -> FMatrix {
        assert_eq!(self.shape(), rhs.shape());
        let f = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.sub(a, b)).collect();
        self.with_data(data)
    }

    pub fn scale(&self, c: u32) -> FMatrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        self.with_data(data)
    }

    /// `self += c * rhs`
    pub fn add_scaled_assign(&mut self, c: u32, rhs: &FMatrix) {
        assert_eq!(self.shape(), rhs.shape());
        if c == 0 {
            return;
        }
        let p = self.field.p as u64;
        for (a, &b) in self.data.iter_mut().zip(&rhs.data) {
            *a = ((*a as u64 + c as u64 * b as u64) % p) as u32;
        }
    }

    fn with_data(&self, data: Vec<u32>) -> FMatrix {
        FMatrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Linear combination `sum coeffs[k] * mats[k]`; all shapes equal `shape`.
    pub fn combination(field: FieldPrime, shape: (usize, usize), mats: &[FMatrix], coeffs: &[u32]) -> FMatrix {
        let mut out = FMatrix::zeros(field, shape.0, shape.1);
        for (m, &c) in mats.iter().zip(coeffs) {
            out.add_scaled_assign(c, m);
        }
        out
    }

    pub fn hstack(&self, rhs: &FMatrix) -> FMatrix {
        assert_eq!(self.rows, rhs.rows);
        let mut out = FMatrix::zeros(self.field, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            let base = i * out.cols;
            out.data[base..base + self.cols].copy_from_slice(self.row(i));
            out.data[base + self.cols..base + out.cols].copy_from_slice(rhs.row(i));
        }
        out
    }

    pub fn vstack(&self, rhs: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        FMatrix {
            field: self.field,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(field: FieldPrime, blocks: &[&FMatrix]) -> FMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = FMatrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &FMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            let dst = (r0 + i) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(i));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> FMatrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        let mut out = FMatrix::zeros(self.field, rows, cols);
        for i in 0..rows {
            let src = (r0 + i) * self.cols + c0;
            out.data[i * cols..(i + 1) * cols].copy_from_slice(&self.data[src..src + cols]);
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> FMatrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        FMatrix {
            field: self.field,
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn kron(&self, rhs: &FMatrix) -> FMatrix {
        let f = self.field;
        let mut out = FMatrix::zeros(f, self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let v = f.mul(a, rhs.get(k, l));
                        out.data[(i * rhs.rows + k) * out.cols + j * rhs.cols + l] = v;
                    }
                }
            }
        }
        out
    }

    /// Row-major flattening; the inverse of [`FMatrix::from_vec`].
    pub fn vectorize(&self) -> Vec<u32> {
        self.data.clone()
    }

    pub fn pow(&self, mut exp: u64) -> FMatrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = FMatrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        self.rows == 0 || self.pow(self.rows as u64).is_zero()
    }

    /// Reduced row echelon form and the pivot columns, first-nonzero pivoting.
    pub fn rref(&self) -> (FMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        (m, pivots)
    }

    /// Reduces in place, pivoting only within the first `pivot_limit` columns.
    fn rref_in_place(&mut self, pivot_limit: usize) -> Vec<usize> {
        let f = self.field;
        let p = f.p as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_limit.min(cols) {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in c..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            if inv != 1 {
                for j in c..cols {
                    let v = &mut self.data[r * cols + j];
                    *v = ((*v as u64 * inv as u64) % p) as u32;
                }
            }
            let (head, tail) = self.data.split_at_mut(r * cols);
            let (pivot_row, rest) = tail.split_at_mut(cols);
            let eliminate = |row: &mut [u32]| {
                let factor = row[c];
                if factor == 0 {
                    return;
                }
                let nf = (p - factor as u64) % p;
                for j in c..cols {
                    row[j] = ((row[j] as u64 + nf * pivot_row[j] as u64) % p) as u32;
                }
            };
            head.chunks_mut(cols).for_each(eliminate);
            rest.chunks_mut(cols).for_each(eliminate);
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows > self.cols {
            self.transpose().rref().1.len()
        } else {
            self.rref().1.len()
        }
    }

    /// Right null space `{x : self * x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = FMatrix::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            basis.data[k * self.cols + fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                basis.data[k * self.cols + pc] = f.neg(r.get(i, fc));
            }
        }
        Subspace::from_rows(&basis)
    }

    /// Column space as a subspace of the target.
    pub fn image(&self) -> Subspace {
        Subspace::from_rows(&self.transpose())
    }

    /// Some `x` with `self * x = b`, free variables set to zero; `None` when
    /// the system is inconsistent.
    pub fn solve(&self, b: &FMatrix) -> Result<Option<FMatrix>> {
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: a has {} rows, b has {}",
                self.rows, b.rows
            )));
        }
        if self.field != b.field {
            return Err(Error::FieldMismatch(self.field.p, b.field.p));
        }
        let mut aug = self.hstack(b);
        let n = self.cols;
        let pivots = aug.rref_in_place(aug.cols);
        if pivots.iter().any(|&c| c >= n) {
            return Ok(None);
        }
        let mut x = FMatrix::zeros(self.field, n, b.cols);
        for (i, &c) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.data[c * b.cols + j] = aug.get(i, n + j);
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<FMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&FMatrix::identity(self.field, n));
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return None;
        }
        Some(aug.block(0, n, n, n))
    }
}

/// A subspace of GF(p)^n held as a canonical RREF row basis, so that equal
/// subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: FMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldPrime, ambient: usize) -> Self {
        Self {
            ambient,
            basis: FMatrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldPrime, ambient: usize) -> Self {
        Self {
            ambient,
            basis: FMatrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &FMatrix) -> Self {
        let (r, pivots) = m.rref();
        let basis = r.block(0, 0, pivots.len(), m.cols);
        Self {
            ambient: m.cols,
            basis,
            pivots,
        }
    }

    /// Span of the columns of `m`.
    pub fn from_columns(m: &FMatrix) -> Self {
        Self::from_rows(&m.transpose())
    }

    pub fn from_vectors(field: FieldPrime, ambient: usize, vs: &[Vec<u32>]) -> Self {
        let mut m = FMatrix::zeros(field, vs.len(), ambient);
        for (i, v) in vs.iter().enumerate() {
            m.data[i * ambient..(i + 1) * ambient].copy_from_slice(v);
        }
        Self::from_rows(&m)
    }

    pub fn field(&self) -> FieldPrime {
        self.basis.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Basis rows in RREF.
    pub fn basis(&self) -> &FMatrix {
        &self.basis
    }

    pub fn basis_vector(&self, k: usize) -> Vec<u32> {
        self.basis.row(k).to_vec()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Ambient x dim matrix whose columns are the basis vectors.
    pub fn inclusion(&self) -> FMatrix {
        self.basis.transpose()
    }

    /// `v` minus its component along the pivot coordinates.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            let coef = out[c];
            if coef == 0 {
                continue;
            }
            let nc = f.neg(coef);
            for (o, &b) in out.iter_mut().zip(self.basis.row(i)) {
                *o = f.add(*o, f.mul(nc, b));
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c]).collect())
    }

    /// Coordinates of each column of `m` (which must lie in the subspace).
    pub fn coords_matrix(&self, m: &FMatrix) -> Option<FMatrix> {
        let f = self.field();
        let mut cols = Vec::with_capacity(m.cols());
        for j in 0..m.cols() {
            cols.push(self.coords(&m.column(j))?);
        }
        Some(FMatrix::from_columns(f, self.dim(), &cols))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|k| other.contains(self.basis.row(k)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_rows(&self.basis.vstack(&other.basis))
    }

    /// Projection onto the quotient (kernel exactly `self`) and a right inverse.
    ///
    /// Quotient coordinates are the non-pivot coordinates of the reduced vector.
    pub fn quotient_basis(&self) -> (FMatrix, FMatrix) {
        let f = self.field();
        let n = self.ambient;
        let mut is_pivot = vec![false; n];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let reps: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let q = reps.len();
        let mut projection = FMatrix::zeros(f, q, n);
        let mut section = FMatrix::zeros(f, n, q);
        for (j, &c) in reps.iter().enumerate() {
            projection.set(j, c, 1);
            section.set(c, j, 1);
            for (i, &pc) in self.pivots.iter().enumerate() {
                projection.set(j, pc, f.neg(self.basis.get(i, c)));
            }
        }
        (projection, section)
    }
}

/// Rank over GF(p).
pub fn rank(m: &FMatrix) -> usize {
    m.rank()
}

pub fn solve(a: &FMatrix, b: &FMatrix) -> Result<Option<FMatrix>> {
    a.solve(b)
}

pub fn kernel(m: &FMatrix) -> Subspace {
    m.kernel()
}

pub fn quotient_basis(ambient_dim: usize, sub: &Subspace) -> Result<(FMatrix, FMatrix)> {
    if sub.ambient_dim() != ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "subspace lives in dimension {}, not {ambient_dim}",
            sub.ambient_dim()
        )));
    }
    Ok(sub.quotient_basis())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldPrime {
        FieldPrime::new(p).unwrap()
    }

    fn mat(p: u64, cols: usize, rows: &[&[i64]]) -> FMatrix {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        FMatrix::from_rows(gf(p), cols, &rows).unwrap()
    }

    #[test]
    fn field_rejects_composites() {
        assert!(FieldPrime::new(1).is_err());
        assert!(FieldPrime::new(9).is_err());
        assert!(FieldPrime::new(1 << 31).is_err());
        assert_eq!(FieldPrime::new(2147483647).unwrap().p(), 2147483647);
        let f = gf(7);
        assert_eq!(f.mul(3, f.inv(3)), 1);
        assert_eq!(f.reduce(-1), 6);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&FMatrix::identity(gf(2), 2)), 2);
        assert_eq!(rank(&FMatrix::zeros(gf(2), 0, 3)), 0);
        assert_eq!(rank(&mat(2, 2, &[&[1, 1], &[1, 1]])), 1);
    }

    #[test]
    fn solve_examples() {
        let b = mat(5, 3, &[&[1, 2, 3], &[4, 0, 1]]);
        assert_eq!(solve(&FMatrix::identity(gf(5), 2), &b).unwrap().unwrap(), b);
        let x = solve(&mat(2, 2, &[&[1, 1]]), &mat(2, 1, &[&[1]])).unwrap().unwrap();
        assert_eq!(x, mat(2, 1, &[&[1], &[0]]));
        assert_eq!(solve(&mat(2, 1, &[&[0]]), &mat(2, 1, &[&[1]])).unwrap(), None);
        assert!(solve(&mat(2, 1, &[&[0]]), &FMatrix::zeros(gf(2), 2, 1)).is_err());
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&FMatrix::identity(gf(3), 3)).dim(), 0);
        let k = kernel(&FMatrix::zeros(gf(3), 2, 2));
        assert_eq!(k, Subspace::full(gf(3), 2));
        let k = kernel(&mat(2, 2, &[&[1, 1]]));
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis_vector(0), vec![1, 1]);
    }

    #[test]
    fn quotient_examples() {
        let f = gf(2);
        let (proj, _) = quotient_basis(2, &Subspace::zero(f, 2)).unwrap();
        assert_eq!(proj, FMatrix::identity(f, 2));
        let (proj, sec) = quotient_basis(2, &Subspace::full(f, 2)).unwrap();
        assert_eq!(proj.shape(), (0, 2));
        assert_eq!(sec.shape(), (2, 0));
        // span{(1,1)}: the representative is the non-pivot coordinate 1, and a
        // vector reduces to v1 - v0, which over GF(2) is [[1, 1]].
        let sub = Subspace::from_vectors(f, 2, &[vec![1, 1]]);
        let (proj, sec) = quotient_basis(2, &sub).unwrap();
        assert_eq!(proj, mat(2, 2, &[&[1, 1]]));
        assert_eq!(sec, mat(2, 1, &[&[0], &[1]]));
        assert!(proj.mul(&sub.inclusion()).is_zero());
        assert!(proj.mul(&sec).is_identity());
        assert!(quotient_basis(3, &sub).is_err());
    }

    #[test]
    fn subspace_is_canonical() {
        let f = gf(3);
        let a = Subspace::from_vectors(f, 3, &[vec![1, 2, 0], vec![0, 1, 1]]);
        let b = Subspace::from_vectors(f, 3, &[vec![1, 0, 1], vec![1, 1, 2], vec![2, 0, 2]]);
        assert_eq!(a, b);
        assert_eq!(a.coords(&[1, 0, 1]).unwrap().len(), 2);
        assert!(a.coords(&[0, 0, 1]).is_none());
    }

    #[test]
    fn inverse_and_pow() {
        let m = mat(7, 2, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(mat(7, 2, &[&[1, 1], &[1, 1]]).inverse().is_none());
        let n = mat(7, 2, &[&[0, 1], &[0, 0]]);
        assert!(n.is_nilpotent());
        assert!(!m.is_nilpotent());
        assert_eq!(m.pow(3), m.mul(&m).mul(&m));
    }
}
