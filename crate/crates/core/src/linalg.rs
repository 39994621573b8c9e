//! Dense linear algebra over prime fields `F_p`.
//!
//! Matrices are row-major with every entry reduced into `[0, p)`. Subspaces
//! are kept in canonical form (the nonzero rows of a reduced row-echelon
//! basis), so two subspaces are equal exactly when their bases are equal.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest supported modulus (exclusive). Products of two residues fit in `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    NotPrime(u64),
    ModulusMismatch { left: u32, right: u32 },
    DimensionMismatch { expected: usize, found: usize },
    LengthMismatch { left: usize, right: usize },
    EntryNotReduced { index: usize, value: u32 },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotPrime(p) => write!(f, "modulus {p} is not a supported prime"),
            LinalgError::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            LinalgError::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            LinalgError::LengthMismatch { left, right } => {
                write!(f, "action length mismatch: {left} vs {right}")
            }
            LinalgError::EntryNotReduced { index, value } => {
                write!(f, "entry {index} = {value} is not reduced modulo p")
            }
        }
    }
}

impl core::error::Error for LinalgError {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<u32, LinalgError> {
    if p < MAX_MODULUS && is_prime(p) {
        Ok(p as u32)
    } else {
        Err(LinalgError::NotPrime(p))
    }
}

#[inline]
pub fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % p as u64) as u32
}

#[inline]
pub fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + p as u64 - b as u64) % p as u64) as u32
}

#[inline]
pub fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn pow_mod(mut base: u32, mut exp: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse of a nonzero residue (Fermat).
#[inline]
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0, "zero has no inverse");
    pow_mod(a, p as u64 - 2, p)
}

/// Reduces a signed integer into `[0, p)`.
#[inline]
pub fn reduce_i64(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpMatrix(p={}, ", self.p)?;
        f.debug_list().entries(self.data.chunks(self.cols.max(1)).take(self.rows)).finish()?;
        write!(f, ")")
    }
}

impl FpMatrix {
    /// Builds a matrix from row-major entries that must already be reduced.
    pub fn new(p: u64, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self, LinalgError> {
        let p = check_prime(p)?;
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        if let Some((index, &value)) = data.iter().enumerate().find(|(_, &v)| v >= p) {
            return Err(LinalgError::EntryNotReduced { index, value });
        }
        Ok(FpMatrix { p, rows, cols, data })
    }

    /// Builds a matrix from signed rows, reducing every entry.
    pub fn from_rows(p: u64, rows: &[&[i64]]) -> Result<Self, LinalgError> {
        let q = check_prime(p)?;
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r.iter().map(|&v| reduce_i64(v, q)));
        }
        Ok(FpMatrix { p: q, rows: rows.len(), cols, data })
    }

    pub(crate) fn from_raw(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        FpMatrix { p, rows, cols, data }
    }

    pub fn zero(p: u64, rows: usize, cols: usize) -> Result<Self, LinalgError> {
        let p = check_prime(p)?;
        Ok(FpMatrix::from_raw(p, rows, cols, vec![0; rows * cols]))
    }

    pub fn identity(p: u64, n: usize) -> Result<Self, LinalgError> {
        let p = check_prime(p)?;
        Ok(Self::identity_raw(p, n))
    }

    pub(crate) fn identity_raw(p: u32, n: usize) -> Self {
        let mut m = FpMatrix::from_raw(p, n, n, vec![0; n * n]);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn entries(&self) -> &[u32] {
        &self.data
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut data = vec![0; self.data.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                data[c * self.rows + r] = self.get(r, c);
            }
        }
        FpMatrix::from_raw(self.p, self.cols, self.rows, data)
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix, LinalgError> {
        if self.p != other.p {
            return Err(LinalgError::ModulusMismatch { left: self.p, right: other.p });
        }
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &FpMatrix) -> FpMatrix {
        let p = self.p as u64;
        let mut data = vec![0u32; self.rows * other.cols];
        for r in 0..self.rows {
            let out = &mut data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in out.iter_mut().zip(brow) {
                    *o = ((*o as u64 + a * b as u64) % p) as u32;
                }
            }
        }
        FpMatrix::from_raw(self.p, self.rows, other.cols, data)
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        debug_assert_eq!(v.len(), self.cols);
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let mut acc = 0u64;
                for (&a, &b) in row.iter().zip(v) {
                    acc = (acc + a as u64 * b as u64) % p;
                }
                acc as u32
            })
            .collect()
    }

    /// `v · self` for a row vector `v`.
    pub fn vec_mul(&self, v: &[u32]) -> Vec<u32> {
        debug_assert_eq!(v.len(), self.rows);
        let p = self.p as u64;
        let mut out = vec![0u64; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(r)) {
                *o = (*o + a as u64 * b as u64) % p;
            }
        }
        out.into_iter().map(|x| x as u32).collect()
    }

    pub fn add(&self, other: &FpMatrix) -> Result<FpMatrix, LinalgError> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| add_mod(a, b, self.p)).collect();
        Ok(FpMatrix::from_raw(self.p, self.rows, self.cols, data))
    }

    pub fn sub(&self, other: &FpMatrix) -> Result<FpMatrix, LinalgError> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| sub_mod(a, b, self.p)).collect();
        Ok(FpMatrix::from_raw(self.p, self.rows, self.cols, data))
    }

    pub fn scale(&self, s: u32) -> FpMatrix {
        let s = s % self.p;
        let data = self.data.iter().map(|&a| mul_mod(a, s, self.p)).collect();
        FpMatrix::from_raw(self.p, self.rows, self.cols, data)
    }

    fn same_shape(&self, other: &FpMatrix) -> Result<(), LinalgError> {
        if self.p != other.p {
            return Err(LinalgError::ModulusMismatch { left: self.p, right: other.p });
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }

    pub fn pow(&self, mut exp: u64) -> FpMatrix {
        assert!(self.is_square());
        let mut acc = FpMatrix::identity_raw(self.p, self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            exp >>= 1;
        }
        acc
    }

    /// Stacks `self` on top of `other`.
    pub fn stack(&self, other: &FpMatrix) -> Result<FpMatrix, LinalgError> {
        if self.p != other.p {
            return Err(LinalgError::ModulusMismatch { left: self.p, right: other.p });
        }
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FpMatrix::from_raw(self.p, self.rows + other.rows, self.cols, data))
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref_with_pivots(&self) -> (FpMatrix, Vec<usize>) {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(sel) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if sel != row {
                for c in 0..m.cols {
                    m.data.swap(sel * m.cols + c, row * m.cols + c);
                }
            }
            let inv = inv_mod(m.get(row, col), p);
            for c in col..m.cols {
                let v = mul_mod(m.get(row, c), inv, p);
                m.data[row * m.cols + c] = v;
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = sub_mod(m.get(r, c), mul_mod(factor, m.get(row, c), p), p);
                    m.data[r * m.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> FpMatrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Canonical basis of the right null space `{x : self · x = 0}`.
    pub fn kernel(&self) -> FpSubspace {
        let (r, pivots) = self.rref_with_pivots();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1 % p;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = sub_mod(0, r.get(i, free), p);
            }
            vectors.push(v);
        }
        FpSubspace::span_raw(p, self.cols, vectors)
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = vec![0u32; n * 2 * n];
        for r in 0..n {
            aug[r * 2 * n..r * 2 * n + n].copy_from_slice(self.row(r));
            aug[r * 2 * n + n + r] = 1 % self.p;
        }
        let (red, pivots) = FpMatrix::from_raw(self.p, n, 2 * n, aug).rref_with_pivots();
        if n > 0 && (pivots.len() < n || pivots[n - 1] >= n) {
            return None;
        }
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            data.extend_from_slice(&red.row(r)[n..]);
        }
        Some(FpMatrix::from_raw(self.p, n, n, data))
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &FpMatrix) -> Result<FpMatrix, LinalgError> {
        if self.p != other.p {
            return Err(LinalgError::ModulusMismatch { left: self.p, right: other.p });
        }
        let rows = self.rows + other.rows;
        let cols = self.cols + other.cols;
        let mut m = FpMatrix::from_raw(self.p, rows, cols, vec![0; rows * cols]);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.data[r * cols + c] = self.get(r, c);
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.data[(self.rows + r) * cols + self.cols + c] = other.get(r, c);
            }
        }
        Ok(m)
    }
}

/// A subspace of `F_p^n` held as the nonzero rows of a reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FpSubspace {
    p: u32,
    ambient_dim: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl FpSubspace {
    pub fn zero(p: u64, ambient_dim: usize) -> Result<Self, LinalgError> {
        let p = check_prime(p)?;
        Ok(FpSubspace { p, ambient_dim, basis: Vec::new(), pivots: Vec::new() })
    }

    pub fn full(p: u64, ambient_dim: usize) -> Result<Self, LinalgError> {
        let p = check_prime(p)?;
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![0; ambient_dim];
                v[i] = 1 % p;
                v
            })
            .collect();
        Ok(FpSubspace { p, ambient_dim, basis, pivots: (0..ambient_dim).collect() })
    }

    /// Span of arbitrary vectors (entries reduced on the way in).
    pub fn span(p: u64, ambient_dim: usize, vectors: &[Vec<u32>]) -> Result<Self, LinalgError> {
        let q = check_prime(p)?;
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(LinalgError::DimensionMismatch { expected: ambient_dim, found: v.len() });
            }
        }
        let reduced = vectors.iter().map(|v| v.iter().map(|&x| x % q).collect()).collect();
        Ok(Self::span_raw(q, ambient_dim, reduced))
    }

    pub(crate) fn span_raw(p: u32, ambient_dim: usize, vectors: Vec<Vec<u32>>) -> Self {
        let rows = vectors.len();
        let data: Vec<u32> = vectors.into_iter().flatten().collect();
        let (r, pivots) = FpMatrix::from_raw(p, rows, ambient_dim, data).rref_with_pivots();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        FpSubspace { p, ambient_dim, basis, pivots }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    /// Basis rows as a `dim × ambient_dim` matrix.
    pub fn basis_matrix(&self) -> FpMatrix {
        let data = self.basis.iter().flatten().copied().collect();
        FpMatrix::from_raw(self.p, self.dim(), self.ambient_dim, data)
    }

    /// Eliminates the pivot coordinates of `v`; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut w: Vec<u32> = v.iter().map(|&x| x % p).collect();
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            let f = w[pc];
            if f == 0 {
                continue;
            }
            for (wi, &bi) in w.iter_mut().zip(b) {
                *wi = sub_mod(*wi, mul_mod(f, bi, p), p);
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == self.ambient_dim && self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates with respect to the canonical basis, if `v` is in the span.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc] % self.p).collect())
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut out = vec![0u32; self.ambient_dim];
        for (b, &c) in self.basis.iter().zip(coords) {
            if c == 0 {
                continue;
            }
            for (o, &bi) in out.iter_mut().zip(b) {
                *o = add_mod(*o, mul_mod(c, bi, p), p);
            }
        }
        out
    }

    fn compatible(&self, other: &FpSubspace) -> Result<(), LinalgError> {
        if self.p != other.p {
            return Err(LinalgError::ModulusMismatch { left: self.p, right: other.p });
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &FpSubspace) -> Result<FpSubspace, LinalgError> {
        self.compatible(other)?;
        let vectors = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::span_raw(self.p, self.ambient_dim, vectors))
    }

    /// Vectors orthogonal to every basis row under the standard dot product.
    pub fn annihilator(&self) -> FpSubspace {
        self.basis_matrix().kernel()
    }

    pub fn intersection(&self, other: &FpSubspace) -> Result<FpSubspace, LinalgError> {
        self.compatible(other)?;
        let constraints = self.annihilator().basis_matrix().stack(&other.annihilator().basis_matrix())?;
        Ok(constraints.kernel())
    }

    pub fn is_subspace_of(&self, other: &FpSubspace) -> bool {
        self.p == other.p
            && self.ambient_dim == other.ambient_dim
            && self.basis.iter().all(|b| other.contains(b))
    }

    /// `dim(self) − dim(sub)`, requiring `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &FpSubspace) -> Result<usize, LinalgError> {
        self.compatible(sub)?;
        if !sub.is_subspace_of(self) {
            return Err(LinalgError::DimensionMismatch { expected: self.dim(), found: sub.dim() });
        }
        Ok(self.dim() - sub.dim())
    }
}

/// Solution space of `X · A_i = B_i · X` for all `i`, with `X` a `b_dim × a_dim` matrix.
#[derive(Clone, Debug)]
pub struct Commutant {
    pub dim: usize,
    pub basis: Vec<FpMatrix>,
}

/// Intertwiners from the action `a` (on `F_p^a_dim`) to the action `b` (on `F_p^b_dim`).
///
/// The bilinear constraints are flattened into one linear system in the
/// `b_dim · a_dim` unknowns of `X`, indexed row-major.
pub fn solve_commutant(
    p: u64,
    a_dim: usize,
    b_dim: usize,
    a: &[FpMatrix],
    b: &[FpMatrix],
) -> Result<Commutant, LinalgError> {
    let p = check_prime(p)?;
    if a.len() != b.len() {
        return Err(LinalgError::LengthMismatch { left: a.len(), right: b.len() });
    }
    for (m, dim) in a.iter().map(|m| (m, a_dim)).chain(b.iter().map(|m| (m, b_dim))) {
        if m.p != p {
            return Err(LinalgError::ModulusMismatch { left: p, right: m.p });
        }
        if m.rows != dim || m.cols != dim {
            return Err(LinalgError::DimensionMismatch { expected: dim, found: m.rows });
        }
    }
    let unknowns = a_dim * b_dim;
    if unknowns == 0 {
        return Ok(Commutant { dim: 0, basis: Vec::new() });
    }
    let mut rows: Vec<u32> = Vec::with_capacity(a.len() * unknowns * unknowns);
    let mut nrows = 0;
    for (ai, bi) in a.iter().zip(b) {
        for r in 0..b_dim {
            for c in 0..a_dim {
                // (X A)_{rc} - (B X)_{rc} = 0
                let mut eq = vec![0u32; unknowns];
                for s in 0..a_dim {
                    let v = ai.get(s, c);
                    if v != 0 {
                        let idx = r * a_dim + s;
                        eq[idx] = add_mod(eq[idx], v, p);
                    }
                }
                for t in 0..b_dim {
                    let v = bi.get(r, t);
                    if v != 0 {
                        let idx = t * a_dim + c;
                        eq[idx] = sub_mod(eq[idx], v, p);
                    }
                }
                if eq.iter().any(|&x| x != 0) {
                    rows.extend(eq);
                    nrows += 1;
                }
            }
        }
    }
    let system = FpMatrix::from_raw(p, nrows, unknowns, rows);
    let ker = system.kernel();
    let basis = ker
        .basis()
        .iter()
        .map(|v| FpMatrix::from_raw(p, b_dim, a_dim, v.clone()))
        .collect();
    Ok(Commutant { dim: ker.dim(), basis })
}

/// Enumerates `F_p^d` in lexicographic order (first coordinate most significant).
pub(crate) struct VectorIter {
    p: u32,
    current: Option<Vec<u32>>,
}

impl VectorIter {
    pub(crate) fn new(p: u32, d: usize) -> Self {
        VectorIter { p, current: Some(vec![0; d]) }
    }
}

impl Iterator for VectorIter {
    type Item = Vec<u32>;
    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.clone()?;
        let mut next = out.clone();
        let mut i = next.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            next[i] += 1;
            if next[i] < self.p {
                self.current = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(out)
    }
}

/// Nonzero vectors whose first nonzero coordinate is 1, in lexicographic order.
pub(crate) fn normalized_vectors(p: u32, d: usize) -> impl Iterator<Item = Vec<u32>> {
    VectorIter::new(p, d).filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
}
