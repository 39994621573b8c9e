//! Exact complex character tables by Dixon's method.
//!
//! Central characters are the common eigenvectors of the class
//! multiplication matrices over `F_ell`, where `ell ≡ 1 (mod exp G)`.
//! Each character value is recovered as an eigenvalue-multiplicity vector
//! `m` with `χ(g) = Σ_j m_j ζ^j`, `ζ` a primitive `exp(G)`-th root of unity.
//! Nothing here touches floating point.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::arith::{isqrt_ceil, primitive_root};
use crate::group::{FiniteGroup, GroupError, SubgroupSet, DEFAULT_ORDER_CAP};
use crate::linalg::{
    add_mod, inv_mod, is_prime, mul_mod, pow_mod, sub_mod, FpMatrix, FpSubspace, MAX_MODULUS,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    OracleCapExceeded { order: usize, cap: usize },
    NoWorkingPrime,
    SplittingFailed,
    Inconsistent(&'static str),
    Group(GroupError),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::OracleCapExceeded { order, cap } => {
                write!(f, "group order {order} exceeds the oracle cap {cap}")
            }
            OracleError::NoWorkingPrime => write!(f, "no working prime below 2^31"),
            OracleError::SplittingFailed => write!(f, "class matrices did not split into lines"),
            OracleError::Inconsistent(why) => write!(f, "inconsistent character data: {why}"),
            OracleError::Group(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for OracleError {}

impl From<GroupError> for OracleError {
    fn from(e: GroupError) -> Self {
        OracleError::Group(e)
    }
}

/// Conjugacy classes with structure constants.
#[derive(Clone, Debug)]
pub struct ClassData {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// Class of the inverses of class `i`.
    pub inverse_class: Vec<usize>,
    /// `a[i][j][k]` flattened: pairs `(x, y) ∈ C_i × C_j` with `xy` equal to the first element of `C_k`.
    structure: Vec<u64>,
}

impl ClassData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_size(&self, i: usize) -> usize {
        self.classes[i].len()
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u64 {
        let n = self.len();
        self.structure[(i * n + j) * n + k]
    }
}

/// Classes ordered by `(size, smallest element)`; the identity class comes first.
pub fn class_data(group: &FiniteGroup) -> ClassData {
    let mut classes = group.conjugacy_classes();
    classes.sort_by_key(|c| (c.len(), c[0]));
    let k = classes.len();
    let mut class_of = vec![0usize; group.order()];
    for (i, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = i;
        }
    }
    let inverse_class = classes.iter().map(|c| class_of[group.inv(c[0])]).collect();
    let mut structure = vec![0u64; k * k * k];
    for (ck, c) in classes.iter().enumerate() {
        let z = c[0];
        for x in 0..group.order() {
            let y = group.mul(group.inv(x), z);
            structure[(class_of[x] * k + class_of[y]) * k + ck] += 1;
        }
    }
    ClassData { classes, class_of, inverse_class, structure }
}

/// The smallest prime `ell ≡ 1 (mod e)` with `ell > 2·⌈√n⌉`.
pub fn working_prime(exponent: usize, order: usize) -> Result<u32, OracleError> {
    let bound = 2 * isqrt_ceil(order as u64);
    let e = exponent as u64;
    let mut ell = e + 1;
    while ell < MAX_MODULUS {
        if ell > bound && is_prime(ell) {
            return Ok(ell as u32);
        }
        ell += e;
    }
    Err(OracleError::NoWorkingPrime)
}

/// Characteristic polynomial (coefficients from the constant term up, monic)
/// via reduction to upper Hessenberg form.
pub(crate) fn charpoly(m: &FpMatrix) -> Vec<u32> {
    let p = m.modulus();
    let u = m.rows();
    let mut h: Vec<Vec<u32>> = (0..u).map(|r| m.row(r).to_vec()).collect();
    for j in 0..u.saturating_sub(2) {
        if h[j + 1][j] == 0 {
            if let Some(i) = (j + 2..u).find(|&i| h[i][j] != 0) {
                h.swap(i, j + 1);
                for row in h.iter_mut() {
                    row.swap(i, j + 1);
                }
            }
        }
        let pivot = h[j + 1][j];
        if pivot == 0 {
            continue;
        }
        let inv = inv_mod(pivot, p);
        for i in j + 2..u {
            let f = mul_mod(h[i][j], inv, p);
            if f == 0 {
                continue;
            }
            for c in 0..u {
                let v = sub_mod(h[i][c], mul_mod(f, h[j + 1][c], p), p);
                h[i][c] = v;
            }
            for row in h.iter_mut() {
                let v = add_mod(row[j + 1], mul_mod(f, row[i], p), p);
                row[j + 1] = v;
            }
        }
    }
    // p_m = (x - h_mm) p_{m-1} - Σ_{i<m} h_im (Π_{j=i+1..m} h_{j,j-1}) p_{i-1}   (1-indexed)
    let mut polys: Vec<Vec<u32>> = vec![vec![1]];
    for m1 in 1..=u {
        let prev = &polys[m1 - 1];
        let mut next = vec![0u32; m1 + 1];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = add_mod(next[d + 1], c, p);
            next[d] = sub_mod(next[d], mul_mod(c, h[m1 - 1][m1 - 1], p), p);
        }
        let mut prod = 1u32;
        for i in (1..m1).rev() {
            prod = mul_mod(prod, h[i][i - 1], p);
            let coeff = mul_mod(h[i - 1][m1 - 1], prod, p);
            if coeff == 0 {
                continue;
            }
            for (d, &c) in polys[i - 1].iter().enumerate() {
                next[d] = sub_mod(next[d], mul_mod(coeff, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().expect("nonempty")
}

fn poly_eval(coeffs: &[u32], x: u32, p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

/// Splits `space` into eigenspaces of `a` (which must leave it invariant).
fn split(a: &FpMatrix, space: &FpSubspace) -> Result<Vec<FpSubspace>, OracleError> {
    let p = a.modulus();
    let u = space.dim();
    let mut data = vec![0u32; u * u];
    for (j, b) in space.basis().iter().enumerate() {
        let coords = space
            .coordinates(&a.mul_vec(b))
            .ok_or(OracleError::Inconsistent("eigenspace is not invariant"))?;
        for (i, c) in coords.into_iter().enumerate() {
            data[i * u + j] = c;
        }
    }
    let restricted = FpMatrix::from_raw(p, u, u, data);
    let poly = charpoly(&restricted);
    let mut pieces = Vec::new();
    let mut total = 0;
    for lambda in (0..p).filter(|&x| poly_eval(&poly, x, p) == 0) {
        let shifted = restricted
            .sub(&FpMatrix::identity_raw(p, u).scale(lambda))
            .expect("same shape");
        let eig = shifted.kernel();
        total += eig.dim();
        let vectors = eig.basis().iter().map(|c| space.combine(c)).collect();
        pieces.push(FpSubspace::span_raw(p, space.ambient_dim(), vectors));
        if total == u {
            break;
        }
    }
    if total != u {
        return Err(OracleError::SplittingFailed);
    }
    Ok(pieces)
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub exponent: usize,
    pub ell: u32,
    /// The image of `ζ` in `F_ell`.
    pub zeta: u32,
    pub degrees: Vec<usize>,
    /// `multiplicities[row][class][j]`: multiplicity of the eigenvalue `ζ^j`.
    pub multiplicities: Vec<Vec<Vec<u32>>>,
    /// Character values reduced into `F_ell` through `ζ ↦ zeta`.
    pub values_mod_ell: Vec<Vec<u32>>,
    pub classes: ClassData,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// `Σ_c |C_c| χ(c) ψ(c⁻¹)` in `F_ell`; equals `|G|` when `χ = ψ` and `0` otherwise.
    pub fn inner_product_mod_ell(&self, a: usize, b: usize) -> u32 {
        let ell = self.ell;
        (0..self.classes.len()).fold(0, |acc, c| {
            let term = mul_mod(
                mul_mod(self.classes.class_size(c) as u32 % ell, self.values_mod_ell[a][c], ell),
                self.values_mod_ell[b][self.classes.inverse_class[c]],
                ell,
            );
            add_mod(acc, term, ell)
        })
    }

    /// `{g : every eigenvalue of g is 1}`.
    pub fn kernel_of(&self, row: usize, group: &FiniteGroup) -> Result<SubgroupSet, OracleError> {
        let degree = self.degrees[row] as u32;
        let members: Vec<usize> = (0..group.order())
            .filter(|&g| self.multiplicities[row][self.classes.class_of[g]][0] == degree)
            .collect();
        Ok(group.subgroup(&members)?)
    }

    /// First row (in table order) with trivial kernel.
    pub fn faithful_irreducible_exists(&self, group: &FiniteGroup) -> Result<FaithfulSearch, OracleError> {
        for row in 0..self.len() {
            if self.kernel_of(row, group)?.is_trivial() {
                return Ok(FaithfulSearch { exists: true, witness_row: Some(row) });
            }
        }
        Ok(FaithfulSearch { exists: false, witness_row: None })
    }

    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaithfulSearch {
    pub exists: bool,
    pub witness_row: Option<usize>,
}

pub fn dixon_table(group: &FiniteGroup) -> Result<CharacterTable, OracleError> {
    dixon_table_with_cap(group, DEFAULT_ORDER_CAP)
}

pub fn dixon_table_with_cap(group: &FiniteGroup, cap: usize) -> Result<CharacterTable, OracleError> {
    let n = group.order();
    if n > cap {
        return Err(OracleError::OracleCapExceeded { order: n, cap });
    }
    let cd = class_data(group);
    let k = cd.len();
    let e = group.exponent();
    let ell = working_prime(e, n)?;
    let zeta = pow_mod(primitive_root(ell), ((ell - 1) as u64) / e as u64, ell);

    // simultaneous eigenspaces of the class matrices (A_i)_{jk} = a_{ijk}
    let mut spaces = vec![FpSubspace::full(ell as u64, k).expect("ell is prime")];
    for i in 0..k {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let data = (0..k * k).map(|jk| (cd.structure_constant(i, jk / k, jk % k) % ell as u64) as u32).collect();
        let a = FpMatrix::from_raw(ell, k, k, data);
        let mut next = Vec::with_capacity(k);
        for s in spaces {
            if s.dim() == 1 {
                next.push(s);
            } else {
                next.extend(split(&a, &s)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|s| s.dim() != 1) {
        return Err(OracleError::SplittingFailed);
    }

    let mut rows: Vec<(usize, Vec<Vec<u32>>, Vec<u32>)> = Vec::with_capacity(k);
    for s in &spaces {
        let w = &s.basis()[0];
        if w[0] == 0 {
            return Err(OracleError::Inconsistent("central character vanishes at the identity"));
        }
        let inv0 = inv_mod(w[0], ell);
        let omega: Vec<u32> = w.iter().map(|&x| mul_mod(x, inv0, ell)).collect();
        // d^2 = |G| / Σ_i ω_i ω_{i*} / |C_i|
        let sum = (0..k).fold(0, |acc, i| {
            let t = mul_mod(omega[i], omega[cd.inverse_class[i]], ell);
            add_mod(acc, mul_mod(t, inv_mod(cd.class_size(i) as u32 % ell, ell), ell), ell)
        });
        if sum == 0 {
            return Err(OracleError::Inconsistent("degenerate central character"));
        }
        let target = mul_mod(n as u32 % ell, inv_mod(sum, ell), ell);
        let degree = (1..=isqrt_ceil(n as u64) as usize)
            .find(|&d| mul_mod(d as u32, d as u32, ell) == target)
            .ok_or(OracleError::Inconsistent("no admissible degree"))?;
        let values: Vec<u32> = (0..k)
            .map(|i| mul_mod(mul_mod(omega[i], degree as u32, ell), inv_mod(cd.class_size(i) as u32 % ell, ell), ell))
            .collect();
        let mults = (0..k)
            .map(|i| eigenvalue_multiplicities(group, &cd, &values, cd.classes[i][0], e, ell, zeta, degree))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((degree, mults, values));
    }
    rows.sort_by(|a, b| (a.0, Reverse(&a.1)).cmp(&(b.0, Reverse(&b.1))));

    let table = CharacterTable {
        exponent: e,
        ell,
        zeta,
        degrees: rows.iter().map(|r| r.0).collect(),
        multiplicities: rows.iter().map(|r| r.1.clone()).collect(),
        values_mod_ell: rows.into_iter().map(|r| r.2).collect(),
        classes: cd,
    };
    if table.degrees.iter().map(|d| d * d).sum::<usize>() != n {
        return Err(OracleError::Inconsistent("sum of squared degrees differs from the group order"));
    }
    Ok(table)
}

/// Multiplicities of `ζ^j` as eigenvalues of `g`, by the discrete Fourier
/// transform of `t ↦ χ(g^t)` over the cyclic group `⟨g⟩`.
#[allow(clippy::too_many_arguments)]
fn eigenvalue_multiplicities(
    group: &FiniteGroup,
    cd: &ClassData,
    values: &[u32],
    g: usize,
    e: usize,
    ell: u32,
    zeta: u32,
    degree: usize,
) -> Result<Vec<u32>, OracleError> {
    let o = group.element_order(g);
    let step = e / o;
    let zeta_o = pow_mod(zeta, step as u64, ell);
    let mut chi_powers = Vec::with_capacity(o);
    let mut x = 0;
    for _ in 0..o {
        chi_powers.push(values[cd.class_of[x]]);
        x = group.mul(x, g);
    }
    let inv_o = inv_mod(o as u32 % ell, ell);
    let mut m = vec![0u32; e];
    let mut total = 0usize;
    for l in 0..o {
        let root_inv = inv_mod(pow_mod(zeta_o, l as u64, ell), ell);
        let mut acc = 0u32;
        let mut w = 1u32;
        for &c in &chi_powers {
            acc = add_mod(acc, mul_mod(c, w, ell), ell);
            w = mul_mod(w, root_inv, ell);
        }
        let mult = mul_mod(acc, inv_o, ell);
        if mult as usize > degree {
            return Err(OracleError::Inconsistent("eigenvalue multiplicity exceeds the degree"));
        }
        total += mult as usize;
        m[l * step] = mult;
    }
    if total != degree {
        return Err(OracleError::Inconsistent("eigenvalue multiplicities do not sum to the degree"));
    }
    Ok(m)
}
