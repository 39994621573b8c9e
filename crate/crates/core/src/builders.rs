//! Group constructors.
//!
//! Every constructor respects an order cap. The free functions use
//! [`DEFAULT_ORDER_CAP`]; [`GroupFactory`] carries a configurable one.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::prime_power;
use crate::group::{FiniteGroup, GroupError, DEFAULT_ORDER_CAP};
use crate::linalg::{add_mod, check_prime, mul_mod, sub_mod, FpMatrix, VectorIter};

/// `F_q` realized as `F_p[x]/(f)` with `f` the lexicographically smallest
/// monic irreducible of degree `e` (coefficients compared from `x^{e-1}` down).
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    degree: usize,
    /// Low coefficients `c_0..c_{e-1}` of the monic modulus.
    modulus: Vec<u32>,
}

fn poly_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    // m monic given in full (leading 1 included)
    let mut r = a.to_vec();
    while r.last() == Some(&0) {
        r.pop();
    }
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().expect("nonempty");
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = sub_mod(r[shift + i], mul_mod(lead, c, p), p);
        }
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for low in VectorIter::new(p, d) {
            let mut g: Vec<u32> = low.iter().rev().copied().collect();
            g.push(1);
            if poly_rem(p, f, &g).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self, GroupError> {
        let (p, e) = prime_power(q).ok_or(GroupError::NotPrimePower(q))?;
        let p = check_prime(p)?;
        let degree = e as usize;
        // lexicographic over (c_{e-1}, ..., c_0)
        for high_first in VectorIter::new(p, degree) {
            let mut f: Vec<u32> = high_first.iter().rev().copied().collect();
            f.push(1);
            if is_irreducible(p, &f) {
                f.pop();
                return Ok(FiniteField { p, degree, modulus: f });
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn size(&self) -> u64 {
        (self.p as u64).pow(self.degree as u32)
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut prod = vec![0u32; 2 * self.degree];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = add_mod(prod[i + j], mul_mod(x, y, p), p);
            }
        }
        let mut full = self.modulus.clone();
        full.push(1);
        let mut r = poly_rem(p, &prod, &full);
        r.resize(self.degree, 0);
        r
    }

    fn one(&self) -> Vec<u32> {
        let mut v = vec![0; self.degree];
        v[0] = 1;
        v
    }

    pub fn multiplicative_order(&self, a: &[u32]) -> Option<u64> {
        if a.iter().all(|&x| x == 0) {
            return None;
        }
        let one = self.one();
        let mut x = a.to_vec();
        let mut k = 1;
        while x != one {
            x = self.mul(&x, a);
            k += 1;
        }
        Some(k)
    }

    /// The first generator of `F_q^*` in lexicographic order.
    pub fn primitive_element(&self) -> Vec<u32> {
        let target = self.size() - 1;
        VectorIter::new(self.p, self.degree)
            .map(|high_first| high_first.into_iter().rev().collect::<Vec<u32>>())
            .find(|a| self.multiplicative_order(a) == Some(target))
            .expect("F_q^* is cyclic")
    }

    /// Matrix of `x ↦ a·x` on `F_p^e` with basis `1, x, ..., x^{e-1}`.
    pub fn multiplication_matrix(&self, a: &[u32]) -> FpMatrix {
        let e = self.degree;
        let mut data = vec![0u32; e * e];
        for j in 0..e {
            let mut basis = vec![0u32; e];
            basis[j] = 1;
            let col = self.mul(a, &basis);
            for (i, &c) in col.iter().enumerate() {
                data[i * e + j] = c;
            }
        }
        FpMatrix::from_raw(self.p, e, e, data)
    }
}

fn block_diagonal(blocks: &[FpMatrix]) -> FpMatrix {
    let mut it = blocks.iter();
    let first = it.next().expect("at least one block").clone();
    it.fold(first, |acc, b| acc.direct_sum(b).expect("same modulus"))
}

#[derive(Clone, Copy, Debug)]
pub struct GroupFactory {
    pub order_cap: usize,
}

impl Default for GroupFactory {
    fn default() -> Self {
        GroupFactory { order_cap: DEFAULT_ORDER_CAP }
    }
}

impl GroupFactory {
    pub fn new(order_cap: usize) -> Self {
        GroupFactory { order_cap }
    }

    fn check_cap(&self, n: u64) -> Result<usize, GroupError> {
        if n > self.order_cap as u64 {
            Err(GroupError::OrderCapExceeded { cap: self.order_cap })
        } else {
            Ok(n as usize)
        }
    }

    pub fn cyclic(&self, n: usize) -> Result<FiniteGroup, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidArgument("cyclic group of order 0"));
        }
        self.check_cap(n as u64)?;
        let table = (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect();
        Ok(FiniteGroup::from_table_trusted(n, table))
    }

    /// `G × H` with `(g, h)` stored at index `g·|H| + h`.
    pub fn direct_product(&self, g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
        let (a, b) = (g.order(), h.order());
        let n = self.check_cap(a as u64 * b as u64)?;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let prod = g.mul(x / b, y / b) * b + h.mul(x % b, y % b);
                table[x * n + y] = prod as u32;
            }
        }
        Ok(FiniteGroup::from_table_trusted(n, table))
    }

    /// `F_p^d ⋊ H` where each listed generator of `H` acts by the given matrix.
    ///
    /// `(v, h)` is stored at index `code(v)·|H| + h`, where `code` reads the
    /// coordinates base `p` with the first coordinate most significant.
    pub fn semidirect_vector(
        &self,
        p: u64,
        d: usize,
        h: &FiniteGroup,
        action: &[(usize, FpMatrix)],
    ) -> Result<FiniteGroup, GroupError> {
        let p = check_prime(p)?;
        let size_v = (p as u64).checked_pow(d as u32).ok_or(GroupError::OrderCapExceeded { cap: self.order_cap })?;
        let n = self.check_cap(size_v * h.order() as u64)?;
        for (x, m) in action {
            if *x >= h.order() {
                return Err(GroupError::InvalidAction("generator index out of range"));
            }
            if m.modulus() != p || m.rows() != d || m.cols() != d {
                return Err(GroupError::InvalidAction("matrix has the wrong shape or modulus"));
            }
            if m.inverse().is_none() {
                return Err(GroupError::InvalidAction("matrix is not invertible"));
            }
        }
        let act = expand_action(h, p, d, action)?;
        let hn = h.order();
        let vn = size_v as usize;
        let vectors: Vec<Vec<u32>> = VectorIter::new(p, d).collect();
        let code = |v: &[u32]| v.iter().fold(0usize, |acc, &x| acc * p as usize + x as usize);
        // moved[k][w] = code(act(k) · w)
        let moved: Vec<Vec<usize>> =
            act.iter().map(|m| vectors.iter().map(|w| code(&m.mul_vec(w))).collect()).collect();
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            let (v, k) = (&vectors[x / hn], x % hn);
            for y in 0..n {
                let (w, l) = (y / hn, y % hn);
                let kw = &vectors[moved[k][w]];
                let sum: Vec<u32> = v.iter().zip(kw).map(|(&a, &b)| add_mod(a, b, p)).collect();
                table[x * n + y] = (code(&sum) * hn + h.mul(k, l)) as u32;
            }
        }
        debug_assert_eq!(vn * hn, n);
        Ok(FiniteGroup::from_table_trusted(n, table))
    }

    /// `G(d, q) = F_q^d ⋊ F_q^*` with scalars acting by multiplication.
    pub fn affine_scalar_group(&self, d: usize, q: u64) -> Result<FiniteGroup, GroupError> {
        if d == 0 {
            return Err(GroupError::InvalidArgument("dimension must be at least 1"));
        }
        let field = FiniteField::new(q)?;
        self.check_cap(q.saturating_pow(d as u32).saturating_mul(q - 1))?;
        let units = self.cyclic((q - 1) as usize)?;
        let action = if q == 2 {
            Vec::new()
        } else {
            let m = field.multiplication_matrix(&field.primitive_element());
            vec![(1, block_diagonal(&vec![m; d]))]
        };
        self.semidirect_vector(field.characteristic() as u64, d * field.degree(), &units, &action)
    }

    /// `G(q) = F_q^+ ⋊ F_q^*`.
    pub fn affine_line_group(&self, q: u64) -> Result<FiniteGroup, GroupError> {
        self.affine_scalar_group(1, q)
    }

    /// `F_q^d ⋊ T` with `T ≅ (F_q^*)^d` the diagonal matrices; isomorphic to `G(q)^d`.
    pub fn diagonal_affine_group(&self, d: usize, q: u64) -> Result<FiniteGroup, GroupError> {
        if d == 0 {
            return Err(GroupError::InvalidArgument("dimension must be at least 1"));
        }
        let field = FiniteField::new(q)?;
        self.check_cap(q.saturating_pow(d as u32).saturating_mul((q - 1).saturating_pow(d as u32)))?;
        let m = (q - 1) as usize;
        let unit = self.cyclic(m)?;
        let mut torus = unit.clone();
        for _ in 1..d {
            torus = self.direct_product(&torus, &unit)?;
        }
        let mut action = Vec::new();
        if q > 2 {
            let p = field.characteristic() as u64;
            let omega = field.multiplication_matrix(&field.primitive_element());
            let id = FpMatrix::identity(p, field.degree())?;
            for i in 0..d {
                // index of the tuple with a 1 in slot i, left-nested products
                let index = m.pow((d - 1 - i) as u32);
                let blocks: Vec<FpMatrix> =
                    (0..d).map(|j| if j == i { omega.clone() } else { id.clone() }).collect();
                action.push((index, block_diagonal(&blocks)));
            }
        }
        self.semidirect_vector(field.characteristic() as u64, d * field.degree(), &torus, &action)
    }

    /// `(C_3 × C_3) ⋊ C_2` with `C_2` acting by inversion.
    pub fn burnside_example(&self) -> Result<FiniteGroup, GroupError> {
        let minus = FpMatrix::from_rows(3, &[&[-1, 0], &[0, -1]])?;
        self.semidirect_vector(3, 2, &self.cyclic(2)?, &[(1, minus)])
    }

    /// `C_2^4 ⋊ C_3` with `C_3` acting fixed-point-freely.
    pub fn isaacs_example(&self) -> Result<FiniteGroup, GroupError> {
        let a = FpMatrix::from_rows(2, &[&[0, 1], &[1, 1]])?;
        let m = a.direct_sum(&a)?;
        self.semidirect_vector(2, 4, &self.cyclic(3)?, &[(1, m)])
    }

    pub fn permutations(&self, gens: &[Vec<u32>]) -> Result<FiniteGroup, GroupError> {
        FiniteGroup::from_permutations(gens, self.order_cap)
    }

    pub fn symmetric(&self, n: usize) -> Result<FiniteGroup, GroupError> {
        if n < 2 {
            return self.permutations(&[]);
        }
        let cycle: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
        let mut swap: Vec<u32> = (0..n as u32).collect();
        swap.swap(0, 1);
        self.permutations(&[cycle, swap])
    }

    pub fn alternating(&self, n: usize) -> Result<FiniteGroup, GroupError> {
        let gens: Vec<Vec<u32>> = (2..n)
            .map(|k| {
                let mut g: Vec<u32> = (0..n as u32).collect();
                g[0] = 1;
                g[1] = k as u32;
                g[k] = 0;
                g
            })
            .collect();
        self.permutations(&gens)
    }

    /// Dihedral group of order `2n`.
    pub fn dihedral(&self, n: usize) -> Result<FiniteGroup, GroupError> {
        match n {
            0 => Err(GroupError::InvalidArgument("dihedral group needs n >= 1")),
            1 => self.cyclic(2),
            2 => self.direct_product(&self.cyclic(2)?, &self.cyclic(2)?),
            _ => {
                let rot: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
                let refl: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
                self.permutations(&[rot, refl])
            }
        }
    }

    /// Quaternion group of order 8 in its regular permutation representation.
    pub fn quaternion(&self) -> Result<FiniteGroup, GroupError> {
        let i = vec![1, 2, 3, 0, 5, 6, 7, 4];
        let j = vec![4, 7, 6, 5, 2, 1, 0, 3];
        self.permutations(&[i, j])
    }
}

/// Extends generator matrices to every element of `h`, checking every
/// Cayley-graph edge so the result is a homomorphism.
pub(crate) fn expand_action(
    h: &FiniteGroup,
    p: u32,
    d: usize,
    action: &[(usize, FpMatrix)],
) -> Result<Vec<FpMatrix>, GroupError> {
    let n = h.order();
    let mut act: Vec<Option<FpMatrix>> = vec![None; n];
    act[0] = Some(FpMatrix::identity_raw(p, d));
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        let ax = act[x].clone().expect("queued elements have actions");
        for (g, m) in action {
            let y = h.mul(x, *g);
            let candidate = ax.mul_unchecked(m);
            match &act[y] {
                Some(existing) if *existing != candidate => {
                    return Err(GroupError::InvalidAction("matrices do not define a homomorphism"));
                }
                Some(_) => {}
                None => {
                    act[y] = Some(candidate);
                    queue.push(y);
                }
            }
        }
    }
    act.into_iter()
        .map(|m| m.ok_or(GroupError::InvalidAction("acting elements do not generate the group")))
        .collect()
}

pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    GroupFactory::default().cyclic(n)
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    GroupFactory::default().direct_product(g, h)
}

pub fn semidirect_vector(
    p: u64,
    d: usize,
    h: &FiniteGroup,
    action: &[(usize, FpMatrix)],
) -> Result<FiniteGroup, GroupError> {
    GroupFactory::default().semidirect_vector(p, d, h, action)
}

pub fn affine_scalar_group(d: usize, q: u64) -> Result<FiniteGroup, GroupError> {
    GroupFactory::default().affine_scalar_group(d, q)
}

pub fn affine_line_group(q: u64) -> Result<FiniteGroup, GroupError> {
    GroupFactory::default().affine_line_group(q)
}

pub fn diagonal_affine_group(d: usize, q: u64) -> Result<FiniteGroup, GroupError> {
    GroupFactory::default().diagonal_affine_group(d, q)
}

pub fn burnside_example() -> Result<FiniteGroup, GroupError> {
    GroupFactory::default().burnside_example()
}

pub fn isaacs_example() -> Result<FiniteGroup, GroupError> {
    GroupFactory::default().isaacs_example()
}

pub fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    GroupFactory::default().symmetric(n)
}

pub fn alternating(n: usize) -> Result<FiniteGroup, GroupError> {
    GroupFactory::default().alternating(n)
}

pub fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    GroupFactory::default().dihedral(n)
}

pub fn quaternion() -> Result<FiniteGroup, GroupError> {
    GroupFactory::default().quaternion()
}
