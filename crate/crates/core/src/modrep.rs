//! Finite-dimensional `F_pG`-modules.
//!
//! Vectors are columns and `g` acts by `act(g) · v`. Two independent routes
//! answer "is this module cyclic?": an exhaustive spin search and the
//! multiplicity formula `s·g ≤ r` on the isotypic decomposition.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::builders::expand_action;
use crate::group::{FiniteGroup, GroupError, SubgroupSet};
use crate::linalg::{
    check_prime, inv_mod, mul_mod, normalized_vectors, solve_commutant, sub_mod, FpMatrix,
    FpSubspace, LinalgError, VectorIter,
};

/// Default bound on `p^dim` for exhaustive vector and functional searches.
pub const DEFAULT_SEARCH_CAP: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleError {
    Linalg(LinalgError),
    Group(GroupError),
    SearchCapExceeded { size: u64, cap: u64 },
    NotCompletelyReducible,
    NotASubmodule,
    NotAHomomorphism { element: usize, generator: usize },
    Mismatch(&'static str),
}

impl fmt::Display for ModuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleError::Linalg(e) => write!(f, "{e}"),
            ModuleError::Group(e) => write!(f, "{e}"),
            ModuleError::SearchCapExceeded { size, cap } => {
                write!(f, "search space of size {size} exceeds cap {cap}")
            }
            ModuleError::NotCompletelyReducible => write!(f, "module is not completely reducible"),
            ModuleError::NotASubmodule => write!(f, "subspace is not invariant"),
            ModuleError::NotAHomomorphism { element, generator } => {
                write!(f, "action is not multiplicative at ({element}, {generator})")
            }
            ModuleError::Mismatch(why) => write!(f, "mismatch: {why}"),
        }
    }
}

impl core::error::Error for ModuleError {}

impl From<LinalgError> for ModuleError {
    fn from(e: LinalgError) -> Self {
        ModuleError::Linalg(e)
    }
}

impl From<GroupError> for ModuleError {
    fn from(e: GroupError) -> Self {
        ModuleError::Group(e)
    }
}

/// Incremental semi-echelon basis: row `k` vanishes at the pivots of rows `< k`.
struct Echelon {
    p: u32,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new(p: u32) -> Self {
        Echelon { p, rows: Vec::new(), pivots: Vec::new() }
    }

    fn reduce(&self, v: &mut [u32]) {
        let p = self.p;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let f = v[pc];
            if f != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = sub_mod(*x, mul_mod(f, r, p), p);
                }
            }
        }
    }

    /// Adds `v` if independent; returns whether it was added.
    fn insert(&mut self, mut v: Vec<u32>) -> bool {
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[pc], self.p);
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, self.p);
        }
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// A module over `F_pG` for a finite group `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpModule {
    p: u32,
    dim: usize,
    generators: Vec<usize>,
    gen_action: Vec<FpMatrix>,
    action: Vec<FpMatrix>,
}

impl FpModule {
    /// Extends generator images to all of `G`, checking that they define a homomorphism.
    pub fn from_generators(
        group: &FiniteGroup,
        p: u64,
        dim: usize,
        generators: &[(usize, FpMatrix)],
    ) -> Result<Self, ModuleError> {
        let p = check_prime(p)?;
        for (_, m) in generators {
            if m.modulus() != p || m.rows() != dim || m.cols() != dim {
                return Err(ModuleError::Mismatch("generator matrix shape or modulus"));
            }
        }
        let action = expand_action(group, p, dim, generators)?;
        Ok(FpModule {
            p,
            dim,
            generators: generators.iter().map(|(g, _)| *g).collect(),
            gen_action: generators.iter().map(|(_, m)| m.clone()).collect(),
            action,
        })
    }

    /// A module given by the matrix of every group element.
    pub fn from_element_actions(
        group: &FiniteGroup,
        p: u64,
        dim: usize,
        action: Vec<FpMatrix>,
    ) -> Result<Self, ModuleError> {
        let p = check_prime(p)?;
        if action.len() != group.order() {
            return Err(ModuleError::Mismatch("one matrix per group element is required"));
        }
        for m in &action {
            if m.modulus() != p || m.rows() != dim || m.cols() != dim {
                return Err(ModuleError::Mismatch("action matrix shape or modulus"));
            }
        }
        if !action[0].is_identity() {
            return Err(ModuleError::NotAHomomorphism { element: 0, generator: 0 });
        }
        // act(x)·act(g) = act(xg) on every Cayley-graph edge implies multiplicativity
        for x in 0..group.order() {
            for &g in group.generators() {
                if action[x].mul_unchecked(&action[g]) != action[group.mul(x, g)] {
                    return Err(ModuleError::NotAHomomorphism { element: x, generator: g });
                }
            }
        }
        let generators = group.generators().to_vec();
        let gen_action = generators.iter().map(|&g| action[g].clone()).collect();
        Ok(FpModule { p, dim, generators, gen_action, action })
    }

    pub fn trivial(group: &FiniteGroup, p: u64, dim: usize) -> Result<Self, ModuleError> {
        let id = FpMatrix::identity(p, dim)?;
        Self::from_element_actions(group, p, dim, vec![id; group.order()])
    }

    /// Permutation module on the left cosets `xH`, basis ordered by smallest coset member.
    pub fn coset_permutation(group: &FiniteGroup, h: &SubgroupSet, p: u64) -> Result<Self, ModuleError> {
        let q = check_prime(p)?;
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut count = 0;
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            for &y in h.members() {
                coset_of[group.mul(x, y)] = count;
            }
            count += 1;
        }
        let reps: Vec<usize> = {
            let mut r = vec![usize::MAX; count];
            for x in (0..n).rev() {
                r[coset_of[x]] = x;
            }
            r
        };
        let action = (0..n)
            .map(|g| {
                let mut data = vec![0u32; count * count];
                for (c, &x) in reps.iter().enumerate() {
                    data[coset_of[group.mul(g, x)] * count + c] = 1;
                }
                FpMatrix::from_raw(q, count, count, data)
            })
            .collect();
        Self::from_element_actions(group, p, count, action)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn group_order(&self) -> usize {
        self.action.len()
    }
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
    pub fn generator_matrices(&self) -> &[FpMatrix] {
        &self.gen_action
    }
    pub fn act(&self, g: usize) -> &FpMatrix {
        &self.action[g]
    }
    pub fn element_matrices(&self) -> &[FpMatrix] {
        &self.action
    }

    pub fn direct_sum(&self, other: &FpModule) -> Result<FpModule, ModuleError> {
        if self.p != other.p || self.action.len() != other.action.len() {
            return Err(ModuleError::Mismatch("direct sum over different groups or fields"));
        }
        let action: Vec<FpMatrix> = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.direct_sum(b))
            .collect::<Result<_, _>>()?;
        let gen_action = self.generators.iter().map(|&g| action[g].clone()).collect();
        Ok(FpModule {
            p: self.p,
            dim: self.dim + other.dim,
            generators: self.generators.clone(),
            gen_action,
            action,
        })
    }

    pub fn is_invariant(&self, w: &FpSubspace) -> bool {
        w.ambient_dim() == self.dim
            && w.basis().iter().all(|b| self.gen_action.iter().all(|a| w.contains(&a.mul_vec(b))))
    }

    /// Matrix of `a` restricted to the invariant subspace `w`, in the canonical basis of `w`.
    fn restrict_matrix(a: &FpMatrix, w: &FpSubspace) -> FpMatrix {
        let r = w.dim();
        let mut data = vec![0u32; r * r];
        for (j, b) in w.basis().iter().enumerate() {
            let coords = w.coordinates(&a.mul_vec(b)).expect("subspace is invariant");
            for (i, c) in coords.into_iter().enumerate() {
                data[i * r + j] = c;
            }
        }
        FpMatrix::from_raw(a.modulus(), r, r, data)
    }

    /// The submodule on an invariant subspace, in its canonical basis.
    pub fn submodule(&self, w: &FpSubspace) -> Result<FpModule, ModuleError> {
        if w.modulus() != self.p {
            return Err(ModuleError::Mismatch("subspace modulus"));
        }
        if !self.is_invariant(w) {
            return Err(ModuleError::NotASubmodule);
        }
        let action: Vec<FpMatrix> = self.action.iter().map(|a| Self::restrict_matrix(a, w)).collect();
        let gen_action = self.generators.iter().map(|&g| action[g].clone()).collect();
        Ok(FpModule { p: self.p, dim: w.dim(), generators: self.generators.clone(), gen_action, action })
    }

    /// Cyclic submodule generated by `v`.
    pub fn spin(&self, v: &[u32]) -> FpSubspace {
        let e = self.spin_echelon(v, self.dim);
        FpSubspace::span_raw(self.p, self.dim, e.rows)
    }

    /// Spins `v`, stopping once the dimension exceeds `limit`.
    fn spin_echelon(&self, v: &[u32], limit: usize) -> Echelon {
        let mut e = Echelon::new(self.p);
        let start: Vec<u32> = v.iter().map(|&x| x % self.p).collect();
        if !e.insert(start.clone()) {
            return e;
        }
        let mut queue = vec![start];
        while let Some(w) = queue.pop() {
            for a in &self.gen_action {
                if e.dim() >= self.dim || e.dim() > limit {
                    return e;
                }
                let image = a.mul_vec(&w);
                if e.insert(image.clone()) {
                    queue.push(image);
                }
            }
        }
        e
    }

    fn check_cap(&self, cap: u64) -> Result<(), ModuleError> {
        let size = (self.p as u64).checked_pow(self.dim as u32).unwrap_or(u64::MAX);
        if size > cap {
            Err(ModuleError::SearchCapExceeded { size, cap })
        } else {
            Ok(())
        }
    }

    /// Exhaustive search for a generating vector; the witness is the
    /// lexicographically first one (always normalized).
    pub fn is_cyclic_spin(&self, cap: u64) -> Result<CyclicSearch, ModuleError> {
        self.check_cap(cap)?;
        if self.dim == 0 {
            return Ok(CyclicSearch { cyclic: true, witness: Some(Vec::new()) });
        }
        let witness =
            normalized_vectors(self.p, self.dim).find(|v| self.spin_echelon(v, self.dim).dim() == self.dim);
        Ok(CyclicSearch { cyclic: witness.is_some(), witness })
    }

    /// Isotypic decomposition with Akizuki's quantities per component.
    ///
    /// Fails with `NotCompletelyReducible` unless the module is a direct sum
    /// of its isotypic components.
    pub fn decompose(&self, cap: u64) -> Result<IsotypicSummary, ModuleError> {
        self.check_cap(cap)?;
        let p = self.p as u64;
        let mut covered = FpSubspace::span_raw(self.p, self.dim, Vec::new());
        let mut components = Vec::new();
        while covered.dim() < self.dim {
            // a minimal spin among vectors outside the covered part is irreducible of a new type
            let mut best: Option<(usize, Vec<u32>)> = None;
            for v in normalized_vectors(self.p, self.dim) {
                if covered.contains(&v) {
                    continue;
                }
                let limit = best.as_ref().map_or(self.dim, |(d, _)| *d - 1);
                let d = self.spin_echelon(&v, limit).dim();
                if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
                    best = Some((d, v));
                    if d == 1 {
                        break;
                    }
                }
            }
            let (_, v) = best.expect("covered part is proper");
            let irreducible = self.spin(&v);
            let sub = self.submodule(&irreducible)?;
            if !sub.is_irreducible() {
                return Err(ModuleError::NotCompletelyReducible);
            }
            let r = irreducible.dim();
            let g = solve_commutant(p, r, r, sub.generator_matrices(), sub.generator_matrices())?.dim;
            let hom = solve_commutant(p, r, self.dim, sub.generator_matrices(), &self.gen_action)?;
            if g == 0 || hom.dim % g != 0 {
                return Err(ModuleError::NotCompletelyReducible);
            }
            let s = hom.dim / g;
            let columns: Vec<Vec<u32>> = hom
                .basis
                .iter()
                .flat_map(|x| {
                    let t = x.transpose();
                    (0..t.rows()).map(move |c| t.row(c).to_vec())
                })
                .collect();
            let isotypic = FpSubspace::span_raw(self.p, self.dim, columns);
            if isotypic.dim() != s * r || !isotypic.intersection(&covered)?.is_zero() {
                return Err(ModuleError::NotCompletelyReducible);
            }
            covered = covered.sum(&isotypic)?;
            components.push(IsotypicComponent { irreducible_basis: irreducible, r, g, s });
        }
        Ok(IsotypicSummary { components })
    }

    fn is_irreducible(&self) -> bool {
        self.dim > 0
            && normalized_vectors(self.p, self.dim).all(|v| self.spin_echelon(&v, self.dim).dim() == self.dim)
    }

    /// Cyclicity via the multiplicity formula: `s·g ≤ r` for every component.
    pub fn akizuki_cyclic(&self, cap: u64) -> Result<bool, ModuleError> {
        Ok(self.decompose(cap)?.components.iter().all(|c| c.s * c.g <= c.r))
    }

    /// Contragredient module: `g` acts by the transpose of `act(g⁻¹)`.
    pub fn dual(&self) -> FpModule {
        let dualize = |m: &FpMatrix| m.inverse().expect("action matrices are invertible").transpose();
        let action: Vec<FpMatrix> = self.action.iter().map(dualize).collect();
        let gen_action = self.generators.iter().map(|&g| action[g].clone()).collect();
        FpModule { p: self.p, dim: self.dim, generators: self.generators.clone(), gen_action, action }
    }

    /// Largest submodule inside `ker λ`: `{v : λ(act(g)·v) = 0 for all g}`.
    pub fn largest_submodule_in_kernel(&self, functional: &[u32]) -> FpSubspace {
        let rows: Vec<Vec<u32>> = self.action.iter().map(|a| a.vec_mul(functional)).collect();
        let data: Vec<u32> = rows.into_iter().flatten().collect();
        FpMatrix::from_raw(self.p, self.action.len(), self.dim, data).kernel()
    }

    /// Searches for a hyperplane containing no nonzero submodule.
    pub fn weisner_hyperplane_exists(&self, cap: u64) -> Result<HyperplaneSearch, ModuleError> {
        self.check_cap(cap)?;
        if self.dim == 0 {
            return Ok(HyperplaneSearch { exists: true, functional: None });
        }
        let functional = normalized_vectors(self.p, self.dim).find(|lambda| {
            let mut e = Echelon::new(self.p);
            for a in &self.action {
                e.insert(a.vec_mul(lambda));
                if e.dim() == self.dim {
                    return true;
                }
            }
            false
        });
        Ok(HyperplaneSearch { exists: functional.is_some(), functional })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSearch {
    pub cyclic: bool,
    pub witness: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneSearch {
    pub exists: bool,
    pub functional: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotypicComponent {
    /// One irreducible submodule `W` of this type.
    pub irreducible_basis: FpSubspace,
    /// `dim_{F_p} W`.
    pub r: usize,
    /// `dim_{F_p} End(W)`.
    pub g: usize,
    /// Multiplicity of `W`.
    pub s: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotypicSummary {
    pub components: Vec<IsotypicComponent>,
}

impl IsotypicSummary {
    pub fn total_dim(&self) -> usize {
        self.components.iter().map(|c| c.s * c.r).sum()
    }
}

/// All invariant subspaces, by exhaustive enumeration of spans. Test helper.
#[doc(hidden)]
pub fn enumerate_invariant_subspaces(m: &FpModule) -> Vec<FpSubspace> {
    let mut found: Vec<FpSubspace> = vec![FpSubspace::span_raw(m.p, m.dim, Vec::new())];
    let mut frontier = found.clone();
    while let Some(w) = frontier.pop() {
        for v in VectorIter::new(m.p, m.dim) {
            if w.contains(&v) {
                continue;
            }
            let mut vecs = w.basis().to_vec();
            vecs.push(v);
            let bigger = FpSubspace::span_raw(m.p, m.dim, vecs);
            if !found.contains(&bigger) {
                found.push(bigger.clone());
                frontier.push(bigger);
            }
        }
    }
    found.retain(|w| m.is_invariant(w));
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{burnside_example, cyclic, direct_product, symmetric};

    fn burnside_t3() -> (FiniteGroup, FpModule) {
        let g = burnside_example().unwrap();
        // the C_2 generator (element 1) acts by -I; C_3 × C_3 acts trivially
        let minus = FpMatrix::from_rows(3, &[&[-1, 0], &[0, -1]]).unwrap();
        let id = FpMatrix::identity(3, 2).unwrap();
        let action = (0..18).map(|x| if x % 2 == 1 { minus.clone() } else { id.clone() }).collect();
        let m = FpModule::from_element_actions(&g, 3, 2, action).unwrap();
        (g, m)
    }

    fn c3_on_f4() -> (FiniteGroup, FpModule) {
        let g = cyclic(3).unwrap();
        let a = FpMatrix::from_rows(2, &[&[0, 1], &[1, 1]]).unwrap();
        let m = FpModule::from_generators(&g, 2, 2, &[(1, a)]).unwrap();
        (g, m)
    }

    #[test]
    fn spin_basics() {
        let (_, m) = c3_on_f4();
        assert!(m.spin(&[0, 0]).is_zero());
        let g = cyclic(3).unwrap();
        let t = FpModule::trivial(&g, 3, 2).unwrap();
        assert_eq!(t.spin(&[1, 2]).dim(), 1);
    }

    #[test]
    fn burnside_spins_are_lines() {
        let (_, m) = burnside_t3();
        for v in VectorIter::new(3, 2).skip(1) {
            let s = m.spin(&v);
            assert_eq!(s, FpSubspace::span(3, 2, core::slice::from_ref(&v)).unwrap());
        }
        assert!(!m.is_cyclic_spin(DEFAULT_SEARCH_CAP).unwrap().cyclic);
        assert!(!m.akizuki_cyclic(DEFAULT_SEARCH_CAP).unwrap());
        let w = m.weisner_hyperplane_exists(DEFAULT_SEARCH_CAP).unwrap();
        assert!(!w.exists);
    }

    #[test]
    fn irreducible_is_cyclic_with_first_witness() {
        let (_, m) = c3_on_f4();
        let c = m.is_cyclic_spin(DEFAULT_SEARCH_CAP).unwrap();
        assert!(c.cyclic);
        assert_eq!(c.witness, Some(vec![0, 1]));
        assert!(m.akizuki_cyclic(DEFAULT_SEARCH_CAP).unwrap());
        assert!(m.weisner_hyperplane_exists(DEFAULT_SEARCH_CAP).unwrap().exists);
    }

    #[test]
    fn trivial_action_is_not_cyclic() {
        let g = cyclic(3).unwrap();
        let t = FpModule::trivial(&g, 3, 2).unwrap();
        assert!(!t.is_cyclic_spin(DEFAULT_SEARCH_CAP).unwrap().cyclic);
        assert!(!t.akizuki_cyclic(DEFAULT_SEARCH_CAP).unwrap());
        assert!(!t.weisner_hyperplane_exists(DEFAULT_SEARCH_CAP).unwrap().exists);
        let d = t.decompose(DEFAULT_SEARCH_CAP).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!((d.components[0].r, d.components[0].g, d.components[0].s), (1, 1, 2));
    }

    #[test]
    fn decompose_field_endomorphisms() {
        let (_, m) = c3_on_f4();
        let d = m.decompose(DEFAULT_SEARCH_CAP).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!((d.components[0].r, d.components[0].g, d.components[0].s), (2, 2, 1));
        let doubled = m.direct_sum(&m).unwrap();
        let d2 = doubled.decompose(DEFAULT_SEARCH_CAP).unwrap();
        assert_eq!((d2.components[0].r, d2.components[0].g, d2.components[0].s), (2, 2, 2));
        // s·g = 4 > r = 2 would fail, but s ≤ r/g = 1 fails too: two copies of F_4 is not cyclic
        assert!(!doubled.akizuki_cyclic(DEFAULT_SEARCH_CAP).unwrap());
        assert!(!doubled.is_cyclic_spin(DEFAULT_SEARCH_CAP).unwrap().cyclic);
    }

    #[test]
    fn two_copies_of_absolutely_irreducible_sign() {
        let s3 = symmetric(3).unwrap();
        let sign: Vec<FpMatrix> = (0..6)
            .map(|x| {
                let v = if s3.element_order(x) == 2 { -1 } else { 1 };
                FpMatrix::from_rows(5, &[&[v]]).unwrap()
            })
            .collect();
        let m = FpModule::from_element_actions(&s3, 5, 1, sign).unwrap();
        let mm = m.direct_sum(&m).unwrap();
        let d = mm.decompose(DEFAULT_SEARCH_CAP).unwrap();
        assert_eq!((d.components[0].r, d.components[0].g, d.components[0].s), (1, 1, 2));
    }

    #[test]
    fn non_completely_reducible_is_rejected() {
        // C_3 acting on F_3^2 by a unipotent Jordan block
        let g = cyclic(3).unwrap();
        let j = FpMatrix::from_rows(3, &[&[1, 1], &[0, 1]]).unwrap();
        let m = FpModule::from_generators(&g, 3, 2, &[(1, j)]).unwrap();
        assert_eq!(m.decompose(DEFAULT_SEARCH_CAP), Err(ModuleError::NotCompletelyReducible));
    }

    #[test]
    fn search_cap_is_enforced() {
        let g = cyclic(2).unwrap();
        let t = FpModule::trivial(&g, 2, 5).unwrap();
        assert_eq!(
            t.is_cyclic_spin(16),
            Err(ModuleError::SearchCapExceeded { size: 32, cap: 16 })
        );
    }

    #[test]
    fn dual_of_sign_like_actions_is_itself() {
        let (_, m) = burnside_t3();
        assert_eq!(m.dual(), m);
        let (_, c) = c3_on_f4();
        assert_eq!(c.dual().dual(), c);
        // dual action matrices are transposes of inverses and stay multiplicative
        let g = cyclic(3).unwrap();
        let d = c.dual();
        FpModule::from_element_actions(&g, 2, 2, d.element_matrices().to_vec()).unwrap();
    }

    #[test]
    fn permutation_module_dual_is_itself() {
        let s3 = symmetric(3).unwrap();
        let h = s3.subgroup_generated(&[s3.generators()[1]]);
        let m = FpModule::coset_permutation(&s3, &h, 2).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(m.dual(), m);
    }

    #[test]
    fn rejects_non_homomorphisms() {
        let g = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap();
        let a = FpMatrix::from_rows(2, &[&[0, 1], &[1, 1]]).unwrap();
        let id = FpMatrix::identity(2, 2).unwrap();
        let action = (0..4).map(|x| if x == 1 { a.clone() } else { id.clone() }).collect();
        assert!(matches!(
            FpModule::from_element_actions(&g, 2, 2, action),
            Err(ModuleError::NotAHomomorphism { .. })
        ));
    }

    #[test]
    fn spin_is_smallest_invariant_subspace() {
        let (_, m) = c3_on_f4();
        let s3 = symmetric(3).unwrap();
        let h = s3.subgroup_generated(&[s3.generators()[1]]);
        let perm = FpModule::coset_permutation(&s3, &h, 3).unwrap();
        for module in [m, perm] {
            let invariant = enumerate_invariant_subspaces(&module);
            for v in VectorIter::new(module.modulus(), module.dim()) {
                let s = module.spin(&v);
                assert!(module.is_invariant(&s) && s.contains(&v));
                for w in invariant.iter().filter(|w| w.contains(&v)) {
                    assert!(s.is_subspace_of(w));
                }
            }
        }
    }
}
