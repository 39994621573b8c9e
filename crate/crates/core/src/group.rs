//! Finite groups as validated multiplication tables, plus the subgroup
//! machinery the criteria need: closures, normality, cores, centers,
//! minimal normal subgroups, Sylow subgroups and nilpotency.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{factorize, lcm};
use crate::linalg::LinalgError;

pub const DEFAULT_ORDER_CAP: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    NotSquare { row: usize, len: usize },
    NotClosed { a: usize, b: usize, value: usize },
    NotAssociative { a: usize, b: usize, c: usize },
    NoIdentity,
    NoInverse(usize),
    OrderCapExceeded { cap: usize },
    InvalidPermutation(usize),
    InvalidAction(&'static str),
    NotPrimePower(u64),
    NotASubgroup,
    PrimeDoesNotDivideOrder { p: u64, order: usize },
    NotAHomomorphism { a: usize, b: usize },
    InvalidArgument(&'static str),
    Linalg(LinalgError),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::NotSquare { row, len } => write!(f, "table row {row} has length {len}"),
            GroupError::NotClosed { a, b, value } => {
                write!(f, "not closed: {a}*{b} = {value} is out of range")
            }
            GroupError::NotAssociative { a, b, c } => {
                write!(f, "not associative at ({a}, {b}, {c})")
            }
            GroupError::NoIdentity => write!(f, "table has no identity element"),
            GroupError::NoInverse(a) => write!(f, "element {a} has no inverse"),
            GroupError::OrderCapExceeded { cap } => write!(f, "group order exceeds cap {cap}"),
            GroupError::InvalidPermutation(i) => write!(f, "generator {i} is not a permutation"),
            GroupError::InvalidAction(why) => write!(f, "invalid action: {why}"),
            GroupError::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            GroupError::NotASubgroup => write!(f, "subset is not a subgroup"),
            GroupError::PrimeDoesNotDivideOrder { p, order } => {
                write!(f, "{p} does not divide the group order {order}")
            }
            GroupError::NotAHomomorphism { a, b } => {
                write!(f, "map is not a homomorphism at ({a}, {b})")
            }
            GroupError::InvalidArgument(why) => write!(f, "invalid argument: {why}"),
            GroupError::Linalg(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for GroupError {}

impl From<LinalgError> for GroupError {
    fn from(e: LinalgError) -> Self {
        GroupError::Linalg(e)
    }
}

/// A finite group on elements `0..n` with identity `0`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u32>,
    inverse: Vec<usize>,
    element_order: Vec<usize>,
    generators: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.n)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Right-multiplication closure of `seeds` under `gens`, as a membership mask.
fn closure_mask(n: usize, table: &[u32], seeds: &[usize], gens: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut queue: Vec<usize> = Vec::new();
    for &s in seeds {
        if !seen[s] {
            seen[s] = true;
            queue.push(s);
        }
    }
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for &g in gens {
            let y = table[x * n + g] as usize;
            if !seen[y] {
                seen[y] = true;
                queue.push(y);
            }
        }
    }
    seen
}

impl FiniteGroup {
    /// Validates a Cayley table and relabels so the identity sits at index 0.
    pub fn from_cayley(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::NoIdentity);
        }
        let mut table = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare { row: a, len: row.len() });
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::NotClosed { a, b, value: v });
                }
                table.push(v as u32);
            }
        }
        check_associative(n, &table)?;
        let e = (0..n)
            .find(|&e| (0..n).all(|a| table[e * n + a] as usize == a && table[a * n + e] as usize == a))
            .ok_or(GroupError::NoIdentity)?;
        for a in 0..n {
            if !(0..n).any(|b| table[a * n + b] as usize == e && table[b * n + a] as usize == e) {
                return Err(GroupError::NoInverse(a));
            }
        }
        let table = if e == 0 {
            table
        } else {
            let swap = |x: usize| if x == e { 0 } else if x == 0 { e } else { x };
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[swap(a) * n + swap(b)] = swap(table[a * n + b] as usize) as u32;
                }
            }
            t
        };
        Ok(Self::from_table_trusted(n, table))
    }

    /// Builds from a table already known to be a group table with identity 0.
    pub(crate) fn from_table_trusted(n: usize, table: Vec<u32>) -> Self {
        let mut inverse = vec![0usize; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            inverse[a] = row.iter().position(|&v| v == 0).expect("group table has inverses");
        }
        let mut element_order = vec![1usize; n];
        for (a, ord) in element_order.iter_mut().enumerate() {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = table[x * n + a] as usize;
                k += 1;
            }
            *ord = k;
        }
        // Greedy generating set: each new generator is the first element
        // outside the subgroup generated so far.
        let mut generators = Vec::new();
        let mut mask = vec![false; n];
        mask[0] = true;
        while let Some(x) = mask.iter().position(|&m| !m) {
            generators.push(x);
            mask = closure_mask(n, &table, &[0], &generators);
        }
        FiniteGroup { n, table, inverse, element_order, generators }
    }

    /// Group generated by permutations of `{0..degree}` given as image lists.
    ///
    /// Products compose left to right: `(a·b)(x) = b(a(x))`. Elements are
    /// numbered in breadth-first discovery order from the identity.
    pub fn from_permutations(gens: &[Vec<u32>], order_cap: usize) -> Result<Self, GroupError> {
        let degree = gens.iter().map(Vec::len).max().unwrap_or(0);
        let mut perms: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            let mut img: Vec<u32> = g.clone();
            img.extend((g.len() as u32)..(degree as u32));
            let mut seen = vec![false; degree];
            for &x in &img {
                if x as usize >= degree || seen[x as usize] {
                    return Err(GroupError::InvalidPermutation(i));
                }
                seen[x as usize] = true;
            }
            perms.push(img);
        }
        let compose = |a: &[u32], b: &[u32]| -> Vec<u32> { a.iter().map(|&x| b[x as usize]).collect() };
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        let mut i = 0;
        while i < elements.len() {
            for g in &perms {
                let y = compose(&elements[i], g);
                if !index.contains_key(&y) {
                    if elements.len() >= order_cap {
                        return Err(GroupError::OrderCapExceeded { cap: order_cap });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            i += 1;
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&elements[a], &elements[b])] as u32;
            }
        }
        Ok(Self::from_table_trusted(n, table))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_order[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_order
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// `g · x · g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k % self.element_order[a] {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// The Cayley table as rows of indices.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn exponent(&self) -> usize {
        self.element_order.iter().fold(1u64, |acc, &o| lcm(acc, o as u64)) as usize
    }

    pub fn whole(&self) -> SubgroupSet {
        SubgroupSet { parent_order: self.n, members: (0..self.n).collect() }
    }

    pub fn trivial(&self) -> SubgroupSet {
        SubgroupSet { parent_order: self.n, members: vec![0] }
    }

    fn subgroup_of_mask(&self, mask: &[bool]) -> SubgroupSet {
        let members = mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
        SubgroupSet { parent_order: self.n, members }
    }

    pub fn subgroup_generated(&self, gens: &[usize]) -> SubgroupSet {
        self.subgroup_of_mask(&closure_mask(self.n, &self.table, &[0], gens))
    }

    /// Validates that `members` is a subgroup.
    pub fn subgroup(&self, members: &[usize]) -> Result<SubgroupSet, GroupError> {
        let mut mask = vec![false; self.n];
        for &m in members {
            if m >= self.n {
                return Err(GroupError::NotASubgroup);
            }
            mask[m] = true;
        }
        if !mask[0] {
            return Err(GroupError::NotASubgroup);
        }
        for &a in members {
            if !mask[self.inv(a)] || members.iter().any(|&b| !mask[self.mul(a, b)]) {
                return Err(GroupError::NotASubgroup);
            }
        }
        Ok(self.subgroup_of_mask(&mask))
    }

    fn check_parent(&self, s: &SubgroupSet) -> Result<(), GroupError> {
        if s.parent_order != self.n {
            Err(GroupError::NotASubgroup)
        } else {
            Ok(())
        }
    }

    /// Subgroup generated by two subgroups.
    pub fn join(&self, a: &SubgroupSet, b: &SubgroupSet) -> SubgroupSet {
        let gens: Vec<usize> = a.members.iter().chain(&b.members).copied().collect();
        self.subgroup_generated(&gens)
    }

    pub fn intersection(&self, a: &SubgroupSet, b: &SubgroupSet) -> SubgroupSet {
        let members = a.members.iter().copied().filter(|&x| b.contains(x)).collect();
        SubgroupSet { parent_order: self.n, members }
    }

    pub fn is_abelian(&self, s: &SubgroupSet) -> bool {
        s.members.iter().all(|&a| s.members.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic_group(&self, s: &SubgroupSet) -> bool {
        s.members.iter().any(|&a| self.element_order[a] == s.order())
    }

    pub fn center(&self) -> SubgroupSet {
        let members = (0..self.n)
            .filter(|&z| self.generators.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        SubgroupSet { parent_order: self.n, members }
    }

    pub fn conjugacy_class(&self, x: usize) -> Vec<usize> {
        let mut mask = vec![false; self.n];
        for g in 0..self.n {
            mask[self.conjugate(g, x)] = true;
        }
        mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect()
    }

    /// Conjugacy classes, each sorted, ordered by their smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.n];
        let mut classes = Vec::new();
        for x in 0..self.n {
            if assigned[x] {
                continue;
            }
            let class = self.conjugacy_class(x);
            for &y in &class {
                assigned[y] = true;
            }
            classes.push(class);
        }
        classes
    }

    pub fn is_normal(&self, s: &SubgroupSet) -> bool {
        s.parent_order == self.n
            && self
                .generators
                .iter()
                .all(|&g| s.members.iter().all(|&x| s.contains(self.conjugate(g, x))))
    }

    /// Smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: usize) -> SubgroupSet {
        let class = self.conjugacy_class(seed);
        self.subgroup_generated(&class)
    }

    /// Largest normal subgroup of `G` inside `s`: the intersection of all conjugates `g s g⁻¹`.
    pub fn core(&self, s: &SubgroupSet) -> Result<SubgroupSet, GroupError> {
        self.check_parent(s)?;
        self.subgroup(&s.members)?;
        let members = s
            .members
            .iter()
            .copied()
            .filter(|&x| (0..self.n).all(|g| s.contains(self.conjugate(g, x))))
            .collect();
        Ok(SubgroupSet { parent_order: self.n, members })
    }

    /// Minimal normal subgroups, sorted by `(order, members)`. Empty for the trivial group.
    pub fn minimal_normal_subgroups(&self) -> Vec<SubgroupSet> {
        let mut candidates: Vec<SubgroupSet> = Vec::new();
        for class in self.conjugacy_classes().iter().skip(1) {
            let n = self.normal_closure(class[0]);
            if !candidates.contains(&n) {
                candidates.push(n);
            }
        }
        let mut minimal: Vec<SubgroupSet> = candidates
            .iter()
            .filter(|n| !candidates.iter().any(|k| k.order() < n.order() && k.is_subset_of(n)))
            .cloned()
            .collect();
        minimal.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
        minimal
    }

    pub fn normalizer(&self, s: &SubgroupSet) -> SubgroupSet {
        let members = (0..self.n)
            .filter(|&g| s.members.iter().all(|&x| s.contains(self.conjugate(g, x))))
            .collect();
        SubgroupSet { parent_order: self.n, members }
    }

    fn is_p_element(&self, x: usize, p: usize) -> bool {
        let mut o = self.element_order[x];
        while o % p == 0 {
            o /= p;
        }
        o == 1
    }

    /// One Sylow `p`-subgroup, grown from a cyclic `p`-subgroup of maximal
    /// order by adjoining `p`-elements of successive normalizers.
    pub fn sylow(&self, p: u64) -> Result<SubgroupSet, GroupError> {
        let order = self.n;
        let pp = p as usize;
        let Some(&(_, k)) = factorize(order as u64).iter().find(|(q, _)| *q == p) else {
            return Err(GroupError::PrimeDoesNotDivideOrder { p, order });
        };
        let target = pp.pow(k);
        let start = (0..self.n)
            .filter(|&x| self.is_p_element(x, pp))
            .max_by_key(|&x| (self.element_order[x], core::cmp::Reverse(x)))
            .expect("identity is a p-element");
        let mut sub = self.subgroup_generated(&[start]);
        while sub.order() < target {
            let norm = self.normalizer(&sub);
            let y = norm
                .members
                .iter()
                .copied()
                .find(|&y| !sub.contains(y) && self.is_p_element(y, pp))
                .expect("a non-Sylow p-subgroup has a larger p-subgroup in its normalizer");
            let mut gens = sub.members.clone();
            gens.push(y);
            sub = self.subgroup_generated(&gens);
        }
        Ok(sub)
    }

    /// Subgroup generated by all commutators `[x, g]` with `x ∈ s`, `g ∈ G`.
    pub fn commutator_with_group(&self, s: &SubgroupSet) -> SubgroupSet {
        let mut mask = vec![false; self.n];
        for &x in &s.members {
            for g in 0..self.n {
                mask[self.commutator(x, g)] = true;
            }
        }
        let gens: Vec<usize> = mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
        self.subgroup_generated(&gens)
    }

    pub fn lower_central_series(&self) -> Vec<SubgroupSet> {
        let mut series = vec![self.whole()];
        loop {
            let next = self.commutator_with_group(series.last().expect("nonempty"));
            if &next == series.last().expect("nonempty") {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(|s| s.order() == 1)
    }
}

/// Light's associativity test: the elements `g` with `(xg)y = x(gy)` for all
/// `x, y` form a submagma, so checking a magma generating set suffices.
fn check_associative(n: usize, table: &[u32]) -> Result<(), GroupError> {
    let mul = |a: usize, b: usize| table[a * n + b] as usize;
    let mut mask = vec![false; n];
    let mut gens = Vec::new();
    while let Some(x) = mask.iter().position(|&m| !m) {
        gens.push(x);
        // magma closure of gens
        let mut members: Vec<usize> = Vec::new();
        mask = vec![false; n];
        for &g in &gens {
            if !mask[g] {
                mask[g] = true;
                members.push(g);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            let mut j = 0;
            while j <= i {
                let b = members[j];
                for c in [mul(a, b), mul(b, a)] {
                    if !mask[c] {
                        mask[c] = true;
                        members.push(c);
                    }
                }
                j += 1;
            }
            i += 1;
        }
    }
    for x in 0..n {
        for &g in &gens {
            let xg = mul(x, g);
            for y in 0..n {
                if mul(xg, y) != mul(x, mul(g, y)) {
                    return Err(GroupError::NotAssociative { a: x, b: g, c: y });
                }
            }
        }
    }
    Ok(())
}

/// A subgroup given by its sorted member list.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SubgroupSet {
    parent_order: usize,
    members: Vec<usize>,
}

impl SubgroupSet {
    pub fn members(&self) -> &[usize] {
        &self.members
    }
    pub fn order(&self) -> usize {
        self.members.len()
    }
    pub fn parent_order(&self) -> usize {
        self.parent_order
    }
    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }
    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }
    pub fn index(&self) -> usize {
        self.parent_order / self.members.len()
    }
}

/// A homomorphism given by the image of every source element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    images: Vec<usize>,
    target_order: usize,
}

impl GroupHom {
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, images: Vec<usize>) -> Result<Self, GroupError> {
        if images.len() != source.order() || images.iter().any(|&x| x >= target.order()) {
            return Err(GroupError::InvalidArgument("image list does not match the groups"));
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(GroupError::NotAHomomorphism { a, b });
                }
            }
        }
        Ok(GroupHom { images, target_order: target.order() })
    }

    pub fn image_of(&self, a: usize) -> usize {
        self.images[a]
    }

    pub fn kernel(&self) -> SubgroupSet {
        let members = self.images.iter().enumerate().filter(|(_, &x)| x == 0).map(|(i, _)| i).collect();
        SubgroupSet { parent_order: self.images.len(), members }
    }

    pub fn image(&self) -> SubgroupSet {
        let mut members = self.images.clone();
        members.sort_unstable();
        members.dedup();
        SubgroupSet { parent_order: self.target_order, members }
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.target_order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> FiniteGroup {
        FiniteGroup::from_cayley(&[vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn trivial_table() {
        let g = FiniteGroup::from_cayley(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.minimal_normal_subgroups().is_empty());
        assert!(g.is_nilpotent());
    }

    #[test]
    fn c2_table() {
        let g = c2();
        assert_eq!(g.element_orders(), &[1, 2]);
    }

    #[test]
    fn identity_is_relabeled_to_zero() {
        // C_2 with the identity stored at index 1
        let g = FiniteGroup::from_cayley(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.element_orders(), &[1, 2]);
    }

    #[test]
    fn non_associative_latin_square() {
        // x*y = -x-y mod 3: a quasigroup with no identity that is not associative
        let rows: Vec<Vec<usize>> =
            (0..3).map(|x| (0..3).map(|y| (6 - x - y) % 3).collect()).collect();
        assert!(matches!(FiniteGroup::from_cayley(&rows), Err(GroupError::NotAssociative { .. })));
    }

    #[test]
    fn table_errors() {
        assert!(matches!(
            FiniteGroup::from_cayley(&[vec![0, 2], vec![1, 0]]),
            Err(GroupError::NotClosed { a: 0, b: 1, value: 2 })
        ));
        assert!(matches!(
            FiniteGroup::from_cayley(&[vec![0, 1], vec![1]]),
            Err(GroupError::NotSquare { row: 1, len: 1 })
        ));
        // left-zero band on two points: associative, no identity
        assert_eq!(
            FiniteGroup::from_cayley(&[vec![0, 0], vec![1, 1]]),
            Err(GroupError::NoIdentity)
        );
        // {0, 1} under max: identity 0, 1 has no inverse
        assert_eq!(
            FiniteGroup::from_cayley(&[vec![0, 1], vec![1, 1]]),
            Err(GroupError::NoInverse(1))
        );
    }

    #[test]
    fn permutations_small() {
        let c3 = FiniteGroup::from_permutations(&[vec![1, 2, 0]], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(c3.order(), 3);
        let s3 = FiniteGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]], DEFAULT_ORDER_CAP)
            .unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.exponent(), 6);
        assert!(!s3.is_nilpotent());
        assert!(matches!(
            FiniteGroup::from_permutations(&[vec![0, 0]], 10),
            Err(GroupError::InvalidPermutation(0))
        ));
        assert_eq!(
            FiniteGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]], 5),
            Err(GroupError::OrderCapExceeded { cap: 5 })
        );
    }

    #[test]
    fn dihedral_ten_involutions() {
        // (1 2 3 4 5), (2 5)(3 4) in 0-based image form
        let g = FiniteGroup::from_permutations(&[vec![1, 2, 3, 4, 0], vec![0, 4, 3, 2, 1]], 100)
            .unwrap();
        assert_eq!(g.order(), 10);
        let square_roots_of_one = (0..10).filter(|&x| g.mul(x, x) == 0).count();
        assert_eq!(square_roots_of_one, 6);
    }

    #[test]
    fn sylow_of_symmetric_four() {
        let s4 = FiniteGroup::from_permutations(&[vec![1, 2, 3, 0], vec![1, 0, 2, 3]], 100).unwrap();
        let p = s4.sylow(2).unwrap();
        assert_eq!(p.order(), 8);
        let inv = p.members().iter().filter(|&&x| s4.mul(x, x) == 0).count();
        assert_eq!(inv, 6);
        assert_eq!(s4.sylow(5), Err(GroupError::PrimeDoesNotDivideOrder { p: 5, order: 24 }));
        let mins = s4.minimal_normal_subgroups();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 4);
    }

    #[test]
    fn core_and_normality_in_s3() {
        let s3 = FiniteGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]], 100).unwrap();
        let two = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let s = s3.subgroup_generated(&[two]);
        assert!(!s3.is_normal(&s));
        assert!(s3.core(&s).unwrap().is_trivial());
        assert_eq!(s3.core(&s3.whole()).unwrap(), s3.whole());
    }

    #[test]
    fn core_rejects_non_subgroups() {
        let s3 = FiniteGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]], 100).unwrap();
        let bogus = SubgroupSet { parent_order: 6, members: vec![0, 1] };
        // element 1 is the 3-cycle generator
        assert_eq!(s3.element_order(1), 3);
        assert_eq!(s3.core(&bogus), Err(GroupError::NotASubgroup));
        let wrong_parent = SubgroupSet { parent_order: 7, members: vec![0] };
        assert_eq!(s3.core(&wrong_parent), Err(GroupError::NotASubgroup));
    }

    #[test]
    fn homomorphism_checks() {
        let s3 = FiniteGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]], 100).unwrap();
        let c2 = c2();
        let sign: Vec<usize> = (0..6).map(|x| if s3.element_order(x) == 2 { 1 } else { 0 }).collect();
        let h = GroupHom::new(&s3, &c2, sign).unwrap();
        assert_eq!(h.kernel().order(), 3);
        assert!(h.is_surjective());
        let bad: Vec<usize> = (0..6).map(|x| usize::from(x == 1)).collect();
        assert!(matches!(GroupHom::new(&s3, &c2, bad), Err(GroupError::NotAHomomorphism { .. })));
    }
}
