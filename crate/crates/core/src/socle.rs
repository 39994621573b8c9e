//! The socle of a finite group and its abelian `p`-parts as `F_pG`-modules.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::group::{FiniteGroup, GroupError, SubgroupSet};
use crate::linalg::{check_prime, FpMatrix, FpSubspace, VectorIter};
use crate::modrep::{FpModule, ModuleError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SocleError {
    CarrierNotNormal { element: usize },
    AbelianMinimalNotElementary { order: usize },
    NotABasis,
    Group(GroupError),
    Module(ModuleError),
}

impl fmt::Display for SocleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SocleError::CarrierNotNormal { element } => {
                write!(f, "carrier is not normal: conjugation by {element} leaves it")
            }
            SocleError::AbelianMinimalNotElementary { order } => {
                write!(f, "abelian minimal normal subgroup of order {order} is not elementary abelian")
            }
            SocleError::NotABasis => write!(f, "elements do not form an F_p-basis of the carrier"),
            SocleError::Group(e) => write!(f, "{e}"),
            SocleError::Module(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SocleError {}

impl From<GroupError> for SocleError {
    fn from(e: GroupError) -> Self {
        SocleError::Group(e)
    }
}

impl From<ModuleError> for SocleError {
    fn from(e: ModuleError) -> Self {
        SocleError::Module(e)
    }
}

/// `T(G)_p` with coordinates and the conjugation action of `G`.
#[derive(Clone, Debug)]
pub struct TpModule {
    pub p: u32,
    pub carrier: SubgroupSet,
    /// The minimal normal subgroups chosen as direct factors.
    pub factors: Vec<SubgroupSet>,
    pub basis_elements: Vec<usize>,
    pub module: FpModule,
    coords: BTreeMap<usize, Vec<u32>>,
}

impl TpModule {
    pub fn dim(&self) -> usize {
        self.basis_elements.len()
    }

    pub fn coordinates(&self, x: usize) -> Option<&[u32]> {
        self.coords.get(&x).map(Vec::as_slice)
    }

    pub fn element_with_coordinates(&self, c: &[u32]) -> Option<usize> {
        self.coords.iter().find(|(_, v)| v.as_slice() == c).map(|(&x, _)| x)
    }

    /// Carrier elements whose coordinates lie in `w`.
    pub fn elements_in(&self, w: &FpSubspace) -> Vec<usize> {
        self.coords.iter().filter(|(_, c)| w.contains(c)).map(|(&x, _)| x).collect()
    }
}

#[derive(Clone, Debug)]
pub struct SocleReport {
    pub minimal_normals: Vec<SubgroupSet>,
    /// Product of the non-abelian minimal normal subgroups.
    pub sr: SubgroupSet,
    /// One entry per prime in `primes`, same order.
    pub t_parts: Vec<TpModule>,
    pub primes: Vec<u32>,
    pub socle: SubgroupSet,
}

impl SocleReport {
    pub fn t_part(&self, p: u32) -> Option<&TpModule> {
        self.t_parts.iter().find(|t| t.p == p)
    }

    /// `T(G)`, the product of all abelian minimal normal subgroups.
    pub fn abelian_part(&self, group: &FiniteGroup) -> SubgroupSet {
        let gens: Vec<usize> = self.t_parts.iter().flat_map(|t| t.basis_elements.iter().copied()).collect();
        group.subgroup_generated(&gens)
    }
}

fn elementary_prime(group: &FiniteGroup, n: &SubgroupSet) -> Result<u32, SocleError> {
    let order = n.order();
    let bad = SocleError::AbelianMinimalNotElementary { order };
    let x = *n.members().get(1).ok_or(bad.clone())?;
    let p = group.element_order(x);
    if n.members().iter().skip(1).any(|&y| group.element_order(y) != p) {
        return Err(bad);
    }
    check_prime(p as u64).map_err(|_| bad)
}

/// Coordinate table `element → F_p^d` for an elementary abelian carrier.
fn coordinate_map(
    group: &FiniteGroup,
    p: u32,
    carrier: &SubgroupSet,
    basis: &[usize],
) -> Result<BTreeMap<usize, Vec<u32>>, SocleError> {
    let mut coords = BTreeMap::new();
    for c in VectorIter::new(p, basis.len()) {
        let x = c
            .iter()
            .zip(basis)
            .fold(0, |acc, (&k, &b)| group.mul(acc, group.pow(b, k as usize)));
        if !carrier.contains(x) || coords.insert(x, c).is_some() {
            return Err(SocleError::NotABasis);
        }
    }
    if coords.len() != carrier.order() {
        return Err(SocleError::NotABasis);
    }
    Ok(coords)
}

/// Conjugation action on an elementary abelian normal `p`-subgroup: column
/// `i` of the matrix for `g` holds the coordinates of `g·b_i·g⁻¹`.
pub fn action_matrices(
    group: &FiniteGroup,
    p: u32,
    carrier: &SubgroupSet,
    basis: &[usize],
) -> Result<FpModule, SocleError> {
    let coords = coordinate_map(group, p, carrier, basis)?;
    conjugation_module(group, p, basis, &coords)
}

fn conjugation_module(
    group: &FiniteGroup,
    p: u32,
    basis: &[usize],
    coords: &BTreeMap<usize, Vec<u32>>,
) -> Result<FpModule, SocleError> {
    let d = basis.len();
    let mut action = Vec::with_capacity(group.order());
    for g in 0..group.order() {
        let mut data = alloc::vec![0u32; d * d];
        for (i, &b) in basis.iter().enumerate() {
            let c = coords
                .get(&group.conjugate(g, b))
                .ok_or(SocleError::CarrierNotNormal { element: g })?;
            for (r, &v) in c.iter().enumerate() {
                data[r * d + i] = v;
            }
        }
        action.push(FpMatrix::from_raw(p, d, d, data));
    }
    Ok(FpModule::from_element_actions(group, p as u64, d, action)?)
}

/// Decomposes `Soc(G)` into `SR(G)` and the modules `T(G)_p`.
///
/// `T(G)_p` is assembled greedily from the abelian minimal normal
/// `p`-subgroups in canonical order, adjoining each one that meets the
/// product so far trivially.
pub fn socle_report(group: &FiniteGroup) -> Result<SocleReport, SocleError> {
    let minimal_normals = group.minimal_normal_subgroups();
    let union: Vec<usize> = minimal_normals.iter().flat_map(|n| n.members().iter().copied()).collect();
    let socle = group.subgroup_generated(&union);
    let mut nonabelian = Vec::new();
    let mut by_prime: BTreeMap<u32, Vec<&SubgroupSet>> = BTreeMap::new();
    for n in &minimal_normals {
        if group.is_abelian(n) {
            by_prime.entry(elementary_prime(group, n)?).or_default().push(n);
        } else {
            nonabelian.extend(n.members().iter().copied());
        }
    }
    let sr = group.subgroup_generated(&nonabelian);
    let mut t_parts = Vec::new();
    for (&p, normals) in &by_prime {
        let mut product = group.trivial();
        let mut factors = Vec::new();
        let mut basis = Vec::new();
        for &n in normals {
            if !group.intersection(&product, n).is_trivial() {
                continue;
            }
            factors.push(n.clone());
            for &x in n.members() {
                if !product.contains(x) {
                    basis.push(x);
                    product = group.join(&product, &group.subgroup_generated(&[x]));
                }
            }
        }
        let all: Vec<usize> = normals.iter().flat_map(|n| n.members().iter().copied()).collect();
        let carrier = group.subgroup_generated(&all);
        if carrier != product {
            return Err(SocleError::NotABasis);
        }
        let coords = coordinate_map(group, p, &carrier, &basis)?;
        let module = conjugation_module(group, p, &basis, &coords)?;
        t_parts.push(TpModule { p, carrier, factors, basis_elements: basis, module, coords });
    }
    let primes = by_prime.keys().copied().collect();
    Ok(SocleReport { minimal_normals, sr, t_parts, primes, socle })
}
