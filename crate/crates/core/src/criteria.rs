//! Criteria for a finite group to have a faithful irreducible representation.
//!
//! For each prime `p` with `T(G)_p ≠ 1` three equivalent module conditions
//! are evaluated: `T(G)_p` is cyclic (Gaschütz), some hyperplane of
//! `T(G)_p` has trivial core (Weisner), and `s·g ≤ r` on every isotypic
//! component (Akizuki). Over a field of characteristic `c` the verdict also
//! requires `c ∉ Π(G)`.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::prime_divisors;
use crate::group::{FiniteGroup, GroupError};
use crate::linalg::{check_prime, FpMatrix};
use crate::modrep::{ModuleError, DEFAULT_SEARCH_CAP};
use crate::socle::{socle_report, SocleError, SocleReport};

/// For finite groups the socle is essential (every nontrivial normal
/// subgroup contains a minimal one) and the infinite `p`-group hypothesis is
/// vacuous, so only `char ∉ Π(G)` and the trivial-core hyperplane condition
/// remain.
pub const FINITE_CASE_NOTE: &str = "finite group: Soc(G) is essential and no minimal normal subgroup \
is an infinitely generated p-group, so the verdict reduces to char(K) not in Pi(G) plus a \
trivial-core hyperplane of T(G)_p for every p in Pi(G)";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriteriaError {
    NotPrimeCharacteristic(u64),
    Socle(SocleError),
    Module(ModuleError),
    Group(GroupError),
}

impl fmt::Display for CriteriaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriteriaError::NotPrimeCharacteristic(c) => {
                write!(f, "characteristic {c} is neither 0 nor a prime")
            }
            CriteriaError::Socle(e) => write!(f, "{e}"),
            CriteriaError::Module(e) => write!(f, "{e}"),
            CriteriaError::Group(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CriteriaError {}

impl From<SocleError> for CriteriaError {
    fn from(e: SocleError) -> Self {
        CriteriaError::Socle(e)
    }
}
impl From<ModuleError> for CriteriaError {
    fn from(e: ModuleError) -> Self {
        CriteriaError::Module(e)
    }
}
impl From<GroupError> for CriteriaError {
    fn from(e: GroupError) -> Self {
        CriteriaError::Group(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentData {
    pub r: usize,
    pub g: usize,
    pub s: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeCriteria {
    pub p: u32,
    pub dim: usize,
    pub gaschuetz: bool,
    pub weisner: bool,
    pub akizuki: bool,
    /// Lexicographically first generating vector of `T(G)_p`.
    pub cyclic_generator: Option<Vec<u32>>,
    /// Lexicographically first normalized functional whose kernel has trivial core.
    pub hyperplane: Option<Vec<u32>>,
    pub components: Vec<ComponentData>,
}

impl PrimeCriteria {
    pub fn agree(&self) -> bool {
        self.gaschuetz == self.weisner && self.weisner == self.akizuki
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SufficientFlags {
    pub burnside: bool,
    pub kochendorffer: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NilpotentCase {
    pub is_nilpotent: bool,
    pub center_cyclic: bool,
}

/// The subgroup `S = ∏ ker λ_p` of `T(G)` built from the hyperplane witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HyperplaneWitness {
    pub t_order: usize,
    pub s_order: usize,
    pub core_order: usize,
    /// `T(G)/S` is cyclic.
    pub quotient_cyclic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub characteristic: u32,
    pub primes: Vec<u32>,
    pub per_prime: Vec<PrimeCriteria>,
    pub gaschuetz: bool,
    pub weisner: bool,
    pub akizuki: bool,
    pub verdict: bool,
    /// `T(G)` has a subgroup `S` with `T(G)/S` cyclic and trivial core.
    pub condition4: bool,
    pub sufficient: SufficientFlags,
    pub nilpotent: NilpotentCase,
    pub witness: Option<HyperplaneWitness>,
}

impl CriterionReport {
    pub fn criteria_agree(&self) -> bool {
        self.gaschuetz == self.weisner && self.weisner == self.akizuki && self.per_prime.iter().all(PrimeCriteria::agree)
    }

    /// Verdict for another characteristic, reusing the per-prime data.
    pub fn verdict_for(&self, characteristic: u32) -> bool {
        self.condition4 && !self.primes.contains(&characteristic)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CriteriaConfig {
    pub search_cap: u64,
}

impl Default for CriteriaConfig {
    fn default() -> Self {
        CriteriaConfig { search_cap: DEFAULT_SEARCH_CAP }
    }
}

pub fn per_prime_criteria(report: &SocleReport, config: &CriteriaConfig) -> Result<Vec<PrimeCriteria>, CriteriaError> {
    report
        .t_parts
        .iter()
        .map(|t| {
            let m = &t.module;
            let spin = m.is_cyclic_spin(config.search_cap)?;
            let hyper = m.weisner_hyperplane_exists(config.search_cap)?;
            let summary = m.decompose(config.search_cap)?;
            let akizuki = summary.components.iter().all(|c| c.s * c.g <= c.r);
            Ok(PrimeCriteria {
                p: t.p,
                dim: t.dim(),
                gaschuetz: spin.cyclic,
                weisner: hyper.exists,
                akizuki,
                cyclic_generator: spin.witness,
                hyperplane: hyper.functional,
                components: summary
                    .components
                    .iter()
                    .map(|c| ComponentData { r: c.r, g: c.g, s: c.s })
                    .collect(),
            })
        })
        .collect()
}

/// `T(G)` is a cyclic `ZG`-module, checked prime by prime.
pub fn gaschuetz(group: &FiniteGroup) -> Result<bool, CriteriaError> {
    let report = socle_report(group)?;
    let cap = DEFAULT_SEARCH_CAP;
    for t in &report.t_parts {
        if !t.module.is_cyclic_spin(cap)?.cyclic {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every `T(G)_p` has a maximal subgroup containing no nontrivial normal subgroup of `G`.
pub fn weisner(group: &FiniteGroup) -> Result<bool, CriteriaError> {
    let report = socle_report(group)?;
    for t in &report.t_parts {
        if !t.module.weisner_hyperplane_exists(DEFAULT_SEARCH_CAP)?.exists {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `s·g ≤ r` for every homogeneous component of every `T(G)_p`.
pub fn akizuki(group: &FiniteGroup) -> Result<bool, CriteriaError> {
    let report = socle_report(group)?;
    for t in &report.t_parts {
        if !t.module.akizuki_cyclic(DEFAULT_SEARCH_CAP)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No two distinct minimal normal subgroups have orders that are powers of the same prime.
pub fn burnside_sufficient(group: &FiniteGroup) -> bool {
    let primes: Vec<u64> = group
        .minimal_normal_subgroups()
        .iter()
        .filter_map(|n| match prime_divisors(n.order() as u64).as_slice() {
            [p] => Some(*p),
            _ => None,
        })
        .collect();
    primes.iter().enumerate().all(|(i, p)| !primes[i + 1..].contains(p))
}

/// Every Sylow subgroup has cyclic center.
pub fn kochendorffer_sufficient(group: &FiniteGroup) -> Result<bool, CriteriaError> {
    for p in prime_divisors(group.order() as u64) {
        let sylow = group.sylow(p)?;
        let center: Vec<usize> = sylow
            .members()
            .iter()
            .copied()
            .filter(|&z| sylow.members().iter().all(|&x| group.mul(z, x) == group.mul(x, z)))
            .collect();
        let center = group.subgroup(&center)?;
        if !group.is_cyclic_group(&center) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For nilpotent groups the answer is exactly "the center is cyclic"; `None` otherwise.
pub fn fite_nilpotent(group: &FiniteGroup) -> Option<bool> {
    group.is_nilpotent().then(|| group.is_cyclic_group(&group.center()))
}

fn hyperplane_witness(
    group: &FiniteGroup,
    report: &SocleReport,
    per_prime: &[PrimeCriteria],
) -> Result<Option<HyperplaneWitness>, CriteriaError> {
    let mut s_elements = Vec::new();
    let mut index = 1usize;
    for (t, c) in report.t_parts.iter().zip(per_prime) {
        let Some(lambda) = &c.hyperplane else {
            return Ok(None);
        };
        let row = FpMatrix::new(t.p as u64, 1, lambda.len(), lambda.clone()).map_err(ModuleError::Linalg)?;
        s_elements.extend(t.elements_in(&row.kernel()));
        index *= t.p as usize;
    }
    let t_group = report.abelian_part(group);
    let s = group.subgroup_generated(&s_elements);
    let core = group.core(&s)?;
    // a finite abelian group of squarefree order is cyclic
    let quotient_cyclic = t_group.order() == s.order() * index;
    Ok(Some(HyperplaneWitness {
        t_order: t_group.order(),
        s_order: s.order(),
        core_order: core.order(),
        quotient_cyclic,
    }))
}

/// Whether `group` has a faithful irreducible representation over a field
/// of the given characteristic (`0` or a prime).
pub fn verdict(group: &FiniteGroup, characteristic: u64) -> Result<CriterionReport, CriteriaError> {
    verdict_with(group, characteristic, &CriteriaConfig::default())
}

pub fn verdict_with(
    group: &FiniteGroup,
    characteristic: u64,
    config: &CriteriaConfig,
) -> Result<CriterionReport, CriteriaError> {
    if characteristic != 0 {
        check_prime(characteristic).map_err(|_| CriteriaError::NotPrimeCharacteristic(characteristic))?;
    }
    let characteristic = characteristic as u32;
    let report = socle_report(group)?;
    let per_prime = per_prime_criteria(&report, config)?;
    let gaschuetz = per_prime.iter().all(|c| c.gaschuetz);
    let weisner = per_prime.iter().all(|c| c.weisner);
    let akizuki = per_prime.iter().all(|c| c.akizuki);
    let witness = hyperplane_witness(group, &report, &per_prime)?;
    let condition4 = witness.is_some_and(|w| w.core_order == 1 && w.quotient_cyclic);
    let verdict = condition4 && !report.primes.contains(&characteristic);
    Ok(CriterionReport {
        characteristic,
        primes: report.primes.clone(),
        per_prime,
        gaschuetz,
        weisner,
        akizuki,
        verdict,
        condition4,
        sufficient: SufficientFlags {
            burnside: burnside_sufficient(group),
            kochendorffer: kochendorffer_sufficient(group)?,
        },
        nilpotent: NilpotentCase {
            is_nilpotent: group.is_nilpotent(),
            center_cyclic: group.is_cyclic_group(&group.center()),
        },
        witness,
    })
}
