use fir_core::builders::{
    affine_scalar_group, alternating, burnside_example, cyclic, diagonal_affine_group, dihedral, direct_product,
    isaacs_example, quaternion, symmetric,
};
use fir_core::{FiniteGroup, SubgroupSet};
use proptest::prelude::*;

fn small_groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("C1", cyclic(1).unwrap()),
        ("C6", cyclic(6).unwrap()),
        ("C12", cyclic(12).unwrap()),
        ("V4", direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap()),
        ("C3xC3", direct_product(&cyclic(3).unwrap(), &cyclic(3).unwrap()).unwrap()),
        ("S3", symmetric(3).unwrap()),
        ("S4", symmetric(4).unwrap()),
        ("A4", alternating(4).unwrap()),
        ("D4", dihedral(4).unwrap()),
        ("D5", dihedral(5).unwrap()),
        ("D6", dihedral(6).unwrap()),
        ("Q8", quaternion().unwrap()),
        ("burnside", burnside_example().unwrap()),
        ("isaacs", isaacs_example().unwrap()),
        ("G(2,3)", affine_scalar_group(2, 3).unwrap()),
        ("diag(2,3)", diagonal_affine_group(2, 3).unwrap()),
        ("C2xS3", direct_product(&cyclic(2).unwrap(), &symmetric(3).unwrap()).unwrap()),
    ]
}

/// Normal subgroups as unions of conjugacy classes closed under products.
fn brute_normal_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let classes = g.conjugacy_classes();
    let rest: Vec<&Vec<usize>> = classes.iter().filter(|c| c[0] != 0).collect();
    assert!(rest.len() <= 16, "too many classes for brute force");
    let mut out = Vec::new();
    for mask in 0u32..(1 << rest.len()) {
        let mut members = vec![0usize];
        for (i, c) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                members.extend(c.iter().copied());
            }
        }
        if g.order() % members.len() != 0 {
            continue;
        }
        members.sort_unstable();
        let closed = members.iter().all(|&a| members.iter().all(|&b| members.binary_search(&g.mul(a, b)).is_ok()));
        if closed {
            out.push(members);
        }
    }
    out
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

#[test]
fn normal_closure_is_least_normal_superset() {
    for (name, g) in small_groups() {
        let normals = brute_normal_subgroups(&g);
        for x in 0..g.order() {
            let nc = g.normal_closure(x);
            assert!(g.is_normal(&nc) && nc.contains(x), "{name}");
            for n in normals.iter().filter(|n| n.binary_search(&x).is_ok()) {
                assert!(subset(nc.members(), n), "{name}: closure of {x}");
            }
        }
    }
}

#[test]
fn minimal_normals_match_brute_force() {
    for (name, g) in small_groups() {
        if g.order() == 1 {
            continue;
        }
        let normals = brute_normal_subgroups(&g);
        let nontrivial: Vec<&Vec<usize>> = normals.iter().filter(|n| n.len() > 1).collect();
        let mut expected: Vec<Vec<usize>> = nontrivial
            .iter()
            .filter(|n| !nontrivial.iter().any(|m| m.len() < n.len() && subset(m, n)))
            .map(|n| (*n).clone())
            .collect();
        expected.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let got: Vec<Vec<usize>> = g.minimal_normal_subgroups().iter().map(|n| n.members().to_vec()).collect();
        assert_eq!(got, expected, "{name}");
    }
}

#[test]
fn core_is_largest_normal_subgroup_inside() {
    for (name, g) in small_groups() {
        let normals = brute_normal_subgroups(&g);
        for x in 0..g.order() {
            let s = g.subgroup_generated(&[x]);
            let core = g.core(&s).unwrap();
            assert!(g.is_normal(&core) && core.is_subset_of(&s), "{name}");
            for n in normals.iter().filter(|n| subset(n, s.members())) {
                assert!(subset(n, core.members()), "{name}: core of <{x}>");
            }
        }
        assert_eq!(g.core(&g.whole()).unwrap(), g.whole());
    }
}

#[test]
fn lagrange_and_center() {
    for (name, g) in small_groups() {
        let n = g.order();
        let z: Vec<usize> = (0..n).filter(|&a| (0..n).all(|b| g.mul(a, b) == g.mul(b, a))).collect();
        assert_eq!(g.center().members(), z.as_slice(), "{name}");
        let mut subs: Vec<SubgroupSet> = g.minimal_normal_subgroups();
        subs.push(g.center());
        subs.extend(g.lower_central_series());
        for s in subs {
            assert_eq!(n % s.order(), 0, "{name}");
        }
    }
}

#[test]
fn sylow_subgroups_have_full_order() {
    for (name, g) in small_groups() {
        let n = g.order();
        for p in [2u64, 3, 5] {
            if n as u64 % p != 0 {
                continue;
            }
            let s = g.sylow(p).unwrap();
            let mut full = 1;
            while n % (full * p as usize) == 0 {
                full *= p as usize;
            }
            assert_eq!(s.order(), full, "{name} p={p}");
        }
    }
}

#[test]
fn affine_groups_are_centerless_for_q_above_two() {
    for (d, q) in [(1, 3), (1, 4), (2, 3), (1, 5), (2, 4), (2, 5), (3, 3)] {
        let g = affine_scalar_group(d, q).unwrap();
        assert_eq!(g.order() as u64, q.pow(d as u32) * (q - 1));
        assert!(g.center().is_trivial(), "G({d},{q})");
    }
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((0..n as u32).collect::<Vec<u32>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_groups_are_groups(gens in prop::collection::vec(permutation(5), 1..3)) {
        let g = FiniteGroup::from_permutations(&gens, 5000).unwrap();
        let n = g.order();
        prop_assert_eq!(120 % n, 0);
        for a in 0..n {
            prop_assert_eq!(g.mul(a, g.inv(a)), 0);
            prop_assert_eq!(g.mul(0, a), a);
            prop_assert_eq!(g.pow(a, g.element_order(a)), 0);
        }
        for a in (0..n).step_by(3) {
            for b in (0..n).step_by(2) {
                for c in 0..n.min(7) {
                    prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
        let rebuilt = FiniteGroup::from_cayley(&g.table_rows()).unwrap();
        prop_assert_eq!(rebuilt.order(), n);
        prop_assert_eq!(g.is_nilpotent(), g.lower_central_series().last().unwrap().is_trivial());
    }
}
