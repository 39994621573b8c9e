use std::path::PathBuf;

use fir::GroupSpec;
use proptest::prelude::*;

/// Disjoint cycles (1-based, fixed points dropped) of a permutation of `0..n`.
fn cycles_of(perm: &[u32]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            c.push(x as u32 + 1);
            x = perm[x] as usize;
        }
        if c.len() > 1 {
            out.push(c);
        }
    }
    out
}

fn leaf() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1usize..50).prop_map(GroupSpec::Cyclic),
        (1usize..4, 2u64..10).prop_map(|(d, q)| GroupSpec::Gdq(d, q)),
        (2u64..30).prop_map(GroupSpec::Gq),
        (1usize..8).prop_map(GroupSpec::Dihedral),
        (1usize..6).prop_map(GroupSpec::Sym),
        (1usize..6).prop_map(GroupSpec::Alt),
        (1usize..3, 2u64..6).prop_map(|(d, q)| GroupSpec::Diag(d, q)),
        Just(GroupSpec::Burnside),
        Just(GroupSpec::Isaacs),
        Just(GroupSpec::Q8),
        "[a-z][a-z0-9_/.]{0,12}".prop_map(|s| GroupSpec::Cayley(PathBuf::from(s))),
        prop::collection::vec(Just((0..6u32).collect::<Vec<u32>>()).prop_shuffle(), 1..4)
            .prop_map(|ps| GroupSpec::Perm(ps.iter().map(|p| cycles_of(p)).collect())),
    ]
}

fn spec() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        3 => leaf(),
        1 => prop::collection::vec(leaf(), 2..4).prop_map(GroupSpec::Product),
    ]
}

proptest! {
    #[test]
    fn display_parses_back(s in spec()) {
        let text = s.to_string();
        prop_assert_eq!(text.parse::<GroupSpec>().unwrap(), s);
    }

    #[test]
    fn parsing_never_panics(text in ".{0,40}") {
        let _ = text.parse::<GroupSpec>();
    }
}

#[test]
fn nested_products_flatten() {
    let a: GroupSpec = "product:product:cyclic:2*cyclic:3*q8".parse().unwrap();
    assert_eq!(a.to_string(), "product:cyclic:2*cyclic:3*q8");
}

#[test]
fn identity_generators_survive() {
    let s: GroupSpec = "perm:();(1 2)".parse().unwrap();
    assert_eq!(s.to_string(), "perm:();(1 2)");
    assert_eq!(s.build_with_cap(100).unwrap().order(), 2);
}
