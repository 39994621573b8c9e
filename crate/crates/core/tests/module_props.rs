use fir_core::builders::{
    affine_scalar_group, burnside_example, cyclic, diagonal_affine_group, direct_product, isaacs_example,
    symmetric,
};
use fir_core::modrep::{enumerate_invariant_subspaces, FpModule};
use fir_core::socle::socle_report;
use fir_core::{FiniteGroup, FpMatrix, FpSubspace};
use proptest::prelude::*;

const CAP: u64 = 1 << 16;

fn carriers() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("burnside", burnside_example().unwrap()),
        ("isaacs", isaacs_example().unwrap()),
        ("G(2,5)", affine_scalar_group(2, 5).unwrap()),
        ("G(3,2)", affine_scalar_group(3, 2).unwrap()),
        ("diag(2,3)", diagonal_affine_group(2, 3).unwrap()),
        ("C3xC3", direct_product(&cyclic(3).unwrap(), &cyclic(3).unwrap()).unwrap()),
        ("S4", symmetric(4).unwrap()),
        ("C6xS3", direct_product(&cyclic(6).unwrap(), &symmetric(3).unwrap()).unwrap()),
    ]
}

#[test]
fn coordinate_maps_are_isomorphisms() {
    for (name, g) in carriers() {
        let r = socle_report(&g).unwrap();
        for t in &r.t_parts {
            let p = t.p;
            let members = t.carrier.members();
            assert_eq!(members.len(), (p as usize).pow(t.dim() as u32), "{name}");
            for &x in members {
                for &y in members {
                    let cx = t.coordinates(x).unwrap();
                    let cy = t.coordinates(y).unwrap();
                    let sum: Vec<u32> = cx.iter().zip(cy).map(|(a, b)| (a + b) % p).collect();
                    assert_eq!(t.coordinates(g.mul(x, y)).unwrap(), sum.as_slice(), "{name}");
                }
            }
        }
    }
}

#[test]
fn normal_subgroups_in_carrier_are_invariant_subspaces() {
    for (name, g) in carriers() {
        let r = socle_report(&g).unwrap();
        for t in &r.t_parts {
            let invariant = enumerate_invariant_subspaces(&t.module);
            let mut every = enumerate_invariant_subspaces(&FpModule::trivial(&g, t.p as u64, t.dim()).unwrap());
            every.sort_by_key(|w| w.dim());
            for w in &every {
                let sub = g.subgroup(&t.elements_in(w)).unwrap();
                assert_eq!(g.is_normal(&sub), invariant.contains(w), "{name}: {w:?}");
            }
        }
    }
}

#[test]
fn conjugation_is_a_representation() {
    for (name, g) in carriers() {
        let r = socle_report(&g).unwrap();
        for t in &r.t_parts {
            for a in 0..g.order() {
                for b in (0..g.order()).step_by(5) {
                    let lhs = t.module.act(g.mul(a, b));
                    let rhs = t.module.act(a).mul(t.module.act(b)).unwrap();
                    assert_eq!(lhs, &rhs, "{name}");
                }
            }
        }
    }
}

/// Random completely reducible modules: direct sums of socle parts and trivial summands.
fn cr_modules() -> Vec<(String, FpModule)> {
    let mut out = Vec::new();
    for (name, g) in [("S3", symmetric(3).unwrap()), ("burnside", burnside_example().unwrap()), ("A4xC2", direct_product(&fir_core::builders::alternating(4).unwrap(), &cyclic(2).unwrap()).unwrap())] {
        let r = socle_report(&g).unwrap();
        for t in &r.t_parts {
            let m = t.module.clone();
            let triv = FpModule::trivial(&g, t.p as u64, 1).unwrap();
            out.push((format!("{name} T"), m.clone()));
            out.push((format!("{name} T+1"), m.direct_sum(&triv).unwrap()));
            out.push((format!("{name} 2T"), m.direct_sum(&m).unwrap()));
            out.push((format!("{name} 1+1"), triv.direct_sum(&triv).unwrap()));
        }
    }
    out
}

#[test]
fn spin_duality_and_akizuki_agree() {
    for (name, m) in cr_modules() {
        let spin = m.is_cyclic_spin(CAP).unwrap().cyclic;
        assert_eq!(spin, m.dual().is_cyclic_spin(CAP).unwrap().cyclic, "{name}");
        assert_eq!(spin, m.akizuki_cyclic(CAP).unwrap(), "{name}");
        assert_eq!(m.weisner_hyperplane_exists(CAP).unwrap().exists, m.dual().akizuki_cyclic(CAP).unwrap(), "{name}");
        let summary = m.decompose(CAP).unwrap();
        assert_eq!(summary.total_dim(), m.dim(), "{name}");
    }
}

#[test]
fn witnesses_are_genuine() {
    for (name, m) in cr_modules() {
        let c = m.is_cyclic_spin(CAP).unwrap();
        if let Some(v) = &c.witness {
            assert!(m.spin(v).is_full(), "{name}");
        }
        let h = m.weisner_hyperplane_exists(CAP).unwrap();
        if let Some(f) = &h.functional {
            assert!(m.largest_submodule_in_kernel(f).is_zero(), "{name}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spin_is_smallest_invariant_subspace(v in prop::collection::vec(0u32..3, 2)) {
        let g = burnside_example().unwrap();
        let r = socle_report(&g).unwrap();
        let m = &r.t_part(3).unwrap().module;
        let s = m.spin(&v);
        prop_assert!(m.is_invariant(&s) && s.contains(&v));
        for w in enumerate_invariant_subspaces(m) {
            if w.contains(&v) {
                prop_assert!(s.is_subspace_of(&w));
            }
        }
    }

    #[test]
    fn dual_is_involutive(d in prop::collection::vec(0u32..2, 16)) {
        // an arbitrary C_2-action needs an involution; conjugate the swap by a random invertible matrix
        let p = FpMatrix::new(2, 4, 4, d).unwrap();
        prop_assume!(p.inverse().is_some());
        let swap = FpMatrix::from_rows(2, &[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap();
        let a = p.mul(&swap).unwrap().mul(&p.inverse().unwrap()).unwrap();
        let g = cyclic(2).unwrap();
        let m = FpModule::from_generators(&g, 2, 4, &[(1, a)]).unwrap();
        prop_assert_eq!(m.dual().dual(), m.clone());
        let subs = enumerate_invariant_subspaces(&m);
        let dual_subs = enumerate_invariant_subspaces(&m.dual());
        prop_assert_eq!(subs.len(), dual_subs.len());
        let annihilators: Vec<FpSubspace> = subs.iter().map(FpSubspace::annihilator).collect();
        for w in &dual_subs {
            prop_assert!(annihilators.contains(w));
        }
    }
}
