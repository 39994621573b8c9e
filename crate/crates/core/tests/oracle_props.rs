use fir_core::builders::{affine_scalar_group, burnside_example, isaacs_example};
use fir_core::criteria::verdict;
use fir_core::oracle::{class_data, dixon_table};
use fir_core::FiniteGroup;
use proptest::prelude::*;

fn invariants(g: &FiniteGroup) -> (usize, bool, Vec<usize>, Vec<usize>, Vec<usize>) {
    let mut orders = g.element_orders().to_vec();
    orders.sort_unstable();
    let cd = class_data(g);
    let sizes = (0..cd.len()).map(|i| cd.class_size(i)).collect();
    (g.order(), verdict(g, 0).unwrap().verdict, dixon_table(g).unwrap().sorted_degrees(), orders, sizes)
}

#[test]
fn named_examples_match_affine_groups() {
    assert_eq!(invariants(&burnside_example().unwrap()), invariants(&affine_scalar_group(2, 3).unwrap()));
    assert_eq!(invariants(&isaacs_example().unwrap()), invariants(&affine_scalar_group(2, 4).unwrap()));
}

#[test]
fn structure_constants_count_pairs() {
    let g = isaacs_example().unwrap();
    let cd = class_data(&g);
    let k = cd.len();
    for i in 0..k {
        for j in 0..k {
            for z in 0..k {
                let rep = cd.classes[z][0];
                let direct = cd.classes[i]
                    .iter()
                    .filter(|&&x| cd.classes[j].contains(&g.mul(g.inv(x), rep)))
                    .count() as u64;
                assert_eq!(cd.structure_constant(i, j, z), direct);
            }
        }
    }
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((0..n as u32).collect::<Vec<u32>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn oracle_agrees_with_criteria(gens in prop::collection::vec(permutation(6), 1..3)) {
        let g = FiniteGroup::from_permutations(&gens, 5000).unwrap();
        let t = dixon_table(&g).unwrap();
        let n = g.order();
        prop_assert_eq!(t.len(), t.classes.len());
        prop_assert_eq!(t.degrees.iter().map(|d| d * d).sum::<usize>(), n);
        prop_assert!(t.degrees.iter().all(|d| n % d == 0));
        for row in &t.multiplicities {
            for (c, m) in row.iter().enumerate() {
                prop_assert_eq!(m.iter().sum::<u32>() as usize, row[0][0] as usize, "class {}", c);
            }
        }
        let faithful = t.faithful_irreducible_exists(&g).unwrap().exists;
        prop_assert_eq!(faithful, verdict(&g, 0).unwrap().verdict);
    }
}
