use super::*;
use crate::cyclo::{cyc_root, CycNum};
use alloc::sync::Arc;
use alloc::vec;
use proptest::prelude::*;

#[test]
fn cycle_notation_roundtrip() {
    let p = parse_cycles("(1,4,3)(2,5)", 5).unwrap();
    assert_eq!(p, vec![3, 4, 0, 2, 1]);
    assert_eq!(cycle_notation(&p), "(1,4,3)(2,5)");
    assert_eq!(cycle_notation(&[0, 1, 2]), "()");
    assert!(parse_cycles("(1,6)", 5).is_err());
    assert!(parse_cycles("1,2)", 5).is_err());
}

#[test]
fn composition_is_right_to_left() {
    let s5 = make_symmetric(5).unwrap();
    let g = s5.find_cycles("(3,4)").unwrap();
    let h = s5.find_cycles("(3,4,5)").unwrap();
    assert_eq!(s5.label(s5.mul(g, h)), "(4,5)");
    let a4 = make_alternating(4).unwrap();
    let x = a4.find_cycles("(1,4,3)").unwrap();
    let y = a4.find_cycles("(3,4,2)").unwrap();
    let z = a4.find_cycles("(2,4,1)").unwrap();
    assert_eq!(a4.mul(a4.mul(x, y), z), 0);
}

#[test]
fn orders_and_exponents() {
    assert_eq!(make_symmetric(3).unwrap().order(), 6);
    assert_eq!(make_alternating(4).unwrap().order(), 12);
    assert_eq!(make_symmetric(5).unwrap().exponent(), 60);
    assert_eq!(make_cyclic(9).unwrap().exponent(), 9);
    let pq = make_semidirect_zq_zp(11, 5, 3).unwrap();
    assert_eq!(pq.order(), 55);
    assert_eq!(pq.exponent(), 55);
    assert!(!pq.is_abelian());
    assert!(make_semidirect_zq_zp(11, 3, 3).is_err());
    assert!(make_semidirect_zq_zp(11, 5, 2).is_err());
}

#[test]
fn large_permutation_group() {
    let s8 = make_symmetric(8).unwrap();
    assert_eq!(s8.order(), 40320);
    assert_eq!(s8.exponent(), 840);
    assert_eq!(s8.conjugacy_classes().len(), 22);
    let g = s8.find_cycles("(1,2,3)(4,5)").unwrap();
    assert_eq!(s8.element_order(g), 6);
    assert_eq!(s8.mul(g, s8.inv(g)), 0);
    assert_eq!(s8.derived_subgroup().len(), 20160);
}

#[test]
fn conjugacy_classes_and_centralizers() {
    let a4 = make_alternating(4).unwrap();
    let mut sizes: Vec<usize> = a4.conjugacy_classes().iter().map(Vec::len).collect();
    assert_eq!(sizes[0], 1);
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 3, 4, 4]);
    let c = a4.find_cycles("(1,2,3)").unwrap();
    assert_eq!(a4.centralizer(c).unwrap().group.order(), 3);
}

#[test]
fn opposite_group() {
    let s3 = make_symmetric(3).unwrap();
    let op = s3.opposite().unwrap();
    for a in 0..6 {
        for b in 0..6 {
            assert_eq!(op.mul(a, b), s3.mul(b, a));
        }
    }
}

#[test]
fn conjugation_actions() {
    let a4 = Arc::new(make_alternating(4).unwrap());
    let z9 = Arc::new(make_cyclic(9).unwrap());
    let tau = parse_cycles("(1,2,3)", 4).unwrap();
    let act = GroupAction::conj_by_perm(z9.clone(), a4.clone(), &tau).unwrap();
    let g = a4.find_cycles("(1,2)(3,4)").unwrap();
    assert_eq!(a4.label(act.act(1, g)), "(1,4)(2,3)");
    // c³ acts trivially, so the stabilizer of a moved point is ⟨c³⟩
    assert_eq!(act.stabilizer(g).unwrap().group.order(), 3);
    assert_eq!(act.orbit(g).len(), 3);
    for (h, x) in act.transversal(g) {
        assert_eq!(act.act(x, g), h);
    }
    // τ of order 3 does not give an action of Z4
    let z4 = Arc::new(make_cyclic(4).unwrap());
    assert!(GroupAction::conj_by_perm(z4, a4, &tau).is_err());
}

#[test]
fn action_validation_rejects_non_automorphisms() {
    let z3 = Arc::new(make_cyclic(3).unwrap());
    let z2 = Arc::new(make_cyclic(2).unwrap());
    // the nontrivial element sends both 0 and 1 to 0
    let bad = vec![0, 1, 2, 0, 0, 2];
    assert!(GroupAction::from_table(z2.clone(), z3.clone(), bad).is_err());
    let good = vec![0, 1, 2, 0, 2, 1];
    assert!(GroupAction::from_table(z2, z3, good).is_ok());
}

fn sum_sq_degrees(t: &CharTable) -> u64 {
    (0..t.num_irreducibles()).map(|i| t.degree(i).pow(2)).sum()
}

#[test]
fn character_table_z3() {
    let z3 = make_cyclic(3).unwrap();
    let t = character_table(&z3, DEFAULT_CHAR_TABLE_CAP, 1).unwrap();
    let z = cyc_root(3, 1).unwrap();
    let z2 = cyc_root(3, 2).unwrap();
    assert_eq!(t.rows, vec![
        vec![CycNum::one(), CycNum::one(), CycNum::one()],
        vec![CycNum::one(), z.clone(), z2.clone()],
        vec![CycNum::one(), z2, z],
    ]);
}

#[test]
fn character_table_s3() {
    let s3 = make_symmetric(3).unwrap();
    let t = character_table(&s3, DEFAULT_CHAR_TABLE_CAP, 7).unwrap();
    let degs: Vec<u64> = (0..3).map(|i| t.degree(i)).collect();
    assert_eq!(degs, vec![1, 1, 2]);
    let r = |v: &[i64]| v.iter().map(|&x| CycNum::from_int(x)).collect::<Vec<_>>();
    // classes: identity, transpositions, 3-cycles (ordered by smallest id)
    let sizes: Vec<usize> = t.classes.iter().map(Vec::len).collect();
    assert_eq!(sizes, vec![1, 3, 2]);
    assert_eq!(t.rows[1], r(&[1, -1, 1]));
    assert_eq!(t.rows[2], r(&[2, 0, -1]));
}

#[test]
fn character_tables_of_catalog_groups() {
    for (g, k) in [
        (make_alternating(4).unwrap(), 4),
        (make_symmetric(4).unwrap(), 5),
        (make_symmetric(5).unwrap(), 7),
        (make_semidirect_zq_zp(11, 5, 3).unwrap(), 7),
        (make_cyclic(12).unwrap(), 12),
    ] {
        let t = character_table(&g, DEFAULT_CHAR_TABLE_CAP, 3).unwrap();
        assert_eq!(t.num_irreducibles(), k);
        assert_eq!(sum_sq_degrees(&t), g.order() as u64);
    }
    assert!(matches!(
        character_table(&make_symmetric(7).unwrap(), DEFAULT_CHAR_TABLE_CAP, 0),
        Err(crate::Error::Resource(_))
    ));
}

#[test]
fn character_table_independent_of_seed() {
    let g = make_semidirect_zq_zp(7, 3, 2).unwrap();
    let a = character_table(&g, DEFAULT_CHAR_TABLE_CAP, 0).unwrap();
    for seed in 1..5 {
        assert_eq!(character_table(&g, DEFAULT_CHAR_TABLE_CAP, seed).unwrap().rows, a.rows);
    }
}

#[test]
fn linear_characters() {
    let s5 = make_symmetric(5).unwrap();
    assert_eq!(s5.abelianization_linear_characters().unwrap().len(), 2);
    let a4 = make_alternating(4).unwrap();
    let lin = a4.abelianization_linear_characters().unwrap();
    assert_eq!(lin.len(), 3);
    for chi in &lin {
        for a in 0..12u32 {
            for b in 0..12u32 {
                assert_eq!(chi[a4.mul(a, b) as usize], &chi[a as usize] * &chi[b as usize]);
            }
        }
    }
}

proptest! {
    #[test]
    fn permutation_groups_satisfy_axioms(gens in proptest::collection::vec(Just(()).prop_perturb(|_, mut rng| {
        let mut v: Vec<u16> = (0..5).collect();
        for i in (1..5).rev() {
            let j = (rng.next_u32() as usize) % (i + 1);
            v.swap(i, j);
        }
        v
    }), 1..3)) {
        let g = from_perm_generators(5, &gens).unwrap();
        prop_assert_eq!(120 % g.order(), 0);
        g.check_axioms().unwrap();
        let classes = g.conjugacy_classes();
        prop_assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), g.order());
        for c in &classes {
            prop_assert_eq!(g.order() % c.len(), 0);
        }
    }
}
