use super::*;
use crate::cyclo::{cyc_root, CycNum};
use crate::groups::{make_alternating, make_cyclic, make_symmetric, parse_cycles, Group, GroupAction};
use crate::repmod::{simple_characters, CharRing};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use proptest::prelude::*;

fn a4z9() -> Arc<HopfAlg> {
    let g = Arc::new(make_alternating(4).unwrap());
    let tau = parse_cycles("(1,2,3)", 4).unwrap();
    let act = GroupAction::conj_by_perm(Arc::new(make_cyclic(9).unwrap()), g, &tau).unwrap();
    Arc::new(HopfAlg::smash(act).unwrap())
}

fn group_alg(g: Group) -> Arc<HopfAlg> {
    Arc::new(HopfAlg::group_algebra(Arc::new(g)).unwrap())
}

fn ring(h: &Arc<HopfAlg>) -> CharRing {
    simple_characters(h.clone(), 3).unwrap()
}

fn a4z9_chi(r: &CharRing) -> usize {
    let z3 = cyc_root(3, 1).unwrap();
    r.irreducibles
        .iter()
        .position(|c| c.induced_data().is_some_and(|(_, s, e)| s == [0, 3, 6] && e[1] == z3))
        .unwrap()
}

fn int(v: i64) -> CycNum {
    CycNum::from_int(v)
}

#[test]
fn a4z9_nonintegral_indicators() {
    let h = a4z9();
    let r = ring(&h);
    let i = a4z9_chi(&r);
    let mut eng = IndicatorEngine::new(&r);
    let z3 = cyc_root(3, 1).unwrap();
    let rep = eng.nu_k(i, 3, 1).unwrap();
    assert_eq!(rep.value, &int(1) + &z3);
    assert_eq!(rep.integrality, None);
    assert_eq!(rep.routes_used, vec![Route::Definition, Route::ClosedForm, Route::Rotation]);
    assert_eq!(rep.skipped[0].0, Route::CanonicalTensor);
    assert_eq!(eng.nu_k(i, 3, 2).unwrap().value, &int(1) + &(&z3 * &z3));
    assert_eq!(eng.nu(i, 1).unwrap().value, int(0));
    let g = eng.galois_check(i, 3, 1, 2).unwrap();
    assert_eq!(g, GaloisReport { rotation: true, power: None });
    assert_eq!(eng.galois_check(i, 3, 2, 5).unwrap(), GaloisReport { rotation: true, power: Some(true) });
    assert!(eng.galois_check(i, 2, 1, 7).unwrap().ok());

    assert_eq!(eng.exponent_of(i).unwrap().value % 9, 0);
    let checked = eng.squarefree_integrality_check(i, 18).unwrap();
    assert!(!checked.contains(&3));
    assert!(checked.contains(&9));
    for m in 1..=6 {
        assert_eq!(eng.field_membership(i, m).unwrap(), (true, true));
    }
}

#[test]
fn routes_agree_on_the_double_of_s3() {
    let h = Arc::new(HopfAlg::double(Arc::new(make_symmetric(3).unwrap())).unwrap());
    let r = ring(&h);
    let mut eng = IndicatorEngine::new(&r);
    for i in 0..r.k() {
        for m in 1..=6 {
            let rep = eng.nu(i, m).unwrap();
            assert!(rep.agreement);
            assert_eq!(rep.routes_used, vec![Route::Definition, Route::ClosedForm, Route::Rotation, Route::CanonicalTensor]);
            for k in (2..m).filter(|&k| num_integer::gcd(k, m) == 1) {
                eng.nu_k(i, m, k).unwrap();
            }
        }
        eng.fs_classify(i).unwrap();
    }
    assert_eq!(eng.algebra_exponent().unwrap(), 6);
}

#[test]
fn double_u_route_on_group_algebras() {
    for g in [make_symmetric(3).unwrap(), make_cyclic(4).unwrap()] {
        let h = group_alg(g);
        let r = ring(&h);
        let mut eng = IndicatorEngine::new(&r);
        for i in 0..r.k() {
            for m in 1..=6 {
                let rep = eng.nu(i, m).unwrap();
                assert!(rep.routes_used.contains(&Route::DoubleU));
                assert!(rep.integrality.is_some());
            }
        }
    }
}

#[test]
fn frobenius_schur_classification() {
    let h = group_alg(make_cyclic(3).unwrap());
    let r = ring(&h);
    let mut eng = IndicatorEngine::new(&r);
    assert_eq!(eng.fs_classify(0).unwrap(), 1);
    assert_eq!(eng.fs_classify(1).unwrap(), 0);

    let h = group_alg(make_symmetric(3).unwrap());
    let r = ring(&h);
    let mut eng = IndicatorEngine::new(&r);
    assert_eq!(eng.fs_classify(r.find("dim2").unwrap()).unwrap(), 1);

    // the quaternion group has a quaternionic 2-dimensional simple
    let q8 = crate::groups::from_perm_generators(
        8,
        &[parse_cycles("(1,2,3,4)(5,6,7,8)", 8).unwrap(), parse_cycles("(1,5,3,7)(2,8,4,6)", 8).unwrap()],
    )
    .unwrap();
    assert_eq!(q8.order(), 8);
    let h = group_alg(q8);
    let r = ring(&h);
    let mut eng = IndicatorEngine::new(&r);
    assert_eq!(eng.fs_classify(r.find("dim2").unwrap()).unwrap(), -1);
}

#[test]
fn regular_indicator_counts_roots() {
    for g in [make_symmetric(3).unwrap(), make_cyclic(6).unwrap(), make_alternating(4).unwrap()] {
        let h = group_alg(g);
        for m in 2..=6u64 {
            let nu = regular_indicator(&h, m).unwrap();
            assert_eq!(nu, h.e_map_trace(m as u32).unwrap());
            assert_eq!(nu, int(root_count(&h, m) as i64));
        }
    }
}

#[test]
fn exponents_and_cauchy() {
    let h = group_alg(make_symmetric(3).unwrap());
    let r = ring(&h);
    let mut eng = IndicatorEngine::new(&r);
    assert_eq!(eng.exponent_of(0).unwrap().value, 1);
    let rep = eng.exponent_of(r.find("dim2").unwrap()).unwrap();
    assert_eq!(rep.value, 6);
    assert_eq!(rep.routes, vec![ExponentRoute::NuScan, ExponentRoute::TOrder]);
    assert_eq!(Module::regular(h.clone()).unwrap().t_order(100, 36).unwrap(), 6);
    let e = eng.algebra_exponent().unwrap();
    assert_eq!(e, 6);
    assert_eq!(cauchy_check(&h, e).unwrap(), vec![(2, true), (3, true)]);
    for i in 0..r.k() {
        assert_eq!(eng.squarefree_integrality_check(i, 12).unwrap(), (1..=12).collect::<Vec<_>>());
    }

    let h = a4z9();
    let r = ring(&h);
    let mut eng = IndicatorEngine::new(&r);
    let e = eng.algebra_exponent().unwrap();
    assert_eq!(cauchy_check(&h, e).unwrap(), vec![(2, true), (3, true)]);

    let h = Arc::new(HopfAlg::double(Arc::new(make_cyclic(2).unwrap())).unwrap());
    let r = ring(&h);
    let mut eng = IndicatorEngine::new(&r);
    assert_eq!(eng.algebra_exponent().unwrap(), 2);
    assert!(cauchy_check(&h, 1).is_err());
}

#[test]
fn dual_modules_share_indicators() {
    let h = a4z9();
    let r = ring(&h);
    let mut eng = IndicatorEngine::new(&r);
    for i in 0..r.k() {
        let dual = char_dual(&h, r.get(i));
        let j = r.irreducibles.iter().position(|c| c.values == dual.values).unwrap();
        for m in 1..=6 {
            assert_eq!(eng.closed_value(i, m, 1).unwrap(), eng.closed_value(j, m, 1).unwrap());
        }
    }
}

#[test]
fn galois_on_group_algebras_and_hypotheses() {
    let h = group_alg(make_symmetric(3).unwrap());
    let r = ring(&h);
    let mut eng = IndicatorEngine::new(&r);
    for i in 0..r.k() {
        assert!(eng.galois_check(i, 3, 1, 2).unwrap().rotation);
        assert_eq!(eng.galois_check(i, 5, 1, 1).unwrap().power, Some(true));
        assert_eq!(eng.galois_check(i, 2, 1, 5).unwrap(), GaloisReport { rotation: true, power: Some(true) });
        assert!(as_i64(&eng.closed_value(i, 3, 1).unwrap()).is_some());
    }
    assert!(eng.galois_check(0, 4, 2, 1).is_err());
    assert!(eng.galois_check(1, 5, 1, 5).is_err());
}

#[test]
fn number_theory_helpers() {
    assert_eq!(prime_divisors(108), vec![2, 3]);
    assert_eq!(prime_divisors(55), vec![5, 11]);
    assert_eq!(prime_divisors(1), Vec::<u64>::new());
    assert!(is_large_compared_to(9, 18));
    assert!(!is_large_compared_to(3, 9));
    assert!(is_large_compared_to(4, 9));
}

fn large_by_primes(m: u64, d: u64) -> bool {
    prime_divisors(d).into_iter().all(|p| {
        let mut pk = 1;
        while d % (pk * p) == 0 {
            pk *= p;
        }
        m % p != 0 || m % pk == 0
    })
}

proptest! {
    #[test]
    fn large_compared_matches_prime_powers(m in 1u64..500, d in 1u64..500) {
        prop_assert_eq!(is_large_compared_to(m, d), large_by_primes(m, d));
    }

    #[test]
    fn galois_lifts_compose(e in 0i64..12, l1 in prop::sample::select(vec![1u64, 5, 7, 11]), l2 in prop::sample::select(vec![1u64, 5, 7, 11])) {
        let v = &cyc_root(12, e).unwrap() + &cyc_root(4, 1).unwrap();
        let a = galois_on(&galois_on(&v, l1, 12).unwrap(), l2, 12).unwrap();
        let b = galois_on(&v, (l1 * l2) % 12, 12).unwrap();
        prop_assert_eq!(a, b);
    }
}
