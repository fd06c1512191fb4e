use super::*;
use crate::cyclo::{cyc_root, rat, CycNum};
use crate::groups::{make_alternating, make_cyclic, make_semidirect_zq_zp, make_symmetric, parse_cycles, Group, GroupAction};
use crate::hopf::HopfAlg;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use proptest::prelude::*;

fn conj_smash(g: Group, f: usize, tau: &str) -> Arc<HopfAlg> {
    let g = Arc::new(g);
    let tau = parse_cycles(tau, g.perm_degree().unwrap()).unwrap();
    let act = GroupAction::conj_by_perm(Arc::new(make_cyclic(f).unwrap()), g, &tau).unwrap();
    Arc::new(HopfAlg::smash(act).unwrap())
}

fn a4z9() -> Arc<HopfAlg> {
    conj_smash(make_alternating(4).unwrap(), 9, "(1,2,3)")
}

fn group_alg(g: Group) -> Arc<HopfAlg> {
    Arc::new(HopfAlg::group_algebra(Arc::new(g)).unwrap())
}

fn double(g: Group) -> Arc<HopfAlg> {
    Arc::new(HopfAlg::double(Arc::new(g)).unwrap())
}

fn pq() -> Arc<HopfAlg> {
    group_alg(make_semidirect_zq_zp(11, 5, 3).unwrap())
}

fn ring(h: &Arc<HopfAlg>) -> CharRing {
    simple_characters(h.clone(), 7).unwrap()
}

/// The 3-dimensional simple of `K^{A4} # K[Z9]` induced from `η(c³) = ζ₃`.
fn a4z9_chi(r: &CharRing) -> usize {
    let z3 = cyc_root(3, 1).unwrap();
    r.irreducibles
        .iter()
        .position(|c| match c.induced_data() {
            Some((_, stab, eta)) => stab == [0, 3, 6] && eta[1] == z3,
            None => false,
        })
        .unwrap()
}

fn int(v: i64) -> CycNum {
    CycNum::from_int(v)
}

#[test]
fn character_counts_and_degrees() {
    let dual = Arc::new(HopfAlg::dual_group_algebra(Arc::new(make_symmetric(3).unwrap())).unwrap());
    let r = ring(&dual);
    assert_eq!(r.k(), 6);
    assert!(r.degrees().iter().all(|&d| d == 1));
    for (i, c) in r.irreducibles.iter().enumerate() {
        let g = c.induced_data().unwrap().0;
        assert_eq!(c.name, alloc::format!("chi{}", i));
        for h in 0..6 {
            assert_eq!(*c.value(h), if h == g { int(1) } else { int(0) });
        }
    }

    let r = ring(&double(make_symmetric(3).unwrap()));
    assert_eq!(r.degrees(), vec![1, 1, 2, 2, 2, 2, 3, 3]);
    assert_eq!(r.degrees().iter().map(|d| d * d).sum::<u64>(), 36);

    assert_eq!(ring(&pq()).degrees(), vec![1, 1, 1, 1, 1, 5, 5]);
    assert_eq!(ring(&group_alg(make_alternating(4).unwrap())).degrees(), vec![1, 1, 1, 3]);

    let h = a4z9();
    let r = ring(&h);
    assert_eq!(r.degrees().iter().map(|d| d * d).sum::<u64>(), 108);
    assert_eq!(r.get(a4z9_chi(&r)).degree, 3);
    assert_eq!(r.find("dim3").map(|i| r.get(i).degree), Some(3));
    assert_eq!(r.find("chi0"), Some(0));
}

#[test]
fn counit_is_first_and_neutral() {
    for h in [a4z9(), double(make_cyclic(4).unwrap()), pq()] {
        let r = ring(&h);
        let eps = counit_character(&h);
        assert_eq!(r.get(0).values, eps.values);
        for c in &r.irreducibles {
            assert_eq!(char_mul(&h, &eps, c).values, c.values);
            assert_eq!(char_dual(&h, &char_dual(&h, c)).values, c.values);
        }
        assert_eq!(r.fusion_matrix(&eps).unwrap(), (0..r.k()).map(|i| (0..r.k()).map(|j| (i == j) as u64).collect::<Vec<_>>()).collect::<Vec<_>>());
    }
}

#[test]
fn group_algebra_z2() {
    let h = group_alg(make_cyclic(2).unwrap());
    let r = ring(&h);
    let sign = r.get(1);
    assert_eq!(sign.values, vec![int(1), int(-1)]);
    assert_eq!(char_mul(&h, sign, sign).values, r.get(0).values);
    assert_eq!(r.fusion_matrix(sign).unwrap(), vec![vec![0, 1], vec![1, 0]]);
    assert_eq!(r.charpoly_fusion(r.get(0)).unwrap(), vec![1, -2, 1]);
    assert_eq!(charpoly_left_mult_dual(&h, sign, DEFAULT_DUAL_CHARPOLY_DIM).unwrap(), vec![-1, 0, 1]);
}

#[test]
fn a4z9_three_dimensional_simple() {
    let h = a4z9();
    let r = ring(&h);
    let chi = r.get(a4z9_chi(&r));
    assert_eq!(invariant_dim(&h, chi).unwrap(), 0);
    assert_eq!(invariant_dim(&h, &char_mul(&h, chi, &char_dual(&h, chi))).unwrap(), 1);

    let z3 = cyc_root(3, 1).unwrap();
    let want1 = &int(1) + &z3;
    let want2 = &int(1) + &(&z3 * &z3);
    for (k, want) in [(1, &want1), (2, &want2)] {
        let closed = chi.eval(&h.integral_power_closed(3, k).unwrap());
        let generic = chi.eval(&h.sweedler_power_mk(&h.integral(), 3, k, crate::hopf::DEFAULT_MAX_TERMS).unwrap());
        assert_eq!(&closed, want);
        assert_eq!(&generic, want);
        assert!(crate::cyclo::is_rational_integer(&closed).is_none());
    }

    let m = r.module_for(a4z9_chi(&r)).unwrap().unwrap();
    assert_eq!(m.dim, 3);
    // 1⊗c permutes the three coset vectors cyclically
    let c = m.act(&h.e(1));
    let mut images: Vec<u32> = (0..3).map(|j| c.cols[j].iter().map(|e| e.0).next().unwrap()).collect();
    assert!(c.cols.iter().all(|col| col.len() == 1));
    assert!((0..3).all(|j| images[j] != j as u32));
    images.sort_unstable();
    assert_eq!(images, vec![0, 1, 2]);
    assert_eq!(m.rotation_trace(3, 1, DEFAULT_ROTATION_LIMIT).unwrap(), want1);
    assert_eq!(m.rotation_trace(1, 1, DEFAULT_ROTATION_LIMIT).unwrap(), int(0));
}

#[test]
fn trivial_induced_module_is_the_counit() {
    let h = a4z9();
    let all: Vec<u32> = (0..9).collect();
    let m = Module::induced_linear(h.clone(), 0, &all, &vec![int(1); 9]).unwrap();
    assert_eq!(m.dim, 1);
    assert_eq!(m.character_values(), counit_character(&h).values);
}

#[test]
fn invalid_stabilizer_data_is_rejected() {
    let h = a4z9();
    let g = h.g().find_cycles("(1,4,3)").unwrap();
    assert!(Module::induced_linear(h.clone(), g, &[0, 1, 2, 3, 4, 5, 6, 7, 8], &vec![int(1); 9]).is_err());
    assert!(Module::induced_linear(h.clone(), g, &[0, 3, 6], &[int(1), int(-1), int(1)]).is_err());
    assert!(Module::induced_linear(h, g, &[0, 3], &[int(1), int(1)]).is_err());
}

#[test]
fn pq_five_dimensional_simple() {
    let h = pq();
    let r = ring(&h);
    let i = r.find("dim5").unwrap();
    let chi = r.get(i);
    assert_eq!(r.order_and_multiplicity(chi).unwrap().0, 3);
    assert_eq!(r.order_and_multiplicity(chi).unwrap(), r.order_by_fusion_powers(chi).unwrap());
    let a = r.fusion_matrix(chi).unwrap();
    let n = r.degrees();
    for j in 0..r.k() {
        assert_eq!((0..r.k()).map(|i| a[i][j] * n[i]).sum::<u64>(), 5 * n[j]);
    }
    let cp = charpoly_left_mult_dual(&h, chi, DEFAULT_DUAL_CHARPOLY_DIM).unwrap();
    assert_eq!(cp.len(), 56);
    assert_eq!(cp[55], 1);

    // the Z11 generator acts diagonally by 11th roots of unity
    let m = r.module_for(i).unwrap().unwrap();
    assert_eq!(m.dim, 5);
    let z11 = h.f().generators().iter().copied().find(|&x| h.f().element_order(x) == 11).unwrap();
    let rho = m.act(&h.e(z11));
    for (j, col) in rho.cols.iter().enumerate() {
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].0, j as u32);
        assert_eq!(col[0].1.pow(11), int(1));
        assert_ne!(col[0].1, int(1));
    }
}

#[test]
fn s3_two_dimensional_simple() {
    let h = group_alg(make_symmetric(3).unwrap());
    let r = ring(&h);
    let chi = r.get(r.find("dim2").unwrap());
    assert_eq!(r.order_and_multiplicity(chi).unwrap(), (2, 1));
    assert_eq!(r.order_and_multiplicity(r.get(0)).unwrap(), (1, 1));
    let reg = Module::regular(h.clone()).unwrap();
    assert_eq!(reg.rotation_trace(2, 1, DEFAULT_ROTATION_LIMIT).unwrap(), int(4));
    assert_eq!(h.e_map_trace(2).unwrap(), int(4));
}

#[test]
fn regular_character_decomposes_by_degrees() {
    for h in [a4z9(), double(make_symmetric(3).unwrap())] {
        let r = ring(&h);
        let reg = regular_character(&h);
        assert_eq!(Module::regular(h.clone()).unwrap().character_values(), reg.values);
        for c in &r.irreducibles {
            assert_eq!(r.inner(&reg, c), int(c.degree as i64));
        }
    }
}

/// `tr(α^k ∘ ρ^{⊗m}(Λ))` by expanding every basis tensor of `V^{⊗m}`, with
/// `α(v_1 ⊗ ⋯ ⊗ v_m) = v_2 ⊗ ⋯ ⊗ v_m ⊗ v_1`.
fn brute_rotation_trace(m: &Module, deg: usize, k: usize) -> CycNum {
    let h = m.alg().clone();
    let dense: Vec<Vec<Vec<CycNum>>> = m.mats.iter().map(SparseMat::to_dense).collect();
    let mut tuples: Vec<Vec<u32>> = (0..h.f().order() as u32).map(|x| vec![h.index(0, x)]).collect();
    for _ in 1..deg {
        let mut next = Vec::new();
        for t in &tuples {
            for (a, b) in h.comult_basis(*t.last().unwrap()) {
                let mut u = t.clone();
                *u.last_mut().unwrap() = a;
                u.push(b);
                next.push(u);
            }
        }
        tuples = next;
    }
    let d = m.dim;
    let mut total = CycNum::zero();
    for t in &tuples {
        for idx in 0..d.pow(deg as u32) {
            let j: Vec<usize> = (0..deg).map(|p| idx / d.pow(p as u32) % d).collect();
            // output slot p holds input factor p+k
            let mut prod = int(1);
            for p in 0..deg {
                let q = (p + k) % deg;
                prod = &prod * &dense[t[q] as usize][j[p]][j[q]];
                if prod.is_zero() {
                    break;
                }
            }
            total = &total + &prod;
        }
    }
    total.scale(&rat(1, h.f().order() as i64))
}

#[test]
fn rotation_trace_matches_tensor_expansion() {
    let h = double(make_symmetric(3).unwrap());
    let r = ring(&h);
    for i in [3, 6] {
        let m = r.module_for(i).unwrap().unwrap();
        for (deg, k) in [(2, 1), (3, 1), (3, 2)] {
            assert_eq!(m.rotation_trace(deg as u64, k as u64, DEFAULT_ROTATION_LIMIT).unwrap(), brute_rotation_trace(&m, deg, k));
        }
    }
}

#[test]
fn module_routes_on_the_double_of_s3() {
    let h = double(make_symmetric(3).unwrap());
    let r = ring(&h);
    for i in 0..r.k() {
        let chi = r.get(i);
        let m = r.module_for(i).unwrap().expect("all simples of D(S3) are monomial");
        assert_eq!(m.dim as u64, chi.degree);
        for mm in 1..=4u64 {
            let closed = chi.eval(&h.integral_power_closed(mm, 1).unwrap());
            assert_eq!(m.rotation_trace(mm, 1, 10_000).unwrap(), closed);
            assert_eq!(m.canonical_tensor_trace(mm, 36).unwrap(), closed);
        }
        let e = m.t_order(1000, 36).unwrap();
        assert_eq!(6 % e, 0);
    }
    assert!(Module::regular(h.clone()).unwrap().rotation_trace(5, 1, DEFAULT_ROTATION_LIMIT).is_err());
}

#[test]
fn induced_double_modules() {
    let f2 = Arc::new(make_cyclic(2).unwrap());
    let d2 = Arc::new(HopfAlg::double(f2.clone()).unwrap());
    let k2 = Arc::new(HopfAlg::group_algebra(f2).unwrap());
    let r2 = ring(&k2);
    let sign = Module::induced_linear(k2.clone(), 0, &[0, 1], &r2.get(1).values).unwrap();
    let m = induced_double_module(d2.clone(), &sign).unwrap();
    assert_eq!(m.dim, 2);
    assert_eq!(m.character_values(), induced_double_character(&d2, &r2.get(1).values).unwrap());

    let f = Arc::new(make_symmetric(3).unwrap());
    let d = Arc::new(HopfAlg::double(f.clone()).unwrap());
    let kf = Arc::new(HopfAlg::group_algebra(f).unwrap());
    let rf = ring(&kf);
    let triv = rf.module_for(0).unwrap().unwrap();
    assert_eq!(induced_double_module(d.clone(), &triv).unwrap().dim, 6);
    let two = rf.module_for(rf.find("dim2").unwrap()).unwrap().unwrap();
    let m = induced_double_module(d.clone(), &two).unwrap();
    assert_eq!(m.dim, 12);
    let chi = two.character_values();
    assert_eq!(m.character_values(), induced_double_character(&d, &chi).unwrap());
    let mut bad = m.character_values();
    bad[0] = int(0);
    assert!(induced_character_check(&d, &chi, &bad).is_err());
}

#[test]
fn restriction_ranks() {
    assert_eq!(restriction_rank_check(Arc::new(make_cyclic(4).unwrap()), 1).unwrap(), (4, 4));
    assert_eq!(restriction_rank_check(Arc::new(make_symmetric(3).unwrap()), 1).unwrap(), (3, 3));
    assert_eq!(restriction_rank_check(Arc::new(make_cyclic(1).unwrap()), 1).unwrap(), (1, 1));
}

#[test]
fn characters_do_not_depend_on_the_seed() {
    let h = double(make_symmetric(3).unwrap());
    let a = simple_characters(h.clone(), 1).unwrap();
    let b = simple_characters(h, 99).unwrap();
    assert_eq!(a.irreducibles, b.irreducibles);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn products_decompose_with_the_dimension_law(i in 0usize..8, j in 0usize..8) {
        let h = double(make_symmetric(3).unwrap());
        let r = ring(&h);
        let (a, b) = (r.get(i), r.get(j));
        let prod = char_mul(&h, a, b);
        let mut deg = 0u64;
        for c in &r.irreducibles {
            let mult = crate::cyclo::as_i64(&r.inner(&prod, c)).unwrap();
            prop_assert!(mult >= 0);
            deg += mult as u64 * c.degree;
        }
        prop_assert_eq!(deg, a.degree * b.degree);
        prop_assert_eq!(invariant_dim(&h, &char_mul(&h, a, &char_dual(&h, b))).unwrap(), (i == j) as u64);
    }
}
