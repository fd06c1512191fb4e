//! Cyclotomic polynomials and the polynomial helpers behind `CycNum`.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use spin::RwLock;

use super::{rat_int, Rational};

pub(super) struct CycData {
    pub phi: usize,
    /// Coefficients of `Φ_N`, lowest degree first; monic of degree `phi`.
    pub poly: Vec<i64>,
}

static CACHE: RwLock<BTreeMap<u32, Arc<CycData>>> = RwLock::new(BTreeMap::new());

pub(super) fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `Φ_N`, computed once per conductor. Readers share the cached `Arc`; a
/// racing first computation is harmless because the result is identical,
/// and only the first insert is kept.
pub(super) fn cyclotomic(n: u32) -> Arc<CycData> {
    if let Some(d) = CACHE.read().get(&n) {
        return d.clone();
    }
    let poly = compute(n);
    let data = Arc::new(CycData { phi: poly.len() - 1, poly });
    CACHE.write().entry(n).or_insert(data).clone()
}

fn compute(n: u32) -> Vec<i64> {
    // x^n − 1 divided by Φ_d for every proper divisor d
    let mut num = alloc::vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic(d);
            num = exact_div_monic(&num, &div.poly);
        }
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem: Vec<i128> = num.iter().map(|&x| x as i128).collect();
    let qlen = num.len() - dn;
    let mut q = alloc::vec![0i128; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj as i128;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q.into_iter().map(|x| i64::try_from(x).expect("cyclotomic coefficient overflow")).collect()
}

/// Reduces `v` modulo the monic integer polynomial `m`, leaving degree < deg m.
pub(super) fn reduce_in_place(v: &mut Vec<Rational>, m: &[i64]) {
    let d = m.len() - 1;
    while v.len() > d {
        let top = v.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        let shift = v.len() - d;
        for (j, &mj) in m[..d].iter().enumerate() {
            if mj != 0 {
                v[shift + j] -= &top * rat_int(mj);
            }
        }
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = degree(b).expect("nonzero divisor");
    let lead = b[db].clone();
    let mut r: Vec<Rational> = a.to_vec();
    let mut q = alloc::vec![Rational::zero(); a.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        let shift = dr - db;
        for (j, bj) in b[..=db].iter().enumerate() {
            if !bj.is_zero() {
                r[shift + j] -= &c * bj;
            }
        }
        q[shift] += c;
    }
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = alloc::vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = alloc::vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// `s` with `s·a ≡ 1 (mod m)`, if `gcd(a, m) = 1`.
pub(super) fn invert_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let mut r0: Vec<Rational> = m.to_vec();
    let mut r1: Vec<Rational> = a.to_vec();
    trim(&mut r1);
    let mut s0 = alloc::vec![Rational::zero()];
    let mut s1 = alloc::vec![Rational::one()];
    while degree(&r1).is_some() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd; it must be a nonzero constant
    match degree(&r0) {
        Some(0) => {
            let c = r0[0].recip();
            Some(s0.into_iter().map(|x| x * &c).collect())
        }
        _ => None,
    }
}
