//! Floating point root finding for small integer polynomials, used as an
//! independent numerical view of the peripheral spectrum.

use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq)]
struct C(f64, f64);

impl C {
    fn add(self, o: C) -> C {
        C(self.0 + o.0, self.1 + o.1)
    }
    fn sub(self, o: C) -> C {
        C(self.0 - o.0, self.1 - o.1)
    }
    fn mul(self, o: C) -> C {
        C(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn div(self, o: C) -> C {
        let d = o.0 * o.0 + o.1 * o.1;
        C((self.0 * o.0 + self.1 * o.1) / d, (self.1 * o.0 - self.0 * o.1) / d)
    }
    fn abs(self) -> f64 {
        libm::hypot(self.0, self.1)
    }
}

fn eval(p: &[f64], x: C) -> (C, C) {
    let mut v = C(0.0, 0.0);
    let mut dv = C(0.0, 0.0);
    for &c in p.iter().rev() {
        dv = dv.mul(x).add(v);
        v = v.mul(x).add(C(c, 0.0));
    }
    (v, dv)
}

/// Squarefree part `p / gcd(p, p')` computed over the rationals, then
/// rescaled to integer coefficients. Coefficients are lowest degree first.
pub fn squarefree_part(p: &[i64]) -> Vec<i64> {
    use crate::cyclo::{rat, Rational};
    use num_traits::{ToPrimitive, Zero};
    fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
        while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }
    fn rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let db = b.len() - 1;
        if a.len() <= db {
            return (alloc::vec![Rational::zero()], trim(a.to_vec()));
        }
        let mut r = a.to_vec();
        let mut q = alloc::vec![Rational::zero(); a.len() - db];
        for shift in (0..a.len() - db).rev() {
            let f = &r[shift + db] / b.last().unwrap();
            for (i, c) in b.iter().enumerate() {
                r[shift + i] -= &f * c;
            }
            q[shift] = f;
        }
        r.truncate(db.max(1));
        (q, trim(r))
    }
    let a: Vec<Rational> = p.iter().map(|&c| rat(c, 1)).collect();
    let da: Vec<Rational> = (1..p.len()).map(|i| rat(p[i] * i as i64, 1)).collect();
    let mut g = a.clone();
    let mut h = trim(da);
    while !(h.len() == 1 && h[0].is_zero()) {
        let (_, r) = rem(&g, &h);
        g = h;
        h = r;
    }
    let (q, _) = rem(&a, &g);
    let q = trim(q);
    let lcm = q.iter().fold(num_bigint::BigInt::from(1), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
    let ints: Vec<num_bigint::BigInt> = q.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut gcd = ints.iter().fold(num_bigint::BigInt::from(0), |acc, c| num_integer::Integer::gcd(&acc, c));
    if ints.last().is_some_and(|c| c < &num_bigint::BigInt::from(0)) {
        gcd = -gcd;
    }
    ints.iter().map(|c| (c / &gcd).to_i64().expect("small coefficients")).collect()
}

/// Approximate complex roots of an integer polynomial (lowest degree first)
/// by the Aberth-Ehrlich iteration.
pub fn poly_roots(p: &[i64]) -> Vec<(f64, f64)> {
    let n = p.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = p[n] as f64;
    let q: Vec<f64> = p.iter().map(|&c| c as f64 / lead).collect();
    let radius = 1.0 + q[..n].iter().fold(0.0f64, |m, c| m.max(libm::fabs(*c)));
    let mut z: Vec<C> = (0..n)
        .map(|k| {
            let t = 2.0 * core::f64::consts::PI * (k as f64 + 0.4) / n as f64;
            C(radius * 0.5 * libm::cos(t), radius * 0.5 * libm::sin(t))
        })
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, dv) = eval(&q, z[i]);
            if v.abs() == 0.0 {
                continue;
            }
            let ratio = v.div(dv);
            let mut s = C(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    s = s.add(C(1.0, 0.0).div(z[i].sub(z[j])));
                }
            }
            let w = ratio.div(C(1.0, 0.0).sub(ratio.mul(s)));
            z[i] = z[i].sub(w);
            moved = moved.max(w.abs());
        }
        if moved < 1e-14 {
            break;
        }
    }
    z.into_iter().map(|c| (c.0, c.1)).collect()
}

/// Number of distinct eigenvalues of modulus `radius` among the roots of
/// the squarefree part of `p`.
pub fn peripheral_eigenvalue_count(p: &[i64], radius: f64) -> usize {
    let sf = squarefree_part(p);
    poly_roots(&sf)
        .into_iter()
        .filter(|&(re, im)| libm::fabs(libm::hypot(re, im) - radius) < 1e-6 * radius.max(1.0))
        .count()
}

/// Peripheral roots of `p` located numerically and then confirmed exactly:
/// each root `μ` found with `|μ| ≈ radius` is matched to `radius·ζ_N^j` with
/// `N ≤ max_order`, and `p(radius·ζ_N^j) = 0` is checked in cyclotomic
/// arithmetic. Returns the number of distinct confirmed roots.
pub fn certified_peripheral_count(p: &[i64], radius: u64, max_order: u32) -> crate::Result<u64> {
    use crate::cyclo::{cyc_root, CycNum};
    let sf = squarefree_part(p);
    let r = radius as f64;
    let mut found: Vec<(u32, u32)> = Vec::new();
    for (re, im) in poly_roots(&sf) {
        if libm::fabs(libm::hypot(re, im) - r) >= 1e-6 * r.max(1.0) {
            continue;
        }
        let turn = libm::atan2(im, re) / (2.0 * core::f64::consts::PI);
        let turn = if turn < 0.0 { turn + 1.0 } else { turn };
        let hit = (1..=max_order).find_map(|n| {
            let j = libm::round(turn * n as f64);
            (libm::fabs(turn * n as f64 - j) < 1e-6).then_some(((j as u32) % n, n))
        });
        let (j, n) = hit.ok_or_else(|| {
            crate::error::invariant!("peripheral root {}+{}i is not a root of unity of order ≤ {} times {}", re, im, max_order, radius)
        })?;
        let g = num_integer::gcd(j, n).max(1);
        let (j, n) = (j / g, n / g);
        let mu = &CycNum::from_int(radius as i64) * &cyc_root(n, j as i64)?;
        let mut v = CycNum::zero();
        for &c in sf.iter().rev() {
            v = &(&v * &mu) + &CycNum::from_int(c);
        }
        if !v.is_zero() {
            return Err(crate::error::invariant!("{}·ζ_{}^{} is not an exact root", radius, n, j));
        }
        if !found.contains(&(j, n)) {
            found.push((j, n));
        }
    }
    Ok(found.len() as u64)
}
