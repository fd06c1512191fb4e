//! Exact dense linear algebra over `Q`, `Q(ζ_N)` and `F_p`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::cyclo::{CycNum, Rational};

/// The operations Gaussian elimination and Hessenberg reduction need.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl Field for CycNum {
    fn zero() -> Self {
        CycNum::zero()
    }
    fn one() -> Self {
        CycNum::one()
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        CycNum::inv(self).expect("pivot is nonzero")
    }
}

/// Reduces `m` in place to reduced row echelon form; returns pivot columns.
pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (src, dst) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d = d.sub(&f.mul(s));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut w = m.to_vec();
    rref(&mut w).len()
}

/// Basis of `{x : m·x = 0}`.
pub fn nullspace<F: Field>(m: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let mut w = m.to_vec();
    let pivots = rref(&mut w);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![F::zero(); cols];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = F::zero().sub(&w[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// Solves the augmented system `[A | b]` (`ncols` unknowns); `None` if
/// inconsistent. Free variables are set to zero.
pub fn solve_augmented<F: Field>(m: &mut [Vec<F>], ncols: usize) -> Option<Vec<F>> {
    let pivots = rref(m);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = alloc::vec![F::zero(); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][ncols].clone();
    }
    Some(x)
}

pub fn determinant<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut w = m.to_vec();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !w[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            w.swap(p, c);
            det = F::zero().sub(&det);
        }
        det = det.mul(&w[c][c]);
        let inv = w[c][c].inv();
        for i in c + 1..n {
            if w[i][c].is_zero() {
                continue;
            }
            let f = w[i][c].mul(&inv);
            for j in c..n {
                let t = f.mul(&w[c][j]);
                w[i][j] = w[i][j].sub(&t);
            }
        }
    }
    det
}

/// Characteristic polynomial `det(xI − A)`, coefficients lowest degree
/// first, by Hessenberg reduction.
pub fn charpoly<F: Field>(a: &[Vec<F>]) -> Vec<F> {
    let n = a.len();
    let mut h = a.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = h[m][m - 1].inv();
        for j in m + 1..n {
            if h[j][m - 1].is_zero() {
                continue;
            }
            let u = h[j][m - 1].mul(&inv);
            for k in 0..n {
                if !h[m][k].is_zero() {
                    let t = u.mul(&h[m][k]);
                    h[j][k] = h[j][k].sub(&t);
                }
            }
            for row in h.iter_mut() {
                if !row[j].is_zero() {
                    let t = u.mul(&row[j]);
                    row[m] = row[m].add(&t);
                }
            }
        }
    }
    // p_m = (x − h_{m−1,m−1}) p_{m−1} − Σ_i h_{i−1,m−1} (Π_{j=i}^{m−1} h_{j,j−1}) p_{i−1}
    let mut ps: Vec<Vec<F>> = alloc::vec![alloc::vec![F::one()]];
    for m in 1..=n {
        let prev = &ps[m - 1];
        let mut p = alloc::vec![F::zero(); m + 1];
        for (d, c) in prev.iter().enumerate() {
            p[d + 1] = p[d + 1].add(c);
            p[d] = p[d].sub(&h[m - 1][m - 1].mul(c));
        }
        let mut t = F::one();
        for i in (1..m).rev() {
            t = t.mul(&h[i][i - 1]);
            if t.is_zero() {
                break;
            }
            let coef = h[i - 1][m - 1].mul(&t);
            if coef.is_zero() {
                continue;
            }
            for (d, c) in ps[i - 1].iter().enumerate() {
                p[d] = p[d].sub(&coef.mul(c));
            }
        }
        ps.push(p);
    }
    ps.pop().expect("nonempty")
}

pub fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = alloc::vec![alloc::vec![F::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] = out[i][j].add(&a[i][l].mul(&b[l][j]));
                }
            }
        }
    }
    out
}

pub fn identity<F: Field>(n: usize) -> Vec<Vec<F>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect()
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense matrix routines over `F_p` with `u64` entries.
pub mod modp {
    use super::pow_mod;
    use alloc::vec::Vec;

    pub fn inv(a: u64, p: u64) -> u64 {
        pow_mod(a, p - 2, p)
    }

    /// RREF in place; returns pivot columns.
    pub fn rref(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, piv);
            let iv = inv(m[r][c], p);
            for x in m[r].iter_mut() {
                *x = *x * iv % p;
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let f = row[c];
                    for (d, s) in row.iter_mut().zip(&pivot_row) {
                        *d = (*d + p - f * s % p) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Null space basis of an `rows × cols` matrix.
    pub fn nullspace(m: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
        let mut w = m.to_vec();
        let pivots = rref(&mut w, p);
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = alloc::vec![0u64; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - w[r][free]) % p;
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial over `F_p` (lowest degree first) by
    /// Hessenberg reduction.
    pub fn charpoly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
        let n = a.len();
        let mut h = a.to_vec();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let iv = inv(h[m][m - 1], p);
            for j in m + 1..n {
                if h[j][m - 1] == 0 {
                    continue;
                }
                let u = h[j][m - 1] * iv % p;
                for k in 0..n {
                    h[j][k] = (h[j][k] + p - u * h[m][k] % p) % p;
                }
                for row in h.iter_mut() {
                    row[m] = (row[m] + u * row[j]) % p;
                }
            }
        }
        let mut ps: Vec<Vec<u64>> = alloc::vec![alloc::vec![1]];
        for m in 1..=n {
            let mut q = alloc::vec![0u64; m + 1];
            for (d, &c) in ps[m - 1].iter().enumerate() {
                q[d + 1] = (q[d + 1] + c) % p;
                q[d] = (q[d] + p - h[m - 1][m - 1] * c % p) % p;
            }
            let mut t = 1u64;
            for i in (1..m).rev() {
                t = t * h[i][i - 1] % p;
                if t == 0 {
                    break;
                }
                let coef = h[i - 1][m - 1] * t % p;
                for (d, &c) in ps[i - 1].iter().enumerate() {
                    q[d] = (q[d] + p - coef * c % p) % p;
                }
            }
            ps.push(q);
        }
        ps.pop().expect("nonempty")
    }

    pub fn eval(poly: &[u64], x: u64, p: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{cyc_root, rat};
    use alloc::vec;

    fn q(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let dot: Rational = row.iter().zip(&ns[0]).map(|(a, b)| a * b).sum();
            assert!(Zero::is_zero(&dot));
        }
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        let m = q(&[&[2, 1, 0, 3], &[0, 1, 4, 1], &[5, 0, 1, 1], &[1, 1, 1, 0]]);
        let cp = charpoly(&m);
        for x in -3i64..=3 {
            let shifted: Vec<Vec<Rational>> = (0..4)
                .map(|i| (0..4).map(|j| if i == j { rat(x, 1) - &m[i][j] } else { -m[i][j].clone() }).collect())
                .collect();
            let val: Rational = cp.iter().rev().fold(rat(0, 1), |acc, c| acc * rat(x, 1) + c);
            assert_eq!(val, determinant(&shifted));
        }
    }

    #[test]
    fn charpoly_over_cyclotomics_and_fp() {
        let z = cyc_root(3, 1).unwrap();
        let m = vec![vec![z.clone(), CycNum::one()], vec![CycNum::zero(), z.pow(2)]];
        let cp = charpoly(&m);
        // (x − ζ)(x − ζ²) = x² + x + 1
        assert_eq!(cp, vec![CycNum::one(), CycNum::one(), CycNum::one()]);
        let a = vec![vec![1, 2, 0], vec![3, 4, 5], vec![0, 1, 6]];
        let cp = modp::charpoly(&a, 101);
        let det = (1 * (4 * 6 - 5) - 2 * (3 * 6)) as i64;
        assert_eq!(cp[0], ((-det).rem_euclid(101)) as u64);
        assert_eq!(cp[3], 1);
    }
}
