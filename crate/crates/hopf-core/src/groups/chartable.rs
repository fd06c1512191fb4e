//! Exact character tables by the Burnside–Dixon method: simultaneous
//! eigenvectors of the class matrices over `F_p`, lifted to `Q(ζ_e)`.

use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Group;
use crate::cyclo::{cyc_root, CycNum};
use crate::error::{invariant, resource, Result};
use crate::linalg::{is_prime, modp, pow_mod};

pub const DEFAULT_CHAR_TABLE_CAP: usize = 2000;

/// Irreducible characters of a group, one row per character and one column
/// per conjugacy class. The trivial character is row 0; the remaining rows
/// are sorted by degree, then by descending lexicographic order of values.
#[derive(Clone, Debug)]
pub struct CharTable {
    pub classes: Vec<Vec<u32>>,
    pub class_of: Vec<u32>,
    pub rows: Vec<Vec<CycNum>>,
    pub prime: u64,
}

impl CharTable {
    pub fn num_irreducibles(&self) -> usize {
        self.rows.len()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// `χ_row(g)`.
    pub fn value(&self, row: usize, g: u32) -> &CycNum {
        &self.rows[row][self.class_of[g as usize] as usize]
    }

    pub fn degree(&self, row: usize) -> u64 {
        crate::cyclo::as_i64(&self.rows[row][0]).expect("degrees are integers") as u64
    }
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).expect("F_p^× is cyclic")
}

/// A subspace of `F_p^r` kept as RREF rows.
struct Space {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Space {
    fn new(mut rows: Vec<Vec<u64>>, p: u64) -> Space {
        let pivots = modp::rref(&mut rows, p);
        rows.truncate(pivots.len());
        Space { rows, pivots }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

fn mat_vec(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter().map(|row| row.iter().zip(v).fold(0, |acc, (a, b)| (acc + a * b) % p)).collect()
}

/// Splits `space` into eigenspaces of `m` (which must leave it invariant).
fn split(space: &Space, m: &[Vec<u64>], p: u64) -> Result<Vec<Space>> {
    let d = space.dim();
    // restricted matrix: column i holds the coordinates of m·b_i
    let mut a = alloc::vec![alloc::vec![0u64; d]; d];
    for (i, b) in space.rows.iter().enumerate() {
        let img = mat_vec(m, b, p);
        for (j, &pc) in space.pivots.iter().enumerate() {
            a[j][i] = img[pc];
        }
    }
    let cp = modp::charpoly(&a, p);
    let mut parts = Vec::new();
    let mut total = 0;
    for lambda in 0..p {
        if modp::eval(&cp, lambda, p) != 0 {
            continue;
        }
        let mut shifted = a.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = (row[i] + p - lambda) % p;
        }
        let ns = modp::nullspace(&shifted, d, p);
        total += ns.len();
        let vecs: Vec<Vec<u64>> = ns
            .iter()
            .map(|c| {
                let mut v = alloc::vec![0u64; space.rows[0].len()];
                for (ci, b) in c.iter().zip(&space.rows) {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = (*x + ci * y) % p;
                    }
                }
                v
            })
            .collect();
        parts.push(Space::new(vecs, p));
        if total == d {
            break;
        }
    }
    if total != d {
        return Err(invariant!("class matrix is not diagonalizable modulo {}", p));
    }
    Ok(parts)
}

/// The character table of `g`; `cap` bounds the order and `seed` drives the
/// random class-matrix combinations (the result does not depend on it).
pub fn character_table(g: &Group, cap: usize, seed: u64) -> Result<CharTable> {
    let n = g.order();
    if n > cap {
        return Err(resource!("character table of a group of order {} exceeds the cap {}", n, cap));
    }
    let classes = g.conjugacy_classes();
    let r = classes.len();
    let mut class_of = alloc::vec![0u32; n];
    for (i, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x as usize] = i as u32;
        }
    }
    let e = g.exponent();
    let order = n as u64;
    let mut p = e + 1;
    while !(is_prime(p) && p * p > 4 * order) {
        p += e;
    }
    // a[i][j][k] = #{(x, y) ∈ C_i × C_j : xy = z_k}
    let mut a = alloc::vec![alloc::vec![alloc::vec![0u64; r]; r]; r];
    for (k, ck) in classes.iter().enumerate() {
        let z = ck[0];
        for x in 0..n as u32 {
            let y = g.mul(g.inv(x), z);
            a[class_of[x as usize] as usize][class_of[y as usize] as usize][k] += 1;
        }
    }
    // (M_i)_{jk} = a_{ijk}
    let mats: Vec<Vec<Vec<u64>>> = a.iter().map(|ai| ai.iter().map(|row| row.iter().map(|&v| v % p).collect()).collect()).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as u64).collect()).collect();
    let mut pending = alloc::vec![Space::new(identity, p)];
    let mut done: Vec<Space> = Vec::new();
    let mut round = 0;
    while let Some(sp) = pending.pop() {
        if sp.dim() == 1 {
            done.push(sp);
            continue;
        }
        round += 1;
        let m: Vec<Vec<u64>> = if round <= 4 * r + 8 {
            let coef: Vec<u64> = (0..r).map(|_| rng.next_u64() % p).collect();
            (0..r)
                .map(|j| (0..r).map(|k| (0..r).fold(0, |acc, i| (acc + coef[i] * mats[i][j][k]) % p)).collect())
                .collect()
        } else {
            mats[(round - 4 * r - 9) % r].clone()
        };
        if round > 6 * r + 16 {
            return Err(invariant!("class matrices failed to separate characters"));
        }
        let mut parts = split(&sp, &m, p)?;
        pending.append(&mut parts);
    }
    if done.len() != r {
        return Err(invariant!("found {} characters for {} classes", done.len(), r));
    }

    let zp = pow_mod(primitive_root(p), (p - 1) / e, p);
    let inv_e = modp::inv(e % p, p);
    let zinv = modp::inv(zp, p);
    let zinv_pow: Vec<u64> = (0..e).scan(1u64, |acc, _| {
        let cur = *acc;
        *acc = *acc * zinv % p;
        Some(cur)
    }).collect();
    // inverse class j* and power maps
    let inv_class: Vec<usize> = classes.iter().map(|c| class_of[g.inv(c[0]) as usize] as usize).collect();
    let power_class: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            let mut out = Vec::with_capacity(e as usize);
            let mut x = 0u32;
            for _ in 0..e {
                out.push(class_of[x as usize] as usize);
                x = g.mul(x, c[0]);
            }
            out
        })
        .collect();
    let roots: Vec<CycNum> = (0..e).map(|k| cyc_root(e as u32, k as i64)).collect::<Result<_>>()?;

    let mut rows: Vec<Vec<CycNum>> = Vec::with_capacity(r);
    for sp in &done {
        let v = &sp.rows[0];
        if v[0] == 0 {
            return Err(invariant!("central character with vanishing identity entry"));
        }
        let s = modp::inv(v[0], p);
        let w: Vec<u64> = v.iter().map(|x| x * s % p).collect();
        let mut sum = 0u64;
        for j in 0..r {
            let term = w[j] * w[inv_class[j]] % p * modp::inv(classes[j].len() as u64 % p, p) % p;
            sum = (sum + term) % p;
        }
        let d2 = order % p * modp::inv(sum, p) % p;
        let deg = (1..=num_integer::Roots::sqrt(&order))
            .find(|&d| d * d % p == d2)
            .ok_or_else(|| invariant!("no degree squares to {} modulo {}", d2, p))?;
        let theta: Vec<u64> = (0..r).map(|j| w[j] * (deg % p) % p * modp::inv(classes[j].len() as u64 % p, p) % p).collect();
        let mut row = Vec::with_capacity(r);
        for j in 0..r {
            let mut val = CycNum::zero();
            for k in 0..e {
                let mut m = 0u64;
                for l in 0..e {
                    m = (m + theta[power_class[j][l as usize]] * zinv_pow[((k * l) % e) as usize]) % p;
                }
                m = m * inv_e % p;
                if m > deg {
                    return Err(invariant!("eigenvalue multiplicity {} exceeds the degree {}", m, deg));
                }
                if m > 0 {
                    val = &val + &roots[k as usize].scale(&crate::cyclo::rat(m as i64, 1));
                }
            }
            row.push(val);
        }
        rows.push(row);
    }

    sort_rows(&mut rows);
    let table = CharTable { classes, class_of, rows, prime: p };
    verify(&table, order)?;
    Ok(table)
}

/// Trivial row first, then ascending degree, then descending lexicographic
/// order of the value vectors.
pub(crate) fn sort_rows(rows: &mut [Vec<CycNum>]) {
    rows.sort_by(|a, b| {
        let ta = a.iter().all(CycNum::is_one);
        let tb = b.iter().all(CycNum::is_one);
        tb.cmp(&ta).then_with(|| a[0].cmp_lex(&b[0])).then_with(|| {
            for (x, y) in a.iter().zip(b) {
                let c = y.cmp_lex(x);
                if c.is_ne() {
                    return c;
                }
            }
            core::cmp::Ordering::Equal
        })
    });
}

fn verify(t: &CharTable, order: u64) -> Result<()> {
    let r = t.num_classes();
    let sizes: Vec<CycNum> = t.classes.iter().map(|c| CycNum::from_int(c.len() as i64)).collect();
    let conj: Vec<Vec<CycNum>> = t.rows.iter().map(|row| row.iter().map(CycNum::conj).collect()).collect();
    let n = CycNum::from_int(order as i64);
    for i in 0..r {
        for j in i..r {
            let mut s = CycNum::zero();
            for k in 0..r {
                s = &s + &(&sizes[k] * &(&t.rows[i][k] * &conj[j][k]));
            }
            let want = if i == j { n.clone() } else { CycNum::zero() };
            if s != want {
                return Err(invariant!("row orthogonality fails for characters {} and {}", i, j));
            }
        }
    }
    for k in 0..r {
        for l in k..r {
            let mut s = CycNum::zero();
            for i in 0..r {
                s = &s + &(&t.rows[i][k] * &conj[i][l]);
            }
            let want = if k == l { CycNum::from_int((order / t.classes[k].len() as u64) as i64) } else { CycNum::zero() };
            if s != want {
                return Err(invariant!("column orthogonality fails for classes {} and {}", k, l));
            }
        }
    }
    Ok(())
}
