//! Permutations of `{1,…,n}`, the lexicographic index maps, the sequence
//! monoid with its normalization, and the permutations `P(n₁,…,n_k)` that
//! define Sweedler powers.
//!
//! Everything here is 1-based: `Perm::image(j)` takes and returns positions
//! in `1..=n`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Result};

/// Largest degree `perm_product` will produce.
pub const MAX_PERM_DEGREE: usize = 1_000_000;

/// A permutation `σ ∈ S_n` stored by its images `σ(1),…,σ(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    /// Builds a permutation from 1-based images, checking bijectivity.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(domain!("permutation degree must be at least 1"));
        }
        let mut seen = alloc::vec![false; n];
        for &v in &images {
            let v = v as usize;
            if v == 0 || v > n || seen[v - 1] {
                return Err(domain!("images {:?} do not form a permutation of 1..={}", images, n));
            }
            seen[v - 1] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        Perm { images: (1..=n as u32).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(j)` for `1 ≤ j ≤ n`.
    pub fn image(&self, j: usize) -> usize {
        self.images[j - 1] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = alloc::vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Perm { images: inv }
    }

    /// Ordinary composition `(self ∘ other)(j) = self(other(j))` inside `S_n`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(domain!("cannot compose degrees {} and {}", self.degree(), other.degree()));
        }
        Ok(Perm { images: other.images.iter().map(|&j| self.images[j as usize - 1]).collect() })
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// The strictly monotone map `I_{m₁}×…×I_{m_k} → I_{m₁⋯m_k}` for the
/// lexicographic order: `(i₁−1)n₂ + … + (i_{k−1}−1)n_k + i_k` where
/// `n_r = m_r⋯m_k`.
pub fn lex_rank(dims: &[usize], index: &[usize]) -> Result<usize> {
    if dims.len() != index.len() {
        return Err(domain!("index length {} does not match {} dimensions", index.len(), dims.len()));
    }
    let mut r = 0usize;
    for (&m, &i) in dims.iter().zip(index) {
        if m == 0 || i == 0 || i > m {
            return Err(domain!("index component {} out of range 1..={}", i, m));
        }
        r = r * m + (i - 1);
    }
    Ok(r + 1)
}

/// Inverse of [`lex_rank`].
pub fn lex_unrank(dims: &[usize], rank: usize) -> Result<Vec<usize>> {
    let total: usize = dims.iter().product();
    if rank == 0 || rank > total {
        return Err(domain!("rank {} out of range 1..={}", rank, total));
    }
    let mut r = rank - 1;
    let mut out = alloc::vec![0; dims.len()];
    for (slot, &m) in out.iter_mut().zip(dims).rev() {
        *slot = r % m + 1;
        r /= m;
    }
    Ok(out)
}

/// The product `σ·τ ∈ S_{mn}` of `σ ∈ S_n` and `τ ∈ S_m`, defined by
/// `σ·τ((i−1)n + j) = (σ(j)−1)m + τ(i)` for `i ≤ m`, `j ≤ n`.
pub fn perm_product(sigma: &Perm, tau: &Perm) -> Result<Perm> {
    let n = sigma.degree();
    let m = tau.degree();
    let deg = n.checked_mul(m).filter(|&d| d <= MAX_PERM_DEGREE).ok_or_else(|| {
        domain!("product degree {}·{} exceeds the cap {}", n, m, MAX_PERM_DEGREE)
    })?;
    let mut images = alloc::vec![0u32; deg];
    for i in 1..=m {
        for j in 1..=n {
            images[(i - 1) * n + j - 1] = ((sigma.image(j) - 1) * m + tau.image(i)) as u32;
        }
    }
    Ok(Perm { images })
}

/// A finite sequence of positive integers. The empty sequence is the unit of
/// the sequence monoid; `[1]` is not.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IndexSeq(Vec<u64>);

impl IndexSeq {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(domain!("sequence entries must be positive: {:?}", entries));
        }
        Ok(IndexSeq(entries))
    }

    pub fn empty() -> Self {
        IndexSeq(Vec::new())
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn is_normalized(&self) -> bool {
        self.0.windows(2).all(|w| w[0] % w[1] == 0)
    }
}

/// `[n₁,…,n_k]·[m₁,…,m_l] = [m₁n₁,…,m₁n_k, m₁,…,m_l]`.
pub fn seq_product(a: &IndexSeq, b: &IndexSeq) -> IndexSeq {
    let Some(&m1) = b.0.first() else {
        return a.clone();
    };
    let mut out: Vec<u64> = a.0.iter().map(|&n| n * m1).collect();
    out.extend_from_slice(&b.0);
    IndexSeq(out)
}

/// `n′₁ = n₁`, `n′_{i+1} = gcd(n_{i+1}, n′_i)`.
pub fn normalize(a: &IndexSeq) -> IndexSeq {
    let mut out = Vec::with_capacity(a.0.len());
    for &n in &a.0 {
        let next = match out.last() {
            None => n,
            Some(&prev) => num_integer::gcd(n, prev),
        };
        out.push(next);
    }
    IndexSeq(out)
}

/// `P(n₁,…,n_k) ∈ S_{n₁}`; the empty sequence gives the identity of `S₁`.
///
/// With `(n′)` the normalization, `m_i = n′_i/n′_{i+1}` (`m_k = n′_k`),
/// `l_i = n_{i+1}/n′_{i+1}` (`l_k = 1`) and `ρ_i(j) = l_i(j−1)+1 (mod m_i)`,
/// the permutation is determined by
/// `P(φ_{m_k,…,m_1}(i_k,…,i_1)) = φ_{m_1,…,m_k}(ρ_1(i_1),…,ρ_k(i_k))`.
pub fn sweedler_perm(a: &IndexSeq) -> Result<Perm> {
    let n = &a.0;
    if n.is_empty() {
        return Ok(Perm::identity(1));
    }
    let k = n.len();
    let np = normalize(a).0;
    let n1 = n[0] as usize;
    if n1 > MAX_PERM_DEGREE {
        return Err(domain!("P({:?}) would have degree {} beyond the cap", n, n1));
    }
    let m: Vec<usize> =
        (0..k).map(|i| if i + 1 < k { (np[i] / np[i + 1]) as usize } else { np[k - 1] as usize }).collect();
    let l: Vec<u64> = (0..k).map(|i| if i + 1 < k { n[i + 1] / np[i + 1] } else { 1 }).collect();
    let rev_dims: Vec<usize> = m.iter().rev().copied().collect();
    let mut images = alloc::vec![0u32; n1];
    let mut src = alloc::vec![0usize; k];
    let mut dst = alloc::vec![0usize; k];
    for rank in 1..=n1 {
        // src holds (i_k, …, i_1)
        src.copy_from_slice(&lex_unrank(&rev_dims, rank)?);
        for i in 0..k {
            let j = src[k - 1 - i] as u64;
            dst[i] = ((l[i] * (j - 1)) % m[i] as u64) as usize + 1;
        }
        images[rank - 1] = lex_rank(&m, &dst)? as u32;
    }
    Perm::new(images)
}

/// Convenience for `P(m,k)`.
pub fn sweedler_perm_mk(m: u64, k: u64) -> Result<Perm> {
    sweedler_perm(&IndexSeq::new(alloc::vec![m, k])?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn all_perms(n: usize) -> Vec<Perm> {
        fn rec(cur: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
            let n = used.len();
            if cur.len() == n {
                out.push(Perm::new(cur.clone()).unwrap());
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v as u32 + 1);
                    rec(cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    #[test]
    fn lex_rank_examples() {
        assert_eq!(lex_rank(&[2, 3], &[1, 1]).unwrap(), 1);
        assert_eq!(lex_rank(&[2, 3], &[2, 1]).unwrap(), 4);
        assert_eq!(lex_rank(&[2, 3, 4], &[2, 3, 4]).unwrap(), 24);
        assert!(lex_rank(&[2, 3], &[3, 1]).is_err());
        assert!(lex_rank(&[2, 3], &[1]).is_err());
    }

    #[test]
    fn lex_rank_is_monotone_bijection() {
        for dims in [vec![2, 3, 4], vec![4, 4, 4, 4], vec![7], vec![1, 5, 1, 3]] {
            let total: usize = dims.iter().product();
            let mut prev = 0;
            // walk tuples in lexicographic order by odometer
            let mut idx = vec![1; dims.len()];
            for _ in 0..total {
                let r = lex_rank(&dims, &idx).unwrap();
                assert_eq!(r, prev + 1);
                assert_eq!(lex_unrank(&dims, r).unwrap(), idx);
                prev = r;
                for p in (0..dims.len()).rev() {
                    if idx[p] < dims[p] {
                        idx[p] += 1;
                        break;
                    }
                    idx[p] = 1;
                }
            }
            assert_eq!(prev, total);
        }
    }

    #[test]
    fn perm_product_examples() {
        let id1 = Perm::identity(1);
        let tau = Perm::new(vec![3, 1, 2]).unwrap();
        assert_eq!(perm_product(&id1, &tau).unwrap(), tau);
        assert_eq!(perm_product(&tau, &id1).unwrap(), tau);
        let id2 = Perm::identity(2);
        assert_eq!(perm_product(&id2, &id2).unwrap().images(), &[1, 3, 2, 4]);
    }

    #[test]
    fn perm_product_associative_up_to_degree_3() {
        let mut perms = Vec::new();
        for n in 1..=3 {
            perms.extend(all_perms(n));
        }
        for a in &perms {
            for b in &perms {
                let ab = perm_product(a, b).unwrap();
                for c in &perms {
                    let lhs = perm_product(&ab, c).unwrap();
                    let rhs = perm_product(a, &perm_product(b, c).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn seq_product_examples() {
        let s = |v: Vec<u64>| IndexSeq::new(v).unwrap();
        assert_eq!(seq_product(&IndexSeq::empty(), &s(vec![3])), s(vec![3]));
        assert_eq!(seq_product(&s(vec![3]), &IndexSeq::empty()), s(vec![3]));
        assert_eq!(seq_product(&s(vec![2]), &s(vec![3])), s(vec![6, 3]));
        assert_eq!(seq_product(&s(vec![2, 1]), &s(vec![3, 3])), s(vec![6, 3, 3, 3]));
        assert_ne!(seq_product(&s(vec![1]), &s(vec![3])), s(vec![3]));
    }

    #[test]
    fn normalize_examples() {
        let s = |v: Vec<u64>| IndexSeq::new(v).unwrap();
        assert_eq!(normalize(&s(vec![6, 4])), s(vec![6, 2]));
        assert_eq!(normalize(&s(vec![8, 4, 2])), s(vec![8, 4, 2]));
        assert!(normalize(&s(vec![9, 6, 4, 7])).is_normalized());
    }

    #[test]
    fn sweedler_perm_examples() {
        let s = |v: Vec<u64>| IndexSeq::new(v).unwrap();
        assert_eq!(sweedler_perm(&s(vec![5, 2])).unwrap().images(), &[1, 3, 5, 2, 4]);
        assert_eq!(sweedler_perm(&IndexSeq::empty()).unwrap(), Perm::identity(1));
        for n in 1..=12 {
            assert_eq!(sweedler_perm(&s(vec![n])).unwrap(), Perm::identity(n as usize));
            assert_eq!(sweedler_perm(&s(vec![n, 1])).unwrap(), Perm::identity(n as usize));
        }
        assert_eq!(sweedler_perm(&s(vec![4, 2])).unwrap().images(), &[1, 3, 2, 4]);
    }

    #[test]
    fn sweedler_perm_coprime_is_multiplication_by_k() {
        for m in 1..=12u64 {
            for k in 1..=2 * m {
                if num_integer::gcd(m, k) != 1 {
                    continue;
                }
                let p = sweedler_perm_mk(m, k).unwrap();
                for j in 0..m {
                    assert_eq!(p.image(j as usize + 1) as u64, 1 + (k * j) % m, "m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn sweedler_perm_is_homomorphism_exhaustive() {
        let mut seqs = vec![IndexSeq::empty()];
        let mut frontier: Vec<Vec<u64>> = vec![vec![]];
        for _ in 0..3 {
            frontier = frontier
                .iter()
                .flat_map(|p| (1..=6u64).map(move |v| [p.as_slice(), &[v]].concat()))
                .collect();
            seqs.extend(frontier.iter().map(|v| IndexSeq::new(v.clone()).unwrap()));
        }
        assert_eq!(seqs.len(), 1 + 6 + 36 + 216);
        let perms: Vec<Perm> = seqs.iter().map(|s| sweedler_perm(s).unwrap()).collect();
        for (a, pa) in seqs.iter().zip(&perms) {
            for (b, pb) in seqs.iter().zip(&perms) {
                let ab = seq_product(a, b);
                // normalization is a homomorphism
                assert_eq!(normalize(&ab), normalize(&seq_product(&normalize(a), &normalize(b))));
                assert_eq!(sweedler_perm(&ab).unwrap(), perm_product(pa, pb).unwrap(), "{a:?}·{b:?}");
            }
        }
    }
}
