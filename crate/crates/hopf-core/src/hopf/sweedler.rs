//! Sweedler powers `h^σ = h_(σ(1)) ⋯ h_(σ(n))`, generically and in closed
//! form for the integral of a smash product.
//!
//! The generic route walks the iterated coproduct depth-first, splitting the
//! last tensor factor each time, and multiplies every complete tuple in the
//! order prescribed by `σ`. Because the structure constants are 0/1 the
//! tuple products are tallied as integer counts per basis result.

use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{AlgElem, HopfAlg, Provenance};
use crate::cyclo::{rat, CycNum};
use crate::error::{domain, resource, Result};
use crate::permcalc::{sweedler_perm, sweedler_perm_mk, IndexSeq, Perm};

/// Default bound on the number of iterated-coproduct tuples.
pub const DEFAULT_MAX_TERMS: u64 = 100_000_000;

/// The counts `z_{m,k}(g,y) = #{x ∈ F : x^m = y, ∏_j x^{−⟨jl⟩}.g = 1}`
/// with `kl ≡ 1 (mod m)`, stored densely by `g·|F| + y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZCount {
    pub m: u64,
    pub k: u64,
    nf: usize,
    values: Vec<u32>,
}

impl ZCount {
    pub fn get(&self, g: u32, y: u32) -> u32 {
        self.values[g as usize * self.nf + y as usize]
    }

    /// Nonzero entries as `((g, y), count)`.
    pub fn nonzero(&self) -> impl Iterator<Item = ((u32, u32), u32)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(move |(i, &v)| (((i / self.nf) as u32, (i % self.nf) as u32), v))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

fn mod_inverse(k: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    (1..m).find(|&l| (k % m) * l % m == 1).expect("k is a unit mod m")
}

impl HopfAlg {
    /// `h^σ` by the generic route; fails once the number of coproduct
    /// tuples `|supp h| · |G|^{n−1}` would exceed `max_terms`.
    pub fn sweedler_power(&self, h: &AlgElem, sigma: &Perm, max_terms: u64) -> Result<AlgElem> {
        let n = sigma.degree();
        let ng = self.g().order() as u64;
        let tuples = (h.len() as u64).saturating_mul(ng.saturating_pow(n as u32 - 1));
        if tuples > max_terms {
            return Err(resource!(
                "Sweedler power of degree {} needs {} coproduct terms, above the limit {}",
                n,
                tuples,
                max_terms
            ));
        }
        let order: Vec<usize> = (1..=n).map(|i| sigma.image(i) - 1).collect();
        let mut out = AlgElem::zero(self.dim());
        let mut tuple = alloc::vec![0u32; n];
        for (&i, c) in h.terms() {
            let mut counts: HashMap<u32, u64> = HashMap::new();
            tuple[0] = i;
            self.walk_coproduct(&mut tuple, 1, &order, &mut counts);
            let mut keys: Vec<_> = counts.into_iter().collect();
            keys.sort_unstable();
            for (k, cnt) in keys {
                out.add_term(k, &c.scale(&rat(cnt as i64, 1)));
            }
        }
        Ok(out)
    }

    /// `tuple[..len]` holds a term of `Δ^{len−1}`; extends it by splitting the
    /// last factor until it has `order.len()` entries.
    fn walk_coproduct(&self, tuple: &mut [u32], len: usize, order: &[usize], counts: &mut HashMap<u32, u64>) {
        let n = order.len();
        if len == n {
            let mut acc = Some(tuple[order[0]]);
            for &p in &order[1..] {
                acc = acc.and_then(|a| self.mul_basis(a, tuple[p]));
                if acc.is_none() {
                    return;
                }
            }
            if let Some(k) = acc {
                *counts.entry(k).or_insert(0) += 1;
            }
            return;
        }
        let last = tuple[len - 1];
        for (a, b) in self.comult_basis(last) {
            tuple[len - 1] = a;
            tuple[len] = b;
            self.walk_coproduct(tuple, len + 1, order, counts);
        }
        tuple[len - 1] = last;
    }

    pub fn sweedler_power_seq(&self, h: &AlgElem, a: &IndexSeq, max_terms: u64) -> Result<AlgElem> {
        self.sweedler_power(h, &sweedler_perm(a)?, max_terms)
    }

    /// `h^{[m,k]}` for coprime `m, k`.
    pub fn sweedler_power_mk(&self, h: &AlgElem, m: u64, k: u64, max_terms: u64) -> Result<AlgElem> {
        check_coprime(m, k)?;
        self.sweedler_power(h, &sweedler_perm_mk(m, k)?, max_terms)
    }

    /// `h^{[m]} = h_(1) ⋯ h_(m)`.
    pub fn sweedler_power_m(&self, h: &AlgElem, m: u64, max_terms: u64) -> Result<AlgElem> {
        if m == 0 {
            return Err(domain!("Sweedler powers need m ≥ 1"));
        }
        self.sweedler_power(h, &Perm::identity(m as usize), max_terms)
    }

    /// `Λ^σ` by the smash closed form: only tuples `h_i = x^{−(i−1)}.h`
    /// survive the product, giving
    /// `Λ^σ = (1/|F|) Σ_{x,h : ∏_i x^{−(σ⁻¹(i)−1)}.h = 1} b_h ⊗ x^n`.
    pub fn integral_power_closed_perm(&self, sigma: &Perm) -> AlgElem {
        let n = sigma.degree();
        let inv = sigma.inverse();
        let (f, g) = (self.f(), self.g());
        let weight = CycNum::from_rational(rat(1, f.order() as i64));
        let mut counts: HashMap<u32, u64> = HashMap::new();
        for x in 0..f.order() as u32 {
            let xi = f.inv(x);
            let exps: Vec<u32> = (1..=n).map(|i| f.pow(xi, inv.image(i) as i64 - 1)).collect();
            let xn = f.pow(x, n as i64);
            for h in 0..g.order() as u32 {
                let mut prod = 0u32;
                for &e in &exps {
                    prod = g.mul(prod, self.action().act(e, h));
                }
                if prod == 0 {
                    *counts.entry(self.index(h, xn)).or_insert(0) += 1;
                }
            }
        }
        let mut keys: Vec<_> = counts.into_iter().collect();
        keys.sort_unstable();
        AlgElem::from_terms(self.dim(), keys.into_iter().map(|(i, c)| (i, weight.scale(&rat(c as i64, 1)))))
    }

    pub fn z_counts(&self, m: u64, k: u64) -> Result<ZCount> {
        if !matches!(self.provenance(), Provenance::Smash | Provenance::Double) {
            return Err(domain!("z_counts needs a smash product or a double, got {:?}", self.provenance()));
        }
        check_coprime(m, k)?;
        let l = mod_inverse(k, m);
        let (f, g) = (self.f(), self.g());
        let nf = f.order();
        let mut values = alloc::vec![0u32; g.order() * nf];
        for x in 0..nf as u32 {
            let xi = f.inv(x);
            let exps: Vec<u32> = (0..m).map(|j| f.pow(xi, ((j * l) % m) as i64)).collect();
            let y = f.pow(x, m as i64);
            for gg in 0..g.order() as u32 {
                let mut prod = 0u32;
                for &e in &exps {
                    prod = g.mul(prod, self.action().act(e, gg));
                }
                if prod == 0 {
                    values[gg as usize * nf + y as usize] += 1;
                }
            }
        }
        Ok(ZCount { m, k, nf, values })
    }

    /// `Λ^{[m,k]} = (1/|F|) Σ z_{m,k}(g,y) b_g ⊗ y`.
    pub fn integral_power_closed(&self, m: u64, k: u64) -> Result<AlgElem> {
        let z = self.z_counts(m, k)?;
        let weight = CycNum::from_rational(rat(1, self.f().order() as i64));
        Ok(AlgElem::from_terms(
            self.dim(),
            z.nonzero().map(|((g, y), c)| (self.index(g, y), weight.scale(&rat(c as i64, 1)))),
        ))
    }

    /// `exp(H)`, the least `n` with `h^{[n]} = ε(h)1` for all `h`.
    ///
    /// `(b_g ⊗ x)^{[n]} = Σ_{h : P_n(x,h) = g} b_h ⊗ x^n` with
    /// `P_n(x,h) = ∏_{j<n} x^{−j}.h`, and `P_{q·ord x} = P_{ord x}^q`, so the
    /// exponent is the lcm of `ord(x) · ord(P_{ord x}(x,h))`.
    pub fn exponent_closed(&self) -> u64 {
        let (f, g) = (self.f(), self.g());
        let mut e = 1u64;
        for x in 0..f.order() as u32 {
            let o = f.element_order(x);
            let xi = f.inv(x);
            let pows: Vec<u32> = (0..o).map(|j| f.pow(xi, j as i64)).collect();
            for h in 0..g.order() as u32 {
                let mut p = 0u32;
                for &y in &pows {
                    p = g.mul(p, self.action().act(y, h));
                }
                e = num_integer::lcm(e, o * g.element_order(p));
            }
        }
        e
    }
}

pub(crate) fn check_coprime(m: u64, k: u64) -> Result<()> {
    if m == 0 || k == 0 || gcd(m, k) != 1 {
        return Err(domain!("[m,k] = [{}, {}] needs coprime positive entries", m, k));
    }
    Ok(())
}
