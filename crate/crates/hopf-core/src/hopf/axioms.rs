//! Hopf axiom checks on the structure tensors.
//!
//! All structure constants are 0/1, so the checks count basis occurrences in
//! `u32` rather than doing field arithmetic. Up to [`EXHAUSTIVE_AXIOM_DIM`]
//! every basis tuple is checked; above that a deterministic sample is drawn
//! from a seeded ChaCha stream.

use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::HopfAlg;
use crate::error::{invariant, Result};

pub const EXHAUSTIVE_AXIOM_DIM: usize = 128;

const SAMPLE_SEED: u64 = 0x5eed_a710;
const SAMPLE_TRIPLES: usize = 20_000;
const SAMPLE_PAIRS: usize = 24;
const SAMPLE_ELEMS: usize = 64;

/// Outcome of [`HopfAlg::verify_axioms`]. `failures` names each law that
/// failed together with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub exhaustive: bool,
    pub laws: Vec<&'static str>,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        match self.failures.first() {
            None => Ok(()),
            Some(f) => Err(invariant!("Hopf axiom failure: {}", f)),
        }
    }
}

type Counts2 = HashMap<(u32, u32), u32>;

impl HopfAlg {
    fn delta_counts(&self, i: u32) -> Counts2 {
        let mut m = Counts2::new();
        for t in self.comult_basis(i) {
            *m.entry(t).or_insert(0) += 1;
        }
        m
    }

    /// `Δ(b_i)Δ(b_j)` as counts.
    fn delta_product(&self, i: u32, j: u32) -> Counts2 {
        let mut by_first: HashMap<u32, Vec<u32>> = HashMap::new();
        for (j1, j2) in self.comult_basis(j) {
            by_first.entry(j1).or_default().push(j2);
        }
        let mut out = Counts2::new();
        for (i1, i2) in self.comult_basis(i) {
            for j1 in self.right_partners(i1) {
                let Some(list) = by_first.get(&j1) else { continue };
                let k1 = self.mul_basis(i1, j1).expect("right partner");
                for &j2 in list {
                    if let Some(k2) = self.mul_basis(i2, j2) {
                        *out.entry((k1, k2)).or_insert(0) += 1;
                    }
                }
            }
        }
        out
    }

    /// Coefficient of `b_j ⊗ b_k ⊗ b_l` in `(Δ⊗id)Δ(b_i)` and in `(id⊗Δ)Δ(b_i)`.
    fn coassoc_coeffs(&self, i: u32, j: u32, k: u32, l: u32) -> (u32, u32) {
        let mut left = 0;
        let mut right = 0;
        for (a, b) in self.comult_basis(i) {
            if b == l {
                left += self.comult_coeff(a, j, k);
            }
            if a == j {
                right += self.comult_coeff(b, k, l);
            }
        }
        (left, right)
    }

    fn check_counit_antipode(&self, i: u32, failures: &mut Vec<String>) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (a, b) in self.comult_basis(i) {
            if self.counit_basis(a) {
                left.push(b);
            }
            if self.counit_basis(b) {
                right.push(a);
            }
        }
        if left != [i] || right != [i] {
            failures.push(alloc::format!("counit law at {}", self.label(i)));
        }
        // m(S⊗id)Δ(b_i) = ε(b_i)1 = m(id⊗S)Δ(b_i)
        let want: HashMap<u32, u32> = if self.counit_basis(i) {
            (0..self.g().order() as u32).map(|g| (self.index(g, 0), 1)).collect()
        } else {
            HashMap::new()
        };
        for side in 0..2 {
            let mut got: HashMap<u32, u32> = HashMap::new();
            for (a, b) in self.comult_basis(i) {
                let p = if side == 0 {
                    self.mul_basis(self.antipode_basis(a), b)
                } else {
                    self.mul_basis(a, self.antipode_basis(b))
                };
                if let Some(k) = p {
                    *got.entry(k).or_insert(0) += 1;
                }
            }
            if got != want {
                failures.push(alloc::format!("antipode law at {}", self.label(i)));
            }
        }
    }

    fn check_assoc(&self, i: u32, j: u32, k: u32, failures: &mut Vec<String>) {
        let l = self.mul_basis(i, j).and_then(|ij| self.mul_basis(ij, k));
        let r = self.mul_basis(j, k).and_then(|jk| self.mul_basis(i, jk));
        if l != r {
            failures.push(alloc::format!("associativity at ({}, {}, {})", self.label(i), self.label(j), self.label(k)));
        }
    }

    fn check_bialgebra_pair(&self, i: u32, j: u32, failures: &mut Vec<String>) {
        let lhs = match self.mul_basis(i, j) {
            Some(k) => self.delta_counts(k),
            None => Counts2::new(),
        };
        if lhs != self.delta_product(i, j) {
            failures.push(alloc::format!("Δ(ab) = Δ(a)Δ(b) at ({}, {})", self.label(i), self.label(j)));
        }
        let eps_prod = self.mul_basis(i, j).is_some_and(|k| self.counit_basis(k));
        if eps_prod != (self.counit_basis(i) && self.counit_basis(j)) {
            failures.push(alloc::format!("ε(ab) = ε(a)ε(b) at ({}, {})", self.label(i), self.label(j)));
        }
    }

    fn check_unit(&self, i: u32, failures: &mut Vec<String>) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for g in 0..self.g().order() as u32 {
            let u = self.index(g, 0);
            left.extend(self.mul_basis(u, i));
            right.extend(self.mul_basis(i, u));
        }
        if left != [i] || right != [i] {
            failures.push(alloc::format!("unit law at {}", self.label(i)));
        }
    }

    /// Checks associativity, unit, coassociativity, counit, the bialgebra
    /// compatibilities, `Δ(1) = 1 ⊗ 1` and the antipode law.
    pub fn verify_axioms(&self) -> Result<AxiomReport> {
        let n = self.dim() as u32;
        let exhaustive = self.dim() <= EXHAUSTIVE_AXIOM_DIM;
        let mut failures = Vec::new();
        let laws = alloc::vec![
            "associativity",
            "unit",
            "coassociativity",
            "counit",
            "comultiplication is multiplicative",
            "counit is multiplicative",
            "Δ(1) = 1 ⊗ 1",
            "antipode",
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let mut pick = |bound: u32| (rng.next_u64() % bound as u64) as u32;

        if exhaustive {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        self.check_assoc(i, j, k, &mut failures);
                    }
                    self.check_bialgebra_pair(i, j, &mut failures);
                }
                self.check_unit(i, &mut failures);
                self.check_counit_antipode(i, &mut failures);
                let mut left: HashMap<(u32, u32, u32), u32> = HashMap::new();
                let mut right: HashMap<(u32, u32, u32), u32> = HashMap::new();
                for (a, b) in self.comult_basis(i) {
                    for (c, d) in self.comult_basis(a) {
                        *left.entry((c, d, b)).or_insert(0) += 1;
                    }
                    for (c, d) in self.comult_basis(b) {
                        *right.entry((a, c, d)).or_insert(0) += 1;
                    }
                }
                if left != right {
                    failures.push(alloc::format!("coassociativity at {}", self.label(i)));
                }
            }
        } else {
            let ng = self.g().order() as u32;
            let nf = self.f().order() as u32;
            for _ in 0..SAMPLE_TRIPLES {
                // bias toward triples with nonzero products
                let i = pick(n);
                let (g, x) = self.split(i);
                let j = self.index(self.action().act(self.f().inv(x), g), pick(nf));
                let k = if pick(2) == 0 { pick(n) } else {
                    let (gj, xj) = self.split(j);
                    self.index(self.action().act(self.f().inv(xj), gj), pick(nf))
                };
                self.check_assoc(i, j, k, &mut failures);
            }
            for _ in 0..SAMPLE_PAIRS {
                let (i, j) = (pick(n), pick(n));
                self.check_bialgebra_pair(i, j, &mut failures);
                let (g, x) = self.split(i);
                let j2 = self.index(self.action().act(self.f().inv(x), g), pick(nf));
                self.check_bialgebra_pair(i, j2, &mut failures);
            }
            for _ in 0..SAMPLE_ELEMS {
                let i = pick(n);
                self.check_unit(i, &mut failures);
                self.check_counit_antipode(i, &mut failures);
                let (g, x) = self.split(i);
                // an in-support triple and a random one
                let g1 = pick(ng);
                let g2 = pick(ng);
                let g3 = self.g().mul(self.g().inv(self.g().mul(g1, g2)), g);
                let (a, b, c) = (self.index(g1, x), self.index(g2, x), self.index(g3, x));
                let (l, r) = self.coassoc_coeffs(i, a, b, c);
                if l != r || l != 1 {
                    failures.push(alloc::format!("coassociativity at {}", self.label(i)));
                }
                let (l, r) = self.coassoc_coeffs(i, pick(n), pick(n), pick(n));
                if l != r {
                    failures.push(alloc::format!("coassociativity at {}", self.label(i)));
                }
            }
        }
        // Δ(1) = Σ_g Δ(b_g ⊗ 1) must be Σ_{g,h} b_g⊗1 ⊗ b_h⊗1; each term
        // b_{g₁}⊗1 ⊗ b_{g₂}⊗1 arises exactly once, from g = g₁g₂
        if self.g().order() <= 4096 {
            let mut seen = Counts2::new();
            for g in 0..self.g().order() as u32 {
                for t in self.comult_basis(self.index(g, 0)) {
                    *seen.entry(t).or_insert(0) += 1;
                }
            }
            let ng = self.g().order();
            if seen.len() != ng * ng || seen.values().any(|&v| v != 1) || seen.keys().any(|&(a, b)| self.split(a).1 != 0 || self.split(b).1 != 0) {
                failures.push(String::from("Δ(1) ≠ 1 ⊗ 1"));
            }
        }
        failures.dedup();
        Ok(AxiomReport { exhaustive, laws, failures })
    }

    /// Checks that `Λ = (1/|F|) Σ_x b_1 ⊗ x` satisfies `hΛ = ε(h)Λ = Λh` on
    /// the basis, `ε(Λ) = 1`, `S(Λ) = Λ` and that `Λ` is cocommutative.
    pub fn verify_integral(&self) -> Result<()> {
        let nf = self.f().order() as u32;
        let support: Vec<u32> = (0..nf).map(|x| self.index(0, x)).collect();
        let mut sorted_support = support.clone();
        sorted_support.sort_unstable();
        for i in 0..self.dim() as u32 {
            for side in 0..2 {
                let mut got: Vec<u32> = support
                    .iter()
                    .filter_map(|&l| if side == 0 { self.mul_basis(i, l) } else { self.mul_basis(l, i) })
                    .collect();
                got.sort_unstable();
                let ok = if self.counit_basis(i) { got == sorted_support } else { got.is_empty() };
                if !ok {
                    return Err(invariant!("integral law fails at {}", self.label(i)));
                }
            }
        }
        let mut s: Vec<u32> = support.iter().map(|&l| self.antipode_basis(l)).collect();
        s.sort_unstable();
        if s != sorted_support {
            return Err(invariant!("S(Λ) ≠ Λ"));
        }
        for &l in &support {
            for (a, b) in self.comult_basis(l) {
                if self.comult_coeff(l, b, a) != 1 {
                    return Err(invariant!("Λ is not cocommutative"));
                }
            }
        }
        Ok(())
    }
}
