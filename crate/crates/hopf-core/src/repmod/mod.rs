//! Characters and explicit modules of the smash-product algebras.
//!
//! Every simple `K^G#K[F]`-module is induced from a simple module `W` of a
//! stabilizer `F_g`; its character is
//! `χ(b_h ⊗ x) = (1/|F_g|) Σ_{z ∈ F : z.g = h, z⁻¹xz ∈ F_g} η(z⁻¹xz)`
//! with `η` the character of `W`. Group algebras (`G = 1`) and dual group
//! algebras (`F = 1`) are the two degenerate cases of the same formula.

mod double;
mod module;

pub use double::{induced_double_character, induced_double_module, induced_character_check, restriction_rank_check};
pub use module::{monomial_realization, Module, ModuleOrigin, SparseMat, DEFAULT_ROTATION_LIMIT};

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::cyclo::{as_i64, is_rational_integer, rat, CycNum, Rational};
use crate::error::{domain, invariant, Result};
use crate::groups::{character_table, DEFAULT_CHAR_TABLE_CAP};
use crate::hopf::{AlgElem, HopfAlg};
use crate::linalg;

/// How a character was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Induced from the stabilizer character `eta` (values parallel to the
    /// sorted stabilizer elements `stabilizer`) at the orbit representative
    /// `orbit_rep`.
    Induced { orbit_rep: u32, stabilizer: Vec<u32>, eta: Vec<CycNum> },
    Regular,
    Derived,
}

/// A character `χ`, stored by its values `χ(b_i)` on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub name: String,
    pub values: Vec<CycNum>,
    pub degree: u64,
    pub origin: Origin,
}

impl Character {
    pub fn derived(name: String, values: Vec<CycNum>, h: &HopfAlg) -> Result<Character> {
        if values.len() != h.dim() {
            return Err(domain!("character has {} values for an algebra of dimension {}", values.len(), h.dim()));
        }
        let one = h.unit();
        let deg = eval_values(&values, &one);
        let degree = as_i64(&deg)
            .filter(|&d| d >= 0)
            .ok_or_else(|| invariant!("character degree {} is not a nonnegative integer", deg))? as u64;
        Ok(Character { name, values, degree, origin: Origin::Derived })
    }

    pub fn eval(&self, x: &AlgElem) -> CycNum {
        eval_values(&self.values, x)
    }

    pub fn value(&self, i: u32) -> &CycNum {
        &self.values[i as usize]
    }

    /// Orbit representative, stabilizer and stabilizer character, for
    /// characters from [`simple_characters`].
    pub fn induced_data(&self) -> Option<(u32, &[u32], &[CycNum])> {
        match &self.origin {
            Origin::Induced { orbit_rep, stabilizer, eta } => Some((*orbit_rep, stabilizer, eta)),
            _ => None,
        }
    }
}

fn eval_values(values: &[CycNum], x: &AlgElem) -> CycNum {
    let mut s = CycNum::zero();
    for (&i, c) in x.terms() {
        let v = &values[i as usize];
        if !v.is_zero() {
            s = &s + &(c * v);
        }
    }
    s
}

/// The irreducible characters of an algebra, counit first.
#[derive(Clone, Debug)]
pub struct CharRing {
    alg: Arc<HopfAlg>,
    pub irreducibles: Vec<Character>,
    /// Terms `(i, j)` of `Δ(Λ)` up to the common factor `1/|F|`.
    lambda_coproduct: Vec<(u32, u32)>,
}

/// Counit first, then ascending degree, then descending lexicographic order
/// of the value vectors.
fn order_characters(h: &HopfAlg, a: &Character, b: &Character) -> Ordering {
    let is_counit = |c: &Character| c.degree == 1 && (0..h.dim() as u32).all(|i| c.values[i as usize] == if h.counit_basis(i) { CycNum::one() } else { CycNum::zero() });
    is_counit(b).cmp(&is_counit(a)).then(a.degree.cmp(&b.degree)).then_with(|| {
        for (x, y) in a.values.iter().zip(&b.values) {
            let c = y.cmp_lex(x);
            if c.is_ne() {
                return c;
            }
        }
        Ordering::Equal
    })
}

/// All simple characters, by the orbit/stabilizer formula. `seed` drives the
/// character-table computation of the stabilizers; the result does not depend
/// on it.
pub fn simple_characters(h: Arc<HopfAlg>, seed: u64) -> Result<CharRing> {
    let f = h.f().clone();
    let act = h.action().clone();
    let mut chars = Vec::new();
    for orbit in act.orbits() {
        let g = orbit[0];
        let stab = act.stabilizer(g)?;
        let table = character_table(&stab.group, DEFAULT_CHAR_TABLE_CAP, seed)?;
        let ns = stab.embed.len();
        let mut local = alloc::vec![u32::MAX; f.order()];
        for (i, &x) in stab.embed.iter().enumerate() {
            local[x as usize] = i as u32;
        }
        for row in 0..table.num_irreducibles() {
            let eta: Vec<CycNum> = (0..ns as u32).map(|s| table.value(row, s).clone()).collect();
            let mut values = alloc::vec![CycNum::zero(); h.dim()];
            for z in 0..f.order() as u32 {
                let hh = act.act(z, g);
                let zi = f.inv(z);
                for x in 0..f.order() as u32 {
                    let c = f.mul(zi, f.mul(x, z));
                    let l = local[c as usize];
                    if l != u32::MAX {
                        let i = h.index(hh, x) as usize;
                        values[i] = &values[i] + &eta[l as usize];
                    }
                }
            }
            let scale = rat(1, ns as i64);
            for v in &mut values {
                if !v.is_zero() {
                    *v = v.scale(&scale);
                }
            }
            let degree = (orbit.len() as u64) * table.degree(row);
            chars.push(Character {
                name: String::new(),
                values,
                degree,
                origin: Origin::Induced { orbit_rep: g, stabilizer: stab.embed.clone(), eta },
            });
        }
    }
    chars.sort_by(|a, b| order_characters(&h, a, b));
    for (i, c) in chars.iter_mut().enumerate() {
        c.name = alloc::format!("chi{}", i);
    }
    let ring = CharRing::new(h, chars)?;
    ring.verify()?;
    Ok(ring)
}

impl CharRing {
    fn new(alg: Arc<HopfAlg>, irreducibles: Vec<Character>) -> Result<CharRing> {
        let mut lambda_coproduct = Vec::new();
        for x in 0..alg.f().order() as u32 {
            lambda_coproduct.extend(alg.comult_basis(alg.index(0, x)));
        }
        Ok(CharRing { alg, irreducibles, lambda_coproduct })
    }

    pub fn alg(&self) -> &Arc<HopfAlg> {
        &self.alg
    }

    pub fn k(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.irreducibles.iter().map(|c| c.degree).collect()
    }

    pub fn get(&self, i: usize) -> &Character {
        &self.irreducibles[i]
    }

    /// Looks up `chi<i>`, a bare index, or `dim<d>` (the first irreducible
    /// of degree `d`).
    pub fn find(&self, key: &str) -> Option<usize> {
        if let Some(d) = key.strip_prefix("dim").and_then(|s| s.parse::<u64>().ok()) {
            return self.irreducibles.iter().position(|c| c.degree == d);
        }
        if let Some(i) = self.irreducibles.iter().position(|c| c.name == key) {
            return Some(i);
        }
        key.parse::<usize>().ok().filter(|&i| i < self.k())
    }

    /// `(ab)(Λ)` without forming the product character.
    pub fn product_at_integral(&self, a: &Character, b: &Character) -> CycNum {
        let mut s = CycNum::zero();
        for &(i, j) in &self.lambda_coproduct {
            let (u, v) = (&a.values[i as usize], &b.values[j as usize]);
            if !u.is_zero() && !v.is_zero() {
                s = &s + &(u * v);
            }
        }
        s.scale(&rat(1, self.alg.f().order() as i64))
    }

    /// `⟨a, b⟩ = (a · b̄)(Λ)`, the dimension of `Hom(W_b, W_a)` for modules.
    pub fn inner(&self, a: &Character, b: &Character) -> CycNum {
        self.product_at_integral(a, &char_dual(&self.alg, b))
    }

    fn verify(&self) -> Result<()> {
        let h = &self.alg;
        let total: u64 = self.irreducibles.iter().map(|c| c.degree * c.degree).sum();
        if total != h.dim() as u64 {
            return Err(invariant!("Σ n_i² = {} but dim H = {}", total, h.dim()));
        }
        let one = CycNum::one();
        let duals: Vec<Character> = self.irreducibles.iter().map(|c| char_dual(h, c)).collect();
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in duals.iter().enumerate() {
                let v = self.product_at_integral(a, b);
                let ok = if i == j { v == one } else { v.is_zero() };
                if !ok {
                    return Err(invariant!("(χ_{} χ̄_{})(Λ) = {}", i, j, v));
                }
            }
            check_trace_property(h, a)?;
        }
        Ok(())
    }

    /// `a_ij = ((χ χ_j) χ̄_i)(Λ)`, checked to be nonnegative integers obeying
    /// `Σ_i a_ij n_i = deg(χ) n_j`.
    pub fn fusion_matrix(&self, chi: &Character) -> Result<Vec<Vec<u64>>> {
        let h = &self.alg;
        let k = self.k();
        let duals: Vec<Character> = self.irreducibles.iter().map(|c| char_dual(h, c)).collect();
        let mut a = alloc::vec![alloc::vec![0u64; k]; k];
        for j in 0..k {
            let psi = char_mul(h, chi, &self.irreducibles[j]);
            for i in 0..k {
                let v = self.product_at_integral(&psi, &duals[i]);
                a[i][j] = as_i64(&v)
                    .filter(|&x| x >= 0)
                    .ok_or_else(|| invariant!("fusion coefficient a_{}{} = {} is not a nonnegative integer", i, j, v))?
                    as u64;
            }
        }
        let n = self.degrees();
        for j in 0..k {
            let lhs: u64 = (0..k).map(|i| a[i][j] * n[i]).sum();
            if lhs != chi.degree * n[j] {
                return Err(invariant!("dimension law fails in column {}: {} ≠ {}·{}", j, lhs, chi.degree, n[j]));
            }
        }
        Ok(a)
    }

    /// `(ord, mult)`: the least `m` with `(V^{⊗m})^H ≠ 0` and the dimension
    /// of that space, searched up to `m = k`.
    pub fn order_and_multiplicity(&self, chi: &Character) -> Result<(u64, u64)> {
        let h = &self.alg;
        let mut pw = chi.clone();
        for m in 1..=self.k() as u64 {
            let d = invariant_dim(h, &pw)?;
            if d > 0 {
                return Ok((m, d));
            }
            pw = char_mul(h, &pw, chi);
        }
        Err(invariant!("no invariants in V^{{⊗m}} for m ≤ dim Ch(H) = {}", self.k()))
    }

    /// The same order computed by powering the fusion matrix: `(A^m)_{1,j}`
    /// counts trivial constituents of `V^{⊗m}` when `e_j` is the trivial
    /// character.
    pub fn order_by_fusion_powers(&self, chi: &Character) -> Result<(u64, u64)> {
        let a = self.fusion_matrix(chi)?;
        let k = self.k();
        let mut v = alloc::vec![0u64; k];
        v[0] = 1;
        for m in 1..=k as u64 {
            let mut w = alloc::vec![0u64; k];
            for i in 0..k {
                for j in 0..k {
                    w[i] += a[i][j] * v[j];
                }
            }
            v = w;
            if v[0] > 0 {
                return Ok((m, v[0]));
            }
        }
        Err(invariant!("no invariants in V^{{⊗m}} for m ≤ dim Ch(H) = {}", k))
    }

    /// Characteristic polynomial of the fusion matrix of `χ`, lowest degree
    /// first, as integers.
    pub fn charpoly_fusion(&self, chi: &Character) -> Result<Vec<i64>> {
        let a = self.fusion_matrix(chi)?;
        let m: Vec<Vec<Rational>> = a.iter().map(|r| r.iter().map(|&v| rat(v as i64, 1)).collect()).collect();
        linalg::charpoly(&m)
            .iter()
            .map(|c| {
                if c.is_integer() {
                    crate::cyclo::as_i64(&CycNum::from_rational(c.clone())).ok_or_else(|| invariant!("coefficient overflow"))
                } else {
                    Err(invariant!("fusion characteristic polynomial has the non-integer coefficient {}", c))
                }
            })
            .collect()
    }
}

/// `χ(hh') = χ(h'h)` on all basis pairs with a nonzero product.
fn check_trace_property(h: &HopfAlg, c: &Character) -> Result<()> {
    let val = |p: Option<u32>| p.map_or(CycNum::zero(), |k| c.values[k as usize].clone());
    for i in 0..h.dim() as u32 {
        for j in h.right_partners(i) {
            if val(h.mul_basis(i, j)) != val(h.mul_basis(j, i)) {
                return Err(invariant!("{} is not a trace function at ({}, {})", c.name, h.label(i), h.label(j)));
            }
        }
    }
    Ok(())
}

/// `(χχ')(h) = Σ χ(h_(1)) χ'(h_(2))`.
pub fn char_mul(h: &HopfAlg, a: &Character, b: &Character) -> Character {
    let values = (0..h.dim() as u32)
        .map(|i| {
            let mut s = CycNum::zero();
            for (p, q) in h.comult_basis(i) {
                let (u, v) = (&a.values[p as usize], &b.values[q as usize]);
                if !u.is_zero() && !v.is_zero() {
                    s = &s + &(u * v);
                }
            }
            s
        })
        .collect();
    Character { name: alloc::format!("{}*{}", a.name, b.name), values, degree: a.degree * b.degree, origin: Origin::Derived }
}

/// `χ̄ = χ ∘ S`.
pub fn char_dual(h: &HopfAlg, a: &Character) -> Character {
    let values = (0..h.dim() as u32).map(|i| a.values[h.antipode_basis(i) as usize].clone()).collect();
    Character { name: alloc::format!("{}~", a.name), values, degree: a.degree, origin: Origin::Derived }
}

/// `χ(Λ)`, asserted to be a nonnegative integer.
pub fn invariant_dim(h: &HopfAlg, a: &Character) -> Result<u64> {
    let v = a.eval(&h.integral());
    match is_rational_integer(&v).and_then(|b| i64::try_from(b).ok()) {
        Some(d) if d >= 0 => Ok(d as u64),
        _ => Err(invariant!("χ(Λ) = {} is not a nonnegative integer for {}", v, a.name)),
    }
}

/// The counit as a character.
pub fn counit_character(h: &HopfAlg) -> Character {
    let values = (0..h.dim() as u32).map(|i| if h.counit_basis(i) { CycNum::one() } else { CycNum::zero() }).collect();
    Character { name: String::from("eps"), values, degree: 1, origin: Origin::Derived }
}

/// `χ_R(b_i) = tr(L_{b_i})`.
pub fn regular_character(h: &HopfAlg) -> Character {
    let values = (0..h.dim() as u32)
        .map(|i| CycNum::from_int(h.right_partners(i).filter(|&j| h.mul_basis(i, j) == Some(j)).count() as i64))
        .collect();
    Character { name: String::from("regular"), values, degree: h.dim() as u64, origin: Origin::Regular }
}

/// Characteristic polynomial of `φ ↦ χφ` on `H*`, lowest degree first, with
/// every coefficient asserted to be a rational integer.
pub fn charpoly_left_mult_dual(h: &HopfAlg, chi: &Character, max_dim: usize) -> Result<Vec<i64>> {
    let n = h.dim();
    if n > max_dim {
        return Err(crate::error::resource!("H* path limited to dimension {}, got {}", max_dim, n));
    }
    // (χ b_l*)(b_i) = Σ_{Δ(b_i) ∋ b_p ⊗ b_l} χ(b_p)
    let mut m = alloc::vec![alloc::vec![CycNum::zero(); n]; n];
    for i in 0..n as u32 {
        for (p, l) in h.comult_basis(i) {
            let v = &chi.values[p as usize];
            if !v.is_zero() {
                m[i as usize][l as usize] = &m[i as usize][l as usize] + v;
            }
        }
    }
    let cp = linalg::charpoly(&m);
    cp.iter()
        .map(|c| {
            is_rational_integer(c)
                .and_then(|b| i64::try_from(b).ok())
                .ok_or_else(|| invariant!("H* characteristic polynomial has the non-integer coefficient {}", c))
        })
        .collect()
}

/// Default dimension cap for [`charpoly_left_mult_dual`].
pub const DEFAULT_DUAL_CHARPOLY_DIM: usize = 256;

#[cfg(test)]
mod tests;
