//! Hopf algebras of the smash-product class `K^G # K[F]`.
//!
//! Group algebras (`G = 1`), dual group algebras (`F = 1`), smash products
//! and Drinfel'd doubles of group algebras (`G = F^op`, conjugation action)
//! all share one representation. Basis element `b_g ⊗ x` has index
//! `g·|F| + x`; its structure constants are 0 or 1 and are generated from
//! the defining formulas on demand
//!
//! ```text
//! (b_g ⊗ x)(b_g' ⊗ x') = δ_{g, x.g'} b_g ⊗ xx'
//! Δ(b_g ⊗ x)           = Σ_{g₁g₂ = g} (b_g₁ ⊗ x) ⊗ (b_g₂ ⊗ x)
//! ε(b_g ⊗ x)           = δ_{g,1}
//! S(b_g ⊗ x)           = b_{x⁻¹.g⁻¹} ⊗ x⁻¹
//! ```

mod axioms;
mod double;
mod elem;
mod sweedler;

pub use axioms::{AxiomReport, EXHAUSTIVE_AXIOM_DIM};
pub use double::{double_formula_crosscheck, r_matrix_check};
pub use elem::{AlgElem, Tensor2};
pub use sweedler::{ZCount, DEFAULT_MAX_TERMS};
pub(crate) use sweedler::check_coprime;

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::cyclo::{rat, CycNum};
use crate::error::{domain, invariant, unsupported, Result};
use crate::groups::{make_cyclic, Group, GroupAction};

/// Which constructor produced an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    GroupAlgebra,
    DualGroup,
    Smash,
    Double,
}

/// A semisimple Hopf algebra `K^G # K[F]`.
#[derive(Clone, Debug)]
pub struct HopfAlg {
    provenance: Provenance,
    action: GroupAction,
    nf: usize,
}

impl HopfAlg {
    fn build(provenance: Provenance, action: GroupAction) -> Result<HopfAlg> {
        let nf = action.actor().order();
        let h = HopfAlg { provenance, action, nf };
        h.verify_axioms()?.into_result()?;
        h.verify_integral()?;
        Ok(h)
    }

    /// `K[F]`.
    pub fn group_algebra(f: Arc<Group>) -> Result<HopfAlg> {
        let trivial = Arc::new(make_cyclic(1)?);
        HopfAlg::build(Provenance::GroupAlgebra, GroupAction::trivial(f, trivial))
    }

    /// `K^G`.
    pub fn dual_group_algebra(g: Arc<Group>) -> Result<HopfAlg> {
        let trivial = Arc::new(make_cyclic(1)?);
        HopfAlg::build(Provenance::DualGroup, GroupAction::trivial(trivial, g))
    }

    /// `K^G # K[F]` for an action of `F` on `G` by automorphisms.
    pub fn smash(action: GroupAction) -> Result<HopfAlg> {
        HopfAlg::build(Provenance::Smash, action)
    }

    /// `D(K[F])`, realized with `G = F^op` and `x.g = xgx⁻¹`.
    pub fn double(f: Arc<Group>) -> Result<HopfAlg> {
        HopfAlg::build(Provenance::Double, GroupAction::conjugation_on_opposite(f)?)
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    /// The group `G` of the function-algebra factor.
    pub fn g(&self) -> &Arc<Group> {
        self.action.target()
    }

    /// The group `F` of the group-algebra factor.
    pub fn f(&self) -> &Arc<Group> {
        self.action.actor()
    }

    pub fn dim(&self) -> usize {
        self.g().order() * self.nf
    }

    #[inline]
    pub fn index(&self, g: u32, x: u32) -> u32 {
        g * self.nf as u32 + x
    }

    /// `(g, x)` for the basis element `b_g ⊗ x`.
    #[inline]
    pub fn split(&self, i: u32) -> (u32, u32) {
        (i / self.nf as u32, i % self.nf as u32)
    }

    pub fn label(&self, i: u32) -> String {
        let (g, x) = self.split(i);
        match self.provenance {
            Provenance::GroupAlgebra => String::from(self.f().label(x)),
            Provenance::DualGroup => alloc::format!("b_{}", self.g().label(g)),
            _ => alloc::format!("b_{}#{}", self.g().label(g), self.f().label(x)),
        }
    }

    /// Index of the basis element with the given label.
    pub fn find_label(&self, s: &str) -> Option<u32> {
        (0..self.dim() as u32).find(|&i| self.label(i) == s)
    }

    #[inline]
    pub fn mul_basis(&self, i: u32, j: u32) -> Option<u32> {
        let (g1, x1) = self.split(i);
        let (g2, x2) = self.split(j);
        if g1 == self.action.act(x1, g2) {
            Some(self.index(g1, self.f().mul(x1, x2)))
        } else {
            None
        }
    }

    /// Terms `(i₁, i₂)` of `Δ(b_i)`, each with coefficient 1.
    pub fn comult_basis(&self, i: u32) -> impl Iterator<Item = (u32, u32)> + '_ {
        let (g, x) = self.split(i);
        let grp = self.g();
        (0..grp.order() as u32).map(move |g1| {
            let g2 = grp.mul(grp.inv(g1), g);
            (self.index(g1, x), self.index(g2, x))
        })
    }

    /// Number of terms of `Δ(b_i)`.
    pub fn comult_len(&self, _i: u32) -> usize {
        self.g().order()
    }

    /// Coefficient of `b_j ⊗ b_k` in `Δ(b_i)`.
    pub fn comult_coeff(&self, i: u32, j: u32, k: u32) -> u32 {
        let (g, x) = self.split(i);
        let (g1, x1) = self.split(j);
        let (g2, x2) = self.split(k);
        (x1 == x && x2 == x && self.g().mul(g1, g2) == g) as u32
    }

    #[inline]
    pub fn counit_basis(&self, i: u32) -> bool {
        self.split(i).0 == 0
    }

    #[inline]
    pub fn antipode_basis(&self, i: u32) -> u32 {
        let (g, x) = self.split(i);
        let xi = self.f().inv(x);
        self.index(self.action.act(xi, self.g().inv(g)), xi)
    }

    /// Indices `j` with `b_i b_j ≠ 0`.
    pub fn right_partners(&self, i: u32) -> impl Iterator<Item = u32> + '_ {
        let (g, x) = self.split(i);
        let g2 = self.action.act(self.f().inv(x), g);
        (0..self.nf as u32).map(move |x2| self.index(g2, x2))
    }

    pub fn unit(&self) -> AlgElem {
        AlgElem::from_terms(self.dim(), (0..self.g().order() as u32).map(|g| (self.index(g, 0), CycNum::one())))
    }

    pub fn basis(&self, i: u32) -> AlgElem {
        AlgElem::basis(self.dim(), i)
    }

    /// `b_g ⊗ 1`.
    pub fn b(&self, g: u32) -> AlgElem {
        self.basis(self.index(g, 0))
    }

    /// `1 ⊗ x = Σ_g b_g ⊗ x`.
    pub fn e(&self, x: u32) -> AlgElem {
        AlgElem::from_terms(self.dim(), (0..self.g().order() as u32).map(|g| (self.index(g, x), CycNum::one())))
    }

    pub fn mul(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero(self.dim());
        for (i, ca) in a.terms() {
            for (j, cb) in b.terms() {
                if let Some(k) = self.mul_basis(*i, *j) {
                    out.add_term(k, &(ca * cb));
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &AlgElem, mut e: u64) -> AlgElem {
        let mut acc = self.unit();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn counit(&self, a: &AlgElem) -> CycNum {
        let mut s = CycNum::zero();
        for (i, c) in a.terms() {
            if self.counit_basis(*i) {
                s = &s + c;
            }
        }
        s
    }

    pub fn antipode(&self, a: &AlgElem) -> AlgElem {
        AlgElem::from_terms(self.dim(), a.terms().iter().map(|(i, c)| (self.antipode_basis(*i), c.clone())))
    }

    pub fn coproduct(&self, a: &AlgElem) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, c) in a.terms() {
            for (j, k) in self.comult_basis(*i) {
                t.add_term(j, k, c);
            }
        }
        t
    }

    /// Product in `H ⊗ H`.
    pub fn tensor_mul(&self, a: &Tensor2, b: &Tensor2) -> Tensor2 {
        let mut by_first: hashbrown::HashMap<u32, Vec<(u32, &CycNum)>> = hashbrown::HashMap::new();
        for ((j1, j2), c) in b.terms() {
            by_first.entry(*j1).or_default().push((*j2, c));
        }
        let mut out = Tensor2::new();
        for ((i1, i2), ca) in a.terms() {
            for j1 in self.right_partners(*i1) {
                let Some(list) = by_first.get(&j1) else { continue };
                let k1 = self.mul_basis(*i1, j1).expect("partner");
                for (j2, cb) in list {
                    if let Some(k2) = self.mul_basis(*i2, *j2) {
                        out.add_term(k1, k2, &(ca * *cb));
                    }
                }
            }
        }
        out
    }

    /// `Λ = (1/|F|) Σ_x b_1 ⊗ x`.
    pub fn integral(&self) -> AlgElem {
        let c = CycNum::from_rational(rat(1, self.nf as i64));
        AlgElem::from_terms(self.dim(), (0..self.nf as u32).map(|x| (self.index(0, x), c.clone())))
    }

    /// The normalized left integral as the solution of `b_iΛ = ε(b_i)Λ`,
    /// `ε(Λ) = 1`; a linear-algebra oracle for small algebras.
    pub fn integral_by_nullspace(&self) -> Result<AlgElem> {
        let n = self.dim();
        if n > 64 {
            return Err(crate::error::resource!("nullspace integral limited to dimension 64, got {}", n));
        }
        let mut rows: Vec<Vec<crate::cyclo::Rational>> = Vec::new();
        let zero = rat(0, 1);
        for i in 0..n as u32 {
            let eps = if self.counit_basis(i) { rat(1, 1) } else { rat(0, 1) };
            let mut block = alloc::vec![alloc::vec![zero.clone(); n]; n];
            for j in 0..n as u32 {
                if let Some(k) = self.mul_basis(i, j) {
                    block[k as usize][j as usize] += rat(1, 1);
                }
                block[j as usize][j as usize] -= &eps;
            }
            rows.extend(block);
        }
        let ns = crate::linalg::nullspace(&rows, n);
        if ns.len() != 1 {
            return Err(invariant!("space of left integrals has dimension {}", ns.len()));
        }
        let v = &ns[0];
        let eps: crate::cyclo::Rational = (0..n as u32).filter(|&i| self.counit_basis(i)).map(|i| v[i as usize].clone()).sum();
        if num_traits::Zero::is_zero(&eps) {
            return Err(invariant!("left integral with ε(Λ) = 0"));
        }
        Ok(AlgElem::from_terms(
            n,
            v.iter().enumerate().map(|(i, c)| (i as u32, CycNum::from_rational(c / &eps))),
        ))
    }

    /// `h` is central. Small algebras are checked against every basis
    /// element; larger ones use the smash criterion: `c(g,x) = 0` unless
    /// `x.g = g`, and `c` is invariant under `(g,x) ↦ (y.g, yxy⁻¹)` for
    /// generators `y` of `F`.
    pub fn is_central(&self, h: &AlgElem) -> bool {
        if self.dim() <= 512 {
            self.is_central_generic(h)
        } else {
            self.is_central_smash(h)
        }
    }

    pub fn is_central_generic(&self, h: &AlgElem) -> bool {
        (0..self.dim() as u32).all(|i| {
            let b = self.basis(i);
            self.mul(h, &b) == self.mul(&b, h)
        })
    }

    pub fn is_central_smash(&self, h: &AlgElem) -> bool {
        let f = self.f();
        for (i, c) in h.terms() {
            let (g, x) = self.split(*i);
            if self.action.act(x, g) != g {
                return false;
            }
            for &y in f.generators() {
                let j = self.index(self.action.act(y, g), f.conj(y, x));
                if h.coeff(j).map_or(true, |d| d != c) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_cocommutative(&self, h: &AlgElem) -> bool {
        let d = self.coproduct(h);
        d.terms().iter().all(|((i, j), c)| d.coeff(*j, *i).is_some_and(|e| e == c))
    }

    /// Grouplikes `φ ⊗ x = Σ_g φ(g) b_g ⊗ x` for linear characters `φ` of
    /// `G` and `x ∈ F`, each verified. Ordered by character, then `x`.
    pub fn grouplikes(&self) -> Result<Vec<AlgElem>> {
        let lin = self.g().abelianization_linear_characters()?;
        let mut out = Vec::with_capacity(lin.len() * self.nf);
        for phi in &lin {
            for x in 0..self.nf as u32 {
                let h = AlgElem::from_terms(
                    self.dim(),
                    phi.iter().enumerate().map(|(g, c)| (self.index(g as u32, x), c.clone())),
                );
                out.push(h);
            }
        }
        if self.dim() <= 4096 {
            for h in &out {
                let d = self.coproduct(h);
                if d != Tensor2::outer(h, h) || !self.counit(h).is_one() {
                    return Err(invariant!("candidate grouplike fails Δ(h) = h ⊗ h"));
                }
            }
            for a in &out {
                for b in &out {
                    let p = self.mul(a, b);
                    if !out.contains(&p) {
                        return Err(invariant!("grouplikes are not closed under multiplication"));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn central_grouplikes(&self) -> Result<Vec<AlgElem>> {
        Ok(self.grouplikes()?.into_iter().filter(|h| self.is_central(h)).collect())
    }

    /// Errors unless the algebra came from one of the `allowed` constructors.
    pub fn require_provenance(&self, allowed: &[Provenance], what: &str) -> Result<()> {
        if allowed.contains(&self.provenance) {
            Ok(())
        } else {
            Err(unsupported!("{} needs provenance {:?}, got {:?}", what, allowed, self.provenance))
        }
    }

    /// `tr(E_m)` for `E_m(h) = S(h^{[m−1]})`.
    pub fn e_map_trace(&self, m: u32) -> Result<CycNum> {
        if m < 2 {
            return Err(domain!("E_m needs m ≥ 2, got {}", m));
        }
        let id = crate::permcalc::Perm::identity(m as usize - 1);
        let mut tr = CycNum::zero();
        for i in 0..self.dim() as u32 {
            let p = self.sweedler_power(&self.basis(i), &id, DEFAULT_MAX_TERMS)?;
            let e = self.antipode(&p);
            if let Some(c) = e.coeff(i) {
                tr = &tr + c;
            }
        }
        Ok(tr)
    }

    /// Sparse rendering `c * label + …`.
    pub fn render(&self, a: &AlgElem) -> String {
        if a.is_zero() {
            return String::from("0");
        }
        let parts: Vec<String> = a.terms().iter().map(|(i, c)| alloc::format!("{} * {}", c, self.label(*i))).collect();
        parts.join(" + ")
    }
}
