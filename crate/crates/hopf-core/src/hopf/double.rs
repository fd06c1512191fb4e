//! Elements and checks specific to `D(K[F])`.
//!
//! Under the identification `δ_g ⊗ x ↔ b_g ⊗ x` (with `G = F^op` sharing
//! element ids with `F`), the canonical element is
//! `R = Σ_x (1 ⊗ x) ⊗ (b_x ⊗ 1)` and the Drinfel'd element is
//! `u = Σ_x b_{x⁻¹} ⊗ x`.

use alloc::vec::Vec;

use super::{AlgElem, HopfAlg, Provenance, Tensor2};
use crate::cyclo::CycNum;
use crate::error::{invariant, Result};
use crate::groups::Group;

impl HopfAlg {
    fn require_double(&self, what: &str) -> Result<()> {
        self.require_provenance(&[Provenance::Double], what)
    }

    /// `u = Σ S⁻¹(b_i*) ⊗ b_i`, verified central.
    pub fn drinfeld_element(&self) -> Result<AlgElem> {
        self.require_double("drinfeld_element")?;
        let f = self.f();
        let u = AlgElem::from_terms(
            self.dim(),
            (0..f.order() as u32).map(|x| (self.index(f.inv(x), x), CycNum::one())),
        );
        if !self.is_central(&u) {
            return Err(invariant!("Drinfel'd element is not central"));
        }
        Ok(u)
    }

    /// The multiplicative order of `u`, searched up to `cap`.
    pub fn drinfeld_order(&self, cap: u64) -> Result<u64> {
        let u = self.drinfeld_element()?;
        let one = self.unit();
        let mut p = u.clone();
        for n in 1..=cap {
            if p == one {
                return Ok(n);
            }
            p = self.mul(&p, &u);
        }
        Err(crate::Error::UndecidableAtCap(cap.min(u32::MAX as u64) as u32))
    }

    /// `P(x) = Γ_(1) x S(Γ_(2))` with `Γ` the normalized integral.
    pub fn center_projector(&self, x: &AlgElem) -> Result<AlgElem> {
        self.require_double("center_projector")?;
        let gamma = self.integral();
        let mut out = AlgElem::zero(self.dim());
        for (&i, c) in gamma.terms() {
            for (a, b) in self.comult_basis(i) {
                let left = self.mul(&self.basis(a), x);
                let term = self.mul(&left, &self.basis(self.antipode_basis(b)));
                out = out.add(&term.scale_cyc(c));
            }
        }
        Ok(out)
    }
}

/// Checks `Δ^cop(h) R = R Δ(h)` for every basis element `h` of `D(K[F])`.
pub fn r_matrix_check(d: &HopfAlg) -> Result<()> {
    d.require_double("r_matrix_check")?;
    let f = d.f();
    let mut r = Tensor2::new();
    for x in 0..f.order() as u32 {
        for g in 0..d.g().order() as u32 {
            r.add_term(d.index(g, x), d.index(x, 0), &CycNum::one());
        }
    }
    for i in 0..d.dim() as u32 {
        let delta = d.coproduct(&d.basis(i));
        let lhs = d.tensor_mul(&delta.flip(), &r);
        let rhs = d.tensor_mul(&r, &delta);
        if lhs != rhs {
            return Err(invariant!("Δ^cop(h)R ≠ RΔ(h) at h = {}", d.label(i)));
        }
    }
    Ok(())
}

/// Evaluates the product and coproduct of `D(K[F]) = K^F ⊗ K[F]` from the
/// Hopf structure of `K[F]` alone and compares each basis value with the
/// smash realization:
///
/// ```text
/// (φ⊗h)(φ'⊗h') = φ'_(1)(S⁻¹(h_(3))) φ'_(3)(h_(1)) φφ'_(2) ⊗ h_(2)h'
/// Δ(φ⊗h)       = (φ_(2)⊗h_(1)) ⊗ (φ_(1)⊗h_(2))
/// ```
///
/// Here `φ = δ_g`, `h = x` is grouplike and `Δ²(δ_g) = Σ_{abc=g} δ_a⊗δ_b⊗δ_c`
/// with the product taken in `F`.
pub fn double_formula_crosscheck(f: &Group, d: &HopfAlg) -> Result<()> {
    d.require_double("double_formula_crosscheck")?;
    let n = f.order() as u32;
    for g in 0..n {
        for x in 0..n {
            for g2 in 0..n {
                for x2 in 0..n {
                    let mut expected: Vec<u32> = Vec::new();
                    for a in 0..n {
                        for b in 0..n {
                            let c = f.mul(f.inv(f.mul(a, b)), g2);
                            let coeff = a == f.inv(x) && c == x;
                            if coeff && g == b {
                                expected.push(d.index(g, f.mul(x, x2)));
                            }
                        }
                    }
                    let got: Vec<u32> = d.mul_basis(d.index(g, x), d.index(g2, x2)).into_iter().collect();
                    if got != expected {
                        return Err(invariant!(
                            "double product differs at (δ_{} ⊗ {})(δ_{} ⊗ {})",
                            f.label(g),
                            f.label(x),
                            f.label(g2),
                            f.label(x2)
                        ));
                    }
                }
            }
            let mut expected: Vec<(u32, u32)> =
                (0..n).map(|a| (d.index(f.mul(f.inv(a), g), x), d.index(a, x))).collect();
            let mut got: Vec<(u32, u32)> = d.comult_basis(d.index(g, x)).collect();
            expected.sort_unstable();
            got.sort_unstable();
            if got != expected {
                return Err(invariant!("double coproduct differs at δ_{} ⊗ {}", f.label(g), f.label(x)));
            }
        }
    }
    Ok(())
}
