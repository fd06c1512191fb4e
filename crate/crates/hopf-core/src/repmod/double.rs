//! Modules and characters of `D(K[F])` built from `K[F]`-modules.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{simple_characters, CharRing, Character, Module, ModuleOrigin, SparseMat};
use crate::cyclo::{rat, CycNum};
use crate::error::{domain, invariant, Result};
use crate::groups::Group;
use crate::hopf::{HopfAlg, Provenance};
use crate::linalg;

/// Largest `|F|` for which [`induced_double_module`] checks the character
/// identity of [`induced_character_check`] on construction.
const CHECK_ORDER: usize = 24;

/// `D(K[F]) ⊗_{K[F]} V`, realized on `K^F ⊗ V` with
/// `(b_g ⊗ x).(δ_{g'} ⊗ v) = [g = x g' x⁻¹] δ_g ⊗ x.v`.
pub fn induced_double_module(d: Arc<HopfAlg>, v: &Module) -> Result<Module> {
    d.require_provenance(&[Provenance::Double], "induced_double_module")?;
    let base = v.alg();
    if base.provenance() != Provenance::GroupAlgebra || base.f().order() != d.f().order() {
        return Err(domain!("V must be a module over the group algebra K[F] of the double"));
    }
    let f = d.f().clone();
    let n = f.order();
    let dv = v.dim;
    let dim = n * dv;
    let mut mats = alloc::vec![SparseMat::zero(dim); d.dim()];
    for x in 0..n as u32 {
        let rx = &v.mats[base.index(0, x) as usize];
        for g2 in 0..n as u32 {
            let g = f.conj(x, g2);
            let m = &mut mats[d.index(g, x) as usize];
            for j in 0..dv {
                m.cols[g2 as usize * dv + j] =
                    rx.cols[j].iter().map(|(i, c)| (g * dv as u32 + i, c.clone())).collect();
            }
        }
    }
    let module = Module {
        alg: d.clone(),
        name: alloc::format!("D⊗{}", v.name),
        dim,
        mats,
        origin: ModuleOrigin::Explicit,
    };
    module.verify()?;
    if n <= CHECK_ORDER {
        induced_character_check(&d, &v.character_values(), &module.character_values())?;
    }
    Ok(module)
}

/// `η(b_g ⊗ x) = [xgx⁻¹ = g] χ(x)`, the character of the induced double
/// module, from the character `chi` of `K[F]` (indexed by elements of `F`).
pub fn induced_double_character(d: &HopfAlg, chi: &[CycNum]) -> Result<Vec<CycNum>> {
    d.require_provenance(&[Provenance::Double], "induced_double_character")?;
    let f = d.f();
    if chi.len() != f.order() {
        return Err(domain!("character of K[F] needs {} values", f.order()));
    }
    Ok((0..d.dim() as u32)
        .map(|i| {
            let (g, x) = d.split(i);
            if f.conj(x, g) == g {
                chi[x as usize].clone()
            } else {
                CycNum::zero()
            }
        })
        .collect())
}

/// Checks `η(h) = dim(K[F]) (Λ ⊗ χ)(P(h))` on every basis element `h` of
/// the double, where `P(h) = Γ_(1) h S(Γ_(2))` and `(Λ ⊗ χ)(δ_g ⊗ y) = χ(y)/|F|`.
pub fn induced_character_check(d: &HopfAlg, chi: &[CycNum], eta: &[CycNum]) -> Result<()> {
    d.require_provenance(&[Provenance::Double], "induced_character_check")?;
    for i in 0..d.dim() as u32 {
        let p = d.center_projector(&d.basis(i))?;
        let mut rhs = CycNum::zero();
        for (&j, c) in p.terms() {
            let y = d.split(j).1;
            rhs = &rhs + &(c * &chi[y as usize]);
        }
        if rhs != eta[i as usize] {
            return Err(invariant!("induced character identity fails at {}: {} ≠ {}", d.label(i), eta[i as usize], rhs));
        }
    }
    Ok(())
}

/// The rank over `Q(ζ)` of the restrictions of the irreducible characters
/// of `D(K[F])` to `K[F]`, expressed in the irreducible basis of `Ch(K[F])`,
/// together with the target `dim Z(Ch(K[F])) = k(F)`.
pub fn restriction_rank_check(f: Arc<Group>, seed: u64) -> Result<(usize, usize)> {
    let d = Arc::new(HopfAlg::double(f.clone())?);
    let kf = Arc::new(HopfAlg::group_algebra(f.clone())?);
    let ring_d = simple_characters(d.clone(), seed)?;
    let ring_f = simple_characters(kf, seed)?;
    let n = f.order();
    let rows: Vec<Vec<CycNum>> = ring_d
        .irreducibles
        .iter()
        .map(|psi| {
            let res: Vec<CycNum> = (0..n as u32)
                .map(|x| {
                    let mut s = CycNum::zero();
                    for g in 0..n as u32 {
                        s = &s + psi.value(d.index(g, x));
                    }
                    s
                })
                .collect();
            ring_f
                .irreducibles
                .iter()
                .map(|chi| {
                    let mut s = CycNum::zero();
                    for x in 0..n as u32 {
                        s = &s + &(&res[x as usize] * &chi.value(x).conj());
                    }
                    s.scale(&rat(1, n as i64))
                })
                .collect()
        })
        .collect();
    Ok((linalg::rank(&rows), ring_f.k()))
}

impl CharRing {
    /// An explicit module affording the `i`-th irreducible, when one can be
    /// realized monomially.
    pub fn module_for(&self, i: usize) -> Result<Option<Module>> {
        let c: &Character = &self.irreducibles[i];
        let Some((g, stab, eta)) = c.induced_data() else {
            return Ok(None);
        };
        let module = super::monomial_realization(self.alg().clone(), g, stab, eta)?;
        if let Some(mut m) = module {
            if m.character_values() != c.values {
                return Err(invariant!("realized module does not afford {}", c.name));
            }
            m.name = c.name.clone();
            return Ok(Some(m));
        }
        Ok(None)
    }
}
