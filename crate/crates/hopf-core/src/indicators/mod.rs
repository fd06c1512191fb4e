//! Higher Frobenius-Schur indicators `ν_m(χ) = χ(Λ^{[m]})` and the
//! quantities derived from them: Galois behaviour, integrality, exponents
//! and the Cauchy property.
//!
//! Every indicator is computed by all routes that apply and the results are
//! compared exactly:
//!
//! * `definition`: the generic Sweedler power `Λ^{[m,k]}` evaluated by `χ`;
//! * `closed_form`: `(1/|F_g|) Σ_{y ∈ F_g} z_{m,k}(g,y) η(y)` for the simple
//!   induced from `(g, η)`, or the closed-form integral power for algebras
//!   that are not smash products proper;
//! * `rotation`: `tr(α^k ∘ ρ^{⊗m}(Λ))` on an explicit module;
//! * `canonical_tensor`: `tr(t^m) / dim H` on `V ⊗ H*`;
//! * `double_u`: `η(u^m) / |F|` through the induced `D(K[F])`-module, for
//!   group algebras.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::cyclo::{as_i64, is_rational_integer, rat, CycNum};
use crate::error::{domain, invariant, resource, Error, Result};
use crate::hopf::{AlgElem, HopfAlg, Provenance, ZCount, DEFAULT_MAX_TERMS};
use crate::permcalc::{sweedler_perm_mk, Perm};
use crate::repmod::{char_dual, induced_double_character, regular_character, CharRing, Module};

#[cfg(test)]
mod tests;

/// One way of computing an indicator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    Definition,
    ClosedForm,
    Rotation,
    CanonicalTensor,
    DoubleU,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Definition => "definition",
            Route::ClosedForm => "closed_form",
            Route::Rotation => "rotation",
            Route::CanonicalTensor => "canonical_tensor",
            Route::DoubleU => "double_u",
        }
    }
}

/// Guards for the optional routes.
#[derive(Clone, Debug)]
pub struct IndicatorConfig {
    /// Coproduct-tuple budget of the definition route.
    pub max_terms: u64,
    /// Largest `d^m` for the rotation route.
    pub rotation_limit: u64,
    /// Largest `dim H` for the canonical-tensor route and for `t`-orders.
    pub tensor_dim: usize,
    /// Largest `|F|` for the `double_u` route.
    pub double_order: usize,
    /// Exponent scan cap; `None` means `dim(H)²`.
    pub exp_cap: Option<u64>,
}

impl Default for IndicatorConfig {
    fn default() -> Self {
        IndicatorConfig { max_terms: DEFAULT_MAX_TERMS, rotation_limit: 10_000, tensor_dim: 36, double_order: 24, exp_cap: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorReport {
    pub chi: String,
    pub m: u64,
    pub k: u64,
    pub value: CycNum,
    pub routes_used: Vec<Route>,
    /// Routes that apply in principle but were not run, with the reason.
    pub skipped: Vec<(Route, String)>,
    pub agreement: bool,
    pub integrality: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExponentRoute {
    NuScan,
    TOrder,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentReport {
    pub value: u64,
    pub routes: Vec<ExponentRoute>,
    pub bound_used: u64,
}

/// Outcome of [`IndicatorEngine::galois_check`]; `power` is `None` when
/// `l` is not prime to `exp(χ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaloisReport {
    pub rotation: bool,
    pub power: Option<bool>,
}

impl GaloisReport {
    pub fn ok(&self) -> bool {
        self.rotation && self.power != Some(false)
    }
}

struct DoubleData {
    alg: Arc<HopfAlg>,
    u_powers: Vec<AlgElem>,
}

/// Indicator computations over one character ring, with caches for the
/// Sweedler powers, z-counts and explicit modules they share.
pub struct IndicatorEngine<'a> {
    ring: &'a CharRing,
    pub config: IndicatorConfig,
    generic: HashMap<(u64, u64), core::result::Result<AlgElem, String>>,
    zcounts: HashMap<(u64, u64), ZCount>,
    modules: HashMap<usize, Option<Module>>,
    double: Option<Option<DoubleData>>,
    exponents: HashMap<usize, u64>,
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Prime divisors of `n` in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_squarefree(n: u64) -> bool {
    prime_divisors(n).iter().all(|p| (n / p) % p != 0)
}

/// `m` is large compared to `d`: every prime power exactly dividing `d`
/// divides `m` as soon as the prime divides `m`.
pub fn is_large_compared_to(m: u64, d: u64) -> bool {
    let dp = gcd(m, d);
    gcd(d / dp, m) == 1
}

/// `σ_l` on a value known to lie in `Q_modulus`, with `gcd(l, modulus) = 1`.
/// The automorphism is lifted to the value's conductor by replacing `l`
/// with some `l + t·modulus` prime to it.
pub fn galois_on(v: &CycNum, l: u64, modulus: u64) -> Result<CycNum> {
    if gcd(l, modulus) != 1 {
        return Err(domain!("σ_{} is not defined on Q_{}", l, modulus));
    }
    let v = v.minimize_conductor();
    let n = v.conductor() as u64;
    let lift = (0..n.max(1))
        .map(|t| l + t * modulus)
        .find(|&c| gcd(c, n) == 1)
        .ok_or_else(|| invariant!("no lift of σ_{} to conductor {}", l, n))?;
    v.galois(lift as i64)
}

/// `v ∈ Q_n`.
pub fn in_cyclotomic_field(v: &CycNum, n: u64) -> bool {
    n % v.minimize_conductor().conductor() as u64 == 0
}

impl<'a> IndicatorEngine<'a> {
    pub fn new(ring: &'a CharRing) -> Self {
        IndicatorEngine::with_config(ring, IndicatorConfig::default())
    }

    pub fn with_config(ring: &'a CharRing, config: IndicatorConfig) -> Self {
        IndicatorEngine {
            ring,
            config,
            generic: HashMap::new(),
            zcounts: HashMap::new(),
            modules: HashMap::new(),
            double: None,
            exponents: HashMap::new(),
        }
    }

    pub fn ring(&self) -> &CharRing {
        self.ring
    }

    fn alg(&self) -> &Arc<HopfAlg> {
        self.ring.alg()
    }

    fn generic_value(&mut self, i: usize, m: u64, k: u64) -> core::result::Result<CycNum, String> {
        let h = self.ring.alg().clone();
        let max = self.config.max_terms;
        let p = self.generic.entry((m, k)).or_insert_with(|| match h.sweedler_power_mk(&h.integral(), m, k, max) {
            Ok(p) => Ok(p),
            Err(e) => Err(alloc::format!("{}", e)),
        });
        p.as_ref().map(|p| self.ring.get(i).eval(p)).map_err(Clone::clone)
    }

    /// `χ(Λ^{[m,k]})` by the cheapest closed form that applies.
    pub fn closed_value(&mut self, i: usize, m: u64, k: u64) -> Result<CycNum> {
        crate::hopf::check_coprime(m, k)?;
        let h = self.ring.alg().clone();
        let chi = self.ring.get(i);
        match (h.provenance(), chi.induced_data()) {
            (Provenance::Smash | Provenance::Double, Some((g, stab, eta))) => {
                if !self.zcounts.contains_key(&(m, k)) {
                    self.zcounts.insert((m, k), h.z_counts(m, k)?);
                }
                let z = &self.zcounts[&(m, k)];
                let mut s = CycNum::zero();
                for (y, e) in stab.iter().zip(eta) {
                    let c = z.get(g, *y);
                    if c > 0 {
                        s = &s + &e.scale(&rat(c as i64, 1));
                    }
                }
                Ok(s.scale(&rat(1, stab.len() as i64)))
            }
            _ => Ok(chi.eval(&h.integral_power_closed_perm(&sweedler_perm_mk(m, k)?))),
        }
    }

    /// `ν_m(χ_i)`, i.e. [`IndicatorEngine::nu_k`] with `k = 1`.
    pub fn nu(&mut self, i: usize, m: u64) -> Result<IndicatorReport> {
        self.nu_k(i, m, 1)
    }

    pub fn module(&mut self, i: usize) -> Option<&Module> {
        if !self.modules.contains_key(&i) {
            let m = self.ring.module_for(i).ok().flatten();
            self.modules.insert(i, m);
        }
        self.modules[&i].as_ref()
    }

    fn double_data(&mut self) -> Option<&mut DoubleData> {
        if self.double.is_none() {
            let h = self.alg();
            let data = if h.provenance() == Provenance::GroupAlgebra && h.f().order() <= self.config.double_order {
                HopfAlg::double(h.f().clone()).ok().and_then(|d| {
                    let u = d.drinfeld_element().ok()?;
                    Some(DoubleData { alg: Arc::new(d), u_powers: alloc::vec![u] })
                })
            } else {
                None
            };
            self.double = Some(data);
        }
        self.double.as_mut().and_then(Option::as_mut)
    }

    /// `η(u^m)/|F|` with `η` the character of `D(K[F]) ⊗_{K[F]} V`.
    pub fn double_u_value(&mut self, i: usize, m: u64) -> Option<Result<CycNum>> {
        let values = self.ring.get(i).values.clone();
        let dd = self.double_data()?;
        while (dd.u_powers.len() as u64) < m {
            let next = dd.alg.mul(dd.u_powers.last().expect("nonempty"), &dd.u_powers[0]);
            dd.u_powers.push(next);
        }
        let eta = match induced_double_character(&dd.alg, &values) {
            Ok(e) => e,
            Err(e) => return Some(Err(e)),
        };
        let um = &dd.u_powers[m as usize - 1];
        let mut s = CycNum::zero();
        for (&j, c) in um.terms() {
            s = &s + &(c * &eta[j as usize]);
        }
        Some(Ok(s.scale(&rat(1, dd.alg.f().order() as i64))))
    }

    /// `χ_i(Λ^{[m,k]})` by every applicable route, compared exactly.
    pub fn nu_k(&mut self, i: usize, m: u64, k: u64) -> Result<IndicatorReport> {
        crate::hopf::check_coprime(m, k)?;
        let mut values: Vec<(Route, CycNum)> = Vec::new();
        let mut skipped = Vec::new();
        match self.generic_value(i, m, k) {
            Ok(v) => values.push((Route::Definition, v)),
            Err(msg) => skipped.push((Route::Definition, msg)),
        }
        values.push((Route::ClosedForm, self.closed_value(i, m, k)?));
        let (limit, tdim) = (self.config.rotation_limit, self.config.tensor_dim);
        let alg_dim = self.alg().dim();
        if let Some(module) = self.module(i) {
            match module.rotation_trace(m, k, limit) {
                Ok(v) => values.push((Route::Rotation, v)),
                Err(Error::Resource(msg)) => skipped.push((Route::Rotation, msg)),
                Err(e) => return Err(e),
            }
            if k == 1 {
                if alg_dim <= tdim {
                    values.push((Route::CanonicalTensor, module.canonical_tensor_trace(m, tdim)?));
                } else {
                    skipped.push((Route::CanonicalTensor, alloc::format!("dim H = {} above {}", alg_dim, tdim)));
                }
            }
        }
        if k == 1 {
            if let Some(v) = self.double_u_value(i, m) {
                values.push((Route::DoubleU, v?));
            }
        }
        let chi = &self.ring.get(i).name;
        let (_, reference) = values[0].clone();
        for (route, v) in &values[1..] {
            if *v != reference {
                return Err(invariant!(
                    "ν_({},{})({}) disagrees: {} = {} but {} = {}",
                    m,
                    k,
                    chi,
                    values[0].0.as_str(),
                    reference,
                    route.as_str(),
                    v
                ));
            }
        }
        Ok(IndicatorReport {
            chi: chi.clone(),
            m,
            k,
            integrality: as_i64(&reference),
            value: reference,
            routes_used: values.iter().map(|(r, _)| *r).collect(),
            skipped,
            agreement: true,
        })
    }

    /// `ν_2(χ_i) ∈ {0, 1, −1}`, with `0` exactly when `χ_i` is not self-dual.
    pub fn fs_classify(&mut self, i: usize) -> Result<i8> {
        let v = self.nu(i, 2)?.value;
        let h = self.alg().clone();
        let chi = self.ring.get(i);
        let self_dual = char_dual(&h, chi).values == chi.values;
        let nu2 = as_i64(&v).filter(|x| (-1..=1).contains(x)).ok_or_else(|| invariant!("ν₂({}) = {} is not 0 or ±1", chi.name, v))?;
        if (nu2 == 0) == self_dual {
            return Err(invariant!("ν₂({}) = {} but self-dual = {}", chi.name, nu2, self_dual));
        }
        Ok(nu2 as i8)
    }

    /// The Galois identities `σ_l(χ(Λ^{[m,k]})) = χ(Λ^{[m,kl]})`, which needs
    /// `k` and `l` prime to `m`, and `σ_l(χ(Λ^{[m]})) = χ(Λ^{[ml]})`, which is
    /// evaluated only when `l` is also prime to `exp(χ)`.
    pub fn galois_check(&mut self, i: usize, m: u64, k: u64, l: u64) -> Result<GaloisReport> {
        if gcd(k, m) != 1 || gcd(l, m) != 1 {
            return Err(domain!("k = {} and l = {} must be prime to m = {}", k, l, m));
        }
        let kl = if m == 1 { 1 } else { (k * l) % m };
        let rotation = galois_on(&self.closed_value(i, m, k)?, l, m)? == self.closed_value(i, m, kl)?;
        let d = self.exponent_of(i)?.value;
        let power = if gcd(l, d) == 1 {
            Some(galois_on(&self.closed_value(i, m, 1)?, l, d)? == self.closed_value(i, m * l, 1)?)
        } else {
            None
        };
        Ok(GaloisReport { rotation, power })
    }

    fn exp_cap(&self) -> u64 {
        self.config.exp_cap.unwrap_or((self.alg().dim() as u64).saturating_mul(self.alg().dim() as u64))
    }

    /// `exp(χ_i)`, the least `m` with `ν_m(χ_i) = deg χ_i`, certified by the
    /// order of `t` on `V ⊗ H*` when an explicit module exists and
    /// `dim H` is within the tensor guard.
    pub fn exponent_of(&mut self, i: usize) -> Result<ExponentReport> {
        let cap = self.exp_cap();
        let mut routes = alloc::vec![ExponentRoute::NuScan];
        let value = match self.exponents.get(&i) {
            Some(&e) => e,
            None => {
                let deg = CycNum::from_int(self.ring.get(i).degree as i64);
                let mut found = None;
                for m in 1..=cap {
                    if self.closed_value(i, m, 1)? == deg {
                        found = Some(m);
                        break;
                    }
                }
                let e = found.ok_or_else(|| resource!("exponent of {} exceeds the scan cap {}", self.ring.get(i).name, cap))?;
                self.exponents.insert(i, e);
                e
            }
        };
        let tdim = self.config.tensor_dim;
        if self.alg().dim() <= tdim {
            if let Some(module) = self.module(i) {
                let t = module.t_order(cap, tdim)?;
                if t != value {
                    return Err(invariant!("exponent scan gives {} but t has order {}", value, t));
                }
                routes.push(ExponentRoute::TOrder);
            }
        }
        Ok(ExponentReport { value, routes, bound_used: cap })
    }

    /// `exp(H)` as the lcm of the exponents of the simples, checked against
    /// the closed-form exponent, the order of `t` on the regular module
    /// (small algebras) and the order of the Drinfel'd element (doubles).
    pub fn algebra_exponent(&mut self) -> Result<u64> {
        let mut e = 1u64;
        for i in 0..self.ring.k() {
            e = num_integer::lcm(e, self.exponent_of(i)?.value);
        }
        let h = self.alg().clone();
        let closed = h.exponent_closed();
        if closed != e {
            return Err(invariant!("lcm of simple exponents is {} but the closed form gives {}", e, closed));
        }
        if h.provenance() == Provenance::Double {
            let u = h.drinfeld_order(self.exp_cap())?;
            if u != e {
                return Err(invariant!("exp(H) = {} but u has order {}", e, u));
            }
        }
        if h.dim() <= self.config.tensor_dim {
            let t = Module::regular(h.clone())?.t_order(self.exp_cap(), self.config.tensor_dim)?;
            if t != e {
                return Err(invariant!("exp(H) = {} but t on the regular module has order {}", e, t));
            }
        }
        let dim = h.dim() as u64;
        if dim.checked_pow(3).is_some_and(|d3| d3 % e != 0) {
            return Err(invariant!("exp(H) = {} does not divide dim(H)³", e));
        }
        Ok(e)
    }

    /// Integrality of `ν_m(χ_i)` for `m ≤ m_max` wherever it is forced:
    /// for every `m` when `exp(χ_i)` is squarefree, otherwise for `m` large
    /// compared to `exp(χ_i)`. Returns the `m` that were checked.
    pub fn squarefree_integrality_check(&mut self, i: usize, m_max: u64) -> Result<Vec<u64>> {
        let d = self.exponent_of(i)?.value;
        let all = is_squarefree(d);
        let mut checked = Vec::new();
        for m in 1..=m_max {
            if !(all || is_large_compared_to(m, d)) {
                continue;
            }
            let v = self.closed_value(i, m, 1)?;
            if is_rational_integer(&v).is_none() {
                return Err(invariant!("ν_{}({}) = {} is not an integer although exp = {}", m, self.ring.get(i).name, v, d));
            }
            checked.push(m);
        }
        Ok(checked)
    }

    /// `ν_m(χ_i) ∈ Q_m` and `ν_m(χ_i) ∈ Q_{exp(χ_i)}`.
    pub fn field_membership(&mut self, i: usize, m: u64) -> Result<(bool, bool)> {
        let v = self.closed_value(i, m, 1)?;
        let d = self.exponent_of(i)?.value;
        Ok((in_cyclotomic_field(&v, m), in_cyclotomic_field(&v, d)))
    }
}

/// `ν_m(χ_R)` for the regular character, by the closed-form integral power.
pub fn regular_indicator(h: &HopfAlg, m: u64) -> Result<CycNum> {
    Ok(regular_character(h).eval(&h.integral_power_closed_perm(&Perm::identity(m as usize))))
}

/// `|{x ∈ F : x^m = 1}|`.
pub fn root_count(h: &HopfAlg, m: u64) -> u64 {
    let f = h.f();
    (0..f.order() as u32).filter(|&x| f.pow(x, m as i64) == 0).count() as u64
}

/// `(p, p | exp(H))` for each prime `p | dim(H)`; an invariant violation if
/// any flag is false.
pub fn cauchy_check(h: &HopfAlg, exp: u64) -> Result<Vec<(u64, bool)>> {
    let out: Vec<(u64, bool)> = prime_divisors(h.dim() as u64).into_iter().map(|p| (p, exp % p == 0)).collect();
    if let Some((p, _)) = out.iter().find(|(_, ok)| !ok) {
        return Err(invariant!("the prime {} divides dim H = {} but not exp H = {}", p, h.dim(), exp));
    }
    Ok(out)
}
