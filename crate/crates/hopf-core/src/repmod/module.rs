//! Explicit modules given by sparse matrices, and the two module-level
//! indicator routes: the rotation trace on `V^{⊗m}` and the canonical tensor
//! `t = Σ ρ(b_i) ⊗ b_i*` on `V ⊗ H*`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::cyclo::{rat, CycNum};
use crate::error::{domain, invariant, resource, Result};
use crate::hopf::{AlgElem, HopfAlg};
use crate::permcalc::sweedler_perm_mk;

/// Default bound on `d^m` for [`Module::rotation_trace`].
pub const DEFAULT_ROTATION_LIMIT: u64 = 1_000_000;

/// Largest algebra dimension for which a module checks all basis pairs.
const VERIFY_DIM: usize = 4096;

type SVec = BTreeMap<u32, CycNum>;

fn svec_add(v: &mut SVec, i: u32, c: CycNum) {
    if c.is_zero() {
        return;
    }
    match v.get_mut(&i) {
        Some(e) => {
            *e = &*e + &c;
            if e.is_zero() {
                v.remove(&i);
            }
        }
        None => {
            v.insert(i, c);
        }
    }
}

/// A square matrix stored by columns: `cols[j]` lists the nonzero entries
/// `(row, value)` of the image of `e_j`, sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    pub d: usize,
    pub cols: Vec<Vec<(u32, CycNum)>>,
}

impl SparseMat {
    pub fn zero(d: usize) -> SparseMat {
        SparseMat { d, cols: alloc::vec![Vec::new(); d] }
    }

    pub fn identity(d: usize) -> SparseMat {
        SparseMat { d, cols: (0..d as u32).map(|j| alloc::vec![(j, CycNum::one())]).collect() }
    }

    pub fn from_dense(m: &[Vec<CycNum>]) -> SparseMat {
        let d = m.len();
        let cols = (0..d)
            .map(|j| (0..d).filter(|&i| !m[i][j].is_zero()).map(|i| (i as u32, m[i][j].clone())).collect())
            .collect();
        SparseMat { d, cols }
    }

    pub fn to_dense(&self) -> Vec<Vec<CycNum>> {
        let mut m = alloc::vec![alloc::vec![CycNum::zero(); self.d]; self.d];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                m[*i as usize][j] = v.clone();
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn entry(&self, i: u32, j: u32) -> CycNum {
        self.cols[j as usize].iter().find(|(r, _)| *r == i).map_or(CycNum::zero(), |(_, v)| v.clone())
    }

    fn apply(&self, v: &SVec) -> SVec {
        let mut out = SVec::new();
        for (&j, c) in v {
            for (i, a) in &self.cols[j as usize] {
                svec_add(&mut out, *i, a * c);
            }
        }
        out
    }

    fn from_columns(d: usize, cols: Vec<SVec>) -> SparseMat {
        SparseMat { d, cols: cols.into_iter().map(|c| c.into_iter().collect()).collect() }
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        let cols = other.cols.iter().map(|c| self.apply(&c.iter().cloned().collect())).collect();
        SparseMat::from_columns(self.d, cols)
    }

    pub fn add_scaled(&mut self, other: &SparseMat, c: &CycNum) {
        for j in 0..self.d {
            let mut col: SVec = core::mem::take(&mut self.cols[j]).into_iter().collect();
            for (i, v) in &other.cols[j] {
                svec_add(&mut col, *i, v * c);
            }
            self.cols[j] = col.into_iter().collect();
        }
    }

    pub fn trace(&self) -> CycNum {
        let mut s = CycNum::zero();
        for (j, col) in self.cols.iter().enumerate() {
            if let Some((_, v)) = col.iter().find(|(i, _)| *i as usize == j) {
                s = &s + v;
            }
        }
        s
    }
}

/// How a module was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleOrigin {
    /// Induced from a module of the subgroup `subgroup ≤ F_g` of the
    /// stabilizer of `orbit_rep`.
    Induced { orbit_rep: u32, subgroup: Vec<u32> },
    Regular,
    Explicit,
}

/// A left `H`-module: one `d × d` matrix per basis element of `H`.
#[derive(Clone, Debug)]
pub struct Module {
    pub(crate) alg: Arc<HopfAlg>,
    pub name: String,
    pub dim: usize,
    pub mats: Vec<SparseMat>,
    pub origin: ModuleOrigin,
}

impl Module {
    /// Wraps caller-supplied matrices and verifies the module laws.
    pub fn explicit(alg: Arc<HopfAlg>, name: String, mats: Vec<SparseMat>) -> Result<Module> {
        if mats.len() != alg.dim() {
            return Err(domain!("{} matrices given for an algebra of dimension {}", mats.len(), alg.dim()));
        }
        let dim = mats.first().map_or(0, |m| m.d);
        if mats.iter().any(|m| m.d != dim || m.cols.len() != dim) {
            return Err(domain!("module matrices have inconsistent sizes"));
        }
        let m = Module { alg, name, dim, mats, origin: ModuleOrigin::Explicit };
        m.verify()?;
        Ok(m)
    }

    /// Left multiplication on `H`.
    pub fn regular(alg: Arc<HopfAlg>) -> Result<Module> {
        let n = alg.dim();
        let mats = (0..n as u32)
            .map(|i| {
                let cols = (0..n as u32)
                    .map(|j| alg.mul_basis(i, j).map(|k| alloc::vec![(k, CycNum::one())]).unwrap_or_default())
                    .collect();
                SparseMat { d: n, cols }
            })
            .collect();
        let m = Module { alg, name: String::from("regular"), dim: n, mats, origin: ModuleOrigin::Regular };
        m.verify()?;
        Ok(m)
    }

    /// `K[F] ⊗_{K^G # K[K]} W` for a subgroup `K` of the stabilizer of `g`,
    /// where `W` sits in degree `g` and `K` acts through `mats` (parallel to
    /// the sorted element list `k_elems`). With coset representatives `y` of
    /// `F/K`, `(b_h ⊗ x).(y ⊗ w) = δ_{h, y'.g} y' ⊗ s.w` where `xy = y's`.
    pub fn induced(alg: Arc<HopfAlg>, g: u32, k_elems: &[u32], mats: &[SparseMat]) -> Result<Module> {
        let f = alg.f().clone();
        let act = alg.action();
        if g as usize >= alg.g().order() {
            return Err(domain!("orbit representative {} out of range", g));
        }
        let mut ks = k_elems.to_vec();
        ks.sort_unstable();
        ks.dedup();
        if ks.len() != k_elems.len() || mats.len() != k_elems.len() {
            return Err(domain!("subgroup list and matrices must be parallel and duplicate-free"));
        }
        f.subgroup(&ks).map_err(|_| domain!("inducing set is not a subgroup of F"))?;
        if let Some(&x) = ks.iter().find(|&&x| act.act(x, g) != g) {
            return Err(domain!("{} does not fix the orbit representative", f.label(x)));
        }
        // matrices in the order of ks
        let pos: Vec<usize> = ks.iter().map(|x| k_elems.iter().position(|y| y == x).expect("same set")).collect();
        let wm: Vec<&SparseMat> = pos.iter().map(|&p| &mats[p]).collect();
        let wd = wm[0].d;
        let mut local = alloc::vec![u32::MAX; f.order()];
        for (i, &x) in ks.iter().enumerate() {
            local[x as usize] = i as u32;
        }
        let lk = |x: u32| local[x as usize];
        if wm.iter().any(|m| m.d != wd) || *wm[lk(0) as usize] != SparseMat::identity(wd) {
            return Err(domain!("the identity of K must act as the identity of W"));
        }
        for a in 0..ks.len() {
            for b in 0..ks.len() {
                let ab = lk(f.mul(ks[a], ks[b])) as usize;
                if wm[a].mul(wm[b]) != *wm[ab] {
                    return Err(domain!("W is not a module over the subgroup"));
                }
            }
        }
        // coset representatives and the decomposition z = rep · s
        let mut reps: Vec<u32> = Vec::new();
        let mut coset = alloc::vec![(u32::MAX, 0u32); f.order()];
        for y in 0..f.order() as u32 {
            if coset[y as usize].0 != u32::MAX {
                continue;
            }
            let r = reps.len() as u32;
            reps.push(y);
            for &s in &ks {
                coset[f.mul(y, s) as usize] = (r, s);
            }
        }
        let dim = reps.len() * wd;
        let mut out = alloc::vec![SparseMat::zero(dim); alg.dim()];
        for x in 0..f.order() as u32 {
            for (r, &y) in reps.iter().enumerate() {
                let (r2, s) = coset[f.mul(x, y) as usize];
                let h = act.act(reps[r2 as usize], g);
                let w = wm[lk(s) as usize];
                let m = &mut out[alg.index(h, x) as usize];
                for c in 0..wd {
                    m.cols[r * wd + c] =
                        w.cols[c].iter().map(|(i, v)| (r2 * wd as u32 + i, v.clone())).collect();
                }
            }
        }
        for m in &mut out {
            for col in &mut m.cols {
                col.sort_by_key(|e| e.0);
            }
        }
        let module = Module {
            alg,
            name: String::new(),
            dim,
            mats: out,
            origin: ModuleOrigin::Induced { orbit_rep: g, subgroup: ks },
        };
        module.verify()?;
        Ok(module)
    }

    /// [`Module::induced`] from a linear character `lambda` of `K`.
    pub fn induced_linear(alg: Arc<HopfAlg>, g: u32, k_elems: &[u32], lambda: &[CycNum]) -> Result<Module> {
        let mats: Vec<SparseMat> =
            lambda.iter().map(|v| SparseMat { d: 1, cols: alloc::vec![alloc::vec![(0, v.clone())]] }).collect();
        Module::induced(alg, g, k_elems, &mats)
    }

    pub fn alg(&self) -> &Arc<HopfAlg> {
        &self.alg
    }

    /// Checks `ρ(b_i)ρ(b_j) = ρ(b_i b_j)` on all basis pairs and `ρ(1) = I`.
    pub fn verify(&self) -> Result<()> {
        let h = &self.alg;
        if h.dim() > VERIFY_DIM {
            return Err(resource!("module verification limited to algebras of dimension {}", VERIFY_DIM));
        }
        let n = h.dim() as u32;
        let nonzero: Vec<u32> = (0..n).filter(|&i| !self.mats[i as usize].is_zero()).collect();
        for &i in &nonzero {
            for &j in &nonzero {
                let lhs = self.mats[i as usize].mul(&self.mats[j as usize]);
                let ok = match h.mul_basis(i, j) {
                    Some(k) => lhs == self.mats[k as usize],
                    None => lhs.is_zero(),
                };
                if !ok {
                    return Err(invariant!("ρ({})ρ({}) ≠ ρ of the product", h.label(i), h.label(j)));
                }
            }
        }
        if self.act(&h.unit()) != SparseMat::identity(self.dim) {
            return Err(invariant!("ρ(1) is not the identity"));
        }
        Ok(())
    }

    /// `ρ(a)`.
    pub fn act(&self, a: &AlgElem) -> SparseMat {
        let mut m = SparseMat::zero(self.dim);
        for (&i, c) in a.terms() {
            m.add_scaled(&self.mats[i as usize], c);
        }
        m
    }

    /// `tr ρ(b_i)` for every basis element.
    pub fn character_values(&self) -> Vec<CycNum> {
        self.mats.iter().map(SparseMat::trace).collect()
    }

    /// `tr(α^k ∘ ρ^{⊗m}(Λ))` where `α` rotates the tensor factors.
    ///
    /// For `α(v_1 ⊗ ⋯ ⊗ v_m) = v_2 ⊗ ⋯ ⊗ v_m ⊗ v_1` one has
    /// `tr(α^k ∘ (A_1 ⊗ ⋯ ⊗ A_m)) = tr(A_{σ(1)} ⋯ A_{σ(m)})` with
    /// `σ(i) = 1 + (i−1)k mod m`, so the trace is accumulated one
    /// coproduct tuple of `Λ` at a time.
    pub fn rotation_trace(&self, m: u64, k: u64, limit: u64) -> Result<CycNum> {
        let sigma = sweedler_perm_mk(m, k)?;
        let size = (self.dim as u64).checked_pow(m as u32).unwrap_or(u64::MAX);
        if size > limit {
            return Err(resource!("rotation trace needs d^m = {}^{} above the limit {}", self.dim, m, limit));
        }
        let h = &self.alg;
        let order: Vec<usize> = (1..=m as usize).map(|i| sigma.image(i) - 1).collect();
        let mut tuple = alloc::vec![0u32; m as usize];
        let mut total = CycNum::zero();
        for x in 0..h.f().order() as u32 {
            tuple[0] = h.index(0, x);
            self.walk(&mut tuple, 1, &order, &mut total);
        }
        Ok(total.scale(&rat(1, h.f().order() as i64)))
    }

    fn walk(&self, tuple: &mut [u32], len: usize, order: &[usize], total: &mut CycNum) {
        let n = order.len();
        if len == n {
            if self.mats[tuple[n - 1] as usize].is_zero() {
                return;
            }
            // tr(A_{σ(1)} ⋯ A_{σ(m)}) by applying the factors right to left
            for start in 0..self.dim as u32 {
                let mut v = SVec::new();
                v.insert(start, CycNum::one());
                for &p in order.iter().rev() {
                    v = self.mats[tuple[p] as usize].apply(&v);
                    if v.is_empty() {
                        break;
                    }
                }
                if let Some(c) = v.get(&start) {
                    *total = &*total + c;
                }
            }
            return;
        }
        let last = tuple[len - 1];
        let h = &self.alg;
        for (a, b) in h.comult_basis(last) {
            if self.mats[a as usize].is_zero() {
                continue;
            }
            tuple[len - 1] = a;
            tuple[len] = b;
            self.walk(tuple, len + 1, order, total);
        }
        tuple[len - 1] = last;
    }

    /// The matrix of `t = Σ_i ρ(b_i) ⊗ b_i*` on `V ⊗ H*`, where `b_i*`
    /// multiplies the dual basis on the left. Basis vector `e_p ⊗ b_r*` has
    /// index `p·dim H + r`.
    pub fn canonical_tensor(&self, max_alg_dim: usize) -> Result<SparseMat> {
        let h = &self.alg;
        let n = h.dim();
        if n > max_alg_dim {
            return Err(resource!("canonical tensor limited to dim H ≤ {}, got {}", max_alg_dim, n));
        }
        let big = self.dim * n;
        let mut cols: Vec<SVec> = alloc::vec![SVec::new(); big];
        // b_i* b_l* = Σ_r [b_i ⊗ b_l ∈ Δ(b_r)] b_r*
        for r in 0..n as u32 {
            for (i, l) in h.comult_basis(r) {
                for (j, col) in self.mats[i as usize].cols.iter().enumerate() {
                    for (p, v) in col {
                        let row = *p as usize * n + r as usize;
                        svec_add(&mut cols[j * n + l as usize], row as u32, v.clone());
                    }
                }
            }
        }
        Ok(SparseMat::from_columns(big, cols))
    }

    /// `tr(t^m) / dim H`.
    pub fn canonical_tensor_trace(&self, m: u64, max_alg_dim: usize) -> Result<CycNum> {
        let t = self.canonical_tensor(max_alg_dim)?;
        let mut s = CycNum::zero();
        for b in 0..t.d as u32 {
            let mut v = SVec::new();
            v.insert(b, CycNum::one());
            for _ in 0..m {
                v = t.apply(&v);
            }
            if let Some(c) = v.get(&b) {
                s = &s + c;
            }
        }
        Ok(s.scale(&rat(1, self.alg.dim() as i64)))
    }

    /// The multiplicative order of `t`, which is the exponent of the module.
    pub fn t_order(&self, cap: u64, max_alg_dim: usize) -> Result<u64> {
        let t = self.canonical_tensor(max_alg_dim)?;
        let mut e = 1u64;
        for b in 0..t.d as u32 {
            let mut start = SVec::new();
            start.insert(b, CycNum::one());
            let mut v = t.apply(&start);
            let mut n = 1u64;
            while v != start {
                if n >= cap {
                    return Err(resource!("t has order above the cap {}", cap));
                }
                v = t.apply(&v);
                n += 1;
            }
            e = num_integer::lcm(e, n);
            if e > cap {
                return Err(resource!("t has order above the cap {}", cap));
            }
        }
        Ok(e)
    }
}

/// Realizes the simple module induced from the stabilizer character `eta`
/// at `g` by inducing a linear character of a subgroup `K ≤ F_g` with
/// `Ind_K^{F_g} λ = η`. Returns `None` when no subgroup generated by at most
/// two elements carries such a `λ`.
pub fn monomial_realization(alg: Arc<HopfAlg>, g: u32, stabilizer: &[u32], eta: &[CycNum]) -> Result<Option<Module>> {
    let f = alg.f().clone();
    let s = f.subgroup(stabilizer)?;
    let sg = &s.group;
    let ns = sg.order();
    let deg = crate::cyclo::as_i64(&eta[0]).filter(|&d| d > 0).ok_or_else(|| domain!("η(1) is not a positive integer"))?
        as usize;
    if deg == 1 {
        return Module::induced_linear(alg, g, stabilizer, eta).map(Some);
    }
    if ns % deg != 0 {
        return Ok(None);
    }
    let target = ns / deg;
    let mut seen: Vec<Vec<u32>> = Vec::new();
    for a in 0..ns as u32 {
        for b in a..ns as u32 {
            let k = sg.generated_by(&[a, b]);
            if k.len() != target || seen.contains(&k) {
                continue;
            }
            seen.push(k.clone());
            let ksub = sg.subgroup(&k)?;
            for lambda in ksub.group.abelianization_linear_characters()? {
                // λ indexed by local ids of K; induce to F_g
                let mut lam_s = alloc::vec![None; ns];
                for (i, &x) in ksub.embed.iter().enumerate() {
                    lam_s[x as usize] = Some(&lambda[i]);
                }
                let induced_matches = (0..ns as u32).all(|x| {
                    let mut v = CycNum::zero();
                    for t in 0..ns as u32 {
                        if let Some(l) = lam_s[sg.conj(sg.inv(t), x) as usize] {
                            v = &v + l;
                        }
                    }
                    v.scale(&rat(1, target as i64)) == eta[x as usize]
                });
                if induced_matches {
                    let mut pairs: Vec<(u32, CycNum)> =
                        ksub.embed.iter().zip(&lambda).map(|(&x, v)| (s.embed[x as usize], v.clone())).collect();
                    pairs.sort_by_key(|p| p.0);
                    let (elems, vals): (Vec<u32>, Vec<CycNum>) = pairs.into_iter().unzip();
                    return Module::induced_linear(alg, g, &elems, &vals).map(Some);
                }
            }
        }
    }
    Ok(None)
}
