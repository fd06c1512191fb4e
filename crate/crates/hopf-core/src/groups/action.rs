use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{Group, Subgroup};
use crate::error::{domain, Result};

/// Work budget for checking the automorphism law on every triple.
const EXHAUSTIVE_CHECK_BUDGET: usize = 50_000_000;

/// A left action of `F` on `G` by group automorphisms, tabulated as
/// `x.g = table[x·|G| + g]`.
#[derive(Clone, Debug)]
pub struct GroupAction {
    actor: Arc<Group>,
    target: Arc<Group>,
    table: Vec<u32>,
}

impl GroupAction {
    pub fn actor(&self) -> &Arc<Group> {
        &self.actor
    }

    pub fn target(&self) -> &Arc<Group> {
        &self.target
    }

    #[inline]
    pub fn act(&self, x: u32, g: u32) -> u32 {
        self.table[x as usize * self.target.order() + g as usize]
    }

    /// Builds and validates an action from an explicit table.
    pub fn from_table(actor: Arc<Group>, target: Arc<Group>, table: Vec<u32>) -> Result<GroupAction> {
        if table.len() != actor.order() * target.order() {
            return Err(domain!("action table has {} entries, expected {}", table.len(), actor.order() * target.order()));
        }
        if table.iter().any(|&v| v as usize >= target.order()) {
            return Err(domain!("action table entry out of range"));
        }
        let a = GroupAction { actor, target, table };
        a.validate()?;
        Ok(a)
    }

    pub fn trivial(actor: Arc<Group>, target: Arc<Group>) -> GroupAction {
        let n = target.order() as u32;
        let table = (0..actor.order()).flat_map(|_| 0..n).collect();
        GroupAction { actor, target, table }
    }

    /// `c^i.σ = τ^i σ τ^{−i}` for the cyclic actor `⟨c⟩`, where `τ` (0-based
    /// images) must normalize the permutation group `target`.
    pub fn conj_by_perm(actor: Arc<Group>, target: Arc<Group>, tau: &[u16]) -> Result<GroupAction> {
        let degree = target.perm_degree().ok_or_else(|| domain!("conjugation action needs a permutation group"))?;
        if tau.len() != degree {
            return Err(domain!("conjugating permutation has degree {}, expected {}", tau.len(), degree));
        }
        let gens = actor.generators();
        if gens.len() > 1 || (actor.order() > 1 && actor.element_order(gens[0]) as usize != actor.order()) {
            return Err(domain!("conjugation by a permutation needs a cyclic acting group"));
        }
        let mut tau_inv = alloc::vec![0u16; degree];
        for (i, &t) in tau.iter().enumerate() {
            tau_inv[t as usize] = i as u16;
        }
        let conj_once = |g: u32| -> Result<u32> {
            let p = target.perm(g).expect("permutation group");
            // τ ∘ p ∘ τ⁻¹
            let q: Vec<u16> = (0..degree).map(|i| tau[p[tau_inv[i] as usize] as usize]).collect();
            target.find_perm(&q).ok_or_else(|| domain!("conjugation does not preserve the group"))
        };
        let n = target.order();
        let mut step = alloc::vec![0u32; n];
        for g in 0..n as u32 {
            step[g as usize] = conj_once(g)?;
        }
        let f = actor.order();
        let mut table = alloc::vec![0u32; f * n];
        let mut power = 0u32;
        let mut cur: Vec<u32> = (0..n as u32).collect();
        let gen = if f > 1 { gens[0] } else { 0 };
        for _ in 0..f {
            let row = power as usize * n;
            table[row..row + n].copy_from_slice(&cur);
            cur = cur.iter().map(|&g| step[g as usize]).collect();
            power = actor.mul(gen, power);
        }
        if cur.iter().enumerate().any(|(g, &h)| g as u32 != h) {
            return Err(domain!("τ^{} does not act trivially, so the action is not defined", f));
        }
        let a = GroupAction { actor, target, table };
        a.validate()?;
        Ok(a)
    }

    /// `F` acting on `F^op` by `x.g = xgx⁻¹`, the action behind the double.
    pub fn conjugation_on_opposite(group: Arc<Group>) -> Result<GroupAction> {
        let op = Arc::new(group.opposite()?);
        let n = group.order();
        let mut table = alloc::vec![0u32; n * n];
        for x in 0..n as u32 {
            for g in 0..n as u32 {
                table[x as usize * n + g as usize] = group.conj(x, g);
            }
        }
        let a = GroupAction { actor: group, target: op, table };
        a.validate()?;
        Ok(a)
    }

    /// Checks that `1` acts trivially and that `x ↦ (g ↦ x.g)` is a
    /// homomorphism into `Aut(G)`. Every triple is checked when affordable;
    /// otherwise the laws are checked against generators, which is
    /// equivalent.
    pub fn validate(&self) -> Result<()> {
        let (f, g) = (self.actor.as_ref(), self.target.as_ref());
        let n = g.order() as u32;
        if (0..n).any(|h| self.act(0, h) != h) {
            return Err(domain!("the identity does not act trivially"));
        }
        let exhaustive = f.order().saturating_mul(g.order()).saturating_mul(g.order()) <= EXHAUSTIVE_CHECK_BUDGET;
        let all_f: Vec<u32> = (0..f.order() as u32).collect();
        let all_g: Vec<u32> = (0..n).collect();
        let xs: &[u32] = if exhaustive { &all_f } else { f.generators() };
        let hs: &[u32] = if exhaustive { &all_g } else { g.generators() };
        for &x in xs {
            let mut seen = alloc::vec![false; n as usize];
            for a in 0..n {
                let img = self.act(x, a);
                if core::mem::replace(&mut seen[img as usize], true) {
                    return Err(domain!("{} does not act bijectively", f.label(x)));
                }
                for &b in hs {
                    if self.act(x, g.mul(a, b)) != g.mul(img, self.act(x, b)) {
                        return Err(domain!(
                            "x.(gh) ≠ (x.g)(x.h) at x = {}, g = {}, h = {}",
                            f.label(x),
                            g.label(a),
                            g.label(b)
                        ));
                    }
                }
            }
        }
        let ys: &[u32] = if exhaustive { &all_f } else { f.generators() };
        for x in 0..f.order() as u32 {
            for &y in ys {
                let xy = f.mul(x, y);
                for a in 0..n {
                    if self.act(xy, a) != self.act(x, self.act(y, a)) {
                        return Err(domain!("(xy).g ≠ x.(y.g) at x = {}, y = {}", f.label(x), f.label(y)));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_trivial(&self) -> bool {
        let n = self.target.order() as u32;
        self.actor.generators().iter().all(|&x| (0..n).all(|g| self.act(x, g) == g))
    }

    /// The `F`-orbit of `g`, sorted.
    pub fn orbit(&self, g: u32) -> Vec<u32> {
        let mut seen = alloc::vec![false; self.target.order()];
        let mut out = alloc::vec![g];
        seen[g as usize] = true;
        let mut i = 0;
        while i < out.len() {
            let h = out[i];
            for &x in self.actor.generators() {
                let k = self.act(x, h);
                if !core::mem::replace(&mut seen[k as usize], true) {
                    out.push(k);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// All orbits, ordered by their smallest element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut done = alloc::vec![false; self.target.order()];
        let mut out = Vec::new();
        for g in 0..self.target.order() as u32 {
            if done[g as usize] {
                continue;
            }
            let o = self.orbit(g);
            for &h in &o {
                done[h as usize] = true;
            }
            out.push(o);
        }
        out
    }

    /// `F_g = {x : x.g = g}`.
    pub fn stabilizer(&self, g: u32) -> Result<Subgroup> {
        let elems: Vec<u32> = (0..self.actor.order() as u32).filter(|&x| self.act(x, g) == g).collect();
        self.actor.subgroup(&elems)
    }

    /// For each point `h` of the orbit of `g`, an `x` with `x.g = h`.
    pub fn transversal(&self, g: u32) -> Vec<(u32, u32)> {
        let mut rep = alloc::vec![u32::MAX; self.target.order()];
        rep[g as usize] = 0;
        let mut queue = alloc::vec![g];
        let mut i = 0;
        while i < queue.len() {
            let h = queue[i];
            for &s in self.actor.generators() {
                let k = self.act(s, h);
                if rep[k as usize] == u32::MAX {
                    rep[k as usize] = self.actor.mul(s, rep[h as usize]);
                    queue.push(k);
                }
            }
            i += 1;
        }
        queue.sort_unstable();
        queue.into_iter().map(|h| (h, rep[h as usize])).collect()
    }
}
