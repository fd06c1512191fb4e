//! Finite groups with element ids `0..order` (0 is always the identity),
//! permutation and semidirect constructors, automorphic actions,
//! stabilizers, conjugacy classes and exact character tables.
//!
//! Permutations compose right to left: `(στ)(i) = σ(τ(i))`, so
//! `(3,4)(3,4,5) = (4,5)`.

mod action;
mod chartable;

pub use action::GroupAction;
pub use chartable::{character_table, CharTable, DEFAULT_CHAR_TABLE_CAP};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use hashbrown::HashMap;

use crate::error::{domain, resource, Result};

/// Largest group the constructors will build.
pub const DEFAULT_ORDER_CAP: usize = 100_000;

/// Groups up to this order keep a full multiplication table.
pub const TABLE_LIMIT: usize = 2048;

#[derive(Clone, Debug)]
enum Mul {
    Table(Vec<u32>),
    Perm,
}

#[derive(Clone, Debug)]
struct PermData {
    degree: usize,
    /// `points[g*degree + i]` is the 0-based image of point `i` under `g`.
    points: Vec<u16>,
    index: HashMap<PermKey, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum PermKey {
    Packed(u64),
    Long(Vec<u16>),
}

fn perm_key(p: &[u16]) -> PermKey {
    if p.len() <= 16 {
        PermKey::Packed(p.iter().fold(0u64, |acc, &v| (acc << 4) | v as u64))
    } else {
        PermKey::Long(p.to_vec())
    }
}

/// A finite group.
#[derive(Clone, Debug)]
pub struct Group {
    order: usize,
    inv: Vec<u32>,
    labels: Vec<String>,
    gens: Vec<u32>,
    mul: Mul,
    perms: Option<PermData>,
}

/// A subgroup as a stand-alone group plus its injection into the parent.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: Group,
    pub embed: Vec<u32>,
}

/// Cycle notation of a 0-based permutation, `()` for the identity.
pub fn cycle_notation(p: &[u16]) -> String {
    let mut seen = alloc::vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        let mut first = true;
        while !seen[i] {
            seen[i] = true;
            if !first {
                out.push(',');
            }
            let _ = write!(out, "{}", i + 1);
            first = false;
            i = p[i] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses cycle notation such as `(1,4,3)(2,5)` into 0-based images.
pub fn parse_cycles(s: &str, degree: usize) -> Result<Vec<u16>> {
    let mut p: Vec<u16> = (0..degree as u16).collect();
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "()" || s.is_empty() {
        return Ok(p);
    }
    for cyc in s.split(')') {
        if cyc.is_empty() {
            continue;
        }
        let body = cyc.strip_prefix('(').ok_or_else(|| domain!("bad cycle notation {:?}", s))?;
        let pts: Vec<usize> = body
            .split(',')
            .map(|t| t.parse::<usize>().map_err(|_| domain!("bad point {:?} in {:?}", t, s)))
            .collect::<Result<_>>()?;
        if pts.iter().any(|&x| x == 0 || x > degree) {
            return Err(domain!("point out of range 1..={} in {:?}", degree, s));
        }
        // cycles are applied right to left, so compose with the current map
        let mut c: Vec<u16> = (0..degree as u16).collect();
        for (i, &x) in pts.iter().enumerate() {
            c[x - 1] = (pts[(i + 1) % pts.len()] - 1) as u16;
        }
        let composed: Vec<u16> = (0..degree).map(|i| p[c[i] as usize]).collect();
        p = composed;
    }
    Ok(p)
}

impl Group {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn label(&self, g: u32) -> &str {
        &self.labels[g as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// A generating set.
    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.mul {
            Mul::Table(t) => t[a as usize * self.order + b as usize],
            Mul::Perm => {
                let pd = self.perms.as_ref().expect("permutation data");
                let d = pd.degree;
                let pa = &pd.points[a as usize * d..(a as usize + 1) * d];
                let pb = &pd.points[b as usize * d..(b as usize + 1) * d];
                let prod: Vec<u16> = pb.iter().map(|&j| pa[j as usize]).collect();
                *pd.index.get(&perm_key(&prod)).expect("closed under products")
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u32, k: i64) -> u32 {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut e = k.unsigned_abs();
        let mut acc = 0;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    /// `x g x⁻¹`.
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(x, g), self.inv(x))
    }

    pub fn element_order(&self, g: u32) -> u64 {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order as u32).fold(1u64, |acc, g| num_integer::lcm(acc, self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().all(|&a| self.gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Degree and 0-based images when the group is a permutation group.
    pub fn perm(&self, g: u32) -> Option<&[u16]> {
        self.perms.as_ref().map(|pd| &pd.points[g as usize * pd.degree..(g as usize + 1) * pd.degree])
    }

    pub fn perm_degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|pd| pd.degree)
    }

    /// Element with the given 0-based images.
    pub fn find_perm(&self, images: &[u16]) -> Option<u32> {
        let pd = self.perms.as_ref()?;
        if images.len() != pd.degree {
            return None;
        }
        pd.index.get(&perm_key(images)).copied()
    }

    /// Element given in cycle notation, e.g. `(1,4,3)`.
    pub fn find_cycles(&self, s: &str) -> Result<u32> {
        let d = self.perm_degree().ok_or_else(|| domain!("not a permutation group"))?;
        let p = parse_cycles(s, d)?;
        self.find_perm(&p).ok_or_else(|| domain!("{} is not an element of the group", s))
    }

    pub fn find_label(&self, s: &str) -> Option<u32> {
        self.labels.iter().position(|l| l == s).map(|i| i as u32)
    }

    /// Conjugacy classes; the identity class comes first and classes are
    /// ordered by their smallest element id.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let mut class_of = alloc::vec![u32::MAX; self.order];
        let mut classes: Vec<Vec<u32>> = Vec::new();
        for g in 0..self.order as u32 {
            if class_of[g as usize] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            let mut members = alloc::vec![g];
            class_of[g as usize] = id;
            let mut i = 0;
            while i < members.len() {
                let h = members[i];
                for &s in &self.gens {
                    let c = self.conj(s, h);
                    if class_of[c as usize] == u32::MAX {
                        class_of[c as usize] = id;
                        members.push(c);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    /// Closure of a set of elements under multiplication.
    pub fn generated_by(&self, gens: &[u32]) -> Vec<u32> {
        let mut inside = alloc::vec![false; self.order];
        let mut elems = alloc::vec![0u32];
        inside[0] = true;
        let mut i = 0;
        while i < elems.len() {
            let a = elems[i];
            for &s in gens {
                let b = self.mul(a, s);
                if !inside[b as usize] {
                    inside[b as usize] = true;
                    elems.push(b);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// Builds the subgroup on a multiplicatively closed set of elements.
    pub fn subgroup(&self, elems: &[u32]) -> Result<Subgroup> {
        let mut embed: Vec<u32> = elems.to_vec();
        embed.sort_unstable();
        embed.dedup();
        if embed.first() != Some(&0) {
            return Err(domain!("subgroup must contain the identity"));
        }
        let mut local = HashMap::with_capacity(embed.len());
        for (i, &g) in embed.iter().enumerate() {
            local.insert(g, i as u32);
        }
        let n = embed.len();
        let mut table = alloc::vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = self.mul(embed[i], embed[j]);
                table[i * n + j] = *local.get(&p).ok_or_else(|| domain!("element set is not closed"))?;
            }
        }
        let labels = embed.iter().map(|&g| self.labels[g as usize].clone()).collect();
        let perms = self.perms.as_ref().map(|pd| {
            let mut points = Vec::with_capacity(n * pd.degree);
            for &g in &embed {
                points.extend_from_slice(&pd.points[g as usize * pd.degree..(g as usize + 1) * pd.degree]);
            }
            (pd.degree, points)
        });
        let mut group = Group::from_table_unchecked(table, labels)?;
        if let Some((degree, points)) = perms {
            group.attach_perms(degree, points);
        }
        Ok(Subgroup { group, embed })
    }

    /// Centralizer of `g`.
    pub fn centralizer(&self, g: u32) -> Result<Subgroup> {
        let elems: Vec<u32> = (0..self.order as u32).filter(|&x| self.mul(x, g) == self.mul(g, x)).collect();
        self.subgroup(&elems)
    }

    /// The derived subgroup `[G,G]`, as the normal closure of commutators of
    /// generators.
    pub fn derived_subgroup(&self) -> Vec<u32> {
        let mut seeds = Vec::new();
        for &a in &self.gens {
            for &b in &self.gens {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                seeds.push(c);
            }
        }
        let mut inside = alloc::vec![false; self.order];
        let mut elems = alloc::vec![0u32];
        inside[0] = true;
        let mut i = 0;
        let mut queue_gens = seeds.clone();
        queue_gens.retain(|&c| c != 0);
        while i < elems.len() {
            let a = elems[i];
            let mut next = Vec::new();
            for &s in &queue_gens {
                next.push(self.mul(a, s));
            }
            for &x in &self.gens {
                next.push(self.conj(x, a));
            }
            for b in next {
                if !inside[b as usize] {
                    inside[b as usize] = true;
                    elems.push(b);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// Linear characters `G → Q(ζ)^×`, pulled back from `G/[G,G]`; each is a
    /// value vector over the elements of `G`. The trivial character is first.
    pub fn abelianization_linear_characters(&self) -> Result<Vec<Vec<crate::cyclo::CycNum>>> {
        let derived = self.derived_subgroup();
        let mut coset = alloc::vec![u32::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order as u32 {
            if coset[g as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(g);
            for &d in &derived {
                coset[self.mul(g, d) as usize] = id;
            }
        }
        let r = reps.len();
        let mut table = alloc::vec![0u32; r * r];
        for i in 0..r {
            for j in 0..r {
                table[i * r + j] = coset[self.mul(reps[i], reps[j]) as usize];
            }
        }
        let labels = (0..r).map(|i| alloc::format!("q{}", i)).collect();
        let quotient = Group::from_table_unchecked(table, labels)?;
        let ct = character_table(&quotient, DEFAULT_CHAR_TABLE_CAP.max(r), 0)?;
        let mut out = Vec::with_capacity(r);
        for row in 0..ct.num_irreducibles() {
            out.push((0..self.order as u32).map(|g| ct.value(row, coset[g as usize]).clone()).collect());
        }
        Ok(out)
    }

    /// The opposite group: same elements, `a ∘ b = ba`.
    pub fn opposite(&self) -> Result<Group> {
        if self.order > TABLE_LIMIT {
            return Err(resource!("opposite group of order {} exceeds the table limit", self.order));
        }
        let n = self.order;
        let mut table = alloc::vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.mul(b as u32, a as u32);
            }
        }
        let mut g = Group::from_table_unchecked(table, self.labels.clone())?;
        g.gens = self.gens.clone();
        Ok(g)
    }

    fn from_table_unchecked(table: Vec<u32>, labels: Vec<String>) -> Result<Group> {
        let n = labels.len();
        if table.len() != n * n || n == 0 {
            return Err(domain!("table size does not match {} labels", n));
        }
        if (0..n).any(|i| table[i] != i as u32 || table[i * n] != i as u32) {
            return Err(domain!("element 0 is not the identity"));
        }
        let mut inv = alloc::vec![u32::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
            if inv[a] == u32::MAX {
                return Err(domain!("element {} has no inverse", labels[a]));
            }
        }
        let mut g = Group { order: n, inv, labels, gens: Vec::new(), mul: Mul::Table(table), perms: None };
        g.gens = g.greedy_generators();
        Ok(g)
    }

    fn attach_perms(&mut self, degree: usize, points: Vec<u16>) {
        let mut index = HashMap::with_capacity(self.order);
        for g in 0..self.order {
            index.insert(perm_key(&points[g * degree..(g + 1) * degree]), g as u32);
        }
        self.perms = Some(PermData { degree, points, index });
    }

    fn greedy_generators(&self) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut span = alloc::vec![0u32];
        for g in 1..self.order as u32 {
            if span.binary_search(&g).is_err() {
                gens.push(g);
                span = self.generated_by(&gens);
            }
            if span.len() == self.order {
                break;
            }
        }
        gens
    }

    /// A group from a full multiplication table, with every axiom checked.
    pub fn from_table(table: Vec<u32>, labels: Vec<String>) -> Result<Group> {
        let n = labels.len();
        if table.iter().any(|&x| x as usize >= n) {
            return Err(domain!("table entry out of range"));
        }
        let g = Group::from_table_unchecked(table, labels)?;
        g.check_axioms()?;
        Ok(g)
    }

    /// Associativity (exhaustive up to order 256, otherwise against the
    /// generators) and the inverse law.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order as u32;
        for a in 0..n {
            if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                return Err(domain!("inverse law fails at {}", self.label(a)));
            }
        }
        let thirds: Vec<u32> = if n <= 256 { (0..n).collect() } else { self.gens.clone() };
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for &c in &thirds {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(domain!(
                            "associativity fails at ({}, {}, {})",
                            self.label(a),
                            self.label(b),
                            self.label(c)
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `Z_n` with elements `c^i` (id `i`).
pub fn make_cyclic(n: usize) -> Result<Group> {
    if n == 0 || n > DEFAULT_ORDER_CAP {
        return Err(resource!("cyclic group order {} outside 1..={}", n, DEFAULT_ORDER_CAP));
    }
    if n > TABLE_LIMIT {
        let gen: Vec<u16> = (0..n).map(|i| ((i + 1) % n) as u16).collect();
        return from_perm_generators(n, &[gen]);
    }
    let table = (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect();
    let labels = (0..n)
        .map(|i| match i {
            0 => String::from("1"),
            1 => String::from("c"),
            _ => alloc::format!("c^{}", i),
        })
        .collect();
    let mut g = Group::from_table_unchecked(table, labels)?;
    g.gens = if n > 1 { alloc::vec![1] } else { Vec::new() };
    Ok(g)
}

/// Closure of 0-based permutations of `{0,…,degree−1}`; elements are sorted
/// lexicographically by images, so the identity is element 0.
pub fn from_perm_generators(degree: usize, gens: &[Vec<u16>]) -> Result<Group> {
    from_perm_generators_capped(degree, gens, DEFAULT_ORDER_CAP)
}

pub fn from_perm_generators_capped(degree: usize, gens: &[Vec<u16>], cap: usize) -> Result<Group> {
    if degree == 0 || degree > u16::MAX as usize {
        return Err(domain!("permutation degree {} unsupported", degree));
    }
    for g in gens {
        let mut seen = alloc::vec![false; degree];
        if g.len() != degree || g.iter().any(|&v| (v as usize) >= degree || core::mem::replace(&mut seen[v as usize], true)) {
            return Err(domain!("generator {:?} is not a permutation of degree {}", g, degree));
        }
    }
    let id: Vec<u16> = (0..degree as u16).collect();
    let mut index: HashMap<PermKey, u32> = HashMap::new();
    let mut elems: Vec<Vec<u16>> = alloc::vec![id.clone()];
    index.insert(perm_key(&id), 0);
    let mut i = 0;
    while i < elems.len() {
        for s in gens {
            // s ∘ elems[i]
            let p: Vec<u16> = elems[i].iter().map(|&j| s[j as usize]).collect();
            let key = perm_key(&p);
            if !index.contains_key(&key) {
                if elems.len() >= cap {
                    return Err(resource!("permutation closure exceeds {} elements", cap));
                }
                index.insert(key, elems.len() as u32);
                elems.push(p);
            }
        }
        i += 1;
    }
    elems.sort_unstable();
    let n = elems.len();
    let mut points = Vec::with_capacity(n * degree);
    for e in &elems {
        points.extend_from_slice(e);
    }
    let labels: Vec<String> = elems.iter().map(|e| cycle_notation(e)).collect();
    let mut group = Group {
        order: n,
        inv: Vec::new(),
        labels,
        gens: Vec::new(),
        mul: Mul::Perm,
        perms: None,
    };
    group.attach_perms(degree, points);
    let pd = group.perms.as_ref().expect("just attached");
    let mut inv = alloc::vec![0u32; n];
    for g in 0..n {
        let p = &pd.points[g * degree..(g + 1) * degree];
        let mut q = alloc::vec![0u16; degree];
        for (a, &b) in p.iter().enumerate() {
            q[b as usize] = a as u16;
        }
        inv[g] = pd.index[&perm_key(&q)];
    }
    group.inv = inv;
    group.gens = gens
        .iter()
        .filter(|s| **s != id)
        .map(|s| pd.index[&perm_key(s)])
        .collect();
    if n <= TABLE_LIMIT {
        let mut table = alloc::vec![0u32; n * n];
        for a in 0..n as u32 {
            for b in 0..n as u32 {
                table[a as usize * n + b as usize] = group.mul(a, b);
            }
        }
        group.mul = Mul::Table(table);
    }
    Ok(group)
}

pub fn make_symmetric(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(domain!("symmetric group degree must be positive"));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t: Vec<u16> = (0..n as u16).collect();
        t.swap(0, 1);
        gens.push(t);
        gens.push((0..n).map(|i| ((i + 1) % n) as u16).collect());
    }
    from_perm_generators(n, &gens)
}

pub fn make_alternating(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(domain!("alternating group degree must be positive"));
    }
    // 3-cycles (1,2,k) generate A_n
    let gens: Vec<Vec<u16>> = (2..n)
        .map(|k| {
            let mut p: Vec<u16> = (0..n as u16).collect();
            p[0] = 1;
            p[1] = k as u16;
            p[k] = 0;
            p
        })
        .collect();
    from_perm_generators(n, &gens)
}

fn is_small_prime(n: u64) -> bool {
    crate::linalg::is_prime(n)
}

/// `Z_q ⋊ Z_p` with `(m,n)(m′,n′) = (m + aⁿm′, n + n′)`; element `(m,n)` has
/// id `n·q + m`.
pub fn make_semidirect_zq_zp(q: u64, p: u64, a: u64) -> Result<Group> {
    if !is_small_prime(q) || !is_small_prime(p) {
        return Err(domain!("q = {} and p = {} must be prime", q, p));
    }
    if (q - 1) % p != 0 {
        return Err(domain!("p = {} does not divide q − 1 = {}", p, q - 1));
    }
    let a = a % q;
    let ord = (1..=q).find(|&k| crate::linalg::pow_mod(a, k, q) == 1).unwrap_or(0);
    if ord != p {
        return Err(domain!("a = {} has order {} modulo {}, expected {}", a, ord, q, p));
    }
    let n = (p * q) as usize;
    if n > TABLE_LIMIT {
        return Err(resource!("semidirect product of order {} exceeds the table limit", n));
    }
    let id = |m: u64, k: u64| (k * q + m) as u32;
    let mut table = alloc::vec![0u32; n * n];
    for x in 0..n as u64 {
        let (m, k) = (x % q, x / q);
        let ak = crate::linalg::pow_mod(a, k, q);
        for y in 0..n as u64 {
            let (m2, k2) = (y % q, y / q);
            table[(x as usize) * n + y as usize] = id((m + ak * m2) % q, (k + k2) % p);
        }
    }
    let labels = (0..n as u64).map(|x| alloc::format!("({},{})", x % q, x / q)).collect();
    let mut g = Group::from_table_unchecked(table, labels)?;
    g.gens = alloc::vec![id(1, 0), id(0, 1)];
    g.check_axioms()?;
    Ok(g)
}

#[cfg(test)]
mod tests;
