//! Perron-Frobenius analysis of fusion matrices.
//!
//! For a character `χ` with fusion matrix `A` (`χχ_j = Σ_i a_ij χ_i`) the
//! simples reachable from the trivial one form a strongly connected set on
//! which `A` is indecomposable with Perron eigenvalue `deg χ`. Its index of
//! imprimitivity is computed as the gcd of the cycle lengths of the fusion
//! digraph, and compared with the number of central grouplikes acting on
//! `V` by scalars.

mod roots;

pub use roots::{certified_peripheral_count, peripheral_eigenvalue_count, poly_roots, squarefree_part};

use alloc::vec::Vec;

use crate::cyclo::{rat, CycNum, Rational};
use crate::error::{invariant, Result};
use crate::hopf::AlgElem;
use crate::linalg;
use crate::repmod::{char_dual, CharRing};


/// Outcome of [`analyze`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionAnalysis {
    pub chi: usize,
    pub matrix: Vec<Vec<u64>>,
    /// Indices reachable from the trivial simple, closed under duals.
    pub reachable: Vec<usize>,
    pub indecomposable_on_reachable: bool,
    /// Strongly connected components of the digraph on `reachable`.
    pub blocks: Vec<Vec<usize>>,
    pub perron: u64,
    /// Index of imprimitivity of the block containing the trivial simple.
    pub index: u64,
    pub gv_order: Option<u64>,
}

/// Divisibility relations between the index, `exp(H)` and `ord(χ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub index: u64,
    pub exp: u64,
    pub ord: u64,
    pub index_divides_exp: bool,
    pub index_divides_ord: bool,
    pub ord_at_most_k: bool,
}

/// Edges `j → i` whenever `a_ij > 0`.
fn successors(a: &[Vec<u64>], j: usize) -> impl Iterator<Item = usize> + '_ {
    (0..a.len()).filter(move |&i| a[i][j] > 0)
}

fn closure(a: &[Vec<u64>], seeds: &[usize], dual: &[usize]) -> Vec<usize> {
    let k = a.len();
    let mut seen = alloc::vec![false; k];
    let mut stack: Vec<usize> = seeds.to_vec();
    while let Some(j) = stack.pop() {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        stack.extend(successors(a, j).filter(|&i| !seen[i]));
        if !seen[dual[j]] {
            stack.push(dual[j]);
        }
    }
    (0..k).filter(|&i| seen[i]).collect()
}

/// Tarjan's algorithm restricted to the vertices in `verts`; components are
/// returned sorted internally and ordered by their smallest vertex.
pub fn strongly_connected_components(a: &[Vec<u64>], verts: &[usize]) -> Vec<Vec<usize>> {
    struct State<'a> {
        a: &'a [Vec<u64>],
        inside: Vec<bool>,
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        out: Vec<Vec<usize>>,
    }
    fn visit(s: &mut State, v: usize) {
        s.index[v] = Some(s.next);
        s.low[v] = s.next;
        s.next += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        let succ: Vec<usize> = successors(s.a, v).filter(|&w| s.inside[w]).collect();
        for w in succ {
            match s.index[w] {
                None => {
                    visit(s, w);
                    s.low[v] = s.low[v].min(s.low[w]);
                }
                Some(iw) if s.on_stack[w] => s.low[v] = s.low[v].min(iw),
                _ => {}
            }
        }
        if Some(s.low[v]) == s.index[v] {
            let mut comp = Vec::new();
            loop {
                let w = s.stack.pop().expect("tarjan stack");
                s.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            comp.sort_unstable();
            s.out.push(comp);
        }
    }
    let k = a.len();
    let mut inside = alloc::vec![false; k];
    for &v in verts {
        inside[v] = true;
    }
    let mut s = State {
        a,
        inside,
        index: alloc::vec![None; k],
        low: alloc::vec![0; k],
        on_stack: alloc::vec![false; k],
        stack: Vec::new(),
        next: 0,
        out: Vec::new(),
    };
    for &v in verts {
        if s.index[v].is_none() {
            visit(&mut s, v);
        }
    }
    s.out.sort_by_key(|c| c[0]);
    s.out
}

/// Gcd of the lengths of all closed walks in a strongly connected digraph:
/// with BFS levels `ℓ` from any vertex it is the gcd of `ℓ(u) + 1 − ℓ(v)`
/// over the edges `u → v`.
pub fn cycle_gcd(a: &[Vec<u64>], comp: &[usize]) -> u64 {
    let k = a.len();
    let mut inside = alloc::vec![false; k];
    for &v in comp {
        inside[v] = true;
    }
    let mut level = alloc::vec![None::<i64>; k];
    level[comp[0]] = Some(0);
    let mut queue = alloc::collections::VecDeque::from([comp[0]]);
    let mut g = 0i64;
    while let Some(u) = queue.pop_front() {
        let lu = level[u].expect("visited");
        for v in successors(a, u).filter(|&v| inside[v]) {
            match level[v] {
                None => {
                    level[v] = Some(lu + 1);
                    queue.push_back(v);
                }
                Some(lv) => g = num_integer::gcd(g, (lu + 1 - lv).abs()),
            }
        }
    }
    g.max(0) as u64
}

fn dual_indices(ring: &CharRing) -> Result<Vec<usize>> {
    let h = ring.alg();
    ring.irreducibles
        .iter()
        .map(|c| {
            let d = char_dual(h, c);
            ring.irreducibles
                .iter()
                .position(|e| e.values == d.values)
                .ok_or_else(|| invariant!("the dual of {} is not irreducible", c.name))
        })
        .collect()
}

fn submatrix(a: &[Vec<u64>], idx: &[usize]) -> Vec<Vec<Rational>> {
    idx.iter().map(|&i| idx.iter().map(|&j| rat(a[i][j] as i64, 1)).collect()).collect()
}

/// Reachability, block structure, Perron eigenvalue and index for `χ_i`.
///
/// The Perron value is certified exactly: `det(A_R − nI) = 0` for the
/// restriction `A_R` to the reachable simples, and the positive row vector of
/// degrees satisfies `d A_R = n d`, which by the Collatz-Wielandt bound forces
/// the spectral radius to be `n`.
pub fn analyze(ring: &CharRing, i: usize) -> Result<FusionAnalysis> {
    let chi = ring.get(i);
    let a = ring.fusion_matrix(chi)?;
    let dual = dual_indices(ring)?;
    let n = chi.degree;
    let degrees = ring.degrees();
    let mut seeds = alloc::vec![0usize];
    seeds.extend(successors(&a, 0));
    let reachable = closure(&a, &seeds, &dual);

    let blocks = strongly_connected_components(&a, &reachable);
    let mut block_of = alloc::vec![usize::MAX; a.len()];
    for (b, comp) in blocks.iter().enumerate() {
        for &v in comp {
            block_of[v] = b;
        }
    }
    for &p in &reachable {
        for &q in &reachable {
            if block_of[p] != block_of[q] && a[p][q] != 0 {
                return Err(invariant!("fusion matrix of {} is not block diagonal on the reachable simples", chi.name));
            }
        }
    }

    let ar = submatrix(&a, &reachable);
    let mut shifted = ar.clone();
    for (r, row) in shifted.iter_mut().enumerate() {
        row[r] -= rat(n as i64, 1);
    }
    if linalg::determinant(&shifted) != rat(0, 1) {
        return Err(invariant!("deg {} = {} is not an eigenvalue of the fusion matrix", chi.name, n));
    }
    for &j in &reachable {
        let lhs: u64 = reachable.iter().map(|&p| degrees[p] * a[p][j]).sum();
        if lhs != n * degrees[j] {
            return Err(invariant!("degree vector is not a left Perron vector for {}", chi.name));
        }
    }

    let trivial_block = &blocks[block_of[0]];
    let index = cycle_gcd(&a, trivial_block);
    if index == 0 {
        return Err(invariant!("the trivial block of {} has no cycles", chi.name));
    }
    Ok(FusionAnalysis {
        chi: i,
        indecomposable_on_reachable: blocks.len() == 1,
        matrix: a,
        reachable,
        blocks,
        perron: n,
        index,
        gv_order: None,
    })
}

/// Central grouplikes acting on the simple `χ_i` by a scalar, defined only
/// when every simple is reachable; returns the group order and a generator.
pub fn gv_group(ring: &CharRing, analysis: &FusionAnalysis) -> Option<(u64, AlgElem)> {
    if analysis.reachable.len() != ring.k() {
        return None;
    }
    let h = ring.alg();
    let chi = ring.get(analysis.chi);
    let central = h.central_grouplikes().ok()?;
    let deg = CycNum::from_int(chi.degree as i64);
    let mut scalars: Vec<AlgElem> = Vec::new();
    for g in central {
        let Ok(xi) = chi.eval(&g).checked_div(&deg) else { continue };
        let scalar = (0..h.dim() as u32).all(|b| {
            let hb = h.basis(b);
            chi.eval(&h.mul(&hb, &g)) == &xi * chi.value(b)
        });
        if scalar {
            scalars.push(g);
        }
    }
    let order = scalars.len() as u64;
    let one = h.unit();
    let generator = scalars.into_iter().find(|g| {
        let mut p = g.clone();
        let mut k = 1u64;
        while p != one {
            p = h.mul(&p, g);
            k += 1;
        }
        k == order
    })?;
    Some((order, generator))
}

/// `analyze` followed by the `G_V` cross-check wherever it is defined.
pub fn analyze_with_gv(ring: &CharRing, i: usize) -> Result<FusionAnalysis> {
    let mut fa = analyze(ring, i)?;
    if let Some((order, _)) = gv_group(ring, &fa) {
        if order != fa.index {
            return Err(invariant!("index {} differs from |G_V| = {} for {}", fa.index, order, ring.get(i).name));
        }
        fa.gv_order = Some(order);
    }
    Ok(fa)
}

/// Checks `ind(A) | exp(H)`, `ind(A) | ord(χ)` and `ord(χ) ≤ dim Ch(H)`.
pub fn divisibility_report(ring: &CharRing, analysis: &FusionAnalysis, exp: u64) -> Result<DivisibilityReport> {
    let (ord, _) = ring.order_and_multiplicity(ring.get(analysis.chi))?;
    let r = DivisibilityReport {
        index: analysis.index,
        exp,
        ord,
        index_divides_exp: exp % analysis.index == 0,
        index_divides_ord: ord % analysis.index == 0,
        ord_at_most_k: ord <= ring.k() as u64,
    };
    if !(r.index_divides_exp && r.index_divides_ord && r.ord_at_most_k) {
        return Err(invariant!("divisibility fails for {}: {:?}", ring.get(analysis.chi).name, r));
    }
    Ok(r)
}

/// Integer characteristic polynomial of the indecomposable block containing
/// the trivial simple, lowest degree first.
pub fn trivial_block_charpoly(analysis: &FusionAnalysis) -> Result<Vec<i64>> {
    let block = analysis.blocks.iter().find(|b| b.contains(&0)).expect("trivial block");
    let m = submatrix(&analysis.matrix, block);
    use num_traits::ToPrimitive;
    linalg::charpoly(&m)
        .into_iter()
        .map(|c| c.to_integer().to_i64().filter(|_| c.is_integer()).ok_or_else(|| invariant!("non-integer coefficient {}", c)))
        .collect()
}

/// Checks the spectral rotation symmetry implied by an index `r`: the
/// characteristic polynomial `p` of the block satisfies `p(ζx) = ζ^s p(x)`
/// for `ζ` a primitive `r`-th root of unity, so its nonzero coefficients
/// sit in degrees congruent to `deg p` modulo `r`.
pub fn rotation_symmetry_holds(poly: &[i64], r: u64) -> bool {
    let n = poly.len() as u64 - 1;
    poly.iter().enumerate().all(|(j, &c)| c == 0 || (n - j as u64) % r == 0)
}
