use alloc::collections::BTreeMap;

use crate::cyclo::{CycNum, Rational};

/// A sparse element `Σ c_i b_i` of a Hopf algebra of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElem {
    dim: usize,
    terms: BTreeMap<u32, CycNum>,
}

impl AlgElem {
    pub fn zero(dim: usize) -> AlgElem {
        AlgElem { dim, terms: BTreeMap::new() }
    }

    pub fn basis(dim: usize, i: u32) -> AlgElem {
        let mut e = AlgElem::zero(dim);
        e.terms.insert(i, CycNum::one());
        e
    }

    /// Sums repeated indices and drops zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (u32, CycNum)>>(dim: usize, it: I) -> AlgElem {
        let mut e = AlgElem::zero(dim);
        for (i, c) in it {
            e.add_term(i, &c);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_term(&mut self, i: u32, c: &CycNum) {
        debug_assert!((i as usize) < self.dim);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&i) {
            Some(v) => {
                let s = &*v + c;
                if s.is_zero() {
                    self.terms.remove(&i);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(i, c.clone());
            }
        }
    }

    pub fn coeff(&self, i: u32) -> Option<&CycNum> {
        self.terms.get(&i)
    }

    pub fn terms(&self) -> &BTreeMap<u32, CycNum> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(*i, c);
        }
        out
    }

    pub fn sub(&self, other: &AlgElem) -> AlgElem {
        self.add(&other.scale(&crate::cyclo::rat(-1, 1)))
    }

    pub fn scale(&self, r: &Rational) -> AlgElem {
        AlgElem::from_terms(self.dim, self.terms.iter().map(|(i, c)| (*i, c.scale(r))))
    }

    pub fn scale_cyc(&self, r: &CycNum) -> AlgElem {
        AlgElem::from_terms(self.dim, self.terms.iter().map(|(i, c)| (*i, c * r)))
    }
}

/// A sparse element of `H ⊗ H`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor2 {
    terms: BTreeMap<(u32, u32), CycNum>,
}

impl Tensor2 {
    pub fn new() -> Tensor2 {
        Tensor2::default()
    }

    pub fn outer(a: &AlgElem, b: &AlgElem) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, ca) in a.terms() {
            for (j, cb) in b.terms() {
                t.add_term(*i, *j, &(ca * cb));
            }
        }
        t
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&(i, j)) {
            Some(v) => {
                let s = &*v + c;
                if s.is_zero() {
                    self.terms.remove(&(i, j));
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert((i, j), c.clone());
            }
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> Option<&CycNum> {
        self.terms.get(&(i, j))
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), CycNum> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The flip `a ⊗ b ↦ b ⊗ a`.
    pub fn flip(&self) -> Tensor2 {
        Tensor2 { terms: self.terms.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect() }
    }
}
