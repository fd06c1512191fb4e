//! Rigorous enclosures of the complex embedding `ζ_N ↦ e^{2πi/N}`.
//!
//! π and the values `cos(2πj/N)`, `sin(2πj/N)` are enclosed by fixed-point
//! intervals; the final enclosure of a `CycNum` is assembled exactly with
//! rational bounds.

use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{is_rational, CycNum, Rational};
use crate::error::{domain, Error, Result};

/// Refinement stops here with [`Error::UndecidableAtCap`].
pub const MAX_PRECISION_BITS: u32 = 4096;

/// Real and imaginary parts each enclosed by `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexInterval {
    pub re_lo: Rational,
    pub re_hi: Rational,
    pub im_lo: Rational,
    pub im_hi: Rational,
}

impl ComplexInterval {
    pub fn point(re: Rational, im: Rational) -> Self {
        ComplexInterval { re_lo: re.clone(), re_hi: re, im_lo: im.clone(), im_hi: im }
    }

    pub fn width(&self) -> Rational {
        let a = &self.re_hi - &self.re_lo;
        let b = &self.im_hi - &self.im_lo;
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn contains(&self, re: &Rational, im: &Rational) -> bool {
        &self.re_lo <= re && re <= &self.re_hi && &self.im_lo <= im && im <= &self.im_hi
    }

    pub fn intersects(&self, other: &ComplexInterval) -> bool {
        self.re_lo <= other.re_hi && other.re_lo <= self.re_hi && self.im_lo <= other.im_hi && other.im_lo <= self.im_hi
    }

    /// Interval product.
    pub fn mul(&self, other: &ComplexInterval) -> ComplexInterval {
        let (ac_lo, ac_hi) = rmul(&self.re_lo, &self.re_hi, &other.re_lo, &other.re_hi);
        let (bd_lo, bd_hi) = rmul(&self.im_lo, &self.im_hi, &other.im_lo, &other.im_hi);
        let (ad_lo, ad_hi) = rmul(&self.re_lo, &self.re_hi, &other.im_lo, &other.im_hi);
        let (bc_lo, bc_hi) = rmul(&self.im_lo, &self.im_hi, &other.re_lo, &other.re_hi);
        ComplexInterval { re_lo: ac_lo - bd_hi, re_hi: ac_hi - bd_lo, im_lo: ad_lo + bc_lo, im_hi: ad_hi + bc_hi }
    }
}

fn rmul(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> (Rational, Rational) {
    let p = [a * c, a * d, b * c, b * d];
    let lo = p.iter().min().expect("nonempty").clone();
    let hi = p.iter().max().expect("nonempty").clone();
    (lo, hi)
}

/// Fixed-point interval `[lo·2^−w, hi·2^−w]`.
#[derive(Clone, Debug)]
struct Fx {
    lo: BigInt,
    hi: BigInt,
}

fn shr_floor(x: &BigInt, w: u32) -> BigInt {
    x.div_floor(&(BigInt::one() << w))
}

fn shr_ceil(x: &BigInt, w: u32) -> BigInt {
    -((-x).div_floor(&(BigInt::one() << w)))
}

impl Fx {
    fn exact(v: BigInt) -> Fx {
        Fx { lo: v.clone(), hi: v }
    }

    fn add(&self, o: &Fx) -> Fx {
        Fx { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    fn neg(&self) -> Fx {
        Fx { lo: -&self.hi, hi: -&self.lo }
    }

    fn mul(&self, o: &Fx, w: u32) -> Fx {
        let p = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = p.iter().min().expect("nonempty");
        let hi = p.iter().max().expect("nonempty");
        Fx { lo: shr_floor(lo, w), hi: shr_ceil(hi, w) }
    }

    fn div_int(&self, d: &BigInt) -> Fx {
        Fx { lo: self.lo.div_floor(d), hi: -((-&self.hi).div_floor(d)) }
    }

    fn widen(&self, r: &BigInt) -> Fx {
        Fx { lo: &self.lo - r, hi: &self.hi + r }
    }

    fn mag(&self) -> BigInt {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }

    fn to_rationals(&self, w: u32) -> (Rational, Rational) {
        let den = BigInt::one() << w;
        (Rational::new(self.lo.clone(), den.clone()), Rational::new(self.hi.clone(), den))
    }
}

/// `atan(1/x)` enclosed at `w` fractional bits.
fn atan_inv(x: u32, w: u32) -> Fx {
    let one = BigInt::one() << w;
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut pow = BigInt::from(x);
    let mut sum = Fx::exact(BigInt::zero());
    let mut k: u64 = 0;
    loop {
        let den = &pow * BigInt::from(2 * k + 1);
        let t = Fx { lo: one.div_floor(&den), hi: -((-&one).div_floor(&den)) };
        if t.hi <= BigInt::one() {
            // the alternating tail is bounded by this term
            return sum.widen(&t.hi);
        }
        sum = if k % 2 == 0 { sum.add(&t) } else { sum.add(&t.neg()) };
        pow *= &x2;
        k += 1;
    }
}

fn pi(w: u32) -> Fx {
    let a = atan_inv(5, w);
    let b = atan_inv(239, w);
    let a16 = Fx { lo: a.lo * 16, hi: a.hi * 16 };
    let b4 = Fx { lo: b.lo * 4, hi: b.hi * 4 };
    a16.add(&b4.neg())
}

/// `(cos θ, sin θ)` for `θ = 2πj/n`, `0 ≤ j < n`, at `w` fractional bits.
fn cos_sin(j: u32, n: u32, w: u32, pi_w: &Fx) -> (Fx, Fx) {
    let theta = Fx { lo: pi_w.lo.clone() * (2 * j as u64), hi: pi_w.hi.clone() * (2 * j as u64) }
        .div_int(&BigInt::from(n));
    let one = BigInt::one() << w;
    let mut re = Fx::exact(one.clone());
    let mut im = Fx::exact(BigInt::zero());
    let mut term = Fx::exact(one);
    let theta_max_int = shr_ceil(&theta.hi, w) + 1;
    let mut k: u64 = 1;
    loop {
        term = term.mul(&theta, w).div_int(&BigInt::from(k));
        match k % 4 {
            1 => im = im.add(&term),
            2 => re = re.add(&term.neg()),
            3 => im = im.add(&term.neg()),
            _ => re = re.add(&term),
        }
        k += 1;
        if BigInt::from(k) > &theta_max_int * 2 && term.mag() <= BigInt::one() {
            // remaining terms shrink at least geometrically by 1/2
            let r = term.mag() * 2 + 2;
            return (re.widen(&r), im.widen(&r));
        }
    }
}

/// Enclosure of the image of `a` under `ζ_N ↦ e^{2πi/N}`.
pub fn complex_embed(a: &CycNum, precision_bits: u32) -> Result<ComplexInterval> {
    if precision_bits < 32 {
        return Err(domain!("precision must be at least 32 bits, got {}", precision_bits));
    }
    let c0 = a.coeffs()[0].clone();
    let mut out = ComplexInterval::point(c0, Rational::zero());
    if a.coeffs()[1..].iter().all(Zero::is_zero) {
        return Ok(out);
    }
    let w = precision_bits + 32;
    let pi_w = pi(w + 8);
    let pi_w = Fx { lo: shr_floor(&pi_w.lo, 8), hi: shr_ceil(&pi_w.hi, 8) };
    for (j, c) in a.coeffs().iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        let (cs, sn) = cos_sin(j as u32, a.conductor(), w, &pi_w);
        let (clo, chi) = cs.to_rationals(w);
        let (slo, shi) = sn.to_rationals(w);
        if c.is_positive() {
            out.re_lo += c * &clo;
            out.re_hi += c * &chi;
            out.im_lo += c * &slo;
            out.im_hi += c * &shi;
        } else {
            out.re_lo += c * &chi;
            out.re_hi += c * &clo;
            out.im_lo += c * &shi;
            out.im_hi += c * &slo;
        }
    }
    Ok(out)
}

/// Compares `|a|` with the nonnegative rational `r`, refining the
/// enclosure of `a·ā` from 53 bits until it excludes `r²`.
pub fn compare_modulus(a: &CycNum, r: &Rational, cap_bits: u32) -> Result<Ordering> {
    if r.is_negative() {
        return Err(domain!("modulus bound must be nonnegative"));
    }
    let sq = a * &a.conj();
    let target = r * r;
    if let Some(v) = is_rational(&sq) {
        return Ok(v.cmp(&target));
    }
    let cap = cap_bits.min(MAX_PRECISION_BITS);
    let mut bits = 53;
    loop {
        let e = complex_embed(&sq, bits.max(32))?;
        if e.re_hi < target {
            return Ok(Ordering::Less);
        }
        if e.re_lo > target {
            return Ok(Ordering::Greater);
        }
        if bits >= cap {
            return Err(Error::UndecidableAtCap(cap));
        }
        bits = (bits * 2).min(cap);
    }
}
