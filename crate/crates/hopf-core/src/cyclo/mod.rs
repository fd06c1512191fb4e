//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! A [`CycNum`] stores its conductor `N` and its coordinates in the power
//! basis `1, ζ, …, ζ^{φ(N)−1}` of `Q[x]/Φ_N(x)`. Binary operations first
//! embed both operands into `Q(ζ_lcm)`. Values are never moved to a smaller
//! conductor automatically; [`CycNum::minimize_conductor`] does that on
//! request (rendering uses it).

mod embed;
mod newton;
mod poly;

pub use embed::{complex_embed, compare_modulus, ComplexInterval, MAX_PRECISION_BITS};
pub use newton::elementary_from_power_sums;

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};

pub type Rational = BigRational;

/// Largest conductor any value may carry.
pub const MAX_CONDUCTOR: u32 = 10_000;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// An element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct CycNum {
    n: u32,
    c: Vec<Rational>,
}

/// The Galois automorphism `σ_k: ζ_N ↦ ζ_N^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaloisElt {
    pub conductor: u32,
    pub k: i64,
}

impl GaloisElt {
    pub fn new(conductor: u32, k: i64) -> Result<Self> {
        if conductor == 0 {
            return Err(domain!("conductor must be positive"));
        }
        if num_integer::gcd(k.rem_euclid(conductor as i64), conductor as i64) != 1 && conductor > 1 {
            return Err(domain!("k = {} is not a unit modulo {}", k, conductor));
        }
        Ok(GaloisElt { conductor, k })
    }
}

fn check_conductor(n: u64) -> Result<u32> {
    if n == 0 || n > MAX_CONDUCTOR as u64 {
        return Err(domain!("conductor {} outside 1..={}", n, MAX_CONDUCTOR));
    }
    Ok(n as u32)
}

/// `ζ_N^i`.
pub fn cyc_root(n: u32, i: i64) -> Result<CycNum> {
    check_conductor(n as u64)?;
    let e = i.rem_euclid(n as i64) as usize;
    Ok(CycNum::from_monomial(n, e, Rational::one()))
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum { n: 1, c: alloc::vec![Rational::zero()] }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        CycNum { n: 1, c: alloc::vec![r] }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(rat_int(v))
    }

    /// Builds a value from power-basis coordinates, reducing modulo `Φ_N` if
    /// more than `φ(N)` coordinates are given.
    pub fn from_coeffs(n: u32, coeffs: Vec<Rational>) -> Result<Self> {
        check_conductor(n as u64)?;
        Ok(Self::reduce(n, coeffs))
    }

    fn from_monomial(n: u32, e: usize, coef: Rational) -> Self {
        let mut v = alloc::vec![Rational::zero(); e + 1];
        v[e] = coef;
        Self::reduce(n, v)
    }

    fn reduce(n: u32, mut v: Vec<Rational>) -> Self {
        let data = poly::cyclotomic(n);
        let phi = data.phi;
        poly::reduce_in_place(&mut v, &data.poly);
        v.resize(phi, Rational::zero());
        CycNum { n, c: v }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Power-basis coordinates, length `φ(N)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    /// The same value written in `Q(ζ_m)`; `N` must divide `m`.
    pub fn lift(&self, m: u32) -> Result<CycNum> {
        if m % self.n != 0 {
            return Err(domain!("conductor {} does not divide {}", self.n, m));
        }
        check_conductor(m as u64)?;
        if m == self.n {
            return Ok(self.clone());
        }
        let step = (m / self.n) as usize;
        let mut v = alloc::vec![Rational::zero(); (self.c.len() - 1) * step + 1];
        for (i, a) in self.c.iter().enumerate() {
            if !a.is_zero() {
                v[i * step] = a.clone();
            }
        }
        Ok(Self::reduce(m, v))
    }

    fn join(a: &CycNum, b: &CycNum) -> Result<(CycNum, CycNum)> {
        if a.n == b.n {
            return Ok((a.clone(), b.clone()));
        }
        let m = check_conductor(a.n as u64 / num_integer::gcd(a.n, b.n) as u64 * b.n as u64)?;
        Ok((a.lift(m)?, b.lift(m)?))
    }

    fn join_ref<'a>(a: &'a CycNum, b: &'a CycNum) -> Result<Option<(CycNum, CycNum)>> {
        if a.n == b.n {
            Ok(None)
        } else {
            Self::join(a, b).map(Some)
        }
    }

    pub fn checked_add(&self, other: &CycNum) -> Result<CycNum> {
        let joined = Self::join_ref(self, other)?;
        let (a, b) = match &joined {
            Some((x, y)) => (x, y),
            None => (self, other),
        };
        let c = a.c.iter().zip(&b.c).map(|(x, y)| x + y).collect();
        Ok(CycNum { n: a.n, c })
    }

    pub fn checked_sub(&self, other: &CycNum) -> Result<CycNum> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &CycNum) -> Result<CycNum> {
        if self.n == 1 {
            return Ok(other.scale(&self.c[0]));
        }
        if other.n == 1 {
            return Ok(self.scale(&other.c[0]));
        }
        let joined = Self::join_ref(self, other)?;
        let (a, b) = match &joined {
            Some((x, y)) => (x, y),
            None => (self, other),
        };
        let phi = a.c.len();
        let mut v = alloc::vec![Rational::zero(); 2 * phi - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] += x * y;
                }
            }
        }
        Ok(Self::reduce(a.n, v))
    }

    pub fn scale(&self, r: &Rational) -> CycNum {
        CycNum { n: self.n, c: self.c.iter().map(|x| x * r).collect() }
    }

    fn neg_ref(&self) -> CycNum {
        CycNum { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm in `Q[x]`.
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.n == 1 {
            return Ok(Self::from_rational(self.c[0].recip()));
        }
        let data = poly::cyclotomic(self.n);
        let modulus: Vec<Rational> = data.poly.iter().map(|&x| rat_int(x)).collect();
        let s = poly::invert_mod(&self.c, &modulus)
            .ok_or_else(|| Error::Invariant(alloc::format!("{} has no inverse", self)))?;
        Ok(Self::reduce(self.n, s))
    }

    pub fn checked_div(&self, other: &CycNum) -> Result<CycNum> {
        self.checked_mul(&other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> CycNum {
        let mut base = self.clone();
        let mut acc = CycNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `σ_k` applied to this value.
    pub fn galois(&self, k: i64) -> Result<CycNum> {
        galois_apply(&GaloisElt::new(self.n, k)?, self)
    }

    /// Complex conjugate, i.e. `σ_{−1}`.
    pub fn conj(&self) -> CycNum {
        if self.n <= 2 {
            return self.clone();
        }
        let n = self.n as usize;
        let mut v = alloc::vec![Rational::zero(); n];
        for (i, a) in self.c.iter().enumerate() {
            if !a.is_zero() {
                v[(n - i) % n] += a;
            }
        }
        Self::reduce(self.n, v)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        is_rational(self)
    }

    /// Lowest conductor `d | N` whose field contains the value, with the
    /// value rewritten there.
    pub fn minimize_conductor(&self) -> CycNum {
        if self.n == 1 {
            return self.clone();
        }
        if let Some(r) = is_rational(self) {
            return CycNum::from_rational(r);
        }
        let n = self.n;
        for d in 2..n {
            if n % d != 0 {
                continue;
            }
            // fixed by every σ_k with k ≡ 1 (mod d)?
            let fixed = (1..n as i64)
                .filter(|&k| num_integer::gcd(k, n as i64) == 1 && k % d as i64 == 1)
                .all(|k| &self.galois(k).expect("unit") == self);
            if !fixed {
                continue;
            }
            if let Some(v) = self.express_in(d) {
                return v;
            }
        }
        self.clone()
    }

    fn express_in(&self, d: u32) -> Option<CycNum> {
        let phi_d = poly::euler_phi(d) as usize;
        let cols: Vec<CycNum> =
            (0..phi_d).map(|i| cyc_root(d, i as i64).and_then(|z| z.lift(self.n)).expect("divisor")).collect();
        let rows = self.c.len();
        let mut m: Vec<Vec<Rational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c.c[r].clone()).collect();
                row.push(self.c[r].clone());
                row
            })
            .collect();
        let sol = crate::linalg::solve_augmented(&mut m, phi_d)?;
        Some(CycNum { n: d, c: sol })
    }

    /// Deterministic total order: lexicographic on the coordinates after
    /// joining conductors.
    pub fn cmp_lex(&self, other: &CycNum) -> Ordering {
        match Self::join(self, other) {
            Ok((a, b)) => a.c.cmp(&b.c),
            Err(_) => self.n.cmp(&other.n),
        }
    }
}

/// `σ(a)`, joining conductors if needed.
pub fn galois_apply(sigma: &GaloisElt, a: &CycNum) -> Result<CycNum> {
    let m = check_conductor(a.n as u64 / num_integer::gcd(a.n, sigma.conductor) as u64 * sigma.conductor as u64)?;
    if m > 1 && num_integer::gcd(sigma.k.rem_euclid(m as i64), m as i64) != 1 {
        return Err(domain!("k = {} is not a unit modulo {}", sigma.k, m));
    }
    let a = a.lift(m)?;
    if m <= 2 {
        return Ok(a);
    }
    let k = sigma.k.rem_euclid(m as i64) as usize;
    let n = m as usize;
    let mut v = alloc::vec![Rational::zero(); n];
    for (i, x) in a.c.iter().enumerate() {
        if !x.is_zero() {
            v[(i * k) % n] += x;
        }
    }
    Ok(CycNum::reduce(m, v))
}

/// The rational value, if the element lies in `Q`.
pub fn is_rational(a: &CycNum) -> Option<Rational> {
    if a.c[1..].iter().all(Zero::is_zero) {
        Some(a.c[0].clone())
    } else {
        None
    }
}

/// The integer value, if the element lies in `Z`.
pub fn is_rational_integer(a: &CycNum) -> Option<BigInt> {
    is_rational(a).filter(|r| r.is_integer()).map(|r| r.to_integer())
}

/// Integer value as `i64`, if it is one and fits.
pub fn as_i64(a: &CycNum) -> Option<i64> {
    is_rational_integer(a).and_then(|v| v.to_i64())
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        match CycNum::join(self, other) {
            Ok((a, b)) => a.c == b.c,
            Err(_) => false,
        }
    }
}
impl Eq for CycNum {}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<'a> $tr<&'a CycNum> for &'a CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &'a CycNum) -> CycNum {
                self.$f(rhs).expect("cyclotomic conductor join exceeds the cap")
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
    };
}
binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        self.neg_ref()
    }
}
impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        self.neg_ref()
    }
}

impl Default for CycNum {
    fn default() -> Self {
        CycNum::zero()
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        alloc::format!("{}", r.numer())
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders `a0+a1*z+a2*z^2…@N` (rationals are rendered without `@N`), after
/// moving to the lowest conductor.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.minimize_conductor();
        let mut out = String::new();
        for (i, a) in v.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => String::from("z"),
                _ => alloc::format!("z^{}", i),
            };
            let term = if i == 0 {
                fmt_rational(a)
            } else if a.is_one() {
                mono
            } else if (-a).is_one() {
                alloc::format!("-{}", mono)
            } else {
                alloc::format!("{}*{}", fmt_rational(a), mono)
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        if v.n > 1 {
            write!(f, "{}@{}", out, v.n)
        } else {
            f.write_str(&out)
        }
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl core::str::FromStr for CycNum {
    type Err = Error;

    /// Parses the rendering produced by `Display`; spaces are ignored and a
    /// missing `@N` means `N = 1`.
    fn from_str(s: &str) -> Result<CycNum> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let perr = |pos: usize, msg: &str| Error::Parse { pos, msg: String::from(msg) };
        let (body, n) = match s.rfind('@') {
            Some(at) => {
                let n: u32 = s[at + 1..].parse().map_err(|_| perr(at + 1, "bad conductor"))?;
                (&s[..at], n)
            }
            None => (&s[..], 1),
        };
        check_conductor(n as u64)?;
        if body.is_empty() {
            return Err(perr(0, "empty value"));
        }
        let mut coeffs: Vec<Rational> = Vec::new();
        let bytes = body.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let start = pos;
            let mut sign = 1i64;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            } else if start != 0 {
                return Err(perr(pos, "expected + or -"));
            }
            let term_start = pos;
            while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
                pos += 1;
            }
            let term = &body[term_start..pos];
            if term.is_empty() {
                return Err(perr(term_start, "empty term"));
            }
            let (coef_str, exp) = match term.find('z') {
                None => (term, 0usize),
                Some(zp) => {
                    let c = match term[..zp].strip_suffix('*') {
                        Some("") => return Err(perr(term_start, "missing coefficient before *")),
                        Some(c) => c,
                        None => &term[..zp],
                    };
                    let rest = &term[zp + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else if let Some(num) = rest.strip_prefix('^') {
                        num.parse().map_err(|_| perr(term_start + zp + 2, "bad exponent"))?
                    } else {
                        return Err(perr(term_start + zp + 1, "unexpected text after z"));
                    };
                    (c, e)
                }
            };
            let coef = if coef_str.is_empty() {
                Rational::one()
            } else if let Some((p, q)) = coef_str.split_once('/') {
                let p: BigInt = p.parse().map_err(|_| perr(term_start, "bad numerator"))?;
                let q: BigInt = q.parse().map_err(|_| perr(term_start, "bad denominator"))?;
                if q.is_zero() {
                    return Err(perr(term_start, "zero denominator"));
                }
                Rational::new(p, q)
            } else {
                Rational::from_integer(coef_str.parse().map_err(|_| perr(term_start, "bad coefficient"))?)
            };
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, Rational::zero());
            }
            coeffs[exp] += coef * rat_int(sign);
        }
        Ok(CycNum::reduce(n, coeffs))
    }
}

/// Exponent `e` with `ζ^e` equal to the value, if it is a root of unity of
/// order dividing `N`.
pub fn root_of_unity_exponent(a: &CycNum, n: u32) -> Option<u32> {
    let a = a.lift(n).ok()?;
    (0..n).find(|&i| cyc_root(n, i as i64).map(|z| z == a).unwrap_or(false))
}
