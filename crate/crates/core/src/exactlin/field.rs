//! Finite fields `F_{p^d}` for small `p^d`.
//!
//! An element is stored as a `u32` whose base-`p` digits are the coefficients of a
//! polynomial in the generator, lowest degree first. Elements of the prime field are
//! therefore the integers `0..p`, for every `d`.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};

pub type Elem = u32;

/// Largest field order that uses multiplication tables.
const MAX_TABLE_ORDER: u64 = 1024;

/// Conway polynomials, lowest degree first, leading 1 omitted.
const DEFINING_POLYNOMIALS: &[(u64, usize, &[u64])] = &[
    (2, 3, &[1, 1, 0]), // x^3 + x + 1
    (3, 3, &[1, 2, 0]), // x^3 + 2x + 1
    (5, 3, &[3, 3, 0]), // x^3 + 3x + 3
    (7, 3, &[4, 0, 6]), // x^3 + 6x^2 + 4
    (2, 2, &[1, 1]),    // x^2 + x + 1
    (3, 2, &[2, 2]),    // x^2 + 2x + 2
    (5, 2, &[2, 4]),    // x^2 + 4x + 2
    (7, 2, &[3, 6]),    // x^2 + 6x + 3
];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

struct Inner {
    p: u64,
    d: usize,
    q: u64,
    /// Monic defining polynomial without its leading coefficient.
    modulus: Vec<u64>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

/// The field `F_{p^d}`. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.order())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.d == other.0.d && self.0.modulus == other.0.modulus
    }
}

impl Eq for Field {}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn new(p: u64, d: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if d == 0 || p > u32::MAX as u64 {
            return Err(Error::UnsupportedField { p, d });
        }
        if d == 1 {
            return Ok(Field(Arc::new(Inner {
                p,
                d,
                q: p,
                modulus: vec![0],
                add: vec![],
                mul: vec![],
                neg: vec![],
                inv: vec![],
            })));
        }
        let q = p.checked_pow(d as u32).filter(|&q| q <= MAX_TABLE_ORDER);
        let q = q.ok_or(Error::UnsupportedField { p, d })?;
        let modulus = match DEFINING_POLYNOMIALS.iter().find(|(pp, dd, _)| *pp == p && *dd == d) {
            Some((_, _, m)) => m.to_vec(),
            None => search_irreducible(p, d).ok_or(Error::UnsupportedField { p, d })?,
        };
        if !is_irreducible(p, &modulus) {
            return Err(Error::Consistency(format!("defining polynomial for F_{q} is reducible")));
        }
        let mut inner = Inner { p, d, q, modulus, add: vec![], mul: vec![], neg: vec![], inv: vec![] };
        build_tables(&mut inner);
        Ok(Field(Arc::new(inner)))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.d
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    pub fn defining_polynomial(&self) -> Vec<u64> {
        let mut m = self.0.modulus.clone();
        m.push(1);
        m
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let f = &self.0;
        if f.d == 1 {
            let s = a as u64 + b as u64;
            (if s >= f.p { s - f.p } else { s }) as Elem
        } else {
            f.add[(a as usize) * f.q as usize + b as usize]
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let f = &self.0;
        if f.d == 1 {
            if a == 0 {
                0
            } else {
                (f.p - a as u64) as Elem
            }
        } else {
            f.neg[a as usize]
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let f = &self.0;
        if f.d == 1 {
            ((a as u64 * b as u64) % f.p) as Elem
        } else {
            f.mul[(a as usize) * f.q as usize + b as usize]
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let f = &self.0;
        if f.d == 1 {
            Some(pow_mod(a as u64, f.p - 2, f.p) as Elem)
        } else {
            Some(f.inv[a as usize])
        }
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Image of an integer in the prime field.
    pub fn from_i64(&self, x: i64) -> Elem {
        x.rem_euclid(self.0.p as i64) as Elem
    }

    /// Reduction of an arbitrary-precision integer.
    pub fn from_bigint(&self, x: &num_bigint::BigInt) -> Elem {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        let p = num_bigint::BigInt::from(self.0.p);
        x.mod_floor(&p).to_u64().expect("residue fits") as Elem
    }

    pub fn is_prime_field_elem(&self, a: Elem) -> bool {
        (a as u64) < self.0.p
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        rng.gen_range(0..self.0.q) as Elem
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        rng.gen_range(1..self.0.q) as Elem
    }

    /// A square root in this field, if one exists (brute force).
    pub fn sqrt(&self, a: Elem) -> Option<Elem> {
        (0..self.0.q as Elem).find(|&x| self.mul(x, x) == a)
    }

    /// Digits of an element (polynomial coefficients, lowest first).
    pub fn digits(&self, a: Elem) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.0.d);
        let mut x = a as u64;
        for _ in 0..self.0.d {
            v.push(x % self.0.p);
            x /= self.0.p;
        }
        v
    }

    /// Row of the multiplication table for a fixed left factor (table fields only).
    #[inline]
    pub(crate) fn mul_row(&self, a: Elem) -> Option<&[Elem]> {
        let f = &self.0;
        if f.d == 1 {
            None
        } else {
            let q = f.q as usize;
            Some(&f.mul[a as usize * q..(a as usize + 1) * q])
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn build_tables(f: &mut Inner) {
    let q = f.q as usize;
    let p = f.p;
    let d = f.d;
    let digits = |x: usize| -> Vec<u64> {
        let mut v = vec![0; d];
        let mut x = x as u64;
        for c in v.iter_mut() {
            *c = x % p;
            x /= p;
        }
        v
    };
    let pack = |v: &[u64]| -> Elem {
        let mut x = 0u64;
        for c in v.iter().rev() {
            x = x * p + c;
        }
        x as Elem
    };
    let all: Vec<Vec<u64>> = (0..q).map(digits).collect();
    f.add = vec![0; q * q];
    f.mul = vec![0; q * q];
    f.neg = vec![0; q];
    f.inv = vec![0; q];
    for a in 0..q {
        let na: Vec<u64> = all[a].iter().map(|&c| (p - c) % p).collect();
        f.neg[a] = pack(&na);
        for b in 0..q {
            let s: Vec<u64> = all[a].iter().zip(&all[b]).map(|(x, y)| (x + y) % p).collect();
            f.add[a * q + b] = pack(&s);
            // schoolbook product then reduce by the monic modulus
            let mut prod = vec![0u64; 2 * d - 1];
            for i in 0..d {
                for j in 0..d {
                    prod[i + j] = (prod[i + j] + all[a][i] * all[b][j]) % p;
                }
            }
            for k in (d..2 * d - 1).rev() {
                let c = prod[k];
                if c == 0 {
                    continue;
                }
                prod[k] = 0;
                // x^d = -sum modulus[i] x^i
                for i in 0..d {
                    prod[k - d + i] = (prod[k - d + i] + (p - f.modulus[i]) * c) % p;
                }
            }
            f.mul[a * q + b] = pack(&prod[..d]);
        }
    }
    for a in 1..q {
        for b in 1..q {
            if f.mul[a * q + b] == 1 {
                f.inv[a] = b as Elem;
                break;
            }
        }
    }
}

/// Evaluate the monic polynomial `x^d + sum modulus[i] x^i` at `x` mod `p`.
fn eval_monic(p: u64, modulus: &[u64], x: u64) -> u64 {
    let mut acc = 1u64;
    for c in modulus.iter().rev() {
        acc = (acc * x + c) % p;
    }
    acc
}

/// Irreducibility by trial division by every monic polynomial of degree at most `d / 2`.
fn is_irreducible(p: u64, modulus: &[u64]) -> bool {
    let d = modulus.len();
    if (0..p).any(|x| eval_monic(p, modulus, x) == 0) {
        return false;
    }
    for k in 2..=d / 2 {
        let count = p.pow(k as u32);
        for code in 0..count {
            let mut divisor = vec![0u64; k];
            let mut x = code;
            for c in divisor.iter_mut() {
                *c = x % p;
                x /= p;
            }
            if monic_divides(p, modulus, &divisor) {
                return false;
            }
        }
    }
    true
}

/// Whether the monic `divisor` (leading 1 omitted) divides the monic `modulus`.
fn monic_divides(p: u64, modulus: &[u64], divisor: &[u64]) -> bool {
    let k = divisor.len();
    let mut r: Vec<u64> = modulus.to_vec();
    r.push(1);
    for top in (k..r.len()).rev() {
        let c = r[top];
        if c == 0 {
            continue;
        }
        r[top] = 0;
        for (i, &b) in divisor.iter().enumerate() {
            let j = top - k + i;
            r[j] = (r[j] + (p - b) * c % p) % p;
        }
    }
    r[..k].iter().all(|&c| c == 0)
}

fn search_irreducible(p: u64, d: usize) -> Option<Vec<u64>> {
    let total = p.checked_pow(d as u32)?;
    for code in 0..total {
        let mut m = vec![0u64; d];
        let mut x = code;
        for c in m.iter_mut() {
            *c = x % p;
            x /= p;
        }
        if is_irreducible(p, &m) {
            return Some(m);
        }
    }
    None
}
