//! Multivariate polynomials with exact coefficients, over the integers or reduced mod p,
//! and the invariant-theory checks built on them: invariance under permutation actions,
//! the Jacobian criterion, and conjugation invariance of characteristic polynomials.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{is_prime, Field, FpMatrix};
use crate::stabilizers::trial_rng;

/// Exponent vector, ordered by degree reverse lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // larger when the last differing exponent is smaller
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `nvars` variables. With `modulus = Some(p)` coefficients live in `0..p`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    modulus: Option<u64>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize, modulus: Option<u64>) -> Self {
        Polynomial { nvars, modulus, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, modulus: Option<u64>, c: i64) -> Self {
        Self::from_terms(nvars, modulus, [(vec![0; nvars], c)])
    }

    /// The variable with index `i` (0-based).
    pub fn var(nvars: usize, modulus: Option<u64>, i: usize) -> Self {
        assert!(i < nvars, "variable {i} out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::from_terms(nvars, modulus, [(e, 1)])
    }

    pub fn from_terms<I>(nvars: usize, modulus: Option<u64>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, i64)>,
    {
        let mut out = Self::zero(nvars, modulus);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            out.add_term(Monomial(e), BigInt::from(c));
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(&Monomial(exponents.to_vec())).cloned().unwrap_or_default()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    fn normalize(&self, c: BigInt) -> BigInt {
        match self.modulus {
            Some(p) => c.mod_floor(&BigInt::from(p)),
            None => c,
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                let sum = match self.modulus {
                    Some(p) => (e.get() + c).mod_floor(&BigInt::from(p)),
                    None => e.get() + c,
                };
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
            Entry::Vacant(e) => {
                let c = match self.modulus {
                    Some(p) => c.mod_floor(&BigInt::from(p)),
                    None => c,
                };
                if !c.is_zero() {
                    e.insert(c);
                }
            }
        }
    }

    fn check_compatible(&self, other: &Polynomial) {
        assert_eq!(self.nvars, other.nvars, "polynomials in different numbers of variables");
        assert_eq!(self.modulus, other.modulus, "polynomials over different coefficient rings");
    }

    /// Image under the coefficient map to `F_p`.
    pub fn reduce_mod(&self, p: u64) -> Polynomial {
        let mut out = Self::zero(self.nvars, Some(p));
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        let mut out = Self::zero(self.nvars, self.modulus);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::constant(self.nvars, self.modulus, 1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Self::zero(self.nvars, self.modulus);
        for (m, c) in &self.terms {
            let k = m.0[i];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[i] -= 1;
            out.add_term(Monomial(e), c * BigInt::from(k));
        }
        out
    }

    /// `f(g_1, ..., g_n)`; all `g_i` share a variable count and coefficient ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let (nv, md) = images.first().map_or((0, self.modulus), |g| (g.nvars, g.modulus));
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|g| vec![Self::constant(nv, md, 1), g.clone()]).collect();
        let mut out = Self::zero(nv, md);
        for (m, c) in &self.terms {
            let mut term = Self::constant(nv, md, 1).scale(c);
            for (i, &k) in m.0.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    term = &term * &powers[i][k as usize];
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Value at a point over `field`. Coefficients are reduced into its prime field.
    pub fn evaluate(&self, field: &Field, point: &[u32]) -> u32 {
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut t = field.from_bigint(c);
            for (&x, &k) in point.iter().zip(&m.0) {
                t = field.mul(t, field.pow(x, k as u64));
            }
            acc = field.add(acc, t);
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, other: &Polynomial) -> Polynomial {
        self.check_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars, self.modulus);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), self.normalize(-c));
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, other: &Polynomial) -> Polynomial {
        self + &(-other)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, other: &Polynomial) -> Polynomial {
        self.check_compatible(other);
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e: Vec<u32> = a.0.iter().zip(&b.0).map(|(i, j)| i + j).collect();
                *acc.entry(Monomial(e)).or_default() += x * y;
            }
        }
        let mut out = Polynomial::zero(self.nvars, self.modulus);
        for (m, c) in acc {
            let c = out.normalize(c);
            if !c.is_zero() {
                out.terms.insert(m, c);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            if k > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("y{}", i + 1) } else { format!("y{}^{}", i + 1, e) })
                .collect();
            match (a.is_one(), vars.is_empty()) {
                (_, true) => write!(f, "{a}")?,
                (true, false) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{a}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Build a permutation of `0..n` from 1-based cycles, e.g. `[[1, 2]]` or `[[1, 2, 3, 4]]`.
/// Entry `i` of the result is the image of `i`.
pub fn permutation_from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut seen = vec![false; n];
    for cycle in cycles {
        for (k, &a) in cycle.iter().enumerate() {
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::Parse(format!("bad cycle {cycle:?} for n = {n}")));
            }
            seen[a - 1] = true;
            perm[a - 1] = cycle[(k + 1) % cycle.len()] - 1;
        }
    }
    Ok(perm)
}

/// All permutations of `0..n` in lexicographic order.
pub fn symmetric_group(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// A linear change of variables: variable `j` maps to `sum_k images[j][k] * y_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearSubstitution {
    pub images: Vec<Vec<i64>>,
}

impl LinearSubstitution {
    pub fn identity(n: usize) -> Self {
        LinearSubstitution { images: (0..n).map(|j| (0..n).map(|k| i64::from(j == k)).collect()).collect() }
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let n = f.nvars();
        let images: Vec<Polynomial> = self
            .images
            .iter()
            .map(|row| Polynomial::from_terms(n, f.modulus(), row.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (unit(n, k), c))))
            .collect();
        f.substitute(&images)
    }
}

fn unit(n: usize, k: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    e[k] = 1;
    e
}

/// Action of a permutation of `x_1..x_n` (`x_i -> x_{perm[i]}`) on the difference
/// coordinates `y_j = x_j - x_{j+1}`, `j = 1..n-1`.
pub fn difference_coordinates_action(perm: &[usize]) -> Result<LinearSubstitution> {
    let n = perm.len();
    if n < 2 || !perm.iter().copied().sorted().eq(0..n) {
        return Err(Error::Parse(format!("{perm:?} is not a permutation of 0..{n}")));
    }
    let images = (0..n - 1)
        .map(|j| {
            let (a, b) = (perm[j], perm[j + 1]);
            // x_a - x_b = +/- (y_lo + ... + y_{hi-1})
            let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
            (0..n - 1).map(|k| if (lo..hi).contains(&k) { sign } else { 0 }).collect()
        })
        .collect();
    Ok(LinearSubstitution { images })
}

/// The S_4 action on `(y_1, y_2, y_3)`.
pub fn s4_action_on_y(perm: &[usize]) -> Result<LinearSubstitution> {
    if perm.len() != 4 {
        return Err(Error::Dimension(format!("permutation of {} letters, expected 4", perm.len())));
    }
    difference_coordinates_action(perm)
}

/// Whether `f` in `n - 1` difference coordinates is fixed by every permutation of `n` letters.
pub fn is_invariant(f: &Polynomial) -> bool {
    let n = f.nvars() + 1;
    symmetric_group(n).iter().all(|perm| difference_coordinates_action(perm).map(|s| s.apply(f) == *f).unwrap_or(false))
}

/// The three generators of the S_4-invariants of the difference coordinates over `F_2`,
/// of degrees 1, 4 and 6.
pub fn s4_difference_invariants_char2() -> [Polynomial; 3] {
    let p = Some(2);
    let f1 = Polynomial::from_terms(3, p, [(vec![1, 0, 0], 1), (vec![0, 0, 1], 1)]);
    let f2 = Polynomial::from_terms(
        3,
        p,
        [[2, 2, 0], [0, 4, 0], [2, 1, 1], [1, 2, 1], [2, 0, 2], [1, 1, 2], [0, 2, 2]].map(|e| (e.to_vec(), 1)),
    );
    let f3 = Polynomial::from_terms(
        3,
        p,
        [[4, 2, 0], [2, 4, 0], [4, 1, 1], [1, 4, 1], [4, 0, 2], [2, 2, 2], [0, 4, 2], [2, 0, 4], [1, 1, 4], [0, 2, 4]]
            .map(|e| (e.to_vec(), 1)),
    );
    [f1, f2, f3]
}

/// Outcome of the Jacobian criterion for a candidate generating set.
#[derive(Debug, Clone)]
pub struct JacobianReport {
    pub p: u64,
    pub determinant: Polynomial,
    /// Leading monomial of the determinant, if it is nonzero.
    pub witness: Option<Monomial>,
    pub degree_product: u64,
    pub group_order: u64,
    /// Nonzero determinant and degree product equal to the group order.
    pub holds: bool,
}

/// Determinant of a square matrix of polynomials by cofactor expansion along the first row.
pub fn polynomial_determinant(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = m.len();
    let first = m.first().and_then(|r| r.first()).ok_or_else(|| Error::Dimension("empty matrix".into()))?;
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("determinant of non-square matrix".into()));
    }
    if n == 1 {
        return Ok(first.clone());
    }
    let mut det = Polynomial::zero(first.nvars(), first.modulus());
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = a * &polynomial_determinant(&minor)?;
        det = if j % 2 == 0 { &det + &term } else { &det - &term };
    }
    Ok(det)
}

/// Jacobian determinant of `fs` over `F_p` and the degree count against `group_order`.
pub fn jacobian_criterion(fs: &[Polynomial], p: u64, group_order: u64) -> Result<JacobianReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = fs.first().map(Polynomial::nvars).ok_or_else(|| Error::Dimension("no polynomials".into()))?;
    if fs.len() != n || fs.iter().any(|f| f.nvars() != n) {
        return Err(Error::Dimension(format!("{} polynomials in {n} variables", fs.len())));
    }
    let reduced: Vec<Polynomial> = fs.iter().map(|f| f.reduce_mod(p)).collect();
    let jac: Vec<Vec<Polynomial>> = reduced.iter().map(|f| (0..n).map(|j| f.derivative(j)).collect()).collect();
    let determinant = polynomial_determinant(&jac)?;
    let degree_product = reduced.iter().map(|f| f.degree().unwrap_or(0) as u64).product();
    let witness = determinant.leading_monomial().cloned();
    let holds = witness.is_some() && degree_product == group_order;
    Ok(JacobianReport { p, determinant, witness, degree_product, group_order, holds })
}

/// Result of testing `charpoly(g X g^-1) = charpoly(X)` on random samples.
#[derive(Debug, Clone, Serialize)]
pub struct CharPolyInvarianceReport {
    pub n: usize,
    pub p: u64,
    pub d: usize,
    pub samples: usize,
    pub seed: u64,
    pub mismatches: usize,
    pub passed: bool,
}

/// Product of `len` random root elements `I + t E_ij` of `SL_n`.
fn random_root_product<R: Rng>(field: &Field, n: usize, len: usize, rng: &mut R) -> Result<FpMatrix> {
    let mut g = FpMatrix::identity(field, n);
    for _ in 0..len {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let mut x = FpMatrix::identity(field, n);
        x.set(i, j, field.random(rng));
        g = g.mul(&x)?;
    }
    Ok(g)
}

/// Samples traceless `X` over `F_{p^3}` and `g` in `SL_n` generated by root elements,
/// and compares characteristic polynomials of `X` and `g X g^-1`.
pub fn charpoly_invariance_check(n: usize, p: u64, samples: usize, seed: u64) -> Result<CharPolyInvarianceReport> {
    if n < 2 {
        return Err(Error::Dimension("n must be at least 2".into()));
    }
    let d = 3;
    let field = Field::new(p, d)?;
    let mut mismatches = 0;
    for t in 0..samples {
        let mut rng = trial_rng(seed, t);
        let mut x = FpMatrix::random(&field, n, n, &mut rng);
        let trace = (0..n - 1).fold(0, |acc, i| field.add(acc, x.get(i, i)));
        x.set(n - 1, n - 1, field.neg(trace));
        let g = random_root_product(&field, n, 4 * n, &mut rng)?;
        let conj = g.mul(&x)?.mul(&g.inverse()?)?;
        if conj.char_poly()? != x.char_poly()? {
            mismatches += 1;
        }
    }
    Ok(CharPolyInvarianceReport { n, p, d, samples, seed, mismatches, passed: mismatches == 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn y(i: usize, p: Option<u64>) -> Polynomial {
        Polynomial::var(3, p, i)
    }

    /// Image of `y_j` computed in `x` coordinates: push `x_j - x_{j+1}` through the
    /// permutation, then read off `y` coordinates as prefix sums.
    fn action_via_x(perm: &[usize]) -> Vec<Vec<i64>> {
        let n = perm.len();
        (0..n - 1)
            .map(|j| {
                let mut v = vec![0i64; n];
                v[perm[j]] += 1;
                v[perm[j + 1]] -= 1;
                v.iter().scan(0, |acc, &x| {
                    *acc += x;
                    Some(*acc)
                }).take(n - 1).collect()
            })
            .collect()
    }

    /// `f(y)` rewritten in `x_1..x_4` with `y_j = x_j - x_{j+1}`.
    fn in_x_coordinates(f: &Polynomial) -> Polynomial {
        let p = f.modulus();
        let x = |i| Polynomial::var(4, p, i);
        let ys: Vec<Polynomial> = (0..3).map(|j| &x(j) - &x(j + 1)).collect();
        f.substitute(&ys)
    }

    /// Permute the variables of a polynomial in `x` by relabelling exponents.
    fn relabel(f: &Polynomial, perm: &[usize]) -> Polynomial {
        Polynomial::from_terms(
            f.nvars(),
            f.modulus(),
            f.terms().map(|(m, c)| {
                let mut e = vec![0; f.nvars()];
                for (i, &k) in m.0.iter().enumerate() {
                    e[perm[i]] = k;
                }
                (e, i64::try_from(c.clone()).unwrap())
            }),
        )
    }

    #[test]
    fn s4_substitutions() {
        assert_eq!(s4_action_on_y(&[0, 1, 2, 3]).unwrap(), LinearSubstitution::identity(3));
        let swap = permutation_from_cycles(4, &[&[1, 2]]).unwrap();
        assert_eq!(s4_action_on_y(&swap).unwrap().images, vec![vec![-1, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]);
        let cycle = permutation_from_cycles(4, &[&[1, 2, 3, 4]]).unwrap();
        assert_eq!(cycle, vec![1, 2, 3, 0]);
        assert_eq!(s4_action_on_y(&cycle).unwrap().images, action_via_x(&cycle));
        for perm in symmetric_group(4) {
            assert_eq!(s4_action_on_y(&perm).unwrap().images, action_via_x(&perm));
        }
        assert_eq!(symmetric_group(4).len(), 24);
        assert!(s4_action_on_y(&[0, 1, 2]).is_err());
        assert!(difference_coordinates_action(&[0, 0, 1]).is_err());
        assert!(permutation_from_cycles(4, &[&[1, 5]]).is_err());
    }

    #[test]
    fn char2_generators_are_invariant() {
        let fs = s4_difference_invariants_char2();
        for f in &fs {
            assert!(is_invariant(f), "{f}");
            let fx = in_x_coordinates(f);
            for perm in symmetric_group(4) {
                assert_eq!(relabel(&fx, &perm), fx);
            }
        }
        let sum_x = Polynomial::from_terms(4, Some(2), (0..4).map(|i| (unit(4, i), 1)));
        assert_eq!(in_x_coordinates(&fs[0]), sum_x);
        assert_eq!(fs.iter().map(|f| f.degree().unwrap()).collect::<Vec<_>>(), vec![1, 4, 6]);
        assert!(!is_invariant(&y(0, Some(2))));
        // over the integers y_1 + y_3 is not invariant
        assert!(!is_invariant(&(&y(0, None) + &y(2, None))));
    }

    #[test]
    fn jacobian_of_char2_generators() {
        let fs = s4_difference_invariants_char2();
        let r = jacobian_criterion(&fs, 2, 24).unwrap();
        assert!(r.holds);
        assert_eq!(r.degree_product, 24);
        assert!(!r.determinant.coefficient(&[5, 2, 1]).is_zero());
        assert_eq!(r.determinant.degree(), Some(8));
        assert!(r.witness.is_some());
        assert!(!jacobian_criterion(&fs, 2, 12).unwrap().holds);
    }

    #[test]
    fn jacobian_singular_and_classical() {
        let p = Some(5);
        let lin = [y(0, p), y(1, p), &y(0, p) + &y(1, p)];
        let r = jacobian_criterion(&lin, 5, 1).unwrap();
        assert!(!r.holds);
        assert!(r.determinant.is_zero());
        assert_eq!(r.witness, None);

        let (a, b, c) = (y(0, p), y(1, p), y(2, p));
        let e1 = &(&a + &b) + &c;
        let e2 = &(&(&a * &b) + &(&a * &c)) + &(&b * &c);
        let e3 = &(&a * &b) * &c;
        let r = jacobian_criterion(&[e1, e2, e3], 5, 6).unwrap();
        assert!(r.holds);
        let vandermonde = &(&(&a - &b) * &(&a - &c)) * &(&b - &c);
        assert!(r.determinant == vandermonde || r.determinant == -&vandermonde);
        assert!(jacobian_criterion(&lin, 4, 1).is_err());
    }

    #[test]
    fn characteristic_polynomials_are_conjugation_invariant() {
        for (n, p) in [(3, 5), (4, 2), (2, 2)] {
            let r = charpoly_invariance_check(n, p, 10, 42).unwrap();
            assert!(r.passed, "n={n} p={p}");
            assert_eq!(r.mismatches, 0);
        }
        let f = Field::new(5, 3).unwrap();
        let zero = FpMatrix::zeros(&f, 3, 3);
        let mut rng = trial_rng(1, 0);
        let g = random_root_product(&f, 3, 12, &mut rng).unwrap();
        let conj = g.mul(&zero).unwrap().mul(&g.inverse().unwrap()).unwrap();
        assert_eq!(conj.char_poly().unwrap(), vec![0, 0, 0, 1]);
        assert!(charpoly_invariance_check(1, 5, 1, 0).is_err());
    }

    #[test]
    fn display_and_order() {
        let f = &(&y(0, None).pow(2) * &y(1, None)) - &y(2, None).scale(&BigInt::from(3));
        assert_eq!(f.to_string(), "y1^2*y2 - 3*y3");
        let m = |e: &[u32]| Monomial(e.to_vec());
        // degrevlex: x1 x3 < x2^2 since the last exponent of x1 x3 is larger
        assert!(m(&[1, 0, 1]) < m(&[0, 2, 0]));
        assert!(m(&[0, 0, 3]) < m(&[2, 1, 1]));
    }

    fn poly_strategy(p: Option<u64>) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..4, 3), -6i64..7), 0..6)
            .prop_map(move |terms| Polynomial::from_terms(3, p, terms))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in poly_strategy(Some(3)), b in poly_strategy(Some(3)), c in poly_strategy(Some(3))) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn derivative_is_a_derivation(a in poly_strategy(None), b in poly_strategy(None), i in 0usize..3) {
            let lhs = (&a * &b).derivative(i);
            let rhs = &(&a.derivative(i) * &b) + &(&a * &b.derivative(i));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reduction_is_a_ring_map(a in poly_strategy(None), b in poly_strategy(None)) {
            prop_assert_eq!((&a * &b).reduce_mod(2), &a.reduce_mod(2) * &b.reduce_mod(2));
            prop_assert!(a.reduce_mod(7).terms().all(|(_, c)| !c.is_zero()));
        }
    }
}
