//! Simple root systems of types A–G with Bourbaki numbering of the simple roots.
//!
//! Roots are integer coefficient vectors in the basis of simple roots. Weights are
//! integer vectors in the basis of fundamental weights. The Cartan matrix uses the
//! convention `cartan[i][j] = <alpha_j, alpha_i^vee>`, so the fundamental-weight
//! coordinates of a root `c` are `cartan * c`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeTag {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeTag {
    pub fn letter(self) -> char {
        match self {
            TypeTag::A => 'A',
            TypeTag::B => 'B',
            TypeTag::C => 'C',
            TypeTag::D => 'D',
            TypeTag::E => 'E',
            TypeTag::F => 'F',
            TypeTag::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => TypeTag::A,
            'B' => TypeTag::B,
            'C' => TypeTag::C,
            'D' => TypeTag::D,
            'E' => TypeTag::E,
            'F' => TypeTag::F,
            'G' => TypeTag::G,
            _ => return None,
        })
    }

    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            TypeTag::A => rank >= 1,
            TypeTag::B | TypeTag::C => rank >= 2,
            TypeTag::D => rank >= 3,
            TypeTag::E => (6..=8).contains(&rank),
            TypeTag::F => rank == 4,
            TypeTag::G => rank == 2,
        }
    }
}

/// A simple type such as `E8`, parsed from strings like `"E8"` or `"c5"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub tag: TypeTag,
    pub rank: usize,
}

impl CartanType {
    pub fn new(tag: TypeTag, rank: usize) -> Result<Self> {
        if !tag.is_valid_rank(rank) {
            return Err(Error::InvalidType { tag: tag.letter().to_string(), rank });
        }
        Ok(Self { tag, rank })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.tag.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::Parse("empty type".into()))?;
        let tag = TypeTag::from_letter(letter)
            .ok_or_else(|| Error::Parse(format!("unknown type letter {letter:?} in {s:?}")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in type {s:?}")))?;
        CartanType::new(tag, rank)
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_restricted(&self, p: u64) -> bool {
        self.0.iter().all(|&c| c >= 0 && (c as u64) < p)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Squared lengths of the simple roots, normalized so the short roots have length 2.
fn simple_lengths(tag: TypeTag, rank: usize) -> Vec<i64> {
    match tag {
        TypeTag::A | TypeTag::D | TypeTag::E => vec![2; rank],
        TypeTag::B => (0..rank).map(|i| if i + 1 < rank { 4 } else { 2 }).collect(),
        TypeTag::C => (0..rank).map(|i| if i + 1 < rank { 2 } else { 4 }).collect(),
        TypeTag::F => vec![4, 4, 2, 2],
        // alpha_1 long, so that omega_2 is the 7-dimensional module
        TypeTag::G => vec![6, 2],
    }
}

/// Edges of the Dynkin diagram (0-based, Bourbaki numbering).
fn dynkin_edges(tag: TypeTag, rank: usize) -> Vec<(usize, usize)> {
    let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match tag {
        TypeTag::A | TypeTag::B | TypeTag::C | TypeTag::F | TypeTag::G => chain(rank),
        TypeTag::D => {
            let mut e = chain(rank - 1);
            e.push((rank - 3, rank - 1));
            e
        }
        TypeTag::E => {
            // 1-3-4-5-6-7-8 with 2 attached to 4
            let mut e = vec![(0, 2), (1, 3)];
            for i in 2..rank - 1 {
                e.push((i, i + 1));
            }
            e
        }
    }
}

/// The root system of a simple type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    pub cartan: Vec<Vec<i64>>,
    /// Gram matrix of the invariant form on simple roots (short roots squared length 2).
    pub form: Vec<Vec<i64>>,
    /// All roots, sorted by (height, lexicographic coefficients).
    pub roots: Vec<Vec<i64>>,
    pub positive_roots: Vec<usize>,
    index: HashMap<Vec<i64>, usize>,
    pub highest_root: Vec<i64>,
    /// `fundamental_weights[i]` expresses omega_i in simple-root coordinates.
    pub fundamental_weights: Vec<Vec<Rational64>>,
}

pub fn height(root: &[i64]) -> i64 {
    root.iter().sum()
}

impl RootSystem {
    pub fn new(tag: TypeTag, rank: usize) -> Result<Self> {
        let ct = CartanType::new(tag, rank)?;
        let lengths = simple_lengths(tag, rank);
        let mut form = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            form[i][i] = lengths[i];
        }
        for (i, j) in dynkin_edges(tag, rank) {
            let v = -lengths[i].max(lengths[j]) / 2;
            form[i][j] = v;
            form[j][i] = v;
        }
        Self::from_form(ct, form)
    }

    pub fn from_type(ct: CartanType) -> Result<Self> {
        Self::new(ct.tag, ct.rank)
    }

    fn from_form(cartan_type: CartanType, form: Vec<Vec<i64>>) -> Result<Self> {
        let rank = form.len();
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * form[i][j] / form[i][i]).collect())
            .collect();
        let simple: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut v = vec![0; rank];
                v[i] = 1;
                v
            })
            .collect();
        let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Vec<i64>> = simple.iter().cloned().collect();
        while let Some(r) = queue.pop_front() {
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| cartan[i][j] * r[j]).sum();
                let mut s = r.clone();
                s[i] -= pairing;
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
        roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let positive_roots: Vec<usize> = (0..roots.len()).filter(|&i| height(&roots[i]) > 0).collect();
        let highest_root = roots.last().cloned().expect("nonempty root system");
        let fundamental_weights = invert_integer_matrix(&cartan)
            .ok_or_else(|| Error::Consistency("singular Cartan matrix".into()))?;
        // column i of cartan^{-1} is omega_i in simple roots
        let fundamental_weights = (0..rank)
            .map(|i| (0..rank).map(|k| fundamental_weights[k][i]).collect())
            .collect();
        Ok(Self {
            cartan_type,
            cartan,
            form,
            roots,
            positive_roots,
            index,
            highest_root,
            fundamental_weights,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Dimension of the corresponding simple Lie algebra.
    pub fn dim_algebra(&self) -> usize {
        self.roots.len() + self.rank()
    }

    pub fn index_of(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        self.index_of(&self.simple_root(i)).expect("simple root present")
    }

    /// Invariant form `(a, b)` on the root lattice.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let l = self.rank();
        let mut s = 0;
        for i in 0..l {
            if a[i] == 0 {
                continue;
            }
            for j in 0..l {
                s += a[i] * self.form[i][j] * b[j];
            }
        }
        s
    }

    /// `<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)`.
    pub fn pairing(&self, beta: &[i64], alpha: &[i64]) -> i64 {
        2 * self.inner(beta, alpha) / self.inner(alpha, alpha)
    }

    /// Fundamental-weight coordinates of an element of the root lattice.
    pub fn to_weight(&self, root: &[i64]) -> Weight {
        let l = self.rank();
        Weight((0..l).map(|i| (0..l).map(|j| self.cartan[i][j] * root[j]).sum()).collect())
    }

    /// The simple root alpha_j in fundamental-weight coordinates.
    pub fn simple_root_weight(&self, j: usize) -> Weight {
        Weight((0..self.rank()).map(|i| self.cartan[i][j]).collect())
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<Rational64> {
        let l = self.rank();
        (0..l)
            .map(|k| {
                (0..l).fold(Rational64::zero(), |acc, i| acc + self.fundamental_weights[i][k] * w.0[i])
            })
            .collect()
    }

    /// Coefficients of `alpha^vee` in the basis of simple coroots.
    pub fn coroot_coords(&self, alpha: &[i64]) -> Vec<i64> {
        let la = self.inner(alpha, alpha);
        (0..self.rank()).map(|i| alpha[i] * self.form[i][i] / la).collect()
    }

    pub fn reflect(&self, beta: &[i64], alpha: &[i64]) -> Vec<i64> {
        let c = self.pairing(beta, alpha);
        beta.iter().zip(alpha).map(|(b, a)| b - c * a).collect()
    }

    pub fn height_of_highest_root(&self) -> i64 {
        height(&self.highest_root)
    }

    pub fn is_long(&self, root: &[i64]) -> bool {
        let max = (0..self.rank()).map(|i| self.form[i][i]).max().unwrap_or(2);
        self.inner(root, root) == max
    }

    /// Order of the Weyl group.
    pub fn weyl_group_order(&self) -> BigUint {
        weyl_order_of_cartan(&self.cartan)
    }
}

/// Weyl group order of an arbitrary (possibly reducible) Cartan matrix, computed as
/// the product of orbit sizes of fundamental weights along a chain of parabolic subgroups.
pub fn weyl_order_of_cartan(cartan: &[Vec<i64>]) -> BigUint {
    let l = cartan.len();
    if l == 0 {
        return BigUint::one();
    }
    let last = l - 1;
    let mut start = vec![0i64; l];
    start[last] = 1;
    let orbit = weight_orbit_size(cartan, &start);
    let sub: Vec<Vec<i64>> = (0..last).map(|i| cartan[i][..last].to_vec()).collect();
    BigUint::from(orbit) * weyl_order_of_cartan(&sub)
}

/// Size of the Weyl-group orbit of a weight given in fundamental-weight coordinates.
pub fn weight_orbit_size(cartan: &[Vec<i64>], w: &[i64]) -> usize {
    let l = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.to_vec());
    queue.push_back(w.to_vec());
    while let Some(x) = queue.pop_front() {
        for j in 0..l {
            if x[j] == 0 {
                continue;
            }
            // s_j(x) = x - x_j alpha_j, and alpha_j has weight coordinates cartan[.][j]
            let y: Vec<i64> = (0..l).map(|i| x[i] - x[j] * cartan[i][j]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

fn invert_integer_matrix(m: &[Vec<i64>]) -> Option<Vec<Vec<Rational64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// One simple component of a root subsystem, with its simple roots expressed in the
/// ambient simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsystemComponent {
    pub cartan_type: CartanType,
    pub simple_roots: Vec<Vec<i64>>,
}

#[derive(Debug, Clone)]
pub struct RootSubsystem {
    /// All roots of the subsystem, in ambient coordinates and ambient root order.
    pub roots: Vec<Vec<i64>>,
    pub simple_roots: Vec<Vec<i64>>,
    pub components: Vec<SubsystemComponent>,
}

impl RootSubsystem {
    /// Type string such as `A2^4` or `A1^7` or `A1 x B2`.
    pub fn type_string(&self) -> String {
        let mut counts: Vec<(CartanType, usize)> = Vec::new();
        for c in &self.components {
            match counts.iter_mut().find(|(t, _)| *t == c.cartan_type) {
                Some((_, n)) => *n += 1,
                None => counts.push((c.cartan_type, 1)),
            }
        }
        counts.sort_by_key(|(t, _)| (t.tag, t.rank));
        counts
            .iter()
            .map(|(t, n)| if *n == 1 { t.to_string() } else { format!("{t}^{n}") })
            .collect::<Vec<_>>()
            .join(" x ")
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }
}

/// Closure of the given roots under the reflections they generate.
pub fn root_subsystem(rs: &RootSystem, generators: &[Vec<i64>]) -> Result<RootSubsystem> {
    for g in generators {
        if !rs.is_root(g) {
            return Err(Error::NotARoot(g.clone()));
        }
    }
    let mut set: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for g in generators {
        for r in [g.clone(), g.iter().map(|x| -x).collect()] {
            if set.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    while let Some(r) = queue.pop_front() {
        let current: Vec<Vec<i64>> = set.iter().cloned().collect();
        for s in current {
            for (a, b) in [(&r, &s), (&s, &r)] {
                let t = rs.reflect(a, b);
                if set.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = set.into_iter().collect();
    roots.sort_by_key(|r| rs.index_of(r).expect("closure stays in the root system"));
    let positive: Vec<&Vec<i64>> = roots.iter().filter(|r| height(r) > 0).collect();
    let pos_set: HashSet<&Vec<i64>> = positive.iter().copied().collect();
    let simple_roots: Vec<Vec<i64>> = positive
        .iter()
        .filter(|r| {
            !positive.iter().any(|a| {
                let diff: Vec<i64> = r.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
                pos_set.contains(&diff)
            })
        })
        .map(|r| (*r).clone())
        .collect();
    let components = decompose(rs, &simple_roots)?;
    Ok(RootSubsystem { roots, simple_roots, components })
}

fn decompose(rs: &RootSystem, simple: &[Vec<i64>]) -> Result<Vec<SubsystemComponent>> {
    let n = simple.len();
    let mut comp_of = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![start];
        comp_of[start] = id;
        let mut k = 0;
        while k < members.len() {
            let a = members[k];
            for b in 0..n {
                if comp_of[b] == usize::MAX && rs.inner(&simple[a], &simple[b]) != 0 {
                    comp_of[b] = id;
                    members.push(b);
                }
            }
            k += 1;
        }
        comps.push(members);
    }
    comps
        .into_iter()
        .map(|members| {
            let roots: Vec<Vec<i64>> = members.iter().map(|&i| simple[i].clone()).collect();
            let cartan_type = identify_component(rs, &roots)?;
            Ok(SubsystemComponent { cartan_type, simple_roots: roots })
        })
        .collect()
}

/// Identify the type of a connected set of simple roots from its Dynkin diagram.
fn identify_component(rs: &RootSystem, simple: &[Vec<i64>]) -> Result<CartanType> {
    let n = simple.len();
    let bond = |a: usize, b: usize| -> i64 {
        rs.pairing(&simple[a], &simple[b]) * rs.pairing(&simple[b], &simple[a])
    };
    let mut degree = vec![0usize; n];
    let mut max_bond = 0;
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let m = bond(a, b);
            if m != 0 {
                degree[a] += 1;
                degree[b] += 1;
                max_bond = max_bond.max(m);
                edges.push((a, b, m));
            }
        }
    }
    let fail = || Error::Consistency(format!("unrecognized Dynkin diagram on {n} nodes"));
    if n == 1 {
        return CartanType::new(TypeTag::A, 1);
    }
    match max_bond {
        3 => CartanType::new(TypeTag::G, 2),
        2 => {
            if n == 2 {
                return CartanType::new(TypeTag::B, 2);
            }
            let (a, b, _) = *edges.iter().find(|e| e.2 == 2).ok_or_else(fail)?;
            let ends_at_leaf = degree[a] == 1 || degree[b] == 1;
            if !ends_at_leaf {
                return CartanType::new(TypeTag::F, 4);
            }
            let (leaf, other) = if degree[a] == 1 { (a, b) } else { (b, a) };
            let leaf_short = rs.inner(&simple[leaf], &simple[leaf]) < rs.inner(&simple[other], &simple[other]);
            CartanType::new(if leaf_short { TypeTag::B } else { TypeTag::C }, n)
        }
        1 => {
            let branch: Vec<usize> = (0..n).filter(|&i| degree[i] == 3).collect();
            if branch.is_empty() {
                return CartanType::new(TypeTag::A, n);
            }
            let center = branch[0];
            // arm lengths from the branch node
            let mut arms = Vec::new();
            for &(a, b, _) in edges.iter().filter(|e| e.0 == center || e.1 == center) {
                let mut prev = center;
                let mut cur = if a == center { b } else { a };
                let mut len = 1;
                loop {
                    let next = edges
                        .iter()
                        .filter_map(|&(x, y, _)| {
                            if x == cur && y != prev {
                                Some(y)
                            } else if y == cur && x != prev {
                                Some(x)
                            } else {
                                None
                            }
                        })
                        .next();
                    match next {
                        Some(nx) => {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        None => break,
                    }
                }
                arms.push(len);
            }
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => CartanType::new(TypeTag::D, n),
                [1, 2, 2] => CartanType::new(TypeTag::E, 6),
                [1, 2, 3] => CartanType::new(TypeTag::E, 7),
                [1, 2, 4] => CartanType::new(TypeTag::E, 8),
                _ => Err(fail()),
            }
        }
        _ => Err(fail()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_type(s.parse().unwrap()).unwrap()
    }

    /// Positive roots by the root-string algorithm: extend beta by alpha_i whenever
    /// the alpha_i-string through beta continues upward.
    fn positive_roots_by_strings(cartan: &[Vec<i64>]) -> HashSet<Vec<i64>> {
        let l = cartan.len();
        let mut found: HashSet<Vec<i64>> = HashSet::new();
        let mut layer: Vec<Vec<i64>> = (0..l)
            .map(|i| {
                let mut v = vec![0; l];
                v[i] = 1;
                v
            })
            .collect();
        found.extend(layer.iter().cloned());
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..l {
                    // p = how far down the string goes
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if found.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..l).map(|j| cartan[i][j] * beta[j]).sum();
                    let q = p - pairing;
                    if q > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if found.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            layer = next;
        }
        found
    }

    #[test]
    fn root_counts_match_string_oracle() {
        for t in ["A1", "A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(t);
            let oracle = positive_roots_by_strings(&r.cartan);
            let pos: HashSet<Vec<i64>> = r.positive_roots.iter().map(|&i| r.roots[i].clone()).collect();
            assert_eq!(pos, oracle, "{t}");
            assert_eq!(r.num_roots(), 2 * r.positive_roots.len());
        }
    }

    #[test]
    fn g2_and_e8_examples() {
        let g2 = rs("G2");
        assert_eq!(g2.num_roots(), 12);
        assert_eq!(g2.highest_root, vec![2, 3]);
        assert_eq!(g2.cartan, vec![vec![2, -1], vec![-3, 2]]);
        let e8 = rs("E8");
        assert_eq!(e8.num_roots(), 240);
        assert_eq!(e8.height_of_highest_root(), 29);
        assert_eq!(e8.highest_root, vec![2, 3, 4, 6, 5, 4, 3, 2]);
        let a1 = rs("A1");
        assert_eq!(a1.roots, vec![vec![-1], vec![1]]);
    }

    #[test]
    fn cartan_matrices_follow_bourbaki() {
        assert_eq!(rs("B2").cartan, vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(rs("C3").cartan, vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]);
        assert_eq!(
            rs("F4").cartan,
            vec![vec![2, -1, 0, 0], vec![-1, 2, -1, 0], vec![0, -2, 2, -1], vec![0, 0, -1, 2]]
        );
        let e6 = rs("E6");
        assert_eq!(e6.cartan[1][3], -1);
        assert_eq!(e6.cartan[0][2], -1);
        assert_eq!(e6.cartan[1][2], 0);
        assert_eq!(rs("D4").cartan[1], vec![-1, 2, -1, -1]);
    }

    #[test]
    fn reflection_closure_and_highest_root() {
        for t in ["A3", "B4", "C3", "D4", "E6", "F4", "G2"] {
            let r = rs(t);
            for a in &r.roots {
                assert!(r.is_root(&a.iter().map(|x| -x).collect::<Vec<_>>()));
                for i in 0..r.rank() {
                    assert!(r.is_root(&r.reflect(a, &r.simple_root(i))));
                }
            }
            let h = r.height_of_highest_root();
            assert!(r.roots.iter().all(|a| height(a) <= h));
            assert!(r.highest_root.iter().all(|&c| c >= 1));
        }
    }

    #[test]
    fn weyl_orders() {
        let expect = [
            ("A1", 2u64),
            ("A3", 24),
            ("B3", 48),
            ("C4", 384),
            ("D4", 192),
            ("G2", 12),
            ("F4", 1152),
            ("E6", 51840),
            ("E7", 2903040),
            ("E8", 696729600),
        ];
        for (t, n) in expect {
            assert_eq!(rs(t).weyl_group_order(), BigUint::from(n), "{t}");
        }
        // G2 by orbit of a regular weight
        let g2 = rs("G2");
        assert_eq!(weight_orbit_size(&g2.cartan, &[1, 1]), 12);
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(RootSystem::new(TypeTag::B, 1).is_err());
        assert!(RootSystem::new(TypeTag::E, 9).is_err());
        assert!(RootSystem::new(TypeTag::D, 2).is_err());
        assert!("X3".parse::<CartanType>().is_err());
    }

    #[test]
    fn fundamental_weights() {
        let g2 = rs("G2");
        // omega_1 = 2 a1 + 3 a2 (highest root), omega_2 = a1 + 2 a2 (highest short root)
        assert_eq!(g2.fundamental_weights[0], vec![Rational64::from(2), Rational64::from(3)]);
        assert_eq!(g2.fundamental_weights[1], vec![Rational64::from(1), Rational64::from(2)]);
        let b2 = rs("B2");
        assert_eq!(b2.fundamental_weights[1], vec![Rational64::new(1, 2), Rational64::from(1)]);
        assert_eq!(b2.to_weight(&[1, 0]), Weight(vec![2, -2]));
    }

    #[test]
    fn subsystems() {
        let a2 = rs("A2");
        let s = root_subsystem(&a2, &[vec![1, 0]]).unwrap();
        assert_eq!(s.type_string(), "A1");
        assert!(root_subsystem(&a2, &[vec![2, 0]]).is_err());
        let b3 = rs("B3");
        let long: Vec<Vec<i64>> = b3.roots.iter().filter(|r| b3.is_long(r)).cloned().collect();
        let s = root_subsystem(&b3, &long).unwrap();
        assert_eq!(s.type_string(), "A3");
    }
}
