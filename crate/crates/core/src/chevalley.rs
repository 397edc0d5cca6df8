//! Chevalley bases of simple Lie algebras: integral structure constants, reduction
//! modulo a prime, and a few subspace computations inside the reduced algebra.
//!
//! Basis order: `e_alpha` for every root in the order of [`RootSystem::roots`], followed
//! by `rank` torus elements. Signs of the structure constants are fixed by setting
//! `N(alpha, beta) = r + 1 > 0` on extraspecial pairs, and `N(-alpha, -beta) =
//! -N(alpha, beta)` throughout, so that `e_alpha -> e_{-alpha}` is an anti-automorphism.

use std::sync::Arc;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::exactlin::{Elem, Field, FpMatrix};
use crate::rootsys::{height, CartanType, RootSystem};

/// Choice of basis for the Cartan subalgebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Torus {
    /// Simple coroots `h_i = [e_{alpha_i}, e_{-alpha_i}]` (simply connected group).
    Coroots,
    /// Fundamental coweights `h'_j`, with `[h'_j, e_beta] = beta_j e_beta` (adjoint group).
    Coweights,
}

/// The algebra of type `ct` reduced mod `p`, with the simple-coroot torus.
pub fn reduced_algebra(ct: CartanType, p: u64) -> Result<Arc<LieAlgebraFp>> {
    let rs = Arc::new(RootSystem::from_type(ct)?);
    Ok(Arc::new(ChevalleyAlgebra::new(rs)?.specialize(p)?))
}

/// Sparse element: list of (basis index, coefficient).
pub type SparseVec<T> = Vec<(usize, T)>;

#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    rs: Arc<RootSystem>,
    /// `n[a * R + b]` for root indices `a`, `b`; zero when `alpha + beta` is not a root.
    n: Vec<i64>,
    neg: Vec<usize>,
}

impl ChevalleyAlgebra {
    /// Structure constants for `rs`, with the Jacobi identity verified over the integers.
    pub fn new(rs: Arc<RootSystem>) -> Result<Self> {
        let alg = Self::build(rs)?;
        alg.check_string_property()?;
        alg.check_jacobi()?;
        Ok(alg)
    }

    /// Construct without the Jacobi check.
    pub fn new_unchecked(rs: Arc<RootSystem>) -> Result<Self> {
        Self::build(rs)
    }

    fn build(rs: Arc<RootSystem>) -> Result<Self> {
        let nr = rs.num_roots();
        let neg: Vec<usize> = rs
            .roots
            .iter()
            .map(|r| {
                let m: Vec<i64> = r.iter().map(|x| -x).collect();
                rs.index_of(&m).expect("negative of a root is a root")
            })
            .collect();
        let mut alg = Self { rs: rs.clone(), n: vec![0; nr * nr], neg };
        let add = |a: usize, b: usize| -> Option<usize> {
            let s: Vec<i64> = rs.roots[a].iter().zip(&rs.roots[b]).map(|(x, y)| x + y).collect();
            rs.index_of(&s)
        };

        // positive pairs, by increasing height of the sum
        let pos = rs.positive_roots.clone();
        for &xi in &pos {
            if height(&rs.roots[xi]) == 1 {
                continue;
            }
            let mut special: Vec<(usize, usize)> = Vec::new();
            for &a in &pos {
                for &b in &pos {
                    if a < b && add(a, b) == Some(xi) {
                        special.push((a, b));
                    }
                }
            }
            special.sort();
            let &(a0, b0) = special.first().ok_or_else(|| Error::Consistency("root without special pair".into()))?;
            let r0 = alg.string_below(a0, b0) as i64;
            alg.set_pos(a0, b0, r0 + 1);
            for &(a, b) in &special[1..] {
                let v = alg.from_extraspecial(a, b, a0, b0, xi)?;
                alg.set_pos(a, b, v);
            }
        }

        // everything else from the positive table
        let mut full = vec![0i64; nr * nr];
        for a in 0..nr {
            for b in 0..nr {
                if add(a, b).is_some() {
                    full[a * nr + b] = alg.derived(a, b)?;
                }
            }
        }
        alg.n = full;
        Ok(alg)
    }

    fn set_pos(&mut self, a: usize, b: usize, v: i64) {
        let nr = self.rs.num_roots();
        self.n[a * nr + b] = v;
        self.n[b * nr + a] = -v;
    }

    /// Largest `r` with `beta - r alpha` a root.
    fn string_below(&self, a: usize, b: usize) -> usize {
        let (al, be) = (&self.rs.roots[a], &self.rs.roots[b]);
        let mut r = 0;
        loop {
            let v: Vec<i64> = be.iter().zip(al).map(|(y, x)| y - (r as i64 + 1) * x).collect();
            if self.rs.is_root(&v) {
                r += 1;
            } else {
                return r;
            }
        }
    }

    fn root_len(&self, v: &[i64]) -> i64 {
        self.rs.inner(v, v)
    }

    fn diff(&self, a: usize, b: usize) -> Vec<i64> {
        self.rs.roots[a].iter().zip(&self.rs.roots[b]).map(|(x, y)| x - y).collect()
    }

    /// Value of `N(a, b)` for an arbitrary pair, computed from positive pairs already in
    /// the table.
    fn derived(&self, a: usize, b: usize) -> Result<i64> {
        let rs = &self.rs;
        let nr = rs.num_roots();
        let pa = height(&rs.roots[a]) > 0;
        let pb = height(&rs.roots[b]) > 0;
        let sum: Vec<i64> = rs.roots[a].iter().zip(&rs.roots[b]).map(|(x, y)| x + y).collect();
        if !rs.is_root(&sum) {
            return Ok(0);
        }
        match (pa, pb) {
            (true, true) => Ok(self.n[a * nr + b]),
            (false, false) => Ok(-self.n[self.neg[a] * nr + self.neg[b]]),
            (false, true) => Ok(-self.derived(b, a)?),
            (true, false) => {
                // alpha + beta + gamma = 0
                let c_root: Vec<i64> = sum.iter().map(|x| -x).collect();
                let c = rs.index_of(&c_root).expect("root");
                let lg = self.root_len(&c_root);
                let v = if height(&c_root) < 0 {
                    // beta, gamma both negative: N(a,b) = (g,g)/(a,a) N(b,c)
                    let nbc = -self.n[self.neg[b] * nr + self.neg[c]];
                    Rational64::new(lg * nbc, self.root_len(&rs.roots[a]))
                } else {
                    // gamma, alpha both positive: N(a,b) = (g,g)/(b,b) N(c,a)
                    let nca = self.n[c * nr + a];
                    Rational64::new(lg * nca, self.root_len(&rs.roots[b]))
                };
                if !v.is_integer() {
                    return Err(Error::Consistency(format!("non-integral structure constant at ({a},{b})")));
                }
                Ok(v.to_integer())
            }
        }
    }

    fn from_extraspecial(&self, a: usize, b: usize, a0: usize, b0: usize, xi: usize) -> Result<i64> {
        let rs = &self.rs;
        let n0 = self.n[a0 * rs.num_roots() + b0];
        let mut total = Rational64::from_integer(0);
        // N(b, -a0) N(a, -b0) / |b - a0|^2
        let d1 = self.diff(b, a0);
        if rs.is_root(&d1) {
            let t = self.derived(b, self.neg[a0])? * self.derived(a, self.neg[b0])?;
            total += Rational64::new(t, self.root_len(&d1));
        }
        // N(-a0, a) N(b, -b0) / |a - a0|^2
        let d2 = self.diff(a, a0);
        if rs.is_root(&d2) {
            let t = self.derived(self.neg[a0], a)? * self.derived(b, self.neg[b0])?;
            total += Rational64::new(t, self.root_len(&d2));
        }
        let v = total * Rational64::from_integer(self.root_len(&rs.roots[xi])) / Rational64::from_integer(n0);
        if !v.is_integer() {
            return Err(Error::Consistency(format!("non-integral structure constant for pair ({a},{b})")));
        }
        Ok(v.to_integer())
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> Arc<RootSystem> {
        self.rs.clone()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn num_roots(&self) -> usize {
        self.rs.num_roots()
    }

    pub fn dim(&self) -> usize {
        self.rs.dim_algebra()
    }

    /// Index of the root `-alpha`.
    pub fn negative(&self, a: usize) -> usize {
        self.neg[a]
    }

    /// `N(alpha, beta)` for root indices; zero when `alpha + beta` is not a root.
    pub fn structure_constant(&self, a: usize, b: usize) -> i64 {
        self.n[a * self.rs.num_roots() + b]
    }

    /// Bracket of two basis elements over the integers.
    pub fn bracket_basis(&self, i: usize, j: usize, torus: Torus) -> SparseVec<i64> {
        let rs = &self.rs;
        let nr = rs.num_roots();
        let l = rs.rank();
        match (i < nr, j < nr) {
            (true, true) => {
                if self.neg[i] == j {
                    let alpha = &rs.roots[i];
                    let coeffs: Vec<i64> = match torus {
                        Torus::Coroots => rs.coroot_coords(alpha),
                        Torus::Coweights => (0..l).map(|k| rs.pairing(&rs.simple_root(k), alpha)).collect(),
                    };
                    coeffs.into_iter().enumerate().filter(|(_, c)| *c != 0).map(|(k, c)| (nr + k, c)).collect()
                } else {
                    let n = self.n[i * nr + j];
                    if n == 0 {
                        return vec![];
                    }
                    let s: Vec<i64> = rs.roots[i].iter().zip(&rs.roots[j]).map(|(x, y)| x + y).collect();
                    vec![(rs.index_of(&s).expect("root"), n)]
                }
            }
            (false, true) => {
                let c = self.torus_eigenvalue(i - nr, j, torus);
                if c == 0 {
                    vec![]
                } else {
                    vec![(j, c)]
                }
            }
            (true, false) => {
                let c = self.torus_eigenvalue(j - nr, i, torus);
                if c == 0 {
                    vec![]
                } else {
                    vec![(i, -c)]
                }
            }
            (false, false) => vec![],
        }
    }

    /// Eigenvalue of the `k`-th torus basis element on `e_beta`.
    pub fn torus_eigenvalue(&self, k: usize, beta: usize, torus: Torus) -> i64 {
        let b = &self.rs.roots[beta];
        match torus {
            Torus::Coroots => (0..self.rank()).map(|j| self.rs.cartan[k][j] * b[j]).sum(),
            Torus::Coweights => b[k],
        }
    }

    /// `|N(alpha, beta)| = r + 1` for every pair with `alpha + beta` a root.
    pub fn check_string_property(&self) -> Result<()> {
        let nr = self.num_roots();
        for a in 0..nr {
            for b in 0..nr {
                let n = self.n[a * nr + b];
                let s: Vec<i64> = self.rs.roots[a].iter().zip(&self.rs.roots[b]).map(|(x, y)| x + y).collect();
                if self.rs.is_root(&s) {
                    let r = self.string_below(a, b) as i64;
                    if n.abs() != r + 1 {
                        return Err(Error::Consistency(format!("|N({a},{b})| = {} but r + 1 = {}", n.abs(), r + 1)));
                    }
                } else if n != 0 {
                    return Err(Error::Consistency(format!("N({a},{b}) nonzero off the root system")));
                }
            }
        }
        Ok(())
    }

    /// Jacobi identity on all basis triples, over the integers, for both torus choices.
    pub fn check_jacobi(&self) -> Result<()> {
        for torus in [Torus::Coroots, Torus::Coweights] {
            let table = IntTable::new(self, torus);
            let failure =
                jacobi_failure(self.dim(), &table.0, |x| x == 0, |acc, c, d| *acc += c * d, |r| self.weight_of(r), &self.rs);
            if let Some((i, j, k)) = failure {
                return Err(Error::Consistency(format!("Jacobi identity fails on basis triple ({i},{j},{k})")));
            }
        }
        Ok(())
    }

    fn weight_of(&self, idx: usize) -> Vec<i64> {
        if idx < self.num_roots() {
            self.rs.roots[idx].clone()
        } else {
            vec![0; self.rank()]
        }
    }

    /// Reduction modulo `p` with simple coroots as the torus basis.
    pub fn specialize(&self, p: u64) -> Result<LieAlgebraFp> {
        self.specialize_with(p, Torus::Coroots)
    }

    pub fn specialize_with(&self, p: u64, torus: Torus) -> Result<LieAlgebraFp> {
        let field = Field::prime(p)?;
        let dim = self.dim();
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v: SparseVec<Elem> = self
                    .bracket_basis(i, j, torus)
                    .into_iter()
                    .map(|(k, c)| (k, field.from_i64(c)))
                    .filter(|&(_, c)| c != 0)
                    .collect();
                table.push(v);
            }
        }
        Ok(LieAlgebraFp { ca: Arc::new(self.clone()), field, torus, table })
    }
}

struct IntTable(Vec<SparseVec<i64>>);

impl IntTable {
    fn new(ca: &ChevalleyAlgebra, torus: Torus) -> Self {
        let d = ca.dim();
        let mut t = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                t.push(ca.bracket_basis(i, j, torus));
            }
        }
        Self(t)
    }
}

/// Search for a basis triple violating the Jacobi identity. Triples whose total weight is
/// neither zero nor a root are skipped, since every term vanishes there.
fn jacobi_failure<T: Copy + Default + PartialEq>(
    dim: usize,
    table: &[SparseVec<T>],
    is_zero: impl Fn(T) -> bool,
    fma: impl Fn(&mut T, T, T),
    weight: impl Fn(usize) -> Vec<i64>,
    rs: &RootSystem,
) -> Option<(usize, usize, usize)> {
    let weights: Vec<Vec<i64>> = (0..dim).map(&weight).collect();
    let mut acc: Vec<T> = vec![T::default(); dim];
    let mut touched: Vec<usize> = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for k in j + 1..dim {
                let w: Vec<i64> = (0..rs.rank()).map(|t| weights[i][t] + weights[j][t] + weights[k][t]).collect();
                if w.iter().any(|&x| x != 0) && !rs.is_root(&w) {
                    continue;
                }
                touched.clear();
                for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                    for &(m, c) in &table[y * dim + z] {
                        for &(n, d) in &table[x * dim + m] {
                            fma(&mut acc[n], c, d);
                            touched.push(n);
                        }
                    }
                }
                let mut bad = false;
                for &n in &touched {
                    if !is_zero(acc[n]) {
                        bad = true;
                    }
                    acc[n] = T::default();
                }
                if bad {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// A Chevalley-basis Lie algebra reduced modulo a prime.
#[derive(Debug, Clone)]
pub struct LieAlgebraFp {
    ca: Arc<ChevalleyAlgebra>,
    field: Field,
    torus: Torus,
    table: Vec<SparseVec<Elem>>,
}

impl LieAlgebraFp {
    pub fn chevalley(&self) -> &ChevalleyAlgebra {
        &self.ca
    }

    pub fn chevalley_arc(&self) -> Arc<ChevalleyAlgebra> {
        self.ca.clone()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.ca.rs
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn torus(&self) -> Torus {
        self.torus
    }

    pub fn dim(&self) -> usize {
        self.ca.dim()
    }

    pub fn rank(&self) -> usize {
        self.ca.rank()
    }

    pub fn num_roots(&self) -> usize {
        self.ca.num_roots()
    }

    /// Basis index of the `k`-th torus element.
    pub fn torus_index(&self, k: usize) -> usize {
        self.num_roots() + k
    }

    /// Basis index of `e_alpha` for a root given by coefficients.
    pub fn root_vector_index(&self, root: &[i64]) -> Result<usize> {
        self.root_system().index_of(root).ok_or_else(|| Error::NotARoot(root.to_vec()))
    }

    /// Root-lattice degree of a basis element (zero for torus elements).
    pub fn degree(&self, idx: usize) -> Vec<i64> {
        self.ca.weight_of(idx)
    }

    pub fn basis_label(&self, idx: usize) -> String {
        let nr = self.num_roots();
        if idx < nr {
            let r = &self.root_system().roots[idx];
            let sign = if height(r) < 0 { "-" } else { "" };
            let digits: String = r.iter().map(|x| x.abs().to_string()).collect();
            format!("e{sign}{digits}")
        } else {
            format!("h{}", idx - nr + 1)
        }
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Elem)] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        let d = self.dim();
        let f = &self.field;
        let mut out = vec![0; d];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in self.bracket_basis(i, j) {
                    out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        out
    }

    /// Matrix of `ad x`: column `k` holds `[x, b_k]`.
    pub fn ad_matrix(&self, x: &[Elem]) -> FpMatrix {
        let d = self.dim();
        let f = &self.field;
        let mut m = FpMatrix::zeros(f, d, d);
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for k in 0..d {
                for &(n, c) in self.bracket_basis(i, k) {
                    let v = f.add(m.get(n, k), f.mul(a, c));
                    m.set(n, k, v);
                }
            }
        }
        m
    }

    pub fn basis_vector(&self, idx: usize) -> Vec<Elem> {
        let mut v = vec![0; self.dim()];
        v[idx] = 1;
        v
    }

    pub fn check_jacobi(&self) -> Result<()> {
        let f = self.field.clone();
        let p = f.characteristic();
        let table = &self.table;
        let d = self.dim();
        let ca = &self.ca;
        // accumulate in u64 and reduce at the end; entries stay far below overflow
        let widened: Vec<SparseVec<u64>> = table.iter().map(|v| v.iter().map(|&(k, c)| (k, c as u64)).collect()).collect();
        match jacobi_failure(
            d,
            &widened,
            |x: u64| x.is_multiple_of(p),
            |acc, c, e| *acc += c * e,
            |r| ca.weight_of(r),
            &ca.rs,
        ) {
            Some((i, j, k)) => Err(Error::Consistency(format!("Jacobi identity fails mod {p} on ({i},{j},{k})"))),
            None => Ok(()),
        }
    }

    /// The element `h` of the torus for the coroot `sum_i c_i alpha_i^vee`.
    pub fn coroot_vector(&self, combo: &[i64]) -> Result<Vec<Elem>> {
        let l = self.rank();
        if combo.len() != l {
            return Err(Error::WeightLength { expected: l, got: combo.len() });
        }
        let f = &self.field;
        let mut v = vec![0; self.dim()];
        match self.torus {
            Torus::Coroots => {
                for (k, &x) in combo.iter().enumerate() {
                    v[self.torus_index(k)] = f.from_i64(x);
                }
            }
            Torus::Coweights => {
                // h_{alpha_i} = sum_j <alpha_j, alpha_i^vee> h'_j
                let cartan = &self.root_system().cartan;
                for j in 0..l {
                    let c: i64 = (0..l).map(|i| combo[i] * cartan[i][j]).sum();
                    v[self.torus_index(j)] = f.from_i64(c);
                }
            }
        }
        Ok(v)
    }

    /// Span of the given integer combinations of the simple coroots `h_{alpha_i}`, reduced
    /// mod p, as rows in reduced echelon form.
    pub fn toral_subalgebra(&self, combos: &[Vec<i64>]) -> Result<FpMatrix> {
        let f = &self.field;
        let rows = combos.iter().map(|c| self.coroot_vector(c)).collect::<Result<Vec<_>>>()?;
        if rows.is_empty() {
            return Ok(FpMatrix::zeros(f, 0, self.dim()));
        }
        Ok(FpMatrix::from_rows(f, &rows).rref().matrix)
    }

    /// `{x : [x, s] = 0 for every row s of subspace}`, as rows in reduced echelon form.
    pub fn centralizer(&self, subspace: &FpMatrix) -> FpMatrix {
        let d = self.dim();
        let f = &self.field;
        let mut basis = FpMatrix::identity(f, d);
        for r in 0..subspace.rows() {
            if basis.rows() == 0 {
                break;
            }
            let s = subspace.row(r);
            // column k: [basis_k, s]
            let mut m = FpMatrix::zeros(f, d, basis.rows());
            for k in 0..basis.rows() {
                let b = self.bracket(basis.row(k), s);
                for (n, &v) in b.iter().enumerate() {
                    m.set(n, k, v);
                }
            }
            let ker = m.kernel();
            basis = ker.mul(&basis).expect("shapes agree").rref().matrix;
        }
        basis
    }

    /// Center of the algebra.
    pub fn center(&self) -> FpMatrix {
        let all = FpMatrix::identity(&self.field, self.dim());
        self.centralizer(&all)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::TypeTag;

    fn alg(t: TypeTag, l: usize) -> ChevalleyAlgebra {
        ChevalleyAlgebra::new(Arc::new(RootSystem::new(t, l).unwrap())).unwrap()
    }

    #[test]
    fn sl2_relations() {
        let a = alg(TypeTag::A, 1);
        // basis: e_{-a}, e_a, h
        assert_eq!(a.bracket_basis(1, 0, Torus::Coroots), vec![(2, 1)]);
        assert_eq!(a.bracket_basis(2, 1, Torus::Coroots), vec![(1, 2)]);
        assert_eq!(a.bracket_basis(2, 0, Torus::Coroots), vec![(0, -2)]);
    }

    #[test]
    fn every_type_satisfies_jacobi_and_strings() {
        use TypeTag::*;
        for (t, l) in [(A, 3), (B, 3), (C, 3), (D, 4), (G, 2), (F, 4), (E, 6)] {
            let a = alg(t, l);
            let nr = a.num_roots();
            for x in 0..nr {
                for y in 0..nr {
                    let n = a.structure_constant(x, y);
                    assert!(n.abs() <= 3);
                    assert_eq!(n, -a.structure_constant(y, x));
                    assert_eq!(a.structure_constant(a.negative(x), a.negative(y)), -n);
                }
            }
        }
    }

    #[test]
    fn simply_laced_constants_are_units() {
        let a = alg(TypeTag::D, 5);
        let nr = a.num_roots();
        for x in 0..nr {
            for y in 0..nr {
                assert!(a.structure_constant(x, y).abs() <= 1);
            }
        }
    }

    #[test]
    fn reduction_and_centers() {
        let g2 = alg(TypeTag::G, 2).specialize(2).unwrap();
        assert_eq!(g2.dim(), 14);
        g2.check_jacobi().unwrap();
        let a3 = alg(TypeTag::A, 3).specialize(2).unwrap();
        let z = a3.center();
        assert_eq!(z.rows(), 1);
        // h1 + h3 is the scalar matrix in characteristic 2
        let mut expect = vec![0; a3.dim()];
        expect[a3.torus_index(0)] = 1;
        expect[a3.torus_index(2)] = 1;
        assert_eq!(z.row(0), &expect[..]);
    }

    #[test]
    fn toral_and_centralizer() {
        let sl3 = alg(TypeTag::A, 2).specialize(5).unwrap();
        let t = sl3.toral_subalgebra(&[vec![1, 0], vec![0, 1]]).unwrap();
        let c = sl3.centralizer(&t);
        assert_eq!(c.rows(), 2);
        assert_eq!(sl3.toral_subalgebra(&[vec![0, 0]]).unwrap().rows(), 0);
        let whole = sl3.centralizer(&FpMatrix::zeros(sl3.field(), 0, sl3.dim()));
        assert_eq!(whole.rows(), 8);
        let b2 = alg(TypeTag::B, 2).specialize(5).unwrap();
        assert_eq!(b2.toral_subalgebra(&[vec![1, 2]]).unwrap().rows(), 1);
    }

    #[test]
    fn e8_mod3_has_trivial_center() {
        let e8 = alg(TypeTag::E, 8).specialize(3).unwrap();
        assert_eq!(e8.dim(), 248);
        assert_eq!(e8.center().rows(), 0);
    }
}
