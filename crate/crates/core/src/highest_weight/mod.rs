//! Modules for Chevalley-basis Lie algebras over prime fields: reductions of Weyl
//! modules, irreducible modules, and the usual linear-algebra constructions.

mod constructions;
mod irreducible;
mod repfile;
mod weyl;

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::chevalley::{LieAlgebraFp, Torus};
use crate::error::{Error, Result};
use crate::exactlin::{Elem, Field, FpMatrix};
use crate::rootsys::Weight;

pub use constructions::{
    adjoint_module, direct_sum, exterior_power, frobenius_twist, symmetric_power, tensor, trivial_module, LieAction,
};
pub use irreducible::{irreducible, irreducible_with_cap, RadicalQuotient};
pub use repfile::RepFile;
pub use weyl::{GradedOp, GramTower, WeightSpace, WeylModule, DEFAULT_DIMENSION_CAP};

/// Where a module's integral structure comes from, if it has one.
#[derive(Debug, Clone)]
pub(crate) enum IntegralSource {
    Weyl(Arc<WeylModule>),
    Quotient(Arc<WeylModule>, Arc<RadicalQuotient>),
}

/// A finite-dimensional module over a reduced Chevalley algebra, with a basis of weight
/// vectors and one action matrix per basis element of the algebra.
#[derive(Debug, Clone)]
pub struct HwModule {
    la: Arc<LieAlgebraFp>,
    label: String,
    highest_weight: Option<Weight>,
    weights: Vec<Weight>,
    action: Vec<FpMatrix>,
    integral: Option<IntegralSource>,
}

impl HwModule {
    /// Assemble a module from raw data. The number of action matrices must equal the
    /// dimension of the algebra.
    pub fn from_parts(la: Arc<LieAlgebraFp>, label: impl Into<String>, weights: Vec<Weight>, action: Vec<FpMatrix>) -> Result<Self> {
        let n = weights.len();
        if action.len() != la.dim() {
            return Err(Error::Dimension(format!("{} action matrices for a {}-dimensional algebra", action.len(), la.dim())));
        }
        for m in &action {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Dimension(format!("action matrix {}x{} on a module of dimension {n}", m.rows(), m.cols())));
            }
        }
        Ok(Self { la, label: label.into(), highest_weight: None, weights, action, integral: None })
    }

    pub(crate) fn with_highest_weight(mut self, w: Weight) -> Self {
        self.highest_weight = Some(w);
        self
    }

    pub(crate) fn with_integral(mut self, src: IntegralSource) -> Self {
        self.integral = Some(src);
        self
    }

    pub fn algebra(&self) -> &Arc<LieAlgebraFp> {
        &self.la
    }

    pub fn field(&self) -> &Field {
        self.la.field()
    }

    pub fn characteristic(&self) -> u64 {
        self.la.characteristic()
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn highest_weight(&self) -> Option<&Weight> {
        self.highest_weight.as_ref()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Action matrix of the `k`-th basis element of the algebra.
    pub fn action(&self, k: usize) -> &FpMatrix {
        &self.action[k]
    }

    pub fn actions(&self) -> &[FpMatrix] {
        &self.action
    }

    /// Action matrix of `e_alpha` for a root given in simple-root coordinates.
    pub fn root_action(&self, root: &[i64]) -> Result<&FpMatrix> {
        Ok(&self.action[self.la.root_vector_index(root)?])
    }

    /// Action of an arbitrary algebra element given in basis coordinates.
    pub fn act(&self, x: &[Elem]) -> FpMatrix {
        let f = self.field();
        let mut m = FpMatrix::zeros(f, self.dim(), self.dim());
        for (k, &c) in x.iter().enumerate() {
            if c != 0 {
                m = m.add(&self.action[k].scale(c));
            }
        }
        m
    }

    pub fn weight_multiplicities(&self) -> BTreeMap<Weight, usize> {
        weight_multiplicities(self)
    }

    /// Basis vector index of a highest-weight vector, if the module was built from one.
    pub fn highest_weight_vector(&self) -> Option<usize> {
        let hw = self.highest_weight.as_ref()?;
        self.weights.iter().position(|w| w == hw)
    }

    /// `[rho(x), rho(y)] = rho([x, y])` for all pairs of basis elements.
    pub fn check_representation(&self) -> Result<()> {
        let f = self.field().clone();
        let n = self.dim();
        let sparse: Vec<Vec<Vec<(usize, Elem)>>> = self.action.iter().map(to_sparse_rows).collect();
        let d = self.la.dim();
        let mut lhs = vec![0 as Elem; n * n];
        let mut rhs = vec![0 as Elem; n * n];
        for i in 0..d {
            for j in i + 1..d {
                lhs.iter_mut().for_each(|x| *x = 0);
                rhs.iter_mut().for_each(|x| *x = 0);
                sparse_product_into(&f, &sparse[i], &sparse[j], &mut lhs, n, false);
                sparse_product_into(&f, &sparse[j], &sparse[i], &mut lhs, n, true);
                for &(k, c) in self.la.bracket_basis(i, j) {
                    for (r, row) in sparse[k].iter().enumerate() {
                        for &(col, v) in row {
                            rhs[r * n + col] = f.add(rhs[r * n + col], f.mul(c, v));
                        }
                    }
                }
                if lhs != rhs {
                    return Err(Error::Consistency(format!(
                        "representation property fails for ({}, {}) on {}",
                        self.la.basis_label(i),
                        self.la.basis_label(j),
                        self.label
                    )));
                }
            }
        }
        Ok(())
    }

    /// Torus basis elements act diagonally by the weight pairings (simple coroot torus only).
    pub fn check_torus_action(&self) -> Result<()> {
        if self.la.torus() != Torus::Coroots {
            return Ok(());
        }
        let f = self.field();
        for i in 0..self.la.rank() {
            let m = &self.action[self.la.torus_index(i)];
            for r in 0..self.dim() {
                for c in 0..self.dim() {
                    let expect = if r == c { f.from_i64(self.weights[r].0[i]) } else { 0 };
                    if m.get(r, c) != expect {
                        return Err(Error::Consistency(format!("h{} is not diagonal with the weight pairings", i + 1)));
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of `x_alpha(t)`, for modules carrying an integral form.
    pub fn group_element_matrix(&self, root: &[i64], t: Elem) -> Result<FpMatrix> {
        group_element_matrix(self, root, t)
    }
}

/// Number of basis vectors of each weight.
pub fn weight_multiplicities(m: &HwModule) -> BTreeMap<Weight, usize> {
    let mut out = BTreeMap::new();
    for w in &m.weights {
        *out.entry(w.clone()).or_insert(0) += 1;
    }
    out
}

/// `x_alpha(t) = sum_n t^n e_alpha^(n)`, reduced mod p. Needs an integral form.
pub fn group_element_matrix(m: &HwModule, root: &[i64], t: Elem) -> Result<FpMatrix> {
    let f = m.field().clone();
    let r = m.la.root_vector_index(root)?;
    let (weyl, quotient) = match &m.integral {
        Some(IntegralSource::Weyl(w)) => (w, None),
        Some(IntegralSource::Quotient(w, q)) => (w, Some(q)),
        None => return Err(Error::NoIntegralForm),
    };
    let poly = weyl.group_element_polynomial(r)?;
    let mut acc = FpMatrix::zeros(&f, weyl.dim(), weyl.dim());
    let mut tn: Elem = 1;
    for c in &poly {
        if tn != 0 {
            acc = acc.add(&c.to_fp(&f).scale(tn));
        }
        tn = f.mul(tn, t);
    }
    match quotient {
        None => Ok(acc),
        Some(q) => q.restrict(&acc),
    }
}

fn to_sparse_rows(m: &FpMatrix) -> Vec<Vec<(usize, Elem)>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c, v)).collect())
        .collect()
}

/// `out += a * b` (or `-=` when `negate`), dense `n x n` output.
fn sparse_product_into(
    f: &Field,
    a: &[Vec<(usize, Elem)>],
    b: &[Vec<(usize, Elem)>],
    out: &mut [Elem],
    n: usize,
    negate: bool,
) {
    for (i, row) in a.iter().enumerate() {
        for &(k, x) in row {
            for &(j, y) in &b[k] {
                let v = f.mul(x, y);
                let v = if negate { f.neg(v) } else { v };
                out[i * n + j] = f.add(out[i * n + j], v);
            }
        }
    }
}
