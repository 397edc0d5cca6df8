//! Irreducible modules `L(lambda)` in positive characteristic.
//!
//! For restricted `lambda`, `L(lambda)` is the quotient of the reduced Weyl module by its
//! unique maximal submodule. That submodule is found weight by weight from the top: a
//! vector of weight `mu` lies in it exactly when each `e_i^(n)` sends it into the
//! submodule at `mu + n alpha_i`. Other weights go through Steinberg's tensor product
//! theorem.

use std::sync::Arc;

use super::constructions::{frobenius_twist, tensor, LieAction};
use super::weyl::{WeylModule, DEFAULT_DIMENSION_CAP};
use super::{HwModule, IntegralSource};
use crate::chevalley::{LieAlgebraFp, Torus};
use crate::error::{Error, Result};
use crate::exactlin::FpMatrix;
use crate::rootsys::Weight;

/// Quotient maps `V(lambda)_mu -> L(lambda)_mu`, one per weight space of the Weyl module.
#[derive(Debug, Clone)]
pub struct RadicalQuotient {
    /// Rows in reduced echelon form; the kernel is the maximal submodule.
    pub maps: Vec<FpMatrix>,
    /// Pivot columns of each map, giving a section.
    pub pivots: Vec<Vec<usize>>,
    /// Offset of each weight space in `L(lambda)`.
    pub offsets: Vec<usize>,
    pub dim: usize,
    weyl_offsets: Vec<usize>,
    weyl_dim: usize,
}

impl RadicalQuotient {
    pub fn compute(weyl: &WeylModule, la: &LieAlgebraFp) -> Result<Self> {
        let f = la.field();
        let rs = weyl.root_system();
        let l = rs.rank();
        let spaces = weyl.spaces();
        let mut maps: Vec<FpMatrix> = Vec::with_capacity(spaces.len());
        let mut pivots = Vec::with_capacity(spaces.len());
        for (s, sp) in spaces.iter().enumerate() {
            if s == 0 {
                maps.push(FpMatrix::identity(f, 1));
                pivots.push(vec![0]);
                continue;
            }
            let mut stacked = FpMatrix::zeros(f, 0, sp.dim);
            for i in 0..l {
                let r = rs.simple_root_index(i);
                let mut n = 1;
                loop {
                    let shift: Vec<i64> = rs.roots[r].iter().map(|x| x * n as i64).collect();
                    let Some(t) = weyl.target(s, &shift) else { break };
                    if let Some(b) = weyl.divided_power_block_fp(r, n, s, f)? {
                        stacked = stacked.vstack(&maps[t].mul(&b)?);
                    }
                    n += 1;
                }
            }
            let e = stacked.rref();
            pivots.push(e.pivots.clone());
            maps.push(e.matrix);
        }
        let mut offsets = Vec::with_capacity(maps.len());
        let mut dim = 0;
        for m in &maps {
            offsets.push(dim);
            dim += m.rows();
        }
        Ok(Self {
            maps,
            pivots,
            offsets,
            dim,
            weyl_offsets: spaces.iter().map(|s| s.offset).collect(),
            weyl_dim: weyl.dim(),
        })
    }

    /// Dimension of `L(lambda)` in each weight space of the Weyl module.
    pub fn dims(&self) -> Vec<usize> {
        self.maps.iter().map(|m| m.rows()).collect()
    }

    /// Induced action on the quotient of an operator on the Weyl module that preserves
    /// the maximal submodule.
    pub fn restrict(&self, x: &FpMatrix) -> Result<FpMatrix> {
        if x.rows() != self.weyl_dim || x.cols() != self.weyl_dim {
            return Err(Error::Dimension("operator does not act on the Weyl module".into()));
        }
        let f = x.field();
        // section: pivot columns of each weight space
        let cols: Vec<usize> = self
            .pivots
            .iter()
            .zip(&self.weyl_offsets)
            .flat_map(|(p, &o)| p.iter().map(move |c| o + c))
            .collect();
        let xs = x.select_columns(&cols);
        let mut out = FpMatrix::zeros(f, self.dim, self.dim);
        for (s, q) in self.maps.iter().enumerate() {
            if q.rows() == 0 {
                continue;
            }
            let o = self.weyl_offsets[s];
            let rows: Vec<usize> = (o..o + q.cols()).collect();
            let part = q.mul(&xs.select_rows(&rows))?;
            for r in 0..part.rows() {
                out.row_mut(self.offsets[s] + r).copy_from_slice(part.row(r));
            }
        }
        Ok(out)
    }
}

/// `L(lambda)` over the prime field of `la`, with the default dimension cap.
pub fn irreducible(la: &Arc<LieAlgebraFp>, lambda: &Weight) -> Result<HwModule> {
    irreducible_with_cap(la, lambda, DEFAULT_DIMENSION_CAP)
}

pub fn irreducible_with_cap(la: &Arc<LieAlgebraFp>, lambda: &Weight, cap: usize) -> Result<HwModule> {
    let l = la.rank();
    if lambda.rank() != l {
        return Err(Error::WeightLength { expected: l, got: lambda.rank() });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    if la.torus() != Torus::Coroots {
        return Err(Error::Incompatible("highest-weight modules need the simple coroot torus".into()));
    }
    let p = la.characteristic() as i64;
    if lambda.is_restricted(p as u64) {
        return restricted(la, lambda, cap);
    }
    let low = Weight(lambda.0.iter().map(|c| c % p).collect());
    let high = Weight(lambda.0.iter().map(|c| c / p).collect());
    let bottom = restricted(la, &low, cap)?;
    let top = irreducible_with_cap(la, &high, cap)?;
    if bottom.dim() * top.dim() > cap {
        return Err(Error::DimensionCap { cap });
    }
    let twisted = frobenius_twist(&top, p as u64);
    let mut m = tensor(&bottom, &twisted, LieAction::LeftOnly)?;
    m.label = format!("L{}", lambda);
    Ok(m.with_highest_weight(lambda.clone()))
}

fn restricted(la: &Arc<LieAlgebraFp>, lambda: &Weight, cap: usize) -> Result<HwModule> {
    let ca = la.chevalley_arc();
    let weyl = Arc::new(WeylModule::new(ca, lambda, cap)?);
    let q = Arc::new(RadicalQuotient::compute(&weyl, la)?);
    let f = la.field();
    let mut action = Vec::with_capacity(la.dim());
    for k in 0..la.num_roots() {
        action.push(q.restrict(&weyl.root_matrix_fp(k, f))?);
    }
    let mut weights = Vec::with_capacity(q.dim);
    for (s, sp) in weyl.spaces().iter().enumerate() {
        for _ in 0..q.maps[s].rows() {
            weights.push(sp.weight.clone());
        }
    }
    for i in 0..la.rank() {
        let mut h = FpMatrix::zeros(f, q.dim, q.dim);
        for (r, w) in weights.iter().enumerate() {
            h.set(r, r, f.from_i64(w.0[i]));
        }
        action.push(h);
    }
    let m = HwModule::from_parts(la.clone(), format!("L{}", lambda), weights, action)?;
    Ok(m.with_highest_weight(lambda.clone()).with_integral(IntegralSource::Quotient(weyl, q)))
}

impl WeylModule {
    /// Reduction of the integral form modulo the characteristic of `la`.
    pub fn reduce(self: &Arc<Self>, la: &Arc<LieAlgebraFp>) -> Result<HwModule> {
        if la.chevalley().root_system().cartan_type != self.root_system().cartan_type {
            return Err(Error::Incompatible("Weyl module and algebra have different types".into()));
        }
        if la.torus() != Torus::Coroots {
            return Err(Error::Incompatible("highest-weight modules need the simple coroot torus".into()));
        }
        let f = la.field();
        let mut action = Vec::with_capacity(la.dim());
        for k in 0..la.num_roots() {
            action.push(self.root_matrix_fp(k, f));
        }
        let weights = self.basis_weights();
        for i in 0..la.rank() {
            let mut h = FpMatrix::zeros(f, self.dim(), self.dim());
            for (r, w) in weights.iter().enumerate() {
                h.set(r, r, f.from_i64(w.0[i]));
            }
            action.push(h);
        }
        let m = HwModule::from_parts(la.clone(), format!("V{}", self.highest_weight()), weights, action)?;
        Ok(m.with_highest_weight(self.highest_weight().clone()).with_integral(IntegralSource::Weyl(self.clone())))
    }
}
