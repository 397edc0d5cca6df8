//! JSON interchange format for modules.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::HwModule;
use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Elem, FpMatrix};
use crate::rootsys::{CartanType, RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepFile {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub lambda: Option<Vec<i64>>,
    pub p: u64,
    pub dim: usize,
    /// Distinct weights with multiplicities.
    pub weights: Vec<(Vec<i64>, usize)>,
    /// Weight of each basis vector, in basis order.
    pub basis_weights: Vec<Vec<i64>>,
    /// Dense row-major matrix for every basis element of the algebra, keyed by label.
    pub action: BTreeMap<String, Vec<Vec<Elem>>>,
}

impl RepFile {
    pub fn from_module(m: &HwModule) -> Self {
        let la = m.algebra();
        let mut action = BTreeMap::new();
        for k in 0..la.dim() {
            let a = m.action(k);
            action.insert(la.basis_label(k), (0..a.rows()).map(|r| a.row(r).to_vec()).collect());
        }
        RepFile {
            cartan_type: la.root_system().cartan_type.to_string(),
            rank: la.rank(),
            lambda: m.highest_weight().map(|w| w.0.clone()),
            p: la.characteristic(),
            dim: m.dim(),
            weights: m.weight_multiplicities().into_iter().map(|(w, c)| (w.0, c)).collect(),
            basis_weights: m.weights().iter().map(|w| w.0.clone()).collect(),
            action,
        }
    }

    /// Rebuild the module, reconstructing the algebra from the type and characteristic.
    pub fn to_module(&self) -> Result<HwModule> {
        let ct: CartanType = self.cartan_type.parse()?;
        if ct.rank != self.rank {
            return Err(Error::Parse(format!("type {} does not have rank {}", self.cartan_type, self.rank)));
        }
        let rs = Arc::new(RootSystem::from_type(ct)?);
        let la = Arc::new(ChevalleyAlgebra::new(rs)?.specialize(self.p)?);
        let f = la.field().clone();
        let mut action = Vec::with_capacity(la.dim());
        for k in 0..la.dim() {
            let label = la.basis_label(k);
            let rows = self.action.get(&label).ok_or_else(|| Error::Parse(format!("missing action of {label}")))?;
            if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
                return Err(Error::Parse(format!("action of {label} is not {0}x{0}", self.dim)));
            }
            if rows.iter().flatten().any(|&x| x as u64 >= self.p) {
                return Err(Error::Parse(format!("entry of {label} out of range mod {}", self.p)));
            }
            action.push(FpMatrix::from_rows(&f, rows));
        }
        if self.basis_weights.len() != self.dim {
            return Err(Error::Parse("basis weight list has the wrong length".into()));
        }
        let weights = self.basis_weights.iter().map(|w| Weight(w.clone())).collect();
        let mut m = HwModule::from_parts(la, "from file", weights, action)?;
        if let Some(l) = &self.lambda {
            m = m.with_highest_weight(Weight(l.clone()));
        }
        Ok(m)
    }
}
