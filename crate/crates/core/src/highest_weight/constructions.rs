use std::collections::HashMap;
use std::sync::Arc;

use super::HwModule;
use crate::chevalley::LieAlgebraFp;
use crate::error::{Error, Result};
use crate::exactlin::{Elem, FpMatrix};
use crate::rootsys::Weight;

/// Which tensor factors the Lie algebra acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieAction {
    Both,
    /// Only the left factor; the right factor is a Frobenius twist or a multiplicity space.
    LeftOnly,
}

fn same_algebra(a: &LieAlgebraFp, b: &LieAlgebraFp) -> Result<()> {
    if a.root_system().cartan_type != b.root_system().cartan_type
        || a.characteristic() != b.characteristic()
        || a.torus() != b.torus()
    {
        return Err(Error::Incompatible(format!(
            "{} in characteristic {} vs {} in characteristic {}",
            a.root_system().cartan_type,
            a.characteristic(),
            b.root_system().cartan_type,
            b.characteristic()
        )));
    }
    Ok(())
}

/// `n`-dimensional trivial module.
pub fn trivial_module(la: &Arc<LieAlgebraFp>, n: usize) -> HwModule {
    let f = la.field();
    let action = (0..la.dim()).map(|_| FpMatrix::zeros(f, n, n)).collect();
    let weights = vec![Weight::zero(la.rank()); n];
    HwModule::from_parts(la.clone(), format!("k^{n}"), weights, action).expect("shapes agree")
}

/// The adjoint module; basis and weights follow the algebra basis.
pub fn adjoint_module(la: &Arc<LieAlgebraFp>) -> HwModule {
    let rs = la.root_system();
    let action: Vec<FpMatrix> = (0..la.dim()).map(|k| la.ad_matrix(&la.basis_vector(k))).collect();
    let weights: Vec<Weight> = (0..la.dim()).map(|k| rs.to_weight(&la.degree(k))).collect();
    let hw = rs.to_weight(&rs.highest_root);
    HwModule::from_parts(la.clone(), "adjoint", weights, action).expect("shapes agree").with_highest_weight(hw)
}

/// Frobenius twist by `q` (a power of the characteristic): weights are multiplied by `q`
/// and the Lie algebra acts by zero.
pub fn frobenius_twist(m: &HwModule, q: u64) -> HwModule {
    let n = m.dim();
    let f = m.field();
    let action = (0..m.la.dim()).map(|_| FpMatrix::zeros(f, n, n)).collect();
    let weights = m.weights.iter().map(|w| w.scale(q as i64)).collect();
    let mut out = HwModule::from_parts(m.la.clone(), format!("{}^[{q}]", m.label), weights, action).expect("shapes agree");
    out.highest_weight = m.highest_weight.as_ref().map(|w| w.scale(q as i64));
    out
}

pub fn direct_sum(a: &HwModule, b: &HwModule) -> Result<HwModule> {
    same_algebra(&a.la, &b.la)?;
    let (na, nb) = (a.dim(), b.dim());
    let f = a.field();
    let mut action = Vec::with_capacity(a.la.dim());
    for k in 0..a.la.dim() {
        let mut m = FpMatrix::zeros(f, na + nb, na + nb);
        let (x, y) = (&a.action[k], &b.action[k]);
        for r in 0..na {
            m.row_mut(r)[..na].copy_from_slice(x.row(r));
        }
        for r in 0..nb {
            m.row_mut(na + r)[na..].copy_from_slice(y.row(r));
        }
        action.push(m);
    }
    let mut weights = a.weights.clone();
    weights.extend(b.weights.iter().cloned());
    HwModule::from_parts(a.la.clone(), format!("{} + {}", a.label, b.label), weights, action)
}

/// Tensor product; basis `a_i (x) b_j` in lexicographic order of `(i, j)`.
pub fn tensor(a: &HwModule, b: &HwModule, lie_action: LieAction) -> Result<HwModule> {
    same_algebra(&a.la, &b.la)?;
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let f = a.field().clone();
    let mut action = Vec::with_capacity(a.la.dim());
    for k in 0..a.la.dim() {
        let mut m = FpMatrix::zeros(&f, n, n);
        let x = &a.action[k];
        for r in 0..na {
            for c in 0..na {
                let v = x.get(r, c);
                if v != 0 {
                    for j in 0..nb {
                        m.set(r * nb + j, c * nb + j, v);
                    }
                }
            }
        }
        if lie_action == LieAction::Both {
            let y = &b.action[k];
            for i in 0..na {
                for r in 0..nb {
                    for c in 0..nb {
                        let v = y.get(r, c);
                        if v != 0 {
                            let old = m.get(i * nb + r, i * nb + c);
                            m.set(i * nb + r, i * nb + c, f.add(old, v));
                        }
                    }
                }
            }
        }
        action.push(m);
    }
    let mut weights = Vec::with_capacity(n);
    for wa in &a.weights {
        for wb in &b.weights {
            weights.push(wa.add(wb));
        }
    }
    let mut out = HwModule::from_parts(a.la.clone(), format!("{} (x) {}", a.label, b.label), weights, action)?;
    if let (Some(x), Some(y)) = (&a.highest_weight, &b.highest_weight) {
        out.highest_weight = Some(x.add(y));
    }
    Ok(out)
}

/// Strictly increasing `d`-tuples from `0..n`, in lexicographic order.
fn subsets(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn go(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, d, cur, out);
            cur.pop();
        }
    }
    go(0, n, d, &mut cur, &mut out);
    out
}

/// Weakly increasing `d`-tuples from `0..n`, in lexicographic order.
fn multisets(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn go(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i, n, d, cur, out);
            cur.pop();
        }
    }
    go(0, n, d, &mut cur, &mut out);
    out
}

fn sum_weights(m: &HwModule, idx: &[usize]) -> Weight {
    let mut w = Weight::zero(m.la.rank());
    for &i in idx {
        w = w.add(&m.weights[i]);
    }
    w
}

/// `d`-th exterior power, basis `v_{i_1} ^ ... ^ v_{i_d}` with `i_1 < ... < i_d`.
pub fn exterior_power(m: &HwModule, d: usize, cap: usize) -> Result<HwModule> {
    let n = m.dim();
    let basis = subsets(n, d);
    if basis.len() > cap {
        return Err(Error::DimensionCap { cap });
    }
    let index: HashMap<Vec<usize>, usize> = basis.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let f = m.field().clone();
    let nb = basis.len();
    let mut action = Vec::with_capacity(m.la.dim());
    for x in &m.action {
        let mut a = FpMatrix::zeros(&f, nb, nb);
        for (col, s) in basis.iter().enumerate() {
            for (k, &i) in s.iter().enumerate() {
                for target in 0..n {
                    let c = x.get(target, i);
                    if c == 0 || (target != i && s.contains(&target)) {
                        continue;
                    }
                    let mut t = s.clone();
                    t[k] = target;
                    // sort, tracking the sign of the permutation
                    let mut sign = false;
                    let mut pos = k;
                    while pos > 0 && t[pos - 1] > t[pos] {
                        t.swap(pos - 1, pos);
                        pos -= 1;
                        sign = !sign;
                    }
                    while pos + 1 < t.len() && t[pos] > t[pos + 1] {
                        t.swap(pos, pos + 1);
                        pos += 1;
                        sign = !sign;
                    }
                    let row = index[&t];
                    let v = if sign { f.neg(c) } else { c };
                    a.set(row, col, f.add(a.get(row, col), v));
                }
            }
        }
        action.push(a);
    }
    let weights = basis.iter().map(|s| sum_weights(m, s)).collect();
    HwModule::from_parts(m.la.clone(), format!("wedge^{d} {}", m.label), weights, action)
}

/// `d`-th symmetric power, basis of monomials `v_{i_1} ... v_{i_d}` with
/// `i_1 <= ... <= i_d`.
pub fn symmetric_power(m: &HwModule, d: usize, cap: usize) -> Result<HwModule> {
    let n = m.dim();
    let basis = multisets(n, d);
    if basis.len() > cap {
        return Err(Error::DimensionCap { cap });
    }
    let index: HashMap<Vec<usize>, usize> = basis.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let f = m.field().clone();
    let nb = basis.len();
    let mut action = Vec::with_capacity(m.la.dim());
    for x in &m.action {
        let mut a = FpMatrix::zeros(&f, nb, nb);
        for (col, s) in basis.iter().enumerate() {
            for k in 0..s.len() {
                let i = s[k];
                for target in 0..n {
                    let c: Elem = x.get(target, i);
                    if c == 0 {
                        continue;
                    }
                    let mut t = s.clone();
                    t[k] = target;
                    t.sort_unstable();
                    let row = index[&t];
                    a.set(row, col, f.add(a.get(row, col), c));
                }
            }
        }
        action.push(a);
    }
    let weights = basis.iter().map(|s| sum_weights(m, s)).collect();
    let mut out = HwModule::from_parts(m.la.clone(), format!("S^{d} {}", m.label), weights, action)?;
    out.highest_weight = m.highest_weight.as_ref().map(|w| w.scale(d as i64));
    Ok(out)
}
