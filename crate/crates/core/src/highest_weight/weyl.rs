//! Integral form of the Weyl module `V(lambda)`.
//!
//! The lattice is built one weight space at a time, in order of increasing depth below
//! `lambda`. A vector of weight `mu != lambda` is determined by its images under the
//! simple raising operators, so each weight space is represented by the lattice of those
//! images. The lattice at `mu` is spanned by `f_j^(a) z` for basis vectors `z` of the
//! lattice at `mu + a alpha_j`; its Hermite normal form is the chosen basis. All action
//! matrices are integral in this basis, and the contravariant form has an integral Gram
//! matrix on every weight space.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Field, FpMatrix, IntMatrix};
use crate::rootsys::{RootSystem, Weight};

/// Default cap on module dimensions.
pub const DEFAULT_DIMENSION_CAP: usize = 400;

#[derive(Debug, Clone)]
pub struct WeightSpace {
    /// `lambda - mu` in simple-root coordinates.
    pub depth: Vec<i64>,
    pub weight: Weight,
    pub dim: usize,
    /// Position of the first basis vector of this space in the module basis.
    pub offset: usize,
}

/// A weight-graded operator: one block per source weight space, or `None` where it
/// vanishes.
#[derive(Debug, Clone)]
pub struct GradedOp {
    /// Root-lattice degree of the operator.
    pub shift: Vec<i64>,
    pub blocks: Vec<Option<IntMatrix>>,
}

/// Gram matrices of the contravariant form, one per weight space, in the lattice basis.
#[derive(Debug, Clone)]
pub struct GramTower {
    pub matrices: Vec<IntMatrix>,
}

#[derive(Debug, Clone)]
pub struct WeylModule {
    ca: Arc<ChevalleyAlgebra>,
    lambda: Weight,
    spaces: Vec<WeightSpace>,
    index: HashMap<Vec<i64>, usize>,
    /// One operator per root, in root order.
    root_ops: Vec<GradedOp>,
    gram: GramTower,
    dim: usize,
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

impl WeylModule {
    pub fn new(ca: Arc<ChevalleyAlgebra>, lambda: &Weight, cap: usize) -> Result<Self> {
        let rs = ca.root_system_arc();
        let l = rs.rank();
        if lambda.rank() != l {
            return Err(Error::WeightLength { expected: l, got: lambda.rank() });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.0.clone()));
        }

        let mut spaces = vec![WeightSpace { depth: vec![0; l], weight: lambda.clone(), dim: 1, offset: 0 }];
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        index.insert(vec![0; l], 0);
        let mut gram = vec![IntMatrix::identity(1)];
        // e_i blocks keyed by source space
        let mut e_blocks: Vec<HashMap<usize, IntMatrix>> = vec![HashMap::new(); l];
        // f_j^(a) blocks keyed by (j, a, source space)
        let mut f_div: HashMap<(usize, usize, usize), IntMatrix> = HashMap::new();
        let mut dim = 1usize;

        let mut level: Vec<usize> = vec![0];
        while !level.is_empty() {
            let mut candidates: Vec<Vec<i64>> = Vec::new();
            for &w in &level {
                for j in 0..l {
                    let mut c = spaces[w].depth.clone();
                    c[j] += 1;
                    candidates.push(c);
                }
            }
            candidates.sort();
            candidates.dedup();
            let mut next = Vec::new();
            for c in candidates {
                let mu = weight_at_depth(&rs, lambda, &c);
                // layout of image coordinates: one segment per raising operator
                let mut segs: Vec<(usize, usize, usize)> = Vec::new(); // (i, target space, column offset)
                let mut ncols = 0;
                for i in 0..l {
                    if let Some(t) = lookup(&index, &c, i, 1) {
                        segs.push((i, t, ncols));
                        ncols += spaces[t].dim;
                    }
                }
                if segs.is_empty() {
                    continue;
                }
                let mut rows: Vec<Vec<BigInt>> = Vec::new();
                let mut sources: Vec<(usize, usize, usize, usize)> = Vec::new(); // (j, a, src, first row)
                for j in 0..l {
                    let mut a = 1usize;
                    while let Some(src) = lookup(&index, &c, j, a as i64) {
                        let dn = spaces[src].dim;
                        let nu_j = spaces[src].weight.0[j];
                        let mut y = IntMatrix::zeros(dn, ncols);
                        for &(i, tgt, off) in &segs {
                            let dt = spaces[tgt].dim;
                            let mut block = IntMatrix::zeros(dt, dn);
                            // f_j^(a) e_i z
                            if let Some(e) = e_blocks[i].get(&src) {
                                let up = lookup(&index, &spaces[src].depth, i, 1).expect("target of e_i");
                                if let Some(fb) = f_div.get(&(j, a, up)) {
                                    block = block.add(&fb.mul(e)?);
                                }
                            }
                            if i == j {
                                // + (<nu, alpha_j^vee> - a + 1) f_j^(a-1) z
                                let coeff = big(nu_j - a as i64 + 1);
                                if !coeff.is_zero() {
                                    let fb = if a == 1 {
                                        Some(IntMatrix::identity(dn))
                                    } else {
                                        f_div.get(&(j, a - 1, src)).cloned()
                                    };
                                    if let Some(fb) = fb {
                                        block = block.add(&fb.scale(&coeff));
                                    }
                                }
                            }
                            for r in 0..dn {
                                for k in 0..dt {
                                    y.set(r, off + k, block.get(k, r).clone());
                                }
                            }
                        }
                        sources.push((j, a, src, rows.len()));
                        for r in 0..dn {
                            rows.push(y.row(r).to_vec());
                        }
                        a += 1;
                    }
                }
                let cand = IntMatrix::from_rows(rows, ncols);
                let h = cand.hermite_normal_form();
                let d = h.rows();
                if d == 0 {
                    continue;
                }
                dim += d;
                if dim > cap {
                    return Err(Error::DimensionCap { cap });
                }
                let me = spaces.len();
                spaces.push(WeightSpace { depth: c.clone(), weight: mu, dim: d, offset: 0 });
                index.insert(c.clone(), me);
                next.push(me);

                // lowering operators into this space
                let mut coords_all = IntMatrix::zeros(cand.rows(), d);
                for r in 0..cand.rows() {
                    let co = h.hnf_coordinates(cand.row(r)).ok_or_else(|| {
                        Error::Consistency("candidate vector outside its own lattice".into())
                    })?;
                    for (k, x) in co.into_iter().enumerate() {
                        coords_all.set(r, k, x);
                    }
                }
                for &(j, a, src, first) in &sources {
                    let dn = spaces[src].dim;
                    let rows: Vec<usize> = (first..first + dn).collect();
                    f_div.insert((j, a, src), coords_all.select_rows(&rows).transpose());
                }
                // raising operators out of this space
                for &(i, tgt, off) in &segs {
                    let dt = spaces[tgt].dim;
                    e_blocks[i].insert(me, h.column_range(off, dt).transpose());
                }

                // Gram matrix from <f_j z, w> = <z, e_j w>
                let mut crow: Vec<Vec<BigInt>> = Vec::new();
                let mut grow: Vec<Vec<BigInt>> = Vec::new();
                for &(j, a, src, first) in &sources {
                    if a != 1 {
                        continue;
                    }
                    let ge = gram[src].mul(&e_blocks[j][&me])?;
                    for r in 0..spaces[src].dim {
                        crow.push(coords_all.row(first + r).to_vec());
                        grow.push(ge.row(r).to_vec());
                    }
                }
                let cm = IntMatrix::from_rows(crow, d);
                let gm = IntMatrix::from_rows(grow, d);
                let sel = cm.independent_rows();
                if sel.len() != d {
                    return Err(Error::Consistency("simple lowering operators do not span a weight space".into()));
                }
                let g = cm.select_rows(&sel).solve_exact(&gm.select_rows(&sel))?;
                if !g.is_symmetric() || cm.mul(&g)? != gm {
                    return Err(Error::Consistency(format!("contravariant form inconsistent at depth {c:?}")));
                }
                gram.push(g);
            }
            level = next;
        }

        let mut off = 0;
        for s in spaces.iter_mut() {
            s.offset = off;
            off += s.dim;
        }

        let mut module = WeylModule {
            ca: ca.clone(),
            lambda: lambda.clone(),
            spaces,
            index,
            root_ops: Vec::new(),
            gram: GramTower { matrices: gram },
            dim,
        };
        module.root_ops = module.build_root_ops(&e_blocks, &f_div)?;
        Ok(module)
    }

    fn build_root_ops(
        &self,
        e_blocks: &[HashMap<usize, IntMatrix>],
        f_div: &HashMap<(usize, usize, usize), IntMatrix>,
    ) -> Result<Vec<GradedOp>> {
        let rs = self.root_system();
        let l = rs.rank();
        let nr = rs.num_roots();
        let ns = self.spaces.len();
        let mut ops: Vec<Option<GradedOp>> = vec![None; nr];
        for i in 0..l {
            let pos = rs.simple_root_index(i);
            let neg = self.ca.negative(pos);
            let mut eb = vec![None; ns];
            let mut fb = vec![None; ns];
            for s in 0..ns {
                eb[s] = e_blocks[i].get(&s).cloned();
                if let Some(t) = lookup(&self.index, &self.spaces[s].depth, i, -1) {
                    fb[s] = f_div.get(&(i, 1, s)).cloned();
                    debug_assert!(fb[s].as_ref().is_none_or(|b| b.rows() == self.spaces[t].dim));
                }
            }
            ops[pos] = Some(GradedOp { shift: rs.roots[pos].clone(), blocks: eb });
            ops[neg] = Some(GradedOp { shift: rs.roots[neg].clone(), blocks: fb });
        }
        // remaining roots by increasing height, from both ends
        let mut by_height: Vec<usize> = rs.positive_roots.clone();
        by_height.sort_by_key(|&r| crate::rootsys::height(&rs.roots[r]));
        for &b in &by_height {
            if ops[b].is_some() {
                continue;
            }
            let beta = &rs.roots[b];
            let (i, g) = (0..l)
                .find_map(|i| {
                    let mut rest = beta.clone();
                    rest[i] -= 1;
                    rs.index_of(&rest).filter(|_| rest.iter().all(|&x| x >= 0)).map(|g| (i, g))
                })
                .expect("non-simple positive root has a simple predecessor");
            let si = rs.simple_root_index(i);
            for (x, y) in [(si, g), (self.ca.negative(si), self.ca.negative(g))] {
                let n = self.ca.structure_constant(x, y);
                let target = rs.index_of(&rs.roots[x].iter().zip(&rs.roots[y]).map(|(a, c)| a + c).collect::<Vec<_>>()).expect("root");
                let op = self.commutator(ops[x].as_ref().unwrap(), ops[y].as_ref().unwrap(), n)?;
                ops[target] = Some(op);
            }
        }
        Ok(ops.into_iter().map(|o| o.expect("all roots assigned")).collect())
    }

    /// `[X, Y] / n`, blockwise.
    fn commutator(&self, x: &GradedOp, y: &GradedOp, n: i64) -> Result<GradedOp> {
        let shift: Vec<i64> = x.shift.iter().zip(&y.shift).map(|(a, b)| a + b).collect();
        let ns = self.spaces.len();
        let mut blocks = vec![None; ns];
        let nb = big(n);
        for s in 0..ns {
            let Some(t) = self.target(s, &shift) else { continue };
            let mut acc = IntMatrix::zeros(self.spaces[t].dim, self.spaces[s].dim);
            if let (Some(yb), Some(mid)) = (&y.blocks[s], self.target(s, &y.shift)) {
                if let Some(xb) = &x.blocks[mid] {
                    acc = acc.add(&xb.mul(yb)?);
                }
            }
            if let (Some(xb), Some(mid)) = (&x.blocks[s], self.target(s, &x.shift)) {
                if let Some(yb) = &y.blocks[mid] {
                    acc = acc.sub(&yb.mul(xb)?);
                }
            }
            if acc.is_zero() {
                continue;
            }
            blocks[s] = Some(acc.div_exact(&nb).ok_or(Error::NoIntegralForm)?);
        }
        Ok(GradedOp { shift, blocks })
    }

    /// Space reached from space `s` by an operator of the given root-lattice degree.
    pub fn target(&self, s: usize, shift: &[i64]) -> Option<usize> {
        let c: Vec<i64> = self.spaces[s].depth.iter().zip(shift).map(|(d, x)| d - x).collect();
        self.index.get(&c).copied()
    }

    pub fn chevalley(&self) -> &Arc<ChevalleyAlgebra> {
        &self.ca
    }

    pub fn root_system(&self) -> &RootSystem {
        self.ca.root_system()
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn spaces(&self) -> &[WeightSpace] {
        &self.spaces
    }

    pub fn space_index(&self, depth: &[i64]) -> Option<usize> {
        self.index.get(depth).copied()
    }

    pub fn gram_tower(&self) -> &GramTower {
        &self.gram
    }

    /// The operator `e_alpha` for a root index.
    pub fn root_op(&self, r: usize) -> &GradedOp {
        &self.root_ops[r]
    }

    /// Block of `e_alpha^n / n!` out of space `s`, or `None` if it vanishes.
    pub fn divided_power_block(&self, r: usize, n: usize, s: usize) -> Result<Option<IntMatrix>> {
        let op = &self.root_ops[r];
        let mut cur = s;
        let mut acc = IntMatrix::identity(self.spaces[s].dim);
        let mut fact = BigInt::one();
        for k in 1..=n {
            let Some(b) = &op.blocks[cur] else { return Ok(None) };
            acc = b.mul(&acc)?;
            cur = self.target(cur, &op.shift).expect("block implies target");
            fact *= BigInt::from(k);
        }
        if acc.is_zero() {
            return Ok(None);
        }
        acc.div_exact(&fact).map(Some).ok_or(Error::NoIntegralForm)
    }

    /// Dense matrix of `e_alpha^n / n!` on the whole module.
    pub fn divided_power_matrix(&self, r: usize, n: usize) -> Result<IntMatrix> {
        let mut m = IntMatrix::zeros(self.dim, self.dim);
        let shift: Vec<i64> = self.root_ops[r].shift.iter().map(|x| x * n as i64).collect();
        for s in 0..self.spaces.len() {
            if let Some(b) = self.divided_power_block(r, n, s)? {
                let t = self.target(s, &shift).expect("target");
                place(&mut m, &b, self.spaces[t].offset, self.spaces[s].offset);
            }
        }
        Ok(m)
    }

    /// Dense integer matrix of `e_alpha`.
    pub fn root_matrix(&self, r: usize) -> IntMatrix {
        self.divided_power_matrix(r, 1).expect("first power is integral")
    }

    /// Longest nonvanishing power of each root operator; checks that all divided powers
    /// up to it are integral.
    pub fn check_divided_powers(&self) -> Result<()> {
        for r in 0..self.root_ops.len() {
            for s in 0..self.spaces.len() {
                let mut n = 1;
                while self.divided_power_block(r, n, s)?.is_some() {
                    n += 1;
                }
            }
        }
        Ok(())
    }

    /// Matrix of `x_alpha(t) = sum_n t^n e_alpha^(n)` as a list of coefficient matrices,
    /// lowest power of `t` first.
    pub fn group_element_polynomial(&self, r: usize) -> Result<Vec<IntMatrix>> {
        let mut out = vec![IntMatrix::identity(self.dim)];
        let mut n = 1;
        loop {
            let m = self.divided_power_matrix(r, n)?;
            if m.is_zero() {
                break;
            }
            out.push(m);
            n += 1;
        }
        Ok(out)
    }

    /// `e_alpha^(n)` block modulo `p`.
    pub(crate) fn divided_power_block_fp(&self, r: usize, n: usize, s: usize, field: &Field) -> Result<Option<FpMatrix>> {
        Ok(self.divided_power_block(r, n, s)?.map(|b| b.to_fp(field)))
    }

    /// Dense matrix of `e_alpha` modulo `p`.
    pub(crate) fn root_matrix_fp(&self, r: usize, field: &Field) -> FpMatrix {
        let mut m = FpMatrix::zeros(field, self.dim, self.dim);
        let op = &self.root_ops[r];
        for s in 0..self.spaces.len() {
            if let Some(b) = &op.blocks[s] {
                let t = self.target(s, &op.shift).expect("target");
                let bf = b.to_fp(field);
                for i in 0..bf.rows() {
                    for j in 0..bf.cols() {
                        m.set(self.spaces[t].offset + i, self.spaces[s].offset + j, bf.get(i, j));
                    }
                }
            }
        }
        m
    }

    /// Weight of every basis vector, in module order.
    pub fn basis_weights(&self) -> Vec<Weight> {
        let mut out = Vec::with_capacity(self.dim);
        for s in &self.spaces {
            for _ in 0..s.dim {
                out.push(s.weight.clone());
            }
        }
        out
    }

    /// Rank of each Gram matrix over the rationals.
    pub fn gram_ranks_q(&self) -> Vec<usize> {
        self.gram.matrices.iter().map(|g| g.rank_q()).collect()
    }

    /// Rank of each Gram matrix modulo `p`; these are the weight multiplicities of the
    /// simple head of the reduced module.
    pub fn gram_ranks_mod(&self, field: &Field) -> Vec<usize> {
        self.gram.matrices.iter().map(|g| g.to_fp(field).rank()).collect()
    }

    /// Contravariance: `e_alpha^T G = G e_{-alpha}` between every pair of weight spaces.
    pub fn check_contravariance(&self) -> Result<()> {
        let nr = self.root_ops.len();
        for r in 0..nr {
            let op = &self.root_ops[r];
            let back = &self.root_ops[self.ca.negative(r)];
            for s in 0..self.spaces.len() {
                let Some(t) = self.target(s, &op.shift) else { continue };
                let zero_f = IntMatrix::zeros(self.spaces[t].dim, self.spaces[s].dim);
                let zero_b = IntMatrix::zeros(self.spaces[s].dim, self.spaces[t].dim);
                let e = op.blocks[s].as_ref().unwrap_or(&zero_f);
                let f = back.blocks[t].as_ref().unwrap_or(&zero_b);
                let lhs = e.transpose().mul(&self.gram.matrices[t])?;
                let rhs = self.gram.matrices[s].mul(f)?;
                if lhs != rhs {
                    return Err(Error::Consistency(format!("contravariance fails for root {r} at space {s}")));
                }
            }
        }
        Ok(())
    }
}

fn place(m: &mut IntMatrix, b: &IntMatrix, r0: usize, c0: usize) {
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            m.set(r0 + i, c0 + j, b.get(i, j).clone());
        }
    }
}

/// Space at depth `c - a e_i`, i.e. weight `mu + a alpha_i`.
fn lookup(index: &HashMap<Vec<i64>, usize>, c: &[i64], i: usize, a: i64) -> Option<usize> {
    let mut d = c.to_vec();
    d[i] -= a;
    if d[i] < 0 {
        return None;
    }
    index.get(&d).copied()
}

fn weight_at_depth(rs: &RootSystem, lambda: &Weight, c: &[i64]) -> Weight {
    let l = rs.rank();
    Weight((0..l).map(|i| lambda.0[i] - (0..l).map(|j| rs.cartan[i][j] * c[j]).sum::<i64>()).collect())
}
