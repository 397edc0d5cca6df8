//! Gradings of `e7` and `e8` by root height modulo `m`, and the data attached to the
//! subsystems used to find generic stabilizers of the degree-one piece in characteristic `m`.
//!
//! The ambient algebra uses the coweight torus, which is the Lie algebra of the adjoint
//! group. For E8 this agrees with the coroot torus.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chevalley::{ChevalleyAlgebra, LieAlgebraFp, Torus};
use crate::error::{Error, Result};
use crate::exactlin::{lattice_quotient, AbelianInvariants, Elem, Field, FpMatrix, IntMatrix, RowSpace};
use crate::rootsys::{height, root_subsystem, RootSystem, TypeTag};
use crate::stabilizers::trial_rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ThetaCase {
    #[serde(rename = "wedge4-e7")]
    Wedge4E7,
    #[serde(rename = "wedge4-e8")]
    Wedge4E8,
    #[serde(rename = "wedge3-e8")]
    Wedge3E8,
}

impl ThetaCase {
    pub const ALL: [ThetaCase; 3] = [ThetaCase::Wedge4E7, ThetaCase::Wedge4E8, ThetaCase::Wedge3E8];

    pub fn id(self) -> &'static str {
        match self {
            ThetaCase::Wedge4E7 => "wedge4-e7",
            ThetaCase::Wedge4E8 => "wedge4-e8",
            ThetaCase::Wedge3E8 => "wedge3-e8",
        }
    }

    pub fn rank(self) -> usize {
        match self {
            ThetaCase::Wedge4E7 => 7,
            _ => 8,
        }
    }

    /// Grading modulus, which is also the characteristic.
    pub fn modulus(self) -> u64 {
        match self {
            ThetaCase::Wedge3E8 => 3,
            _ => 2,
        }
    }

    /// Simple roots of the chosen subsystem (`A1^l` or `A2^4`), in simple-root coordinates.
    pub fn gammas(self) -> Vec<Vec<i64>> {
        let parse = |s: &str| s.bytes().map(|b| (b - b'0') as i64).collect::<Vec<_>>();
        let a1 = ["0010000", "0100000", "0000100", "0112100", "0000001", "0112221", "2234321"];
        match self {
            ThetaCase::Wedge4E7 => a1.iter().map(|s| parse(s)).collect(),
            ThetaCase::Wedge4E8 => {
                let mut g: Vec<Vec<i64>> = a1.iter().map(|s| parse(&format!("{s}0"))).collect();
                g.push(parse("23465432"));
                g
            }
            ThetaCase::Wedge3E8 => ["10000000", "00100000", "00001000", "00000100", "01000000", "11232100", "00000001", "23465431"]
                .iter()
                .map(|s| parse(s))
                .collect(),
        }
    }

    /// Expected type of the subsystem spanned by the gammas.
    pub fn subsystem_type(self) -> &'static str {
        match self {
            ThetaCase::Wedge4E7 => "A1^7",
            ThetaCase::Wedge4E8 => "A1^8",
            ThetaCase::Wedge3E8 => "A2^4",
        }
    }

    /// Expected type of the degree-zero root subsystem.
    pub fn degree_zero_type(self) -> &'static str {
        match self {
            ThetaCase::Wedge4E7 => "A7",
            ThetaCase::Wedge4E8 => "D8",
            ThetaCase::Wedge3E8 => "A8",
        }
    }

    pub fn expected_invariants(self) -> Vec<u64> {
        match self {
            ThetaCase::Wedge4E7 => vec![2, 2, 2],
            ThetaCase::Wedge4E8 => vec![2, 2, 2, 2],
            ThetaCase::Wedge3E8 => vec![3, 3],
        }
    }

    /// Coroot combinations spanning the Lie algebra of the finite diagonalizable subgroup.
    pub fn h_generators(self) -> Vec<Vec<i64>> {
        match self {
            ThetaCase::Wedge3E8 => vec![vec![1, 0, 2, 0, 0, 0, 0, 0], vec![0, 0, 0, 0, 1, 2, 0, 0]],
            _ => self.gammas(),
        }
    }

    /// Roots spanning the subspace `V_1` of the degree-one piece.
    pub fn v1_roots(self) -> Vec<Vec<i64>> {
        let g = self.gammas();
        let neg = |v: &Vec<i64>| v.iter().map(|x| -x).collect::<Vec<_>>();
        match self {
            ThetaCase::Wedge3E8 => {
                let mut out = Vec::new();
                for i in (0..8).step_by(2) {
                    out.push(g[i].clone());
                    out.push(g[i + 1].clone());
                    out.push(neg(&g[i].iter().zip(&g[i + 1]).map(|(a, b)| a + b).collect()));
                }
                out
            }
            _ => g.iter().flat_map(|x| [x.clone(), neg(x)]).collect(),
        }
    }
}

impl fmt::Display for ThetaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ThetaCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ThetaCase::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

/// The ambient algebra of a case in characteristic `m`, with the adjoint torus.
pub fn ambient_algebra(case: ThetaCase) -> Result<Arc<LieAlgebraFp>> {
    let rs = Arc::new(RootSystem::new(TypeTag::E, case.rank())?);
    let ca = ChevalleyAlgebra::new(rs)?;
    Ok(Arc::new(ca.specialize_with(case.modulus(), Torus::Coweights)?))
}

/// `Z/m`-grading of the algebra by root height.
#[derive(Debug, Clone)]
pub struct GradedDecomposition {
    pub m: u64,
    /// Basis indices of each piece; the torus lies in piece 0.
    pub pieces: Vec<Vec<usize>>,
    pub dims: Vec<usize>,
    /// Type of the root subsystem of piece 0.
    pub degree_zero_type: String,
}

pub fn grade_by_height(la: &LieAlgebraFp, m: u64) -> Result<GradedDecomposition> {
    let rs = la.root_system();
    let mut pieces = vec![Vec::new(); m as usize];
    for (i, r) in rs.roots.iter().enumerate() {
        pieces[height(r).rem_euclid(m as i64) as usize].push(i);
    }
    for k in 0..la.rank() {
        pieces[0].push(la.torus_index(k));
    }
    let mut piece_of = vec![0usize; la.dim()];
    for (d, p) in pieces.iter().enumerate() {
        for &i in p {
            piece_of[i] = d;
        }
    }
    for i in 0..la.dim() {
        for j in 0..la.dim() {
            let target = (piece_of[i] + piece_of[j]) % m as usize;
            if la.bracket_basis(i, j).iter().any(|&(k, _)| piece_of[k] != target) {
                return Err(Error::Consistency(format!(
                    "[{}, {}] leaves degree {target}",
                    la.basis_label(i),
                    la.basis_label(j)
                )));
            }
        }
    }
    let zero_roots: Vec<Vec<i64>> = pieces[0].iter().filter(|&&i| i < la.num_roots()).map(|&i| rs.roots[i].clone()).collect();
    let sub = root_subsystem(rs, &zero_roots)?;
    let dims = pieces.iter().map(|p| p.len()).collect();
    Ok(GradedDecomposition { m, pieces, dims, degree_zero_type: sub.type_string() })
}

pub fn theta_grading(case: ThetaCase) -> Result<GradedDecomposition> {
    let la = ambient_algebra(case)?;
    grade_by_height(&la, case.modulus())
}

/// Matrix with one row per gamma, in simple-root coordinates.
pub fn gamma_matrix(case: ThetaCase) -> IntMatrix {
    IntMatrix::from_i64_rows(&case.gammas())
}

/// Checks that the gammas are roots spanning a subsystem of the declared type, with the
/// declared pairings.
pub fn check_gammas(case: ThetaCase, rs: &RootSystem) -> Result<String> {
    let g = case.gammas();
    for (i, a) in g.iter().enumerate() {
        if !rs.is_root(a) {
            return Err(Error::NotARoot(a.clone()));
        }
        for (j, b) in g.iter().enumerate().skip(i + 1) {
            let ip = rs.inner(a, b);
            let expect = match case {
                ThetaCase::Wedge3E8 if i % 2 == 0 && j == i + 1 => -1,
                _ => 0,
            };
            if ip != expect {
                return Err(Error::Consistency(format!("gamma_{} . gamma_{} = {ip}, expected {expect}", i + 1, j + 1)));
            }
        }
    }
    let sub = root_subsystem(rs, &g)?;
    let t = sub.type_string();
    if t != case.subsystem_type() {
        return Err(Error::Consistency(format!("gammas span {t}, expected {}", case.subsystem_type())));
    }
    Ok(t)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairingKernelReport {
    pub p: u64,
    /// Rank of the gamma matrix mod p.
    pub gamma_rank: usize,
    /// Right kernel of `eta M` mod p, one basis vector per row.
    pub kernel: Vec<Vec<Elem>>,
    /// Every vector pairing to zero with all gammas mod p lies in their span mod p.
    pub kernel_in_gamma_span: bool,
    pub kernel_equals_gamma_span: bool,
    /// Every root of height divisible by `m` pairs nontrivially with some gamma.
    pub degree_zero_roots_detected: bool,
    pub passed: bool,
}

pub fn pairing_kernel_check(case: ThetaCase) -> Result<PairingKernelReport> {
    let rs = RootSystem::new(TypeTag::E, case.rank())?;
    let p = case.modulus();
    let f = Field::prime(p)?;
    let eta = FpMatrix::from_i64_rows(&f, &case.gammas());
    let cartan = FpMatrix::from_i64_rows(&f, &rs.cartan);
    let em = eta.mul(&cartan)?;
    let kernel = em.kernel();
    let mut span = RowSpace::new(&f, rs.rank());
    for r in 0..eta.rows() {
        span.insert(eta.row(r).to_vec());
    }
    let kernel_in_gamma_span = (0..kernel.rows()).all(|r| span.contains(kernel.row(r)));
    let kernel_equals_gamma_span = kernel_in_gamma_span && kernel.rows() == span.rank();
    let m = case.modulus() as i64;
    let degree_zero_roots_detected = rs.roots.iter().filter(|r| height(r).rem_euclid(m) == 0).all(|r| {
        let v: Vec<Elem> = r.iter().map(|&x| f.from_i64(x)).collect();
        em.mul_vec(&v).iter().any(|&x| x != 0)
    });
    Ok(PairingKernelReport {
        p,
        gamma_rank: span.rank(),
        kernel: (0..kernel.rows()).map(|r| kernel.row(r).to_vec()).collect(),
        kernel_in_gamma_span,
        kernel_equals_gamma_span,
        degree_zero_roots_detected,
        passed: kernel_in_gamma_span && degree_zero_roots_detected,
    })
}

/// Invariants of the root lattice modulo the span of the gammas; its character group is
/// the finite diagonalizable subgroup cut out by the gammas.
pub fn h_structure(case: ThetaCase) -> Result<AbelianInvariants> {
    lattice_quotient(case.rank(), &gamma_matrix(case))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct V1Report {
    pub case: ThetaCase,
    pub seed: u64,
    pub trials: usize,
    pub d: usize,
    pub dim_g0: usize,
    pub dim_g1: usize,
    pub dim_v1: usize,
    pub rank: usize,
    /// Minimum annihilator dimension in `g_0` over random vectors of `V_1`.
    pub v1_stabilizer_dim: usize,
    /// Dimension of the span of the expected toral elements.
    pub h_dim: usize,
    /// The annihilator at the minimizing vector equals that span.
    pub annihilator_is_h: bool,
    /// Minimum over random vectors of the whole degree-one piece.
    pub full_space_stabilizer_dim: Option<usize>,
    /// `dim g_0 + dim V_1 - dim g_1`; the transporter bound requires it to be at least the rank.
    pub transporter_bound: i64,
    pub passed: bool,
}

/// Matrix of `x -> [x, v]` from `g_0` to `g_1`, for `v` supported on `support` with
/// coefficients over `field`.
fn bracket_matrix(la: &LieAlgebraFp, grading: &GradedDecomposition, field: &Field, support: &[usize], coeffs: &[Elem]) -> FpMatrix {
    let g0 = &grading.pieces[0];
    let mut row_of: BTreeMap<usize, usize> = BTreeMap::new();
    for (r, &i) in grading.pieces[1 % grading.pieces.len()].iter().enumerate() {
        row_of.insert(i, r);
    }
    let mut m = FpMatrix::zeros(field, row_of.len(), g0.len());
    for (c, &x) in g0.iter().enumerate() {
        for (&b, &t) in support.iter().zip(coeffs) {
            if t == 0 {
                continue;
            }
            for &(k, s) in la.bracket_basis(x, b) {
                let r = row_of[&k];
                m.set(r, c, field.add(m.get(r, c), field.mul(s, t)));
            }
        }
    }
    m
}

/// Smallest `d` with `p^d >= 256`. Over `F_8` the E8 bracket matrix at a random
/// point of `V_1` drops rank in most trials.
pub fn v1_extension_degree(p: u64) -> usize {
    let mut d = 1;
    while p.pow(d as u32) < 256 {
        d += 1;
    }
    d
}

pub fn v1_generic_stabilizer(case: ThetaCase, trials: usize, seed: u64, full_space_trials: usize) -> Result<V1Report> {
    if trials == 0 {
        return Err(Error::Dimension("at least one trial is needed".into()));
    }
    let la = ambient_algebra(case)?;
    let grading = grade_by_height(&la, case.modulus())?;
    let d = v1_extension_degree(case.modulus());
    let field = Field::new(case.modulus(), d)?;
    let rs = la.root_system();
    let support: Vec<usize> =
        case.v1_roots().iter().map(|r| rs.index_of(r).ok_or_else(|| Error::NotARoot(r.clone()))).collect::<Result<_>>()?;
    if support.iter().any(|i| !grading.pieces[1].contains(i)) {
        return Err(Error::Consistency("V_1 is not inside the degree-one piece".into()));
    }

    let samples: Vec<(usize, FpMatrix)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            // a vector of V_1 with a zero coordinate lies in a proper closed subset
            let coeffs: Vec<Elem> = support.iter().map(|_| field.random_nonzero(&mut rng)).collect();
            let ker = bracket_matrix(&la, &grading, &field, &support, &coeffs).kernel();
            (ker.rows(), ker)
        })
        .collect();
    let (v1_stabilizer_dim, best) = samples.into_iter().min_by_key(|(d, _)| *d).expect("trials >= 1");

    // expected toral elements, in g_0 coordinates
    let g0 = &grading.pieces[0];
    let h_full = la.toral_subalgebra(&case.h_generators())?;
    let h0 = h_full.select_columns(g0).extend_to(&field)?;
    let h_dim = h0.rank();
    let mut span = RowSpace::new(&field, g0.len());
    for r in 0..h0.rows() {
        span.insert(h0.row(r).to_vec());
    }
    let annihilator_is_h = best.rows() == h_dim && (0..best.rows()).all(|r| span.contains(best.row(r)));

    let full_space_stabilizer_dim = if full_space_trials > 0 {
        let g1 = grading.pieces[1].clone();
        let dims: Vec<usize> = (0..full_space_trials)
            .into_par_iter()
            .map(|t| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
                rng.set_stream(t as u64);
                let coeffs: Vec<Elem> = g1.iter().map(|_| field.random(&mut rng)).collect();
                bracket_matrix(&la, &grading, &field, &g1, &coeffs).kernel().rows()
            })
            .collect();
        dims.into_iter().min()
    } else {
        None
    };

    let (dim_g0, dim_g1, dim_v1) = (grading.dims[0], grading.dims[1], support.len());
    let transporter_bound = dim_g0 as i64 + dim_v1 as i64 - dim_g1 as i64;
    let rank = la.rank();
    let passed = annihilator_is_h
        && transporter_bound >= rank as i64
        && full_space_stabilizer_dim.is_none_or(|x| x == v1_stabilizer_dim);
    Ok(V1Report {
        case,
        seed,
        trials,
        d,
        dim_g0,
        dim_g1,
        dim_v1,
        rank,
        v1_stabilizer_dim,
        h_dim,
        annihilator_is_h,
        full_space_stabilizer_dim,
        transporter_bound,
        passed,
    })
}

/// Weights `(q, +-q+-1, +-1)` and `(-q, +-1, +-q+-1)` of the torus `S` of the block subgroup
/// of `SL4` on the subspace `U` of `L(q omega_1 + omega_2)`.
pub fn sl4_tensor_weights(q: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for s1 in [1, -1] {
        for s2 in [1, -1] {
            for s3 in [1, -1] {
                out.push(vec![q, s1 * q + s2, s3]);
                out.push(vec![-q, s3, s1 * q + s2]);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Sl4LatticeReport {
    pub p: u64,
    pub q: i64,
    pub invariants: AbelianInvariants,
    pub index: Option<BigInt>,
    /// Hermite normal form of the weight lattice.
    pub basis: Vec<Vec<i64>>,
    /// The weights generate the same lattice as `(q,1,1), (0,2,0), (0,0,2)`.
    pub matches_stated_basis: bool,
    /// Weights of `U` in the coordinates of the stated basis, reduced mod `p`, with multiplicities.
    pub reduced_weights: BTreeMap<Vec<i64>, usize>,
}

pub fn sl4_tensor_lattice(p: u64, e: u32) -> Result<Sl4LatticeReport> {
    let q = (p as i64).pow(e);
    let weights = sl4_tensor_weights(q);
    let lat = IntMatrix::from_i64_rows(&weights);
    let invariants = lattice_quotient(3, &lat)?;
    let index = (invariants.free_rank == 0).then(|| invariants.torsion_order());
    let hnf = lat.hermite_normal_form();
    let stated = IntMatrix::from_i64_rows(&[vec![q, 1, 1], vec![0, 2, 0], vec![0, 0, 2]]);
    let matches_stated_basis = hnf == stated.hermite_normal_form();
    let mut reduced_weights = BTreeMap::new();
    for w in &weights {
        let c = stated
            .transpose()
            .solve_exact(&IntMatrix::from_i64_rows(std::slice::from_ref(w)).transpose())
            .ok()
            .map(|x| x.to_i64_rows().iter().map(|r| r[0].rem_euclid(p as i64)).collect::<Vec<_>>());
        if let Some(c) = c {
            *reduced_weights.entry(c).or_insert(0) += 1;
        }
    }
    Ok(Sl4LatticeReport { p, q, invariants, index, basis: hnf.to_i64_rows(), matches_stated_basis, reduced_weights })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gradings() {
        for (case, dims, zero) in [
            (ThetaCase::Wedge4E7, vec![63, 70], "A7"),
            (ThetaCase::Wedge4E8, vec![120, 128], "D8"),
            (ThetaCase::Wedge3E8, vec![80, 84, 84], "A8"),
        ] {
            let g = theta_grading(case).unwrap();
            assert_eq!(g.dims, dims, "{case}");
            assert_eq!(g.degree_zero_type, zero);
            assert_eq!(zero, case.degree_zero_type());
        }
    }

    #[test]
    fn gamma_subsystems() {
        for case in ThetaCase::ALL {
            let rs = RootSystem::new(TypeTag::E, case.rank()).unwrap();
            assert_eq!(check_gammas(case, &rs).unwrap(), case.subsystem_type());
            assert!(case.v1_roots().iter().all(|r| height(r).rem_euclid(case.modulus() as i64) == 1));
        }
    }

    #[test]
    fn pairing_kernels() {
        for case in ThetaCase::ALL {
            let r = pairing_kernel_check(case).unwrap();
            assert!(r.passed, "{case}: {r:?}");
        }
        assert!(pairing_kernel_check(ThetaCase::Wedge4E8).unwrap().kernel_equals_gamma_span);
        assert!(pairing_kernel_check(ThetaCase::Wedge4E7).unwrap().kernel_equals_gamma_span);
    }

    #[test]
    fn diagonalizable_subgroups() {
        for case in ThetaCase::ALL {
            let inv = h_structure(case).unwrap();
            assert_eq!(inv.free_rank, 0);
            assert_eq!(inv.divisors_u64(), case.expected_invariants(), "{case}");
        }
    }

    #[test]
    fn e7_coweight_relation() {
        // h_{alpha_2} + h_{alpha_5} + h_{alpha_7} = 0 in characteristic 2
        let la = ambient_algebra(ThetaCase::Wedge4E7).unwrap();
        let v = la.coroot_vector(&[0, 1, 0, 0, 1, 0, 1]).unwrap();
        assert!(v.iter().all(|&x| x == 0));
        assert_eq!(la.toral_subalgebra(&ThetaCase::Wedge4E7.gammas()).unwrap().rows(), 3);
    }

    #[test]
    fn v1_stabilizers() {
        for (case, expect, identity) in
            [(ThetaCase::Wedge4E7, 3, (70, 63, 14)), (ThetaCase::Wedge4E8, 4, (128, 120, 16)), (ThetaCase::Wedge3E8, 2, (84, 80, 12))]
        {
            let r = v1_generic_stabilizer(case, 5, 42, 2).unwrap();
            assert_eq!(r.v1_stabilizer_dim, expect, "{case}");
            assert_eq!(r.h_dim, expect);
            assert!(r.annihilator_is_h);
            assert_eq!(r.full_space_stabilizer_dim, Some(expect));
            assert_eq!((r.dim_g1, r.dim_g0, r.dim_v1), identity);
            assert_eq!(r.transporter_bound, r.rank as i64);
            assert!(r.passed);
        }
    }

    #[test]
    fn sl4_lattice() {
        let r = sl4_tensor_lattice(2, 2).unwrap();
        assert_eq!(r.index, Some(BigInt::from(16)));
        assert!(r.matches_stated_basis);
        let expect: BTreeMap<Vec<i64>, usize> =
            [vec![1, 0, 0], vec![1, 0, 1], vec![1, 1, 0], vec![1, 1, 1]].into_iter().map(|w| (w, 4)).collect();
        assert_eq!(r.reduced_weights, expect);
    }

    #[test]
    fn case_names_round_trip() {
        for case in ThetaCase::ALL {
            assert_eq!(case.id().parse::<ThetaCase>().unwrap(), case);
        }
        assert!("wedge5".parse::<ThetaCase>().is_err());
    }
}
