use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::{CaseSpec, Outcome};
use crate::chevalley::{reduced_algebra, LieAlgebraFp};
use crate::error::{Error, Result};
use crate::highest_weight::{
    direct_sum, exterior_power, frobenius_twist, irreducible, symmetric_power, tensor, trivial_module, HwModule, LieAction,
    WeylModule, DEFAULT_DIMENSION_CAP,
};
use crate::invarpoly::{charpoly_invariance_check, is_invariant, jacobian_criterion, s4_difference_invariants_char2};
use crate::rootsys::{RootSystem, Weight};
use crate::stabilizers::{
    annihilator, fixed_space_of_matrix, fixed_space_of_subalgebra, generic_annihilator_dim, symmetric_nilpotent_check,
    DEFAULT_EXTENSION_DEGREE, DEFAULT_TRIALS,
};
use crate::vinberg::{h_structure, pairing_kernel_check, sl4_tensor_lattice, theta_grading, v1_generic_stabilizer, ThetaCase};

const V1_TRIALS: usize = 5;

fn alg(t: &str, p: u64) -> Result<Arc<LieAlgebraFp>> {
    reduced_algebra(t.parse()?, p)
}

fn irr(t: &str, p: u64, lambda: &[i64]) -> Result<HwModule> {
    irreducible(&alg(t, p)?, &Weight(lambda.to_vec()))
}

fn natural(t: &str, p: u64) -> Result<HwModule> {
    let la = alg(t, p)?;
    let mut lambda = vec![0; la.rank()];
    lambda[0] = 1;
    irreducible(&la, &Weight(lambda))
}

fn generic(m: &HwModule, seed: u64) -> Result<Outcome> {
    let s = generic_annihilator_dim(m, DEFAULT_TRIALS, DEFAULT_EXTENSION_DEGREE, seed)?;
    Ok(Outcome::Integer(s.min_dim_observed as u64))
}

fn dim(m: HwModule) -> Outcome {
    Outcome::Integer(m.dim() as u64)
}

fn roots_and_dim(t: &str) -> Result<Outcome> {
    let rs = RootSystem::from_type(t.parse()?)?;
    Ok(Outcome::Integers(vec![rs.num_roots() as u64, rs.dim_algebra() as u64]))
}

fn wedge3(t: &str, p: u64, seed: u64) -> Result<Outcome> {
    generic(&exterior_power(&natural(t, p)?, 3, DEFAULT_DIMENSION_CAP)?, seed)
}

/// Weights of `V^h` for the toral subalgebra spanned by `combos`, with the weights listed
/// and their negatives expected; returns the quotient invariants, or an error naming the
/// first mismatch.
fn fixed_weight_quotient(t: &str, p: u64, lambda: &[i64], combos: &[Vec<i64>], listed: &[Vec<i64>]) -> Result<Outcome> {
    let m = irr(t, p, lambda)?;
    let la = m.algebra().clone();
    let fs = fixed_space_of_subalgebra(&m, &la.toral_subalgebra(combos)?)?;
    let expect: BTreeMap<Weight, usize> = listed
        .iter()
        .flat_map(|w| [Weight(w.clone()), Weight(w.iter().map(|x| -x).collect())])
        .map(|w| (w, 1))
        .collect();
    if fs.weights != expect {
        return Err(Error::Consistency(format!("fixed weights {:?}", fs.weights.keys().collect::<Vec<_>>())));
    }
    if la.dim() - la.rank() != m.dim() - fs.dim {
        return Err(Error::Consistency(format!("dim g - rank = {}, dim V - dim V^h = {}", la.dim() - la.rank(), m.dim() - fs.dim)));
    }
    let q = fs.weight_quotient(la.rank())?;
    if q.free_rank != 0 {
        return Err(Error::Consistency(format!("quotient has free rank {}", q.free_rank)));
    }
    Ok(Outcome::Integers(q.divisors_u64()))
}

fn grading(case: ThetaCase) -> Result<Outcome> {
    Ok(Outcome::Integers(theta_grading(case)?.dims.iter().map(|&d| d as u64).collect()))
}

fn v1(case: ThetaCase, seed: u64) -> Result<Outcome> {
    let r = v1_generic_stabilizer(case, V1_TRIALS, seed, 0)?;
    if !r.annihilator_is_h {
        return Err(Error::Consistency(format!("annihilator of dim {} is not the toral span of dim {}", r.v1_stabilizer_dim, r.h_dim)));
    }
    Ok(Outcome::Integer(r.v1_stabilizer_dim as u64))
}

/// `dim g_1 = dim g_0 + dim V_1 - rank`.
fn dimension_identity(case: ThetaCase) -> Result<Outcome> {
    let g = theta_grading(case)?;
    let v1 = case.v1_roots().len();
    Ok(Outcome::Boolean(g.dims[1] + case.rank() == g.dims[0] + v1))
}

fn symmetric_nilpotent(n: usize, p: u64, seed: u64) -> Result<Outcome> {
    Ok(Outcome::Boolean(symmetric_nilpotent_check(n, p, seed)?.passed))
}

fn charpoly(n: usize, p: u64, seed: u64) -> Result<Outcome> {
    Ok(Outcome::Boolean(charpoly_invariance_check(n, p, 10, seed)?.passed))
}

macro_rules! case {
    ($id:expr, $desc:expr, $claim:expr, [$($tag:expr),*], $expected:expr, $size:expr, $builder:expr) => {
        CaseSpec {
            id: $id,
            description: $desc,
            claim: $claim,
            tags: &[$($tag),*],
            expected: $expected,
            size: $size,
            builder: $builder,
        }
    };
}

/// The full catalog, in run order.
pub fn catalog() -> Vec<CaseSpec> {
    use Outcome::{Boolean, Integer, Integers};
    vec![
        // root data
        case!("rootsys-e8", "E8 root count and algebra dimension", "E8 has 240 roots and dimension 248",
            ["rootsys"], Integers(vec![240, 248]), 248, |_| roots_and_dim("E8")),
        case!("rootsys-e7", "E7 root count and algebra dimension", "E7 has 126 roots and dimension 133",
            ["rootsys"], Integers(vec![126, 133]), 133, |_| roots_and_dim("E7")),
        case!("rootsys-f4", "F4 root count and algebra dimension", "F4 has 48 roots and dimension 52",
            ["rootsys"], Integers(vec![48, 52]), 52, |_| roots_and_dim("F4")),
        case!("rootsys-g2", "G2 root count and algebra dimension", "G2 has 12 roots and dimension 14",
            ["rootsys"], Integers(vec![12, 14]), 14, |_| roots_and_dim("G2")),
        case!("rootsys-a3-weyl-order", "order of the Weyl group of A3", "W(A3) is S4, of order 24",
            ["rootsys", "invariants"], Integer(24), 15, |_| {
                let rs = RootSystem::from_type("A3".parse()?)?;
                Ok(Integer(u64::try_from(rs.weyl_group_order()).map_err(|e| Error::Consistency(e.to_string()))?))
            }),

        // module dimensions
        case!("g2-char2-natural-dim", "G2, p = 2, dim L(omega_2)", "L(omega_2) is the Weyl module modulo the span of its zero-weight vector",
            ["modules", "g2"], Integer(6), 7, |_| Ok(dim(irr("G2", 2, &[0, 1])?))),
        case!("f4-weyl-natural-dim", "F4, dim V(omega_4)", "the Weyl module V(omega_4) has dimension 26",
            ["modules", "f4"], Integer(26), 26, |_| {
                let la = alg("F4", 3)?;
                Ok(Integer(WeylModule::new(la.chevalley_arc(), &Weight(vec![0, 0, 0, 1]), DEFAULT_DIMENSION_CAP)?.dim() as u64))
            }),
        case!("f4-char3-natural-dim", "F4, p = 3, dim L(omega_4)", "in characteristic 3, L(omega_4) is the 26-dimensional module modulo a line",
            ["modules", "f4"], Integer(25), 26, |_| Ok(dim(irr("F4", 3, &[0, 0, 0, 1])?))),
        case!("c5-char2-omega3-dim", "C5, p = 2, dim L(omega_3)", "Sp10 in characteristic 2 has L(omega_3) of dimension 100",
            ["modules", "table"], Integer(100), 110, |_| Ok(dim(irr("C5", 2, &[0, 0, 1, 0, 0])?))),
        case!("c4-char5-omega3-dim", "C4, p = 5, dim L(omega_3)", "Sp8 in characteristic other than 3 has L(omega_3) of dimension 48",
            ["modules", "table"], Integer(48), 48, |_| Ok(dim(irr("C4", 5, &[0, 0, 1, 0])?))),
        case!("a2-sym4-dim", "A2, p = 7, dim S^4 of the natural module", "the fourth symmetric power of k^3 has dimension 15",
            ["modules", "table"], Integer(15), 15, |_| Ok(dim(symmetric_power(&natural("A2", 7)?, 4, DEFAULT_DIMENSION_CAP)?))),
        case!("a3-char2-twisted-dim", "A3, p = 2, dim L(2 omega_1 + omega_2)", "L(q omega_1 + omega_2) is L(omega_2) tensor a Frobenius twist of L(omega_1), of dimension 24",
            ["modules", "table", "steinberg"], Integer(24), 24, |_| Ok(dim(irr("A3", 2, &[2, 1, 0])?))),
        case!("b7-char3-spin-dim", "B7, p = 3, dim L(omega_7)", "the spin module of Spin15 has dimension 128",
            ["modules", "table"], Integer(128), 128, |_| Ok(dim(irr("B7", 3, &[0, 0, 0, 0, 0, 0, 1])?))),

        // stabilizers
        case!("g2-char2-natural-stab", "G2, p = 2, generic stabilizer on L(omega_2)", "dim g_v = 9 for generic v",
            ["stabilizers", "g2"], Integer(9), 14, |seed| generic(&irr("G2", 2, &[0, 1])?, seed)),
        case!("g2-char2-highest-weight-stab", "G2, p = 2, annihilator of a highest weight vector of L(omega_2)", "dim g_v >= 9, with equality",
            ["stabilizers", "g2"], Integer(9), 14, |_| {
                let m = irr("G2", 2, &[0, 1])?;
                let top = m.highest_weight_vector().ok_or_else(|| Error::Consistency("no highest weight vector".into()))?;
                let mut v = vec![0; m.dim()];
                v[top] = 1;
                Ok(Integer(annihilator(&m, &v)?.dim as u64))
            }),
        case!("g2-char5-natural-stab", "G2, p = 5, generic stabilizer on L(omega_2)", "the generic stabilizer is SL3, of dimension 8",
            ["stabilizers", "g2"], Integer(8), 14, |seed| generic(&irr("G2", 5, &[0, 1])?, seed)),
        case!("g2-char7-natural-stab", "G2, p = 7, generic stabilizer on L(omega_2)", "the generic stabilizer is SL3, of dimension 8",
            ["stabilizers", "g2"], Integer(8), 14, |seed| generic(&irr("G2", 7, &[0, 1])?, seed)),
        case!("g2-char2-root-element-fixed-space", "G2, p = 2, fixed space of x(1) for the short simple root on the Weyl module",
            "the reduced Weyl module V(omega_2) has a 4-dimensional fixed space under a short root element",
            ["stabilizers", "g2"], Integer(4), 7, |_| {
                let la = alg("G2", 2)?;
                let weyl = Arc::new(WeylModule::new(la.chevalley_arc(), &Weight(vec![0, 1]), DEFAULT_DIMENSION_CAP)?);
                let v = weyl.reduce(&la)?;
                let g = v.group_element_matrix(&[0, 1], 1)?;
                Ok(Integer(fixed_space_of_matrix(&v, &g)? as u64))
            }),
        case!("a6-char2-wedge3-stab", "SL7, p = 2, generic stabilizer on the third exterior power", "dim g_v = 14",
            ["stabilizers", "wedge3"], Integer(14), 48, |seed| wedge3("A6", 2, seed)),
        case!("a6-char3-wedge3-stab", "SL7, p = 3, generic stabilizer on the third exterior power", "dim g_v = 14",
            ["stabilizers", "wedge3"], Integer(14), 48, |seed| wedge3("A6", 3, seed)),
        case!("a6-char7-wedge3-stab", "SL7, p = 7, generic stabilizer on the third exterior power", "dim g_v = 14",
            ["stabilizers", "wedge3"], Integer(14), 48, |seed| wedge3("A6", 7, seed)),
        case!("a7-char3-wedge3-stab", "SL8, p = 3, generic stabilizer on the third exterior power", "dim g_v <= 8, with equality",
            ["stabilizers", "wedge3"], Integer(8), 63, |seed| wedge3("A7", 3, seed)),
        case!("a7-char5-wedge3-stab", "SL8, p = 5, generic stabilizer on the third exterior power", "dim g_v <= 8, with equality",
            ["stabilizers", "wedge3"], Integer(8), 63, |seed| wedge3("A7", 5, seed)),
        case!("f4-char2-natural-stab", "F4, p = 2, generic stabilizer on L(omega_4)", "the generic stabilizer in g has dimension 28",
            ["stabilizers", "f4"], Integer(28), 52, |seed| generic(&irr("F4", 2, &[0, 0, 0, 1])?, seed)),
        case!("f4-char3-natural-stab", "F4, p = 3, generic stabilizer on L(omega_4)", "the generic stabilizer in g has dimension 28",
            ["stabilizers", "f4"], Integer(28), 52, |seed| generic(&irr("F4", 3, &[0, 0, 0, 1])?, seed)),
        case!("a1-cubic-char5-stab", "SL2, p = 5, generic stabilizer on binary cubics", "g_v = 0 for generic v",
            ["stabilizers", "binary-forms"], Integer(0), 4, |seed| generic(&symmetric_power(&natural("A1", 5)?, 3, DEFAULT_DIMENSION_CAP)?, seed)),
        case!("a1-char3-twisted-sum-stab", "SL2, p = 3, generic stabilizer on L(1) plus L(3)", "the Frobenius twist adds nothing: g_v is the Lie algebra of a unipotent subgroup",
            ["stabilizers", "binary-forms"], Integer(1), 4, |seed| {
                let nat = natural("A1", 3)?;
                generic(&direct_sum(&nat, &frobenius_twist(&nat, 3))?, seed)
            }),
        case!("a3-char3-wedge2-four-copies-stab", "SL4, p = 3, generic stabilizer on four copies of the second exterior power", "the generic stabilizer has Lie algebra of dimension 1",
            ["stabilizers", "sl4"], Integer(1), 24, |seed| {
                let la = alg("A3", 3)?;
                let w2 = exterior_power(&natural("A3", 3)?, 2, DEFAULT_DIMENSION_CAP)?;
                generic(&tensor(&w2, &trivial_module(&la, 4), LieAction::LeftOnly)?, seed)
            }),

        // infinitesimal stabilizer lattices
        case!("b2-char5-lattice-quotient", "Spin5, p = 5, L(omega_1 + omega_2): weight lattice modulo the weights of V^h",
            "V^h has weights 2 omega_1 - omega_2, -omega_1 + 3 omega_2 and their negatives; the quotient is Z/5",
            ["lattice"], Integers(vec![5]), 16, |_| {
                fixed_weight_quotient("B2", 5, &[1, 1], &[vec![1, 2]], &[vec![2, -1], vec![-1, 3]])
            }),
        case!("c4-char3-lattice-quotient", "Sp8, p = 3, L(omega_3): weight lattice modulo the weights of V^h",
            "V^h has four listed weights and their negatives; the quotient is Z/3 x Z/3",
            ["lattice"], Integers(vec![3, 3]), 40, |_| {
                fixed_weight_quotient(
                    "C4",
                    3,
                    &[0, 0, 1, 0],
                    &[vec![1, 0, 0, 1], vec![0, 1, 0, 1]],
                    &[vec![2, -1, -1, 1], vec![0, 0, 1, 0], vec![1, 1, 0, -1], vec![-1, 2, -2, 1]],
                )
            }),
        case!("sl4-tensor-lattice-p2-q4", "SL4, p = 2, q = 4: index of the lattice spanned by the weights", "the weights span a sublattice of index 4q",
            ["lattice", "sl4"], Integer(16), 16, |_| {
                let r = sl4_tensor_lattice(2, 2)?;
                let index = r.index.ok_or_else(|| Error::Consistency("sublattice has infinite index".into()))?;
                Ok(Integer(u64::try_from(index).map_err(|e| Error::Consistency(e.to_string()))?))
            }),
        case!("sl4-tensor-lattice-basis-p2-q4", "SL4, p = 2, q = 4: basis of the weight sublattice", "the sublattice has basis (q,1,1), (0,2,0), (0,0,2)",
            ["lattice", "sl4"], Boolean(true), 16, |_| Ok(Boolean(sl4_tensor_lattice(2, 2)?.matches_stated_basis))),

        // theta groups
        case!("vinberg-wedge4-e7-grading", "E7 graded by height mod 2", "g_0 = sl8 of dimension 63 and g_1 of dimension 70",
            ["vinberg"], Integers(vec![63, 70]), 133, |_| grading(ThetaCase::Wedge4E7)),
        case!("vinberg-wedge4-e8-grading", "E8 graded by height mod 2", "g_0 = so16 of dimension 120 and g_1 of dimension 128",
            ["vinberg"], Integers(vec![120, 128]), 248, |_| grading(ThetaCase::Wedge4E8)),
        case!("vinberg-wedge3-e8-grading", "E8 graded by height mod 3", "g_0 = sl9 of dimension 80 and g_1, g_2 of dimension 84",
            ["vinberg"], Integers(vec![80, 84, 84]), 248, |_| grading(ThetaCase::Wedge3E8)),
        case!("vinberg-wedge4-e7-pairing-kernel", "E7, p = 2: kernel of the pairing matrix", "the right kernel is spanned by the rows of the gamma matrix",
            ["vinberg"], Boolean(true), 133, |_| Ok(Boolean(pairing_kernel_check(ThetaCase::Wedge4E7)?.passed))),
        case!("vinberg-wedge4-e8-pairing-kernel", "E8, p = 2: kernel of the pairing matrix", "the right kernel is spanned by the rows of the gamma matrix",
            ["vinberg"], Boolean(true), 248, |_| Ok(Boolean(pairing_kernel_check(ThetaCase::Wedge4E8)?.passed))),
        case!("vinberg-wedge3-e8-pairing-kernel", "E8, p = 3: kernel of the pairing matrix", "the right kernel lies in the span of the toral elements",
            ["vinberg"], Boolean(true), 248, |_| Ok(Boolean(pairing_kernel_check(ThetaCase::Wedge3E8)?.passed))),
        case!("vinberg-wedge4-e7-h-structure", "E7: character group of H", "H is mu_2^3",
            ["vinberg"], Integers(vec![2, 2, 2]), 133, |_| Ok(Integers(h_structure(ThetaCase::Wedge4E7)?.divisors_u64()))),
        case!("vinberg-wedge4-e8-h-structure", "E8, mod 2: character group of H", "H is mu_2^4",
            ["vinberg"], Integers(vec![2, 2, 2, 2]), 248, |_| Ok(Integers(h_structure(ThetaCase::Wedge4E8)?.divisors_u64()))),
        case!("vinberg-wedge3-e8-h-structure", "E8, mod 3: character group of H", "H is mu_3^2",
            ["vinberg"], Integers(vec![3, 3]), 248, |_| Ok(Integers(h_structure(ThetaCase::Wedge3E8)?.divisors_u64()))),
        case!("vinberg-wedge4-e7-v1-stab", "E7, p = 2: annihilator in g_0 of a generic vector of V_1", "the annihilator is the span of the h_gamma, of dimension 3",
            ["vinberg"], Integer(3), 133, |seed| v1(ThetaCase::Wedge4E7, seed)),
        case!("vinberg-wedge4-e8-v1-stab", "E8, p = 2: annihilator in g_0 of a generic vector of V_1", "the annihilator is the span of the h_gamma, of dimension 4",
            ["vinberg"], Integer(4), 248, |seed| v1(ThetaCase::Wedge4E8, seed)),
        case!("vinberg-wedge3-e8-v1-stab", "E8, p = 3: annihilator in g_0 of a generic vector of V_1", "the annihilator is the span of the h_gamma, of dimension 2",
            ["vinberg"], Integer(2), 248, |seed| v1(ThetaCase::Wedge3E8, seed)),
        case!("vinberg-wedge4-e7-dimension-identity", "E7: dim V = dim G + dim V_1 - rank", "70 = 63 + 14 - 7",
            ["vinberg"], Boolean(true), 133, |_| dimension_identity(ThetaCase::Wedge4E7)),
        case!("vinberg-wedge4-e8-dimension-identity", "E8: dim V = dim G + dim V_1 - rank", "128 = 120 + 16 - 8",
            ["vinberg"], Boolean(true), 248, |_| dimension_identity(ThetaCase::Wedge4E8)),

        // invariant theory
        case!("s4-char2-invariance", "f_1, f_2, f_3 are S4-invariant over F_2", "f_1 = sum x_i, and f_2, f_3 are invariant as well",
            ["invariants"], Boolean(true), 3, |_| Ok(Boolean(s4_difference_invariants_char2().iter().all(is_invariant)))),
        case!("s4-char2-jacobian", "Jacobian determinant of f_1, f_2, f_3 over F_2", "the determinant is nonzero, with the term y1^5 y2^2 y3",
            ["invariants"], Boolean(true), 3, |_| {
                let r = jacobian_criterion(&s4_difference_invariants_char2(), 2, 24)?;
                Ok(Boolean(r.holds && !r.determinant.coefficient(&[5, 2, 1]).is_zero()))
            }),
        case!("s4-char2-degree-product", "product of the degrees of f_1, f_2, f_3", "the product of the degrees is |S4| = 24",
            ["invariants"], Integer(24), 3, |_| Ok(Integer(jacobian_criterion(&s4_difference_invariants_char2(), 2, 24)?.degree_product))),
        case!("charpoly-invariance-n3-p5", "SL3, p = 5: characteristic polynomial under conjugation", "the coefficients of the characteristic polynomial are invariant",
            ["invariants"], Boolean(true), 9, |seed| charpoly(3, 5, seed)),
        case!("charpoly-invariance-n4-p2", "SL4, p = 2: characteristic polynomial under conjugation", "the coefficients of the characteristic polynomial are invariant",
            ["invariants"], Boolean(true), 16, |seed| charpoly(4, 2, seed)),

        // regular orbits of orthogonal groups
        case!("symmetric-nilpotent-n3-p5", "n = 3, p = 5: skew centralizer of a symmetric regular nilpotent", "g_A = 0",
            ["regular-orbit"], Boolean(true), 9, |seed| symmetric_nilpotent(3, 5, seed)),
        case!("symmetric-nilpotent-n5-p7", "n = 5, p = 7: skew centralizer of a symmetric regular nilpotent", "g_A = 0",
            ["regular-orbit"], Boolean(true), 25, |seed| symmetric_nilpotent(5, 7, seed)),
        case!("symmetric-nilpotent-n6-p3", "n = 6, p = 3: skew centralizer and scalar commutators", "g_A = 0, and no skew X has [X, A] a nonzero scalar",
            ["regular-orbit"], Boolean(true), 36, |seed| symmetric_nilpotent(6, 3, seed)),
    ]
}
