use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use modlie::chevalley::{ChevalleyAlgebra, LieAlgebraFp, Torus};
use modlie::exactlin::{smith_normal_form, Elem, IntMatrix};
use modlie::highest_weight::{
    direct_sum, exterior_power, frobenius_twist, irreducible, symmetric_power, tensor, trivial_module, HwModule, LieAction,
    RadicalQuotient, WeylModule, DEFAULT_DIMENSION_CAP,
};
use modlie::rootsys::{RootSystem, Weight};
use modlie::stabilizers::{annihilator, orbit_map_matrix};

const TYPES: [&str; 10] = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6"];
const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn algebra(t: &str, p: u64, torus: Torus) -> Arc<LieAlgebraFp> {
    static CACHE: OnceLock<Mutex<HashMap<(String, u64, bool), Arc<LieAlgebraFp>>>> = OnceLock::new();
    let key = (t.to_string(), p, torus == Torus::Coroots);
    let mut cache = CACHE.get_or_init(Default::default).lock().unwrap();
    cache
        .entry(key)
        .or_insert_with(|| {
            let rs = RootSystem::from_type(t.parse().unwrap()).unwrap();
            Arc::new(ChevalleyAlgebra::new(Arc::new(rs)).unwrap().specialize_with(p, torus).unwrap())
        })
        .clone()
}

fn natural(t: &str, p: u64) -> HwModule {
    let la = algebra(t, p, Torus::Coroots);
    let mut lambda = vec![0; la.rank()];
    lambda[0] = 1;
    irreducible(&la, &Weight(lambda)).unwrap()
}

fn modules() -> &'static Vec<HwModule> {
    static MODULES: OnceLock<Vec<HwModule>> = OnceLock::new();
    MODULES.get_or_init(|| {
        let irr = |t: &str, p: u64, l: &[i64]| irreducible(&algebra(t, p, Torus::Coroots), &Weight(l.to_vec())).unwrap();
        let a1 = natural("A1", 3);
        let a3 = algebra("A3", 3, Torus::Coroots);
        vec![
            irr("G2", 2, &[0, 1]),
            irr("G2", 3, &[1, 0]),
            irr("B2", 5, &[1, 1]),
            irr("A3", 2, &[2, 1, 0]),
            irr("C3", 3, &[0, 1, 0]),
            irr("F4", 3, &[0, 0, 0, 1]),
            exterior_power(&natural("A5", 3), 3, DEFAULT_DIMENSION_CAP).unwrap(),
            symmetric_power(&natural("A1", 5), 3, DEFAULT_DIMENSION_CAP).unwrap(),
            direct_sum(&a1, &frobenius_twist(&a1, 3)).unwrap(),
            tensor(&exterior_power(&natural("A3", 3), 2, DEFAULT_DIMENSION_CAP).unwrap(), &trivial_module(&a3, 4), LieAction::LeftOnly)
                .unwrap(),
            tensor(&natural("A2", 5), &natural("A2", 5), LieAction::Both).unwrap(),
        ]
    })
}

fn random_vec(la: &LieAlgebraFp, n: usize, rng: &mut ChaCha8Rng) -> Vec<Elem> {
    (0..n).map(|_| la.field().random(rng)).collect()
}

fn weyl_module(t: &str, lambda: &[i64]) -> WeylModule {
    let rs = RootSystem::from_type(t.parse().unwrap()).unwrap();
    let ca = Arc::new(ChevalleyAlgebra::new(Arc::new(rs)).unwrap());
    WeylModule::new(ca, &Weight(lambda.to_vec()), DEFAULT_DIMENSION_CAP).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jacobi_identity(t in 0..TYPES.len(), p in 0..PRIMES.len(), adjoint in any::<bool>(), seed in any::<u64>()) {
        let torus = if adjoint { Torus::Coweights } else { Torus::Coroots };
        let la = algebra(TYPES[t], PRIMES[p], torus);
        let f = la.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y, z) = (random_vec(&la, la.dim(), &mut rng), random_vec(&la, la.dim(), &mut rng), random_vec(&la, la.dim(), &mut rng));
        let a = la.bracket(&x, &la.bracket(&y, &z));
        let b = la.bracket(&y, &la.bracket(&z, &x));
        let c = la.bracket(&z, &la.bracket(&x, &y));
        for i in 0..la.dim() {
            prop_assert_eq!(f.add(f.add(a[i], b[i]), c[i]), 0);
        }
        // antisymmetry
        let xy = la.bracket(&x, &y);
        let yx = la.bracket(&y, &x);
        prop_assert!(xy.iter().zip(&yx).all(|(u, v)| f.add(*u, *v) == 0));
    }

    #[test]
    fn representation_property(m in 0..11usize, seed in any::<u64>()) {
        let m = &modules()[m];
        let la = m.algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (random_vec(la, la.dim(), &mut rng), random_vec(la, la.dim(), &mut rng));
        let (ax, ay) = (m.act(&x), m.act(&y));
        let commutator = ax.mul(&ay).unwrap().sub(&ay.mul(&ax).unwrap());
        prop_assert_eq!(m.act(&la.bracket(&x, &y)), commutator);
    }

    #[test]
    fn annihilator_plus_orbit_rank(m in 0..11usize, seed in any::<u64>()) {
        let m = &modules()[m];
        let la = m.algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_vec(la, m.dim(), &mut rng);
        let ann = annihilator(m, &v).unwrap();
        prop_assert_eq!(ann.dim + ann.orbit_rank, la.dim());
        prop_assert_eq!(orbit_map_matrix(m, la.field(), &v).unwrap().rank(), ann.orbit_rank);
        // every basis element of the annihilator kills v
        for r in 0..ann.basis.rows() {
            prop_assert!(m.act(ann.basis.row(r)).mul_vec(&v).iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn gram_contravariance(case in 0..3usize, a in 0..3i64, b in 0..3i64) {
        let (t, lambda) = match case {
            0 => ("A2", vec![a, b]),
            1 => ("B2", vec![a, b.min(1)]),
            _ => ("G2", vec![a.min(1), b]),
        };
        let w = weyl_module(t, &lambda);
        w.check_contravariance().unwrap();
        let mut gram = IntMatrix::zeros(w.dim(), w.dim());
        for (s, space) in w.spaces().iter().enumerate() {
            let g = &w.gram_tower().matrices[s];
            prop_assert!(g.is_symmetric());
            for i in 0..space.dim {
                for j in 0..space.dim {
                    gram.set(space.offset + i, space.offset + j, g.get(i, j).clone());
                }
            }
        }
        let ca = w.chevalley().clone();
        for r in 0..ca.num_roots() {
            let lhs = w.root_matrix(r).transpose().mul(&gram).unwrap();
            let rhs = gram.mul(&w.root_matrix(ca.negative(r))).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn steinberg_multiplicativity(case in 0..3usize, l0 in prop::collection::vec(0..2i64, 2), l1 in 0..3usize) {
        let (t, p) = [("A2", 2u64), ("B2", 3), ("G2", 2)][case];
        // the Weyl module of G2 at 2 omega_1 is too large to build
        let highs = if t == "G2" { vec![vec![0, 0], vec![0, 1]] } else { vec![vec![0, 0], vec![1, 0], vec![0, 1]] };
        let high = highs[l1 % highs.len()].clone();
        let low = l0;
        let la = algebra(t, p, Torus::Coroots);
        let q = p as i64;
        let combined = Weight(low.iter().zip(&high).map(|(a, b)| a + q * b).collect());
        let weyl = WeylModule::new(la.chevalley_arc(), &combined, 1000).unwrap();
        let direct = RadicalQuotient::compute(&weyl, &la).unwrap().dim;
        let da = irreducible(&la, &Weight(low.clone())).unwrap().dim();
        let db = irreducible(&la, &Weight(high.clone())).unwrap().dim();
        prop_assert_eq!(direct, da * db);
    }

    #[test]
    fn smith_form_reconstructs(rows in 1..7usize, cols in 1..7usize, entries in prop::collection::vec(-20i64..=20, 36)) {
        let data: Vec<Vec<i64>> = (0..rows).map(|r| entries[r * cols..(r + 1) * cols].to_vec()).collect();
        let a = IntMatrix::from_i64_rows_with_cols(&data, cols);
        let s = smith_normal_form(&a);
        prop_assert!(s.u.is_unimodular());
        prop_assert!(s.v.is_unimodular());
        prop_assert!(s.d.is_diagonal());
        prop_assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.d.clone());
        let divs = s.divisors();
        prop_assert_eq!(divs.len(), a.rank_q());
        for w in divs.windows(2) {
            prop_assert!(w[0].is_positive() && (&w[1] % &w[0]).is_zero());
        }
        if rows == cols {
            let prod = divs.iter().fold(BigInt::one(), |acc, d| acc * d);
            let det = a.det().unwrap().abs();
            prop_assert_eq!(if divs.len() == rows { prod } else { BigInt::zero() }, det);
        }
    }
}
