//! One line per acceptance criterion. Every expected value is written out here rather than
//! read from the verification catalog.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use modlie::chevalley::{reduced_algebra, ChevalleyAlgebra, LieAlgebraFp};
use modlie::exactlin::{smith_normal_form, IntMatrix};
use modlie::highest_weight::{
    direct_sum, exterior_power, frobenius_twist, irreducible, symmetric_power, tensor, trivial_module, HwModule, LieAction,
    RadicalQuotient, WeylModule, DEFAULT_DIMENSION_CAP,
};
use modlie::invarpoly::{charpoly_invariance_check, is_invariant, jacobian_criterion, s4_difference_invariants_char2};
use modlie::rootsys::{CartanType, RootSystem, Weight};
use modlie::stabilizers::{fixed_space_of_subalgebra, generic_annihilator_dim, symmetric_nilpotent_check};
use modlie::vinberg::{h_structure, pairing_kernel_check, sl4_tensor_lattice, sl4_tensor_weights, theta_grading, v1_generic_stabilizer, ThetaCase};

const SEED: u64 = 42;
const TRIALS: usize = 20;
const EXT: usize = 3;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ct(s: &str) -> CartanType {
    s.parse().unwrap()
}

fn alg(t: &str, p: u64) -> Result<Arc<LieAlgebraFp>, String> {
    reduced_algebra(ct(t), p).map_err(err)
}

fn irr(t: &str, p: u64, lambda: &[i64]) -> Result<HwModule, String> {
    irreducible(&alg(t, p)?, &Weight(lambda.to_vec())).map_err(err)
}

fn natural(t: &str, p: u64) -> Result<HwModule, String> {
    let la = alg(t, p)?;
    let mut lambda = vec![0; la.rank()];
    lambda[0] = 1;
    irreducible(&la, &Weight(lambda)).map_err(err)
}

fn generic_dim(m: &HwModule) -> Result<usize, String> {
    Ok(generic_annihilator_dim(m, TRIALS, EXT, SEED).map_err(err)?.min_dim_observed)
}

/// Roots by closing the simple roots under simple reflections, using only the Cartan matrix.
fn roots_by_reflection(cartan: &[Vec<i64>]) -> usize {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    while let Some(r) = frontier.pop() {
        if !seen.insert(r.clone()) {
            continue;
        }
        for i in 0..n {
            // <r, alpha_i^vee> = sum_j r_j cartan[i][j]
            let c: i64 = (0..n).map(|j| r[j] * cartan[i][j]).sum();
            let mut s = r.clone();
            s[i] -= c;
            if !seen.contains(&s) {
                frontier.push(s);
            }
        }
    }
    seen.len()
}

fn criterion_1() -> Check {
    let mut parts = Vec::new();
    for (t, roots, dim) in [("E8", 240, 248), ("E7", 126, 133), ("F4", 48, 52), ("G2", 12, 14)] {
        let rs = RootSystem::from_type(ct(t)).map_err(err)?;
        ensure(rs.num_roots() == roots, format!("{t}: {} roots", rs.num_roots()))?;
        ensure(roots_by_reflection(&rs.cartan) == roots, format!("{t}: reflection closure disagrees"))?;
        ensure(rs.dim_algebra() == dim && dim == roots + rs.rank(), format!("{t}: dim {}", rs.dim_algebra()))?;
        let ca = ChevalleyAlgebra::new(Arc::new(rs)).map_err(err)?;
        ensure(ca.dim() == dim, format!("{t}: algebra dim {}", ca.dim()))?;
        parts.push(format!("{t}={roots}"));
    }
    Ok(parts.join(" "))
}

fn criterion_2() -> Check {
    let weyl_f4 = WeylModule::new(
        Arc::new(ChevalleyAlgebra::new(Arc::new(RootSystem::from_type(ct("F4")).map_err(err)?)).map_err(err)?),
        &Weight(vec![0, 0, 0, 1]),
        DEFAULT_DIMENSION_CAP,
    )
    .map_err(err)?;
    let cases: Vec<(&str, usize, Box<dyn Fn() -> Result<usize, String>>)> = vec![
        ("G2 p=2 L(w2)", 6, Box::new(|| Ok(irr("G2", 2, &[0, 1])?.dim()))),
        ("F4 V(w4)", 26, Box::new(move || Ok(weyl_f4.dim()))),
        ("F4 p=3 L(w4)", 25, Box::new(|| Ok(irr("F4", 3, &[0, 0, 0, 1])?.dim()))),
        ("C5 p=2 L(w3)", 100, Box::new(|| Ok(irr("C5", 2, &[0, 0, 1, 0, 0])?.dim()))),
        ("C4 p=5 L(w3)", 48, Box::new(|| Ok(irr("C4", 5, &[0, 0, 1, 0])?.dim()))),
        ("C4 p=7 L(w3)", 48, Box::new(|| Ok(irr("C4", 7, &[0, 0, 1, 0])?.dim()))),
        ("S^4 k^3", 15, Box::new(|| Ok(symmetric_power(&natural("A2", 7)?, 4, DEFAULT_DIMENSION_CAP).map_err(err)?.dim()))),
        ("A3 p=2 L(2w1+w2)", 24, Box::new(|| Ok(irr("A3", 2, &[2, 1, 0])?.dim()))),
        ("A3 p=3 L(3w1+w2)", 24, Box::new(|| Ok(irr("A3", 3, &[3, 1, 0])?.dim()))),
        ("B7 p=3 spin", 128, Box::new(|| Ok(irr("B7", 3, &[0, 0, 0, 0, 0, 0, 1])?.dim()))),
    ];
    for (name, want, f) in &cases {
        let got = f()?;
        ensure(got == *want, format!("{name}: dim {got}, expected {want}"))?;
    }
    Ok(format!("{} module dimensions", cases.len()))
}

fn criterion_3() -> Check {
    let mut cases: Vec<(String, usize, Box<dyn Fn() -> Result<HwModule, String>>)> = vec![
        ("G2 p=2 L(w2)".into(), 9, Box::new(|| irr("G2", 2, &[0, 1]))),
        ("G2 p=5 L(w2)".into(), 8, Box::new(|| irr("G2", 5, &[0, 1]))),
        ("G2 p=7 L(w2)".into(), 8, Box::new(|| irr("G2", 7, &[0, 1]))),
        ("F4 p=2 L(w4)".into(), 28, Box::new(|| irr("F4", 2, &[0, 0, 0, 1]))),
        ("F4 p=3 L(w4)".into(), 28, Box::new(|| irr("F4", 3, &[0, 0, 0, 1]))),
        ("A1 p=5 S^3".into(), 0, Box::new(|| symmetric_power(&natural("A1", 5)?, 3, DEFAULT_DIMENSION_CAP).map_err(err))),
        (
            "A1 p=3 L(1)+L(1)^[3]".into(),
            1,
            Box::new(|| {
                let nat = natural("A1", 3)?;
                direct_sum(&nat, &frobenius_twist(&nat, 3)).map_err(err)
            }),
        ),
        (
            "A3 p=3 wedge2 x k^4".into(),
            1,
            Box::new(|| {
                let la = alg("A3", 3)?;
                let w2 = exterior_power(&natural("A3", 3)?, 2, DEFAULT_DIMENSION_CAP).map_err(err)?;
                tensor(&w2, &trivial_module(&la, 4), LieAction::LeftOnly).map_err(err)
            }),
        ),
    ];
    for (t, p, want) in [("A6", 2, 14), ("A6", 3, 14), ("A6", 7, 14), ("A7", 3, 8), ("A7", 5, 8)] {
        cases.push((
            format!("{t} p={p} wedge3"),
            want,
            Box::new(move || exterior_power(&natural(t, p)?, 3, DEFAULT_DIMENSION_CAP).map_err(err)),
        ));
    }
    for (name, want, build) in &cases {
        let got = generic_dim(&build()?)?;
        ensure(got == *want, format!("{name}: generic stabilizer dim {got}, expected {want}"))?;
    }
    Ok(format!("{} generic stabilizers", cases.len()))
}

fn lattice_case(t: &str, p: u64, lambda: &[i64], combos: &[Vec<i64>], listed: &[Vec<i64>], want: &[u64]) -> Check {
    let m = irr(t, p, lambda)?;
    let la = m.algebra().clone();
    let h = la.toral_subalgebra(combos).map_err(err)?;
    let fs = fixed_space_of_subalgebra(&m, &h).map_err(err)?;
    let expected: BTreeSet<Weight> =
        listed.iter().flat_map(|w| [Weight(w.clone()), Weight(w.iter().map(|x| -x).collect())]).collect();
    let got: BTreeSet<Weight> = fs.weights.keys().cloned().collect();
    ensure(got == expected, format!("{t}: weights of V^h are {got:?}"))?;
    ensure(
        la.dim() - la.rank() == m.dim() - fs.dim,
        format!("{t}: dim G - rank = {} but dim V - dim V^h = {}", la.dim() - la.rank(), m.dim() - fs.dim),
    )?;
    // independent route: Smith form of the weight rows directly
    let rows: Vec<Vec<i64>> = got.iter().map(|w| w.0.clone()).collect();
    let snf = smith_normal_form(&IntMatrix::from_i64_rows(&rows));
    let mut divisors: Vec<u64> = snf.divisors().iter().filter(|d| **d != BigInt::from(1)).map(|d| u64::try_from(d).unwrap()).collect();
    divisors.sort_unstable();
    ensure(snf.divisors().len() == la.rank(), format!("{t}: weights have rank {}", snf.divisors().len()))?;
    ensure(divisors == want, format!("{t}: quotient {divisors:?}"))?;
    let q = fs.weight_quotient(la.rank()).map_err(err)?;
    ensure(q.divisors_u64() == want && q.free_rank == 0, format!("{t}: weight_quotient gives {q}"))?;
    Ok(format!("{t}: {q}"))
}

fn criterion_4() -> Check {
    let a = lattice_case("B2", 5, &[1, 1], &[vec![1, 2]], &[vec![2, -1], vec![-1, 3]], &[5])?;
    let b = lattice_case(
        "C4",
        3,
        &[0, 0, 1, 0],
        &[vec![1, 0, 0, 1], vec![0, 1, 0, 1]],
        &[vec![2, -1, -1, 1], vec![0, 0, 1, 0], vec![1, 1, 0, -1], vec![-1, 2, -2, 1]],
        &[3, 3],
    )?;
    Ok(format!("{a}; {b}"))
}

fn criterion_5() -> Check {
    let expect = [
        (ThetaCase::Wedge4E7, vec![63, 70], vec![2, 2, 2], 3),
        (ThetaCase::Wedge4E8, vec![120, 128], vec![2, 2, 2, 2], 4),
        (ThetaCase::Wedge3E8, vec![80, 84, 84], vec![3, 3], 2),
    ];
    for (case, dims, h, stab) in expect {
        let id = case.id();
        let g = theta_grading(case).map_err(err)?;
        ensure(g.dims == dims, format!("{id}: grading {:?}", g.dims))?;
        let k = pairing_kernel_check(case).map_err(err)?;
        ensure(k.passed, format!("{id}: pairing kernel check failed"))?;
        if case != ThetaCase::Wedge3E8 {
            ensure(k.kernel_equals_gamma_span, format!("{id}: kernel is not the span of the gamma rows"))?;
        }
        let hs = h_structure(case).map_err(err)?;
        ensure(hs.divisors_u64() == h, format!("{id}: H character group {hs}"))?;
        let v = v1_generic_stabilizer(case, 5, SEED, 0).map_err(err)?;
        ensure(v.v1_stabilizer_dim == stab && v.annihilator_is_h, format!("{id}: V1 stabilizer dim {}", v.v1_stabilizer_dim))?;
    }
    for (case, dv, dg, dv1, rank) in [(ThetaCase::Wedge4E7, 70, 63, 14, 7), (ThetaCase::Wedge4E8, 128, 120, 16, 8)] {
        let g = theta_grading(case).map_err(err)?;
        ensure(g.dims[1] == dv && g.dims[0] == dg, "grading")?;
        ensure(case.v1_roots().len() == dv1 && case.rank() == rank, format!("{}: V1 has {} roots", case.id(), case.v1_roots().len()))?;
        ensure(dv == dg + dv1 - rank, "dimension identity")?;
    }
    Ok("gradings, kernels, H, V1 stabilizers, identities".into())
}

fn criterion_6() -> Check {
    let r = sl4_tensor_lattice(2, 2).map_err(err)?;
    ensure(r.q == 4, format!("q = {}", r.q))?;
    ensure(r.index == Some(BigInt::from(16)), format!("index {:?}", r.index))?;
    ensure(r.matches_stated_basis, format!("basis {:?}", r.basis))?;
    // independent route: the index is the gcd of the 3x3 minors of the weight matrix
    let weights = sl4_tensor_weights(4);
    let det3 = |a: &[i64], b: &[i64], c: &[i64]| {
        a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
    };
    let mut g = 0i64;
    for (i, a) in weights.iter().enumerate() {
        for (j, b) in weights.iter().enumerate().skip(i + 1) {
            for c in &weights[j + 1..] {
                g = num_integer::gcd(g, det3(a, b, c));
            }
        }
    }
    ensure(g == 16, format!("gcd of minors {g}"))?;
    for w in &weights {
        let (a, b, c) = (w[0], w[1], w[2]);
        let in_span = a.rem_euclid(4) == 0 && (b - a / 4).rem_euclid(2) == 0 && (c - a / 4).rem_euclid(2) == 0;
        ensure(in_span, format!("weight {w:?} outside the span of (4,1,1), (0,2,0), (0,0,2)"))?;
    }
    Ok(format!("index 16, {} weights", weights.len()))
}

fn criterion_7() -> Check {
    let fs = s4_difference_invariants_char2();
    ensure(fs.iter().all(is_invariant), "f1, f2, f3 not all invariant")?;
    let j = jacobian_criterion(&fs, 2, 24).map_err(err)?;
    ensure(j.holds && !j.determinant.is_zero(), "Jacobian vanishes")?;
    ensure(!j.determinant.coefficient(&[5, 2, 1]).is_zero(), "no y1^5 y2^2 y3 term")?;
    ensure(j.degree_product == 24, format!("degree product {}", j.degree_product))?;
    for (n, p) in [(3, 5), (4, 2)] {
        let r = charpoly_invariance_check(n, p, 10, SEED).map_err(err)?;
        ensure(r.passed && r.mismatches == 0, format!("charpoly ({n},{p}): {} mismatches", r.mismatches))?;
    }
    Ok(format!("determinant {}", j.determinant))
}

fn criterion_8() -> Check {
    let mut failures = Vec::new();
    for (n, p) in [(3, 5), (5, 7), (6, 3)] {
        let r = symmetric_nilpotent_check(n, p, SEED).map_err(err)?;
        ensure(r.skew_centralizer_dim == 0, format!("({n},{p}): skew centralizer dim {}", r.skew_centralizer_dim))?;
        if !r.passed {
            failures.push(format!("({n},{p}): a skew X with [X, A] = I exists"));
        }
    }
    if failures.is_empty() {
        Ok("g_A = 0 in all cases".into())
    } else {
        Err(failures.join("; "))
    }
}

fn random_int_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let (r, c) = (rng.gen_range(1..6), rng.gen_range(1..6));
    let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect()).collect();
    IntMatrix::from_i64_rows_with_cols(&rows, c)
}

fn criterion_9() -> Check {
    let mut algebras = 0;
    for t in ["A2", "B2", "G2", "C3", "F4", "E6"] {
        for p in [2, 3, 5] {
            alg(t, p)?.check_jacobi().map_err(|e| format!("{t} p={p}: {e}"))?;
            algebras += 1;
        }
    }
    let modules: Vec<HwModule> = vec![
        irr("G2", 2, &[0, 1])?,
        irr("B2", 5, &[1, 1])?,
        irr("A3", 2, &[2, 1, 0])?,
        exterior_power(&natural("A5", 3)?, 3, DEFAULT_DIMENSION_CAP).map_err(err)?,
        symmetric_power(&natural("A1", 5)?, 3, DEFAULT_DIMENSION_CAP).map_err(err)?,
    ];
    for m in &modules {
        m.check_representation().map_err(|e| format!("{}: {e}", m.label()))?;
    }

    // contravariance, assembled from the full root matrices and block-diagonal Gram matrix
    for (t, lambda) in [("G2", vec![0, 1]), ("B2", vec![1, 1]), ("A2", vec![2, 1])] {
        let ca = Arc::new(ChevalleyAlgebra::new(Arc::new(RootSystem::from_type(ct(t)).map_err(err)?)).map_err(err)?);
        let w = WeylModule::new(ca.clone(), &Weight(lambda), DEFAULT_DIMENSION_CAP).map_err(err)?;
        let mut gram = IntMatrix::zeros(w.dim(), w.dim());
        for (s, space) in w.spaces().iter().enumerate() {
            let g = &w.gram_tower().matrices[s];
            for i in 0..space.dim {
                for j in 0..space.dim {
                    gram.set(space.offset + i, space.offset + j, g.get(i, j).clone());
                }
            }
        }
        for r in 0..ca.num_roots() {
            let e = w.root_matrix(r);
            let f = w.root_matrix(ca.negative(r));
            let lhs = e.transpose().mul(&gram).map_err(err)?;
            let rhs = gram.mul(&f).map_err(err)?;
            ensure(lhs == rhs, format!("{t}: Gram matrix not contravariant for root {r}"))?;
        }
    }

    // dim L(a + q b) = dim L(a) dim L(b), against the radical quotient of the full Weyl module
    for (t, p, low, high) in [("A2", 2, vec![1, 0], vec![0, 1]), ("G2", 3, vec![0, 1], vec![0, 1]), ("B2", 3, vec![1, 0], vec![0, 1])] {
        let la = alg(t, p)?;
        let q = p as i64;
        let combined = Weight(low.iter().zip(&high).map(|(a, b)| a + q * b).collect());
        let weyl = WeylModule::new(la.chevalley_arc(), &combined, DEFAULT_DIMENSION_CAP).map_err(err)?;
        let direct = RadicalQuotient::compute(&weyl, &la).map_err(err)?.dim;
        let (da, db) = (irr(t, p, &low)?.dim(), irr(t, p, &high)?.dim());
        ensure(direct == da * db, format!("{t} p={p}: {direct} != {da} * {db}"))?;
        ensure(irreducible(&la, &combined).map_err(err)?.dim() == direct, format!("{t} p={p}: factorised module disagrees"))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..200 {
        let a = random_int_matrix(&mut rng);
        let s = smith_normal_form(&a);
        ensure(s.u.is_unimodular() && s.v.is_unimodular(), "SNF transforms not unimodular")?;
        ensure(s.u.mul(&a).and_then(|ua| ua.mul(&s.v)).map_err(err)? == s.d, "U A V != D")?;
        ensure(s.d.is_diagonal(), "D not diagonal")?;
    }
    Ok(format!("{algebras} algebras, {} modules, 3 Gram, 3 Steinberg, 200 SNF", modules.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(u32, fn() -> Check); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = BTreeMap::new();
    for (n, f) in criteria {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {n}: PASS ({secs:.1}s) {detail}"),
            Err(detail) => {
                println!("criterion {n}: FAIL ({secs:.1}s) {detail}");
                failed.insert(n, detail);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
