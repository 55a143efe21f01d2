//! Acceptance run: one PASS/FAIL line per criterion, each under a pinned time bound.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::time::{Duration, Instant};

use homlie::algebra::{
    builtin, killing_form, parse_algebra_name, sl2_standard_triple, AlgebraSpec, BilinearForm,
    LinearMap,
};
use homlie::constructions::{
    grading_from_labels, km_window, random_anticommutative, random_commutative, tensor_lie,
    Cocycle2, PartialAlgebra,
};
use homlie::exactlin::scalar::{frac, int, unit_vec};
use homlie::exactlin::{Matrix, Scalar, Subspace};
use homlie::homsolver::{
    assemble_tensor_formula, central_ext_homlie_decomposed, current_formula,
    is_multiplicative_partial, seq_uv, solve_bilinear, solve_structures, solve_window,
    BilinearKind, StructureKind,
};
use homlie::jordan::{closure_check, counterexample_suite};
use homlie::modstruct::sl2_decompose;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SECOND: Duration = Duration::from_secs(1);
const MINUTE: Duration = Duration::from_secs(60);

/// Criteria whose stated expectation contradicts an exact computation.
/// Their lines print FAIL; the test checks that the computed values stay as analysed.
const UNATTAINABLE: &[u32] = &[4];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn homlie(alg: &AlgebraSpec) -> Subspace {
    solve_structures(alg, StructureKind::HomLie).unwrap().space
}

fn c1() -> Outcome {
    let d = homlie(&parse_algebra_name("sl2").unwrap()).dim();
    outcome(d == 6, format!("dim HomLie(sl2) = {d}"))
}

fn c2() -> Outcome {
    let sl2 = parse_algebra_name("sl2").unwrap();
    let (e, h, f) = sl2_standard_triple();
    let d = sl2_decompose(&sl2, [&e, &h, &f], &homlie(&sl2)).unwrap();
    outcome(
        d.irreducibles == [5, 1],
        format!("irreducibles {:?}", d.irreducibles),
    )
}

fn c3(name: &str) -> Outcome {
    let alg = parse_algebra_name(name).unwrap();
    let n = alg.dim();
    let s = homlie(&alg);
    let id = Subspace::span(n * n, &[LinearMap::identity(n).to_vector()]).unwrap();
    outcome(
        s == id,
        format!("{name}: dim {}, {} unknowns", s.dim(), n * n),
    )
}

fn c4() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, want) in [("sl2", 3), ("sl3", 8)] {
        let alg = parse_algebra_name(name).unwrap();
        let z = solve_bilinear(&alg, BilinearKind::AsymCocycle).unwrap();
        let b = solve_bilinear(&alg, BilinearKind::Coboundary2).unwrap();
        let good = z == b && z.dim() == want;
        ok &= good;
        parts.push(format!(
            "{name}: dim Z² = {}, dim B² = {} ({})",
            z.dim(),
            b.dim(),
            if good { "ok" } else { "differs" }
        ));
    }
    if !ok {
        parts.push(
            "the cocycle expression is alternating, so on sl2 it imposes one equation".into(),
        );
    }
    outcome(ok, parts.join("; "))
}

fn c5() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for name in ["sl2", "heisenberg", "abelian2"] {
        let r = seq_uv(&parse_algebra_name(name).unwrap()).unwrap();
        ok &= r.u_injective && r.exact;
        parts.push(format!("{name}: im u = ker v of dim {}", r.image_u.dim()));
    }
    outcome(ok, parts.join("; "))
}

fn c6() -> Outcome {
    let mut ok = true;
    let mut worst = Duration::ZERO;
    let mut dims = Vec::new();
    for l in ["sl2", "nonabelian2", "heisenberg"] {
        for (a, p) in [
            ("trunc_poly", 2),
            ("trunc_poly", 3),
            ("cyclic_group_alg", 2),
        ] {
            let t = Instant::now();
            let la = parse_algebra_name(l).unwrap();
            let aa = builtin(a, &[p]).unwrap();
            let direct = homlie(&tensor_lie(&aa, &la).unwrap());
            let assembled = assemble_tensor_formula(&aa, &la).unwrap().sum;
            let current = current_formula(&la, &aa).unwrap().sum;
            ok &= direct.dim() == assembled.dim() && direct == assembled && direct == current;
            if l == "sl2" && a == "trunc_poly" && p == 2 {
                ok &= direct.dim() == 12;
            }
            worst = worst.max(t.elapsed());
            dims.push(direct.dim().to_string());
        }
    }
    ok &= worst < 5 * MINUTE;
    outcome(
        ok,
        format!("grid dims [{}], slowest cell {worst:.2?}", dims.join(", ")),
    )
}

fn c7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut ok, mut non_assoc, mut non_lie) = (true, 0, 0);
    let pairs = 16;
    for _ in 0..pairs {
        let a = random_commutative(&mut rng, 3).unwrap();
        let b = random_anticommutative(&mut rng, 3).unwrap();
        non_assoc += usize::from(a.name() == "randcomm");
        non_lie += usize::from(!b.is_lie());
        let assembled = assemble_tensor_formula(&a, &b).unwrap().sum;
        ok &= assembled
            .is_subspace_of(&homlie(&tensor_lie(&a, &b).unwrap()))
            .unwrap();
    }
    ok &= non_assoc > 0 && non_lie > 0;
    outcome(ok, format!("{pairs} pairs, {non_assoc} with a random commutative factor, {non_lie} with a non-Lie factor"))
}

fn c8() -> Outcome {
    let mut algs = common::builtins();
    algs.extend(common::random_lie_algebras(3));
    let mut ok = true;
    for alg in &algs {
        let cyc = solve_structures(alg, StructureKind::HomCycl).unwrap().space;
        let nil = solve_structures(alg, StructureKind::Hom2Nilp)
            .unwrap()
            .space;
        ok &= homlie(alg).intersection(&cyc).unwrap() == nil;
    }
    outcome(ok, format!("{} algebras", algs.len()))
}

fn c9() -> Outcome {
    let ab = builtin("abelian", &[2]).unwrap();
    let mut m = Matrix::zeros(2, 2);
    m.set(0, 1, int(1));
    m.set(1, 0, int(-1));
    let sympl = Cocycle2::new(&ab, BilinearForm::new(m)).unwrap();
    let cur = tensor_lie(
        &builtin("trunc_poly", &[2]).unwrap(),
        &parse_algebra_name("sl2").unwrap(),
    )
    .unwrap();
    let skew = solve_bilinear(&cur, BilinearKind::SkewCocycle)
        .unwrap()
        .basis_vectors();
    let xi = Cocycle2::new(
        &cur,
        BilinearForm::from_vector(cur.dim(), &skew[0]).unwrap(),
    )
    .unwrap();
    let cases = [
        (ab.clone(), sympl),
        (cur.clone(), xi),
        (ab.clone(), Cocycle2::zero(&ab)),
        (cur.clone(), Cocycle2::zero(&cur)),
    ];
    let mut ok = true;
    let mut dims = Vec::new();
    for (l, xi) in &cases {
        let dec = central_ext_homlie_decomposed(l, xi).unwrap();
        let direct = homlie(&dec.algebra);
        ok &= dec.space == direct;
        dims.push(direct.dim().to_string());
    }
    outcome(ok, format!("4 cases, dims [{}]", dims.join(", ")))
}

fn with_beta(pa: &PartialAlgebra, mu: Scalar, lambda: Scalar) -> LinearMap {
    let mut m = Matrix::identity(pa.dim()).scale(&mu);
    m.set(pa.central_index(), pa.euler_index(), lambda);
    LinearMap::new(m).unwrap()
}

fn window_outcome(pa: &PartialAlgebra) -> (bool, String) {
    let n = pa.dim();
    let sol = solve_window(pa, None).unwrap();
    let mut ok = sol.contains(&LinearMap::identity(n)).unwrap();
    ok &= (0..n).all(|j| {
        sol.space
            .contains(&unit_vec(n * n, pa.central_index() * n + j))
            .unwrap()
    });
    for lambda in [int(1), int(-2), frac(3, 2)] {
        ok &= is_multiplicative_partial(pa, &with_beta(pa, int(1), lambda.clone()))
            .unwrap()
            .holds();
        ok &= is_multiplicative_partial(pa, &with_beta(pa, int(0), lambda))
            .unwrap()
            .holds();
    }
    for mu in [int(2), int(-1), frac(1, 3)] {
        ok &= !is_multiplicative_partial(pa, &with_beta(pa, mu, int(0)))
            .unwrap()
            .holds();
    }
    let r = &sol.report;
    (
        ok,
        format!(
            "N = {}: dim {}, solved {}, inner excess {} (report only)",
            pa.window(),
            n,
            r.full_dim,
            r.excess
        ),
    )
}

fn sl2_killing() -> (AlgebraSpec, BilinearForm) {
    let g = parse_algebra_name("sl2").unwrap();
    let k = killing_form(&g).unwrap();
    (g, k)
}

fn c10() -> Outcome {
    let (g, k) = sl2_killing();
    let mut ok = true;
    let mut parts = Vec::new();
    for n in [2, 3] {
        let t = Instant::now();
        let (good, d) = window_outcome(&km_window(&g, &k, n, None).unwrap());
        ok &= good && (n != 3 || t.elapsed() < 10 * MINUTE);
        parts.push(d);
    }
    outcome(ok, parts.join("; "))
}

fn c11() -> Outcome {
    let (g, k) = sl2_killing();
    let parts = grading_from_labels(&[1, 0, 1], 2).unwrap();
    let (ok, d) = window_outcome(&km_window(&g, &k, 3, Some(&parts)).unwrap());
    outcome(ok, d)
}

fn c12() -> Outcome {
    let mut ok = true;
    let sl2 = parse_algebra_name("sl2").unwrap();
    let cur = tensor_lie(&builtin("trunc_poly", &[2]).unwrap(), &sl2).unwrap();
    for alg in [sl2, parse_algebra_name("sl3").unwrap(), cur] {
        ok &= closure_check(&solve_structures(&alg, StructureKind::HomLie).unwrap())
            .unwrap()
            .closed;
    }
    let r = counterexample_suite().unwrap();
    ok &= r.verified() && r.m <= 8;
    outcome(
        ok,
        format!(
            "three closed spaces; counterexample at m = {}, triple {:?}",
            r.m, r.violating
        ),
    )
}

fn c13() -> Outcome {
    let mut algs = common::builtins();
    algs.extend(common::random_lie_algebras(25));
    let failures: Vec<String> = algs
        .iter()
        .enumerate()
        .filter_map(|(i, a)| common::check_properties(a, i as u64).err())
        .collect();
    outcome(
        failures.is_empty(),
        format!("{} algebras, failures: {failures:?}", algs.len()),
    )
}

#[test]
fn acceptance() {
    type Criterion = (u32, &'static str, Duration, Box<dyn Fn() -> Outcome>);
    let criteria: Vec<Criterion> = vec![
        (1, "dim HomLie(sl2) = 6", SECOND, Box::new(c1)),
        (
            2,
            "HomLie(sl2) = 5 ⊕ 1 as an sl2-module",
            SECOND,
            Box::new(c2),
        ),
        (3, "HomLie(sl3) = K·id", MINUTE, Box::new(|| c3("sl3"))),
        (3, "HomLie(sl4) = K·id", MINUTE, Box::new(|| c3("sl4"))),
        (3, "HomLie(so5) = K·id", MINUTE, Box::new(|| c3("so5"))),
        (3, "HomLie(sp4) = K·id", MINUTE, Box::new(|| c3("sp4"))),
        (
            4,
            "Z²_asym = B² for sl2 (dim 3) and sl3 (dim 8)",
            30 * SECOND,
            Box::new(c4),
        ),
        (5, "u injective and im u = ker v", 30 * SECOND, Box::new(c5)),
        (
            6,
            "current-algebra formula on the 3×3 grid",
            9 * 5 * MINUTE,
            Box::new(c6),
        ),
        (
            7,
            "assembled span ⊆ HomLie(A⊗B) for random pairs",
            5 * MINUTE,
            Box::new(c7),
        ),
        (8, "HomLie ∩ HomCycl = Hom2Nilp", 2 * MINUTE, Box::new(c8)),
        (
            9,
            "central extension decomposition = direct solve",
            5 * MINUTE,
            Box::new(c9),
        ),
        (
            10,
            "untwisted sl2 window, N = 2, 3",
            10 * MINUTE,
            Box::new(c10),
        ),
        (11, "twisted sl2 window, N = 3", 10 * MINUTE, Box::new(c11)),
        (
            12,
            "Jordan closure and counterexample",
            5 * MINUTE,
            Box::new(c12),
        ),
        (
            13,
            "property suites on builtins and 25 random Lie algebras",
            15 * MINUTE,
            Box::new(c13),
        ),
    ];
    let mut failed = Vec::new();
    for (id, name, bound, run) in &criteria {
        let t = Instant::now();
        let o = run();
        let elapsed = t.elapsed();
        let pass = o.ok && elapsed < *bound;
        println!(
            "{} criterion {id}: {name} [{elapsed:.2?} < {bound:?}] {}",
            if pass { "PASS" } else { "FAIL" },
            o.detail
        );
        if !pass {
            failed.push(*id);
        }
    }
    failed.dedup();
    assert_eq!(failed, UNATTAINABLE, "unexpected acceptance outcome");
}

/// Pins the analysed values behind the unattainable part of criterion 4.
#[test]
fn criterion_4_values() {
    let sl2 = parse_algebra_name("sl2").unwrap();
    let z = solve_bilinear(&sl2, BilinearKind::AsymCocycle).unwrap();
    let b = solve_bilinear(&sl2, BilinearKind::Coboundary2).unwrap();
    assert_eq!((z.dim(), b.dim()), (8, 3));
    assert!(b.is_subspace_of(&z).unwrap());
    let sl3 = parse_algebra_name("sl3").unwrap();
    let z3 = solve_bilinear(&sl3, BilinearKind::AsymCocycle).unwrap();
    assert_eq!(z3, solve_bilinear(&sl3, BilinearKind::Coboundary2).unwrap());
    assert_eq!(z3.dim(), 8);
}
