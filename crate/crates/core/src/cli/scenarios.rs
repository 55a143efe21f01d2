//! Reproducible scenarios, each tied to one claim about Hom-Lie structures.
//!
//! A scenario runs a fixed computation and returns its checks. Checks compare
//! canonical subspaces or dimensions, never basis order. Values that are only
//! diagnostics (window excess dimensions, Jordan structure data) go into the
//! report and are not checked.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    builtin, killing_form, parse_algebra_name, sl2_standard_triple, AlgebraSpec, BilinearForm,
    LinearMap,
};
use crate::constructions::{
    grading_from_labels, km_window, operator_extension, random_anticommutative, random_commutative,
    random_lie, tensor_lie, Cocycle2, PartialAlgebra,
};
use crate::error::{Error, Result};
use crate::exactlin::scalar::{display_scalar, format_scalar, frac, int, unit_vec};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::homsolver::{
    assemble_tensor_formula, central_ext_homlie_decomposed, current_formula,
    is_multiplicative_partial, seq_uv, solve_bilinear, solve_structures, solve_window,
    BilinearKind, StructureKind,
};
use crate::jordan::{closure_check, counterexample_suite, jordan_structure_constants};
use crate::modstruct::{is_submodule, sl2_decompose};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ReportOnly,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioResult {
    pub id: &'static str,
    pub description: &'static str,
    pub status: Status,
    pub checks: Vec<Check>,
    pub report: Value,
}

pub struct Scenario {
    pub id: &'static str,
    pub description: &'static str,
    run: fn(&mut Checks) -> Result<Value>,
}

#[derive(Default)]
pub struct Checks(Vec<Check>);

impl Checks {
    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.0.push(Check {
            name: name.into(),
            ok,
        });
    }
}

impl Scenario {
    pub fn run(&self) -> Result<ScenarioResult> {
        let mut checks = Checks::default();
        let report = (self.run)(&mut checks)?;
        let status = if checks.0.is_empty() {
            Status::ReportOnly
        } else if checks.0.iter().all(|c| c.ok) {
            Status::Pass
        } else {
            Status::Fail
        };
        Ok(ScenarioResult {
            id: self.id,
            description: self.description,
            status,
            checks: checks.0,
            report,
        })
    }
}

pub fn find(id: &str) -> Result<&'static Scenario> {
    REGISTRY
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownScenario(id.to_string()))
}

macro_rules! scenario {
    ($id:expr, $desc:expr, $f:expr) => {
        Scenario {
            id: $id,
            description: $desc,
            run: $f,
        }
    };
}

/// Sorted by id.
pub static REGISTRY: &[Scenario] = &[
    scenario!(
        "corollary-multiplicative",
        "id + λβ is multiplicative on sl2 windows, μ·id is not",
        beta_shifts_multiplicative
    ),
    scenario!(
        "current-formula",
        "HomLie(L⊗A) equals the assembled tensor formula on a 3×3 grid",
        current_formula_grid
    ),
    scenario!(
        "filippov-inclusion",
        "δ-derivations with δ ∉ {0,1} are Hom-Lie structures",
        filippov_inclusion
    ),
    scenario!(
        "intersection-identity",
        "HomLie ∩ HomCycl = Hom2Nilp",
        intersection_identity
    ),
    scenario!(
        "jordan-closed-sl2",
        "HomLie(sl2) is closed under the Jordan product",
        jordan_closed_sl2
    ),
    scenario!(
        "jordan-counterexample",
        "a Jordan product of Hom-Lie structures on nonabelian2⊗K[t]/(t^m) that is not Hom-Lie",
        jordan_counterexample
    ),
    scenario!(
        "km-window-twisted",
        "twisted sl2 window (Cartan ℤ/2-grading), N = 3",
        km_window_twisted
    ),
    scenario!(
        "km-window-untwisted",
        "sl2 window with the Killing cocycle, N = 2, 3",
        km_window_untwisted
    ),
    scenario!(
        "lemma-2.4-exactness",
        "0 → Z² → QDer(L, L*) → B(L) is exact",
        qder_exactness
    ),
    scenario!(
        "lemma-2.5-sl2",
        "asymmetric 2-cocycles of sl2 are coboundaries",
        |c| cocycles_are_coboundaries(c, "sl2")
    ),
    scenario!(
        "lemma-2.5-sl3",
        "asymmetric 2-cocycles of sl3 are coboundaries",
        |c| cocycles_are_coboundaries(c, "sl3")
    ),
    scenario!(
        "prop-2.1",
        "HomLie(sl2) is 6-dimensional and splits as 5 + 1",
        sl2_structure
    ),
    scenario!(
        "prop-4.x-central-ext-oracle",
        "Hom-Lie structures of central extensions from data on L",
        central_ext_oracle
    ),
    scenario!(
        "semidirect-delta-embedding",
        "α = id ⊕ (1/δ) is Hom-Lie on L ⊕ KD",
        semidirect_delta_embedding
    ),
    scenario!("thm-2.2-sl3", "HomLie(sl3) = K·id", |c| only_identity(
        c, "sl3"
    )),
    scenario!("thm-2.2-sl4", "HomLie(sl4) = K·id", |c| only_identity(
        c, "sl4"
    )),
    scenario!("thm-2.2-so5", "HomLie(so5) = K·id", |c| only_identity(
        c, "so5"
    )),
    scenario!("thm-2.2-sp4", "HomLie(sp4) = K·id", |c| only_identity(
        c, "sp4"
    )),
    scenario!(
        "thm-3.1-inclusion",
        "assembled tensor span ⊆ HomLie(A⊗B) for random pairs",
        tensor_inclusion
    ),
];

fn homlie(alg: &AlgebraSpec) -> Result<Subspace> {
    Ok(solve_structures(alg, StructureKind::HomLie)?.space)
}

fn identity_line(n: usize) -> Result<Subspace> {
    Subspace::span(n * n, &[LinearMap::identity(n).to_vector()])
}

fn sl2_structure(c: &mut Checks) -> Result<Value> {
    let sl2 = parse_algebra_name("sl2")?;
    let s = homlie(&sl2)?;
    c.check("dim HomLie(sl2) = 6", s.dim() == 6);
    c.check("HomLie(sl2) is a submodule", is_submodule(&sl2, &s)?);
    let (e, h, f) = sl2_standard_triple();
    let d = sl2_decompose(&sl2, [&e, &h, &f], &s)?;
    c.check("irreducibles {5, 1}", d.irreducibles == [5, 1]);
    Ok(json!({ "dim": s.dim(), "irreducibles": d.irreducibles, "weights": d.weights }))
}

fn only_identity(c: &mut Checks, name: &str) -> Result<Value> {
    let alg = parse_algebra_name(name)?;
    let s = homlie(&alg)?;
    c.check(
        format!("HomLie({name}) = span{{id}}"),
        s == identity_line(alg.dim())?,
    );
    Ok(
        json!({ "algebra": name, "algebra_dim": alg.dim(), "unknowns": alg.dim().pow(2), "dim": s.dim() }),
    )
}

fn cocycles_are_coboundaries(c: &mut Checks, name: &str) -> Result<Value> {
    let alg = parse_algebra_name(name)?;
    let z = solve_bilinear(&alg, BilinearKind::AsymCocycle)?;
    let b = solve_bilinear(&alg, BilinearKind::Coboundary2)?;
    c.check("B² ⊆ Z²", b.is_subspace_of(&z)?);
    c.check("Z²_asym = B²", z == b);
    Ok(json!({ "algebra": name, "cocycles_dim": z.dim(), "coboundaries_dim": b.dim() }))
}

fn qder_exactness(c: &mut Checks) -> Result<Value> {
    let mut rows = Vec::new();
    for name in ["sl2", "heisenberg", "abelian2"] {
        let r = seq_uv(&parse_algebra_name(name)?)?;
        c.check(format!("{name}: u injective"), r.u_injective);
        c.check(format!("{name}: im u = ker v"), r.exact);
        c.check(format!("{name}: v lands in B(L)"), r.v_lands_in_b);
        rows.push(json!({ "algebra": name, "sequence": r.summary() }));
    }
    Ok(Value::Array(rows))
}

fn current_formula_grid(c: &mut Checks) -> Result<Value> {
    let mut rows = Vec::new();
    for l in ["sl2", "nonabelian2", "heisenberg"] {
        for (a, p) in [
            ("trunc_poly", 2),
            ("trunc_poly", 3),
            ("cyclic_group_alg", 2),
        ] {
            let la = parse_algebra_name(l)?;
            let aa = builtin(a, &[p])?;
            let direct = homlie(&tensor_lie(&aa, &la)?)?;
            let assembled = assemble_tensor_formula(&aa, &la)?;
            let current = current_formula(&la, &aa)?;
            let cell = format!("{l} ⊗ {a}({p})");
            c.check(
                format!("{cell}: direct = assembled"),
                direct == assembled.sum,
            );
            c.check(
                format!("{cell}: direct = current-algebra form"),
                direct == current.sum,
            );
            rows.push(json!({
                "cell": cell,
                "direct_dim": direct.dim(),
                "assembled": assembled.summary()?,
            }));
        }
    }
    let sl2_tp2 = homlie(&tensor_lie(
        &builtin("trunc_poly", &[2])?,
        &parse_algebra_name("sl2")?,
    )?)?;
    c.check("dim HomLie(sl2 ⊗ trunc_poly(2)) = 12", sl2_tp2.dim() == 12);
    Ok(Value::Array(rows))
}

fn tensor_inclusion(c: &mut Checks) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut rows = Vec::new();
    for i in 0..12 {
        let a = random_commutative(&mut rng, 3)?;
        let b = random_anticommutative(&mut rng, 3)?;
        let t = tensor_lie(&a, &b)?;
        let assembled = assemble_tensor_formula(&a, &b)?;
        let direct = homlie(&t)?;
        c.check(
            format!("pair {i}: assembled ⊆ direct"),
            assembled.sum.is_subspace_of(&direct)?,
        );
        rows.push(json!({
            "a": a.name(), "a_dim": a.dim(), "a_flavor": a.flavor().as_str(),
            "b": b.name(), "b_dim": b.dim(), "b_flavor": b.flavor().as_str(),
            "tensor_flavor": t.flavor().as_str(),
            "assembled_dim": assembled.sum.dim(),
            "direct_dim": direct.dim(),
        }));
    }
    Ok(Value::Array(rows))
}

/// Builtins plus a few seeded random Lie algebras.
fn battery() -> Result<Vec<AlgebraSpec>> {
    let mut algs: Vec<AlgebraSpec> = [
        "sl2",
        "sl3",
        "gl2",
        "so3",
        "so4",
        "sp2",
        "heisenberg",
        "abelian2",
        "abelian3",
        "nonabelian2",
        "trunc_poly2",
        "trunc_poly3",
        "cyclic_group_alg2",
        "cyclic_group_alg3",
    ]
    .iter()
    .map(|n| parse_algebra_name(n))
    .collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3 {
        algs.push(random_lie(&mut rng, 5)?);
    }
    Ok(algs)
}

fn intersection_identity(c: &mut Checks) -> Result<Value> {
    let mut rows = Vec::new();
    for alg in battery()? {
        let lie = homlie(&alg)?;
        let cyc = solve_structures(&alg, StructureKind::HomCycl)?.space;
        let nil = solve_structures(&alg, StructureKind::Hom2Nilp)?.space;
        c.check(
            format!("{}: HomLie ∩ HomCycl = Hom2Nilp", alg.name()),
            lie.intersection(&cyc)? == nil,
        );
        rows.push(json!({ "algebra": alg.name(), "hom_lie": lie.dim(), "hom_cyclic": cyc.dim(), "hom_2nilp": nil.dim() }));
    }
    Ok(Value::Array(rows))
}

fn symplectic_abelian2() -> Result<(AlgebraSpec, Cocycle2)> {
    let ab = builtin("abelian", &[2])?;
    let mut m = Matrix::zeros(2, 2);
    m.set(0, 1, int(1));
    m.set(1, 0, int(-1));
    let xi = Cocycle2::new(&ab, BilinearForm::new(m))?;
    Ok((ab, xi))
}

fn central_ext_oracle(c: &mut Checks) -> Result<Value> {
    let (ab, sympl) = symplectic_abelian2()?;
    let current = tensor_lie(&builtin("trunc_poly", &[2])?, &parse_algebra_name("sl2")?)?;
    let skew = solve_bilinear(&current, BilinearKind::SkewCocycle)?;
    let first = skew
        .basis_vectors()
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvalidParameter("no nonzero 2-cocycle".into()))?;
    let computed = Cocycle2::new(&current, BilinearForm::from_vector(current.dim(), &first)?)?;
    let cases = [
        ("abelian2, symplectic ξ", ab.clone(), sympl),
        ("sl2⊗trunc_poly(2), computed ξ", current.clone(), computed),
        ("abelian2, ξ = 0", ab.clone(), Cocycle2::zero(&ab)),
        (
            "sl2⊗trunc_poly(2), ξ = 0",
            current.clone(),
            Cocycle2::zero(&current),
        ),
        (
            "heisenberg, ξ = 0",
            parse_algebra_name("heisenberg")?,
            Cocycle2::zero(&parse_algebra_name("heisenberg")?),
        ),
    ];
    let mut rows = Vec::new();
    for (label, l, xi) in cases {
        let dec = central_ext_homlie_decomposed(&l, &xi)?;
        let direct = homlie(&dec.algebra)?;
        c.check(format!("{label}: decomposed = direct"), dec.space == direct);
        rows.push(json!({ "case": label, "dim": direct.dim() }));
    }
    Ok(Value::Array(rows))
}

fn sl2_window(n: i64, twist: bool) -> Result<PartialAlgebra> {
    let g = parse_algebra_name("sl2")?;
    let form = killing_form(&g)?;
    if twist {
        let parts = grading_from_labels(&[1, 0, 1], 2)?;
        km_window(&g, &form, n, Some(&parts))
    } else {
        km_window(&g, &form, n, None)
    }
}

fn id_plus(pa: &PartialAlgebra, mu: &Scalar, lambda: &Scalar) -> Result<LinearMap> {
    let mut m = Matrix::identity(pa.dim()).scale(mu);
    m.set(pa.central_index(), pa.euler_index(), lambda.clone());
    LinearMap::new(m)
}

fn window_checks(c: &mut Checks, pa: &PartialAlgebra) -> Result<Value> {
    let n = pa.dim();
    let label = pa.name().to_string();
    let sol = solve_window(pa, None)?;
    c.check(
        format!("{label}: id ∈ solved space"),
        sol.contains(&LinearMap::identity(n))?,
    );
    let into_z = (0..n).all(|j| {
        sol.space
            .contains(&unit_vec(n * n, pa.central_index() * n + j))
            .unwrap_or(false)
    });
    c.check(
        format!("{label}: every map into span{{z}} ∈ solved space"),
        into_z,
    );
    c.check(
        format!("{label}: predicted span ⊆ solved space"),
        sol.report.predicted_included,
    );
    let zero = int(0);
    for lambda in [int(1), int(-3), frac(1, 2)] {
        c.check(
            format!("{label}: id + {}β multiplicative", display_scalar(&lambda)),
            is_multiplicative_partial(pa, &id_plus(pa, &int(1), &lambda)?)?.holds(),
        );
        c.check(
            format!("{label}: {}β multiplicative", display_scalar(&lambda)),
            is_multiplicative_partial(pa, &id_plus(pa, &zero, &lambda)?)?.holds(),
        );
    }
    for mu in [int(2), int(-1), frac(1, 3)] {
        c.check(
            format!("{label}: {}·id not multiplicative", display_scalar(&mu)),
            !is_multiplicative_partial(pa, &id_plus(pa, &mu, &zero)?)?.holds(),
        );
    }
    Ok(json!({ "window": pa.window(), "dim": n, "inner": sol.report }))
}

fn km_window_untwisted(c: &mut Checks) -> Result<Value> {
    let mut rows = Vec::new();
    for n in [2, 3] {
        rows.push(window_checks(c, &sl2_window(n, false)?)?);
    }
    Ok(Value::Array(rows))
}

fn km_window_twisted(c: &mut Checks) -> Result<Value> {
    window_checks(c, &sl2_window(3, true)?)
}

fn beta_shifts_multiplicative(c: &mut Checks) -> Result<Value> {
    let mut rows = Vec::new();
    for (n, twist) in [(2, false), (3, false), (3, true)] {
        let pa = sl2_window(n, twist)?;
        for lambda in [int(0), int(1), int(-3), frac(1, 2)] {
            let ok = is_multiplicative_partial(&pa, &id_plus(&pa, &int(1), &lambda)?)?.holds();
            c.check(
                format!("{}: id + {}β", pa.name(), display_scalar(&lambda)),
                ok,
            );
        }
        let bad = is_multiplicative_partial(&pa, &id_plus(&pa, &int(2), &int(0))?)?;
        c.check(format!("{}: 2·id fails", pa.name()), !bad.holds());
        rows.push(json!({ "algebra": pa.name(), "window": n }));
    }
    Ok(Value::Array(rows))
}

fn jordan_closed_sl2(c: &mut Checks) -> Result<Value> {
    let sl2 = parse_algebra_name("sl2")?;
    let s = solve_structures(&sl2, StructureKind::HomLie)?;
    let v = closure_check(&s)?;
    c.check("HomLie(sl2) closed", v.closed);
    let j = jordan_structure_constants(&s, &v)?;
    Ok(json!({
        "jordan_dim": j.algebra.dim(),
        "jordan_identity_holds": j.jordan_identity_holds,
    }))
}

fn jordan_counterexample(c: &mut Checks) -> Result<Value> {
    let r = counterexample_suite()?;
    c.check("φ∘ψ = φ", r.phi_psi_is_phi);
    c.check("1⊗φ ∈ HomLie(L⊗A)", r.left_in_homlie);
    c.check("α⊗ψ ∈ HomLie(L⊗A)", r.right_in_homlie);
    c.check("Jordan product ∉ HomLie(L⊗A)", !r.product_in_homlie);
    c.check(
        "residual nonzero on the violating triple",
        r.residual_rechecked,
    );
    c.check("m ≤ 8", r.m <= 8);
    Ok(serde_json::to_value(r)?)
}

fn lie_battery() -> Result<Vec<AlgebraSpec>> {
    Ok(battery()?.into_iter().filter(|a| a.is_lie()).collect())
}

const DELTAS: [(i64, i64); 3] = [(-1, 1), (1, 2), (2, 1)];

fn filippov_inclusion(c: &mut Checks) -> Result<Value> {
    let mut rows = Vec::new();
    for alg in lie_battery()? {
        let lie = homlie(&alg)?;
        for (p, q) in DELTAS {
            let delta = frac(p, q);
            let d = solve_structures(&alg, StructureKind::DeltaDerivation(delta.clone()))?.space;
            c.check(
                format!("{}: δ = {}", alg.name(), display_scalar(&delta)),
                d.is_subspace_of(&lie)?,
            );
            rows.push(
                json!({ "algebra": alg.name(), "delta": format_scalar(&delta), "dim": d.dim() }),
            );
        }
    }
    Ok(Value::Array(rows))
}

fn semidirect_delta_embedding(c: &mut Checks) -> Result<Value> {
    let mut rows = Vec::new();
    for alg in lie_battery()? {
        let n = alg.dim();
        for (p, q) in DELTAS {
            let delta = frac(p, q);
            let sol = solve_structures(&alg, StructureKind::DeltaDerivation(delta.clone()))?;
            for (k, d) in sol.basis_maps().iter().enumerate() {
                let ext = operator_extension(&alg, d)?;
                let mut alpha = Matrix::identity(n + 1);
                alpha.set(n, n, frac(q, p));
                let member = solve_structures(&ext, StructureKind::HomLie)?
                    .contains(&LinearMap::new(alpha)?)?;
                c.check(
                    format!("{}: δ = {}, D #{k}", alg.name(), display_scalar(&delta)),
                    member,
                );
            }
            rows.push(json!({ "algebra": alg.name(), "delta": format_scalar(&delta), "derivations": sol.dim() }));
        }
    }
    Ok(Value::Array(rows))
}
