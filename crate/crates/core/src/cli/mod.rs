//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a computed expectation fails, 2 on usage
//! errors (bad flags, unknown algebras or scenarios, unreadable input).

pub mod scenarios;

use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::algebra::json::{algebra_from_json_str, algebra_to_json};
use crate::algebra::{
    killing_form, parse_algebra_name, sl2_standard_triple, AlgebraSpec, BUILTIN_NAMES,
};
use crate::constructions::{grading_from_labels, km_window};
use crate::error::{Error, Result};
use crate::exactlin::scalar::{display_scalar, format_scalar};
use crate::exactlin::Subspace;
use crate::homsolver::{
    seq_uv, solve_bilinear, solve_qder, solve_structures, solve_window, BilinearKind, QDerModule,
    StructureKind,
};
use crate::jordan::{closure_check, counterexample_suite, jordan_structure_constants};
use crate::modstruct::{sl2_decompose, weight_decompose};
use scenarios::{Status, REGISTRY};

#[derive(Parser, Debug)]
#[command(
    name = "homlie",
    version,
    about = "Exact Hom-Lie structures from structure constants"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve for Hom-Lie, Hom-cyclic, Hom-2-nilpotent structures or δ-derivations.
    Solve {
        #[arg(long)]
        algebra: String,
        /// hom-lie | hom-cyclic | hom-2nilp | delta:<p/q>
        #[arg(long, default_value = "hom-lie")]
        kind: String,
    },
    /// Spaces of bilinear forms: cocycles, coboundaries, invariant forms.
    Bilinear {
        #[arg(long)]
        algebra: String,
        /// asym-cocycle | skew-cocycle | sym-cocycle | coboundary | b-space | sym-invariant
        #[arg(long, default_value = "asym-cocycle")]
        kind: String,
    },
    /// Quasiderivations with values in the adjoint or coadjoint module.
    Qder {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum, default_value = "adjoint")]
        module: ModuleArg,
    },
    /// Weight decomposition of a solution space.
    Decompose {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "hom-lie")]
        kind: String,
        /// Comma-separated basis names spanning the torus; defaults to the
        /// basis elements whose names start with `h` or `H`.
        #[arg(long)]
        torus: Option<String>,
    },
    /// Jordan closure of HomLie, or the non-closure counterexample.
    Jordan {
        #[arg(long, required_unless_present = "counterexample")]
        algebra: Option<String>,
        #[arg(long)]
        counterexample: bool,
    },
    /// Hom-Lie structures on a degree window of the affine algebra.
    Window {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        window: i64,
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<i64>,
        /// JSON file `{"modulus": n, "labels": [...]}` giving a ℤ/n-grading label per basis element.
        #[arg(long)]
        twist: Option<String>,
    },
    /// Run registered scenarios.
    Reproduce {
        #[arg(required_unless_present = "all")]
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        all: bool,
    },
    /// Load an algebra and check its declared laws.
    Validate {
        #[arg(long)]
        algebra: String,
    },
    /// List builtin algebra families and scenario ids.
    List,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModuleArg {
    Adjoint,
    Coadjoint,
}

#[derive(Deserialize)]
struct TwistFile {
    modulus: usize,
    labels: Vec<usize>,
}

/// Loads `--algebra`: a `.json` file path, an existing file, or a builtin name.
pub fn load_algebra(spec: &str) -> Result<AlgebraSpec> {
    if spec.ends_with(".json") || Path::new(spec).is_file() {
        algebra_from_json_str(&std::fs::read_to_string(spec)?)
    } else {
        parse_algebra_name(spec)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::LawViolation { .. }
        | Error::NotLie(_)
        | Error::NotSubmodule { .. }
        | Error::NonSplitAction
        | Error::NotNilpotent(_) => 1,
        _ => 2,
    }
}

struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            code: 0,
        }
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(o) => {
            let _ = if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&o.json).expect("json")
                )
            } else {
                write!(out, "{}", o.text)
            };
            o.code
        }
        Err(e) => {
            let code = exit_code(&e);
            if cli.json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({ "error": e.to_string(), "exit_code": code })
                );
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

fn format_basis(space: &Subspace, n: usize) -> String {
    let mut s = String::new();
    for (k, v) in space.basis_vectors().iter().enumerate() {
        s.push_str(&format!("  basis map {k}:\n"));
        for row in v.chunks(n) {
            let cells: Vec<String> = row
                .iter()
                .map(|x| format!("{:>6}", display_scalar(x)))
                .collect();
            s.push_str(&format!("    [{}]\n", cells.join(" ")));
        }
    }
    s
}

fn dispatch(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Solve { algebra, kind } => {
            let alg = load_algebra(algebra)?;
            let kind = StructureKind::parse(kind)?;
            let sol = solve_structures(&alg, kind.clone())?;
            let text = format!(
                "{kind} structures on {} (dim {}): dim {}\n{}",
                alg.name(),
                alg.dim(),
                sol.dim(),
                format_basis(&sol.space, alg.dim())
            );
            Ok(Output::ok(text, sol.to_json()))
        }
        Command::Bilinear { algebra, kind } => {
            let alg = load_algebra(algebra)?;
            let kind = BilinearKind::parse(kind)?;
            let s = solve_bilinear(&alg, kind)?;
            let basis: Vec<Vec<String>> = s
                .basis_vectors()
                .iter()
                .map(|v| v.iter().map(format_scalar).collect())
                .collect();
            let text = format!(
                "{} forms on {}: dim {}\n{}",
                kind.as_str(),
                alg.name(),
                s.dim(),
                format_basis(&s, alg.dim())
            );
            let j = json!({ "kind": kind.as_str(), "algebra": alg.name(), "algebra_dim": alg.dim(), "dim": s.dim(), "basis_forms": basis });
            Ok(Output::ok(text, j))
        }
        Command::Qder { algebra, module } => {
            let alg = load_algebra(algebra)?;
            let m = match module {
                ModuleArg::Adjoint => QDerModule::Adjoint,
                ModuleArg::Coadjoint => QDerModule::Coadjoint,
            };
            let q = solve_qder(&alg, m)?;
            let d = q.d_projection()?;
            let seq = seq_uv(&alg)?.summary();
            let text = format!(
                "quasiderivations of {} ({module:?}): pairs dim {}, D-projection dim {}\nsequence: {}\n",
                alg.name(),
                q.dim(),
                d.dim(),
                serde_json::to_string(&seq)?
            );
            let j = json!({ "algebra": alg.name(), "module": format!("{module:?}").to_lowercase(), "dim": q.dim(), "d_projection_dim": d.dim(), "sequence": seq });
            Ok(Output::ok(text, j))
        }
        Command::Decompose {
            algebra,
            kind,
            torus,
        } => decompose(algebra, kind, torus.as_deref()),
        Command::Jordan {
            algebra,
            counterexample,
        } => {
            if *counterexample {
                let r = counterexample_suite()?;
                let code = if r.verified() { 0 } else { 1 };
                let text = format!(
                    "nonabelian2 ⊗ trunc_poly({}), α = E_{{{},{}}}: product fails on triple {:?} with residual [{}]; verified: {}\n",
                    r.m,
                    r.alpha.0,
                    r.alpha.1,
                    r.violating,
                    r.residual.join(", "),
                    r.verified()
                );
                return Ok(Output {
                    text,
                    json: serde_json::to_value(&r)?,
                    code,
                });
            }
            let alg = load_algebra(algebra.as_deref().expect("required by clap"))?;
            let s = solve_structures(&alg, StructureKind::HomLie)?;
            let v = closure_check(&s)?;
            let mut j = v.to_json();
            let mut text = format!(
                "HomLie({}) (dim {}) closed under Jordan product: {}\n",
                alg.name(),
                s.dim(),
                v.closed
            );
            if v.closed {
                let ja = jordan_structure_constants(&s, &v)?;
                j["jordan_dim"] = json!(ja.algebra.dim());
                j["jordan_identity_holds"] = json!(ja.jordan_identity_holds);
                j["jordan_algebra"] = algebra_to_json(&ja.algebra);
                text.push_str(&format!(
                    "Jordan identity on basis pairs: {}\n",
                    ja.jordan_identity_holds
                ));
            } else if let Some(w) = &v.witness {
                text.push_str(&format!("violating triple {:?}\n", w.violating));
            }
            Ok(Output::ok(text, j))
        }
        Command::Window {
            algebra,
            window,
            shift,
            twist,
        } => {
            let g = load_algebra(algebra)?;
            let form = killing_form(&g)?;
            let pa = match twist {
                Some(path) => {
                    let t: TwistFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
                    let parts = grading_from_labels(&t.labels, t.modulus)?;
                    km_window(&g, &form, *window, Some(&parts))?
                }
                None => km_window(&g, &form, *window, None)?,
            };
            let sol = solve_window(&pa, *shift)?;
            let r = &sol.report;
            let text = format!(
                "{} (window N = {}, dim {}): solved dim {}, predicted dim {}, predicted included: {}\ninner window N-2 = {}: restricted dim {}, predicted {}, excess {} (report only)\n",
                pa.name(),
                pa.window(),
                pa.dim(),
                r.full_dim,
                r.predicted_dim,
                r.predicted_included,
                r.inner_bound,
                r.restricted_dim,
                r.restricted_predicted_dim,
                r.excess
            );
            let code = if r.predicted_included { 0 } else { 1 };
            let j = json!({ "algebra": pa.name(), "window": pa.window(), "dim": pa.dim(), "report": r });
            Ok(Output {
                text,
                json: j,
                code,
            })
        }
        Command::Reproduce { id, all } => reproduce(id.as_deref(), *all),
        Command::Validate { algebra } => {
            let alg = load_algebra(algebra)?;
            let text = format!(
                "{}: dim {}, flavor {}, laws hold\n",
                alg.name(),
                alg.dim(),
                alg.flavor()
            );
            let j = json!({ "valid": true, "algebra": algebra_to_json(&alg) });
            Ok(Output::ok(text, j))
        }
        Command::List => {
            let ids: Vec<&str> = REGISTRY.iter().map(|s| s.id).collect();
            let mut text = format!("algebras: {}\nscenarios:\n", BUILTIN_NAMES.join(", "));
            for s in REGISTRY {
                text.push_str(&format!("  {:<30} {}\n", s.id, s.description));
            }
            Ok(Output::ok(
                text,
                json!({ "algebras": BUILTIN_NAMES, "scenarios": ids }),
            ))
        }
    }
}

fn decompose(algebra: &str, kind: &str, torus: Option<&str>) -> Result<Output> {
    let alg = load_algebra(algebra)?;
    let sol = solve_structures(&alg, StructureKind::parse(kind)?)?;
    let names: Vec<String> = match torus {
        Some(t) => t
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect(),
        None => alg
            .basis_names()
            .iter()
            .filter(|n| n.starts_with('h') || n.starts_with('H'))
            .cloned()
            .collect(),
    };
    let torus_vecs = names
        .iter()
        .map(|n| {
            alg.basis_index(n)
                .map(|i| alg.unit(i))
                .ok_or_else(|| Error::InvalidParameter(format!("no basis element `{n}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    let comps = weight_decompose(&alg, &torus_vecs, &sol.space)?;
    let summaries: Vec<_> = comps.iter().map(|c| c.summary()).collect();
    let mut text = format!(
        "{} {} (dim {}), torus [{}]:\n",
        alg.name(),
        sol.kind,
        sol.dim(),
        names.join(", ")
    );
    for c in &comps {
        let w: Vec<String> = c.weight.iter().map(display_scalar).collect();
        text.push_str(&format!(
            "  weight ({}): dim {}\n",
            w.join(", "),
            c.component.dim()
        ));
    }
    let mut j = json!({ "algebra": alg.name(), "kind": sol.kind.to_string(), "dim": sol.dim(), "torus": names, "components": summaries });
    if alg.basis_names() == ["e-", "h", "e+"] && alg.is_lie() {
        let (e, h, f) = sl2_standard_triple();
        let d = sl2_decompose(&alg, [&e, &h, &f], &sol.space)?;
        text.push_str(&format!("sl2 irreducibles: {:?}\n", d.irreducibles));
        j["sl2_irreducibles"] = json!(d.irreducibles);
    }
    Ok(Output::ok(text, j))
}

fn reproduce(id: Option<&str>, all: bool) -> Result<Output> {
    let selected: Vec<&scenarios::Scenario> = if all {
        REGISTRY.iter().collect()
    } else {
        vec![scenarios::find(id.expect("required by clap"))?]
    };
    let mut results = Vec::new();
    let mut text = String::new();
    for s in selected {
        let r = s.run()?;
        let tag = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ReportOnly => "REPORT",
        };
        text.push_str(&format!("{tag} {}: {}\n", r.id, r.description));
        for c in r.checks.iter().filter(|c| !c.ok) {
            text.push_str(&format!("    failed: {}\n", c.name));
        }
        if !all {
            text.push_str(&format!("    {}\n", serde_json::to_string(&r.report)?));
        }
        results.push(r);
    }
    let code = if results.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    };
    let j = if all {
        json!({ "scenarios": results })
    } else {
        serde_json::to_value(&results[0])?
    };
    Ok(Output {
        text,
        json: j,
        code,
    })
}
