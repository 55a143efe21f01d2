//! Linear systems for Hom-structures, δ-derivations, quasiderivations and
//! bilinear forms, solved exactly.
//!
//! An endomorphism `φ` of an `n`-dimensional algebra is the vector of its matrix
//! entries `M[i][j]` (coefficient of `e_i` in `φ(e_j)`) at index `i*n + j`.

mod bilinear;
mod central;
mod window;

pub use bilinear::{
    f_t, seq_uv, solve_bilinear, solve_qder, BilinearKind, QDerModule, QDerSolution, SeqReport,
};
pub use central::{
    assemble_tensor_formula, central_ext_homlie_decomposed, current_formula,
    hom2nilp_condition_space, TensorFormula,
};
pub use window::{
    is_multiplicative_partial, predicted_window_span, solve_window, InnerReport, WindowSolution,
};

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{AlgebraSpec, LinearMap};
use crate::error::{Error, Result};
use crate::exactlin::scalar::{format_scalar, is_zero_vec, one, parse_scalar, scale_vec, sub_vec};
use crate::exactlin::{nullspace_of, Echelon, Scalar, Subspace, Vector};

/// Which identity the unknown map must satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureKind {
    /// `(ab)φ(c) + (ca)φ(b) + (bc)φ(a) = 0`.
    HomLie,
    /// `(ab)φ(c) = (ca)φ(b)`.
    HomCycl,
    /// `(ab)φ(c) = 0`.
    Hom2Nilp,
    /// `D(ab) = δ(D(a)b + aD(b))`.
    DeltaDerivation(Scalar),
    /// `φ(ab) = φ(a)φ(b)`. Not linear in `φ`: only membership checks.
    Multiplicative,
}

impl StructureKind {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "hom-lie" => StructureKind::HomLie,
            "hom-cyclic" => StructureKind::HomCycl,
            "hom-2nilp" => StructureKind::Hom2Nilp,
            "multiplicative" => StructureKind::Multiplicative,
            other => match other.strip_prefix("delta:") {
                Some(d) => StructureKind::DeltaDerivation(parse_scalar(d)?),
                None => return Err(Error::Parse(format!("unknown structure kind `{other}`"))),
            },
        })
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureKind::HomLie => f.write_str("hom-lie"),
            StructureKind::HomCycl => f.write_str("hom-cyclic"),
            StructureKind::Hom2Nilp => f.write_str("hom-2nilp"),
            StructureKind::DeltaDerivation(d) => write!(f, "delta:{}", format_scalar(d)),
            StructureKind::Multiplicative => f.write_str("multiplicative"),
        }
    }
}

/// Solution space of one of the linear identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSolution {
    pub space: Subspace,
    pub algebra: AlgebraSpec,
    pub kind: StructureKind,
}

#[derive(Serialize)]
struct SolutionJson<'a> {
    kind: String,
    algebra: &'a str,
    algebra_dim: usize,
    dim: usize,
    basis_maps: Vec<Vec<String>>,
}

impl HomSolution {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis_maps(&self) -> Vec<LinearMap> {
        let n = self.algebra.dim();
        self.space
            .basis_vectors()
            .iter()
            .map(|v| LinearMap::from_vector(n, v).expect("ambient is n²"))
            .collect()
    }

    pub fn contains(&self, phi: &LinearMap) -> Result<bool> {
        self.space.contains(&phi.to_vector())
    }

    /// Re-checks every basis map against the identity on all basis tuples,
    /// without using the compiled system. Returns the first failure.
    pub fn verify(&self) -> Option<(usize, Vec<usize>, Vector)> {
        self.basis_maps().iter().enumerate().find_map(|(m, phi)| {
            first_violation(&self.algebra, &self.kind, phi).map(|(w, r)| (m, w, r))
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = SolutionJson {
            kind: self.kind.to_string(),
            algebra: self.algebra.name(),
            algebra_dim: self.algebra.dim(),
            dim: self.dim(),
            basis_maps: self
                .space
                .basis_vectors()
                .iter()
                .map(|v| v.iter().map(format_scalar).collect())
                .collect(),
        };
        serde_json::to_value(j).expect("solution serializes")
    }
}

/// Accumulates one sparse row per output coordinate.
pub(crate) struct Rows {
    rows: Vec<BTreeMap<usize, Scalar>>,
}

impl Rows {
    pub(crate) fn new(components: usize) -> Self {
        Self {
            rows: vec![BTreeMap::new(); components],
        }
    }

    pub(crate) fn add(&mut self, component: usize, unknown: usize, c: Scalar) {
        *self.rows[component]
            .entry(unknown)
            .or_insert_with(Scalar::zero) += c;
    }

    /// Inserts the nonzero rows and clears the buffer.
    pub(crate) fn flush(&mut self, e: &mut Echelon) {
        for row in self.rows.iter_mut() {
            if !row.is_empty() {
                let r = std::mem::take(row);
                e.insert(r.into_iter().filter(|(_, v)| !v.is_zero()));
            }
        }
    }
}

/// Adds `sign · w φ(e_c)` for sparse `w`.
fn add_left_times_phi(
    alg: &AlgebraSpec,
    rows: &mut Rows,
    w: &[(usize, Scalar)],
    c: usize,
    sign: &Scalar,
) {
    let n = alg.dim();
    for (r, wr) in w {
        let f = sign * wr;
        for p in 0..n {
            for (k, coef) in alg.product(*r, p) {
                rows.add(*k, p * n + c, &f * coef);
            }
        }
    }
}

/// Emits the equations of `kind` into `e` (ambient `n²`).
pub(crate) fn compile(alg: &AlgebraSpec, kind: &StructureKind, e: &mut Echelon) -> Result<()> {
    let n = alg.dim();
    let mut rows = Rows::new(n);
    let plus = one();
    let minus = -one();
    match kind {
        StructureKind::HomLie => {
            let alternating = alg.is_anticommutative();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if alternating && !(a < b && b < c) {
                            continue;
                        }
                        add_left_times_phi(alg, &mut rows, alg.product(a, b), c, &plus);
                        add_left_times_phi(alg, &mut rows, alg.product(c, a), b, &plus);
                        add_left_times_phi(alg, &mut rows, alg.product(b, c), a, &plus);
                        rows.flush(e);
                        if e.is_full() {
                            return Ok(());
                        }
                    }
                }
            }
        }
        StructureKind::HomCycl => {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        add_left_times_phi(alg, &mut rows, alg.product(a, b), c, &plus);
                        add_left_times_phi(alg, &mut rows, alg.product(c, a), b, &minus);
                        rows.flush(e);
                        if e.is_full() {
                            return Ok(());
                        }
                    }
                }
            }
        }
        StructureKind::Hom2Nilp => {
            for a in 0..n {
                for b in 0..n {
                    if alg.product(a, b).is_empty() {
                        continue;
                    }
                    for c in 0..n {
                        add_left_times_phi(alg, &mut rows, alg.product(a, b), c, &plus);
                        rows.flush(e);
                    }
                }
            }
        }
        StructureKind::DeltaDerivation(delta) => {
            for a in 0..n {
                for b in 0..n {
                    // D(e_a e_b)
                    for (r, wr) in alg.product(a, b) {
                        for k in 0..n {
                            rows.add(k, k * n + r, wr.clone());
                        }
                    }
                    // −δ D(e_a) e_b − δ e_a D(e_b)
                    for p in 0..n {
                        for (k, coef) in alg.product(p, b) {
                            rows.add(*k, p * n + a, -(delta * coef));
                        }
                        for (k, coef) in alg.product(a, p) {
                            rows.add(*k, p * n + b, -(delta * coef));
                        }
                    }
                    rows.flush(e);
                    if e.is_full() {
                        return Ok(());
                    }
                }
            }
        }
        StructureKind::Multiplicative => {
            return Err(Error::InvalidParameter(
                "multiplicativity is not a linear condition; use is_multiplicative".into(),
            ))
        }
    }
    Ok(())
}

/// Exact solution space of `kind` on `alg`.
pub fn solve_structures(alg: &AlgebraSpec, kind: StructureKind) -> Result<HomSolution> {
    let n = alg.dim();
    let mut e = Echelon::new(n * n);
    compile(alg, &kind, &mut e)?;
    Ok(HomSolution {
        space: nullspace_of(&e),
        algebra: alg.clone(),
        kind,
    })
}

/// Residual of the identity at one basis tuple (a triple, or a pair for
/// δ-derivations and multiplicativity), computed by direct multiplication.
pub fn residual(alg: &AlgebraSpec, kind: &StructureKind, phi: &LinearMap, idx: &[usize]) -> Vector {
    let u = |i: usize| alg.unit(i);
    let f = |i: usize| phi.image_of_basis(i);
    let m = |x: &[Scalar], y: &[Scalar]| alg.mul(x, y);
    match kind {
        StructureKind::HomLie => {
            let (a, b, c) = (idx[0], idx[1], idx[2]);
            let mut r = m(&alg.product_vec(a, b), &f(c));
            let s = m(&alg.product_vec(c, a), &f(b));
            let t = m(&alg.product_vec(b, c), &f(a));
            for ((x, y), z) in r.iter_mut().zip(s).zip(t) {
                *x += y + z;
            }
            r
        }
        StructureKind::HomCycl => {
            let (a, b, c) = (idx[0], idx[1], idx[2]);
            sub_vec(
                &m(&alg.product_vec(a, b), &f(c)),
                &m(&alg.product_vec(c, a), &f(b)),
            )
        }
        StructureKind::Hom2Nilp => m(&alg.product_vec(idx[0], idx[1]), &f(idx[2])),
        StructureKind::DeltaDerivation(delta) => {
            let (a, b) = (idx[0], idx[1]);
            let lhs = phi.apply(&alg.product_vec(a, b)).expect("dimension");
            let mut rhs = m(&f(a), &u(b));
            for (x, y) in rhs.iter_mut().zip(m(&u(a), &f(b))) {
                *x += y;
            }
            sub_vec(&lhs, &scale_vec(delta, &rhs))
        }
        StructureKind::Multiplicative => {
            let (a, b) = (idx[0], idx[1]);
            sub_vec(
                &phi.apply(&alg.product_vec(a, b)).expect("dimension"),
                &m(&f(a), &f(b)),
            )
        }
    }
}

fn arity(kind: &StructureKind) -> usize {
    match kind {
        StructureKind::DeltaDerivation(_) | StructureKind::Multiplicative => 2,
        _ => 3,
    }
}

/// First basis tuple (all ordered tuples) where `phi` violates `kind`.
pub fn first_violation(
    alg: &AlgebraSpec,
    kind: &StructureKind,
    phi: &LinearMap,
) -> Option<(Vec<usize>, Vector)> {
    let n = alg.dim();
    let k = arity(kind);
    let total = n.pow(k as u32);
    (0..total).find_map(|mut code| {
        let mut idx = vec![0; k];
        for slot in idx.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        let r = residual(alg, kind, phi, &idx);
        (!is_zero_vec(&r)).then_some((idx, r))
    })
}

/// Outcome of a multiplicativity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Multiplicativity {
    Holds,
    Witness {
        pair: (usize, usize),
        lhs: Vector,
        rhs: Vector,
    },
}

impl Multiplicativity {
    pub fn holds(&self) -> bool {
        matches!(self, Multiplicativity::Holds)
    }
}

/// `φ([e_i, e_j]) = [φ(e_i), φ(e_j)]` on all basis pairs.
pub fn is_multiplicative(alg: &AlgebraSpec, phi: &LinearMap) -> Result<Multiplicativity> {
    let n = alg.dim();
    if phi.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: phi.dim(),
        });
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = phi.apply(&alg.product_vec(i, j))?;
            let rhs = alg.mul(&phi.image_of_basis(i), &phi.image_of_basis(j));
            if lhs != rhs {
                return Ok(Multiplicativity::Witness {
                    pair: (i, j),
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(Multiplicativity::Holds)
}

/// Span of `{α⊗β : α ∈ s, β ∈ t}` in `End(A⊗B)`; `s ⊆ End(A)`, `t ⊆ End(B)`.
pub fn tensor_span(dim_a: usize, s: &Subspace, dim_b: usize, t: &Subspace) -> Result<Subspace> {
    let n = dim_a * dim_b;
    let mut e = Echelon::new(n * n);
    for a in s.basis_vectors() {
        let a = LinearMap::from_vector(dim_a, &a)?;
        for b in t.basis_vectors() {
            let b = LinearMap::from_vector(dim_b, &b)?;
            e.insert_dense(&a.tensor(&b).to_vector());
        }
    }
    Ok(Subspace::from_echelon(&e))
}
