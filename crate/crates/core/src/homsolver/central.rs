//! Hom-Lie structures assembled from smaller pieces: central extensions and
//! tensor products.

use num_traits::Zero;
use serde::Serialize;

use super::{compile, tensor_span, HomSolution, Rows, StructureKind};
use crate::algebra::AlgebraSpec;
use crate::constructions::{central_extension, Cocycle2};
use crate::error::Result;
use crate::exactlin::scalar::{unit_vec, zero_vec};
use crate::exactlin::{nullspace_of, Echelon, Subspace, Vector};

/// `{s ∈ L : [[L,L], s] = 0}`, computed from the table (no solver involved).
fn derived_annihilator(l: &AlgebraSpec, extra: Option<&Cocycle2>) -> Subspace {
    let n = l.dim();
    let mut e = Echelon::new(n);
    for a in 0..n {
        for b in 0..n {
            let d = l.product_vec(a, b);
            if d.iter().all(Zero::is_zero) {
                continue;
            }
            let ad = l.left_mul_matrix(&d).expect("dimension");
            for k in 0..n {
                e.insert_dense(ad.row(k));
            }
            if let Some(xi) = extra {
                // ξ(d, s) as a row in s
                let row: Vector = (0..n).map(|s| xi.eval(&d, &l.unit(s))).collect();
                e.insert_dense(&row);
            }
        }
    }
    nullspace_of(&e)
}

/// `{φ ∈ End(L) : [[L,L], φ(L)] = 0}` as a subspace of `End(L)`.
pub fn hom2nilp_condition_space(l: &AlgebraSpec) -> Result<Subspace> {
    let n = l.dim();
    let ann = derived_annihilator(l, None);
    // φ(e_j) ∈ ann for every j
    let mut maps = Vec::new();
    for s in ann.basis_vectors() {
        for j in 0..n {
            let mut v = zero_vec(n * n);
            for i in 0..n {
                v[i * n + j] = s[i].clone();
            }
            maps.push(v);
        }
    }
    Subspace::span(n * n, &maps)
}

/// Hom-Lie structures of `L ⊕_ξ Kz` assembled from data on `L`:
/// `φ(x) = ψ(x) + λ(x)z`, `φ(z) = s + μz` with `ψ ∈ HomLie(L)` satisfying
/// `ξ([x,y], ψ(w)) + ξ([w,x], ψ(y)) + ξ([y,w], ψ(x)) = 0`, arbitrary `λ`, `μ`, and
/// `[[L,L], s] = 0 = ξ([L,L], s)`.
pub fn central_ext_homlie_decomposed(l: &AlgebraSpec, xi: &Cocycle2) -> Result<HomSolution> {
    let ext = central_extension(l, xi)?;
    let n = l.dim();
    let big = n + 1;

    let mut e = Echelon::new(n * n);
    compile(l, &StructureKind::HomLie, &mut e)?;
    let mut rows = Rows::new(1);
    let form = xi.form();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for (x, y, w) in [(a, b, c), (c, a, b), (b, c, a)] {
                    for (r, coef) in l.product(x, y) {
                        for p in 0..n {
                            let f = form.get(*r, p);
                            if !f.is_zero() {
                                rows.add(0, p * n + w, coef * f);
                            }
                        }
                    }
                }
                rows.flush(&mut e);
            }
        }
    }
    let psi = nullspace_of(&e);

    let mut gens: Vec<Vector> = Vec::new();
    for v in psi.basis_vectors() {
        let mut m = zero_vec(big * big);
        for i in 0..n {
            for j in 0..n {
                m[i * big + j] = v[i * n + j].clone();
            }
        }
        gens.push(m);
    }
    // λ: e_j ↦ z, and μ: z ↦ z
    for j in 0..big {
        gens.push(unit_vec(big * big, n * big + j));
    }
    // s: z ↦ s
    for s in derived_annihilator(l, Some(xi)).basis_vectors() {
        let mut m = zero_vec(big * big);
        for i in 0..n {
            m[i * big + n] = s[i].clone();
        }
        gens.push(m);
    }
    Ok(HomSolution {
        space: Subspace::span(big * big, &gens)?,
        algebra: ext,
        kind: StructureKind::HomLie,
    })
}

/// Subspace sum of tensor summands with dimension bookkeeping.
#[derive(Clone, Debug)]
pub struct TensorFormula {
    pub summands: Vec<(String, Subspace)>,
    pub sum: Subspace,
}

#[derive(Serialize)]
pub struct TensorFormulaSummary {
    pub summand_dims: Vec<(String, usize)>,
    /// `dim(S_i ∩ S_j)` for `i < j`.
    pub intersection_dims: Vec<(String, String, usize)>,
    pub sum_dim: usize,
}

impl TensorFormula {
    fn build(summands: Vec<(String, Subspace)>, ambient: usize) -> Result<Self> {
        let mut sum = Subspace::zero(ambient);
        for (_, s) in &summands {
            sum = sum.sum(s)?;
        }
        Ok(Self { summands, sum })
    }

    pub fn summary(&self) -> Result<TensorFormulaSummary> {
        let mut inter = Vec::new();
        for (i, (ni, si)) in self.summands.iter().enumerate() {
            for (nj, sj) in &self.summands[i + 1..] {
                let d = if si.is_zero() || sj.is_zero() {
                    0
                } else {
                    si.intersection(sj)?.dim()
                };
                inter.push((ni.clone(), nj.clone(), d));
            }
        }
        Ok(TensorFormulaSummary {
            summand_dims: self
                .summands
                .iter()
                .map(|(n, s)| (n.clone(), s.dim()))
                .collect(),
            intersection_dims: inter,
            sum_dim: self.sum.dim(),
        })
    }
}

/// `HomLie(A)⊗HomCycl(B) + Hom2Nilp(A)⊗End(B) + HomCycl(A)⊗HomLie(B) + End(A)⊗Hom2Nilp(B)`
/// inside `End(A⊗B)`, with the basis of [`crate::constructions::tensor_lie`].
pub fn assemble_tensor_formula(a: &AlgebraSpec, b: &AlgebraSpec) -> Result<TensorFormula> {
    let (na, nb) = (a.dim(), b.dim());
    let solve =
        |alg: &AlgebraSpec, k: StructureKind| super::solve_structures(alg, k).map(|s| s.space);
    let (lie_a, cyc_a, nil_a) = (
        solve(a, StructureKind::HomLie)?,
        solve(a, StructureKind::HomCycl)?,
        solve(a, StructureKind::Hom2Nilp)?,
    );
    let (lie_b, cyc_b, nil_b) = (
        solve(b, StructureKind::HomLie)?,
        solve(b, StructureKind::HomCycl)?,
        solve(b, StructureKind::Hom2Nilp)?,
    );
    let (end_a, end_b) = (Subspace::full(na * na), Subspace::full(nb * nb));
    let summands = vec![
        (
            "HomLie(A)⊗HomCycl(B)".to_string(),
            tensor_span(na, &lie_a, nb, &cyc_b)?,
        ),
        (
            "Hom2Nilp(A)⊗End(B)".to_string(),
            tensor_span(na, &nil_a, nb, &end_b)?,
        ),
        (
            "HomCycl(A)⊗HomLie(B)".to_string(),
            tensor_span(na, &cyc_a, nb, &lie_b)?,
        ),
        (
            "End(A)⊗Hom2Nilp(B)".to_string(),
            tensor_span(na, &end_a, nb, &nil_b)?,
        ),
    ];
    TensorFormula::build(summands, (na * nb) * (na * nb))
}

/// Current-algebra form for `L ⊗ A` (`A` unital commutative associative):
/// `A·HomLie(L) + End(A)⊗{φ : [[L,L], φ(L)] = 0}`, where `A` acts by multiplication
/// operators. Built without the Hom-cyclic or Hom-2-nilpotent solvers.
pub fn current_formula(l: &AlgebraSpec, a: &AlgebraSpec) -> Result<TensorFormula> {
    let (nl, na) = (l.dim(), a.dim());
    let mults: Vec<Vector> = (0..na)
        .map(|k| a.left_mul_matrix(&a.unit(k)).map(|m| m.into_row_major()))
        .collect::<Result<_>>()?;
    let mult_space = Subspace::span(na * na, &mults)?;
    let lie_l = super::solve_structures(l, StructureKind::HomLie)?.space;
    let cond = hom2nilp_condition_space(l)?;
    let summands = vec![
        (
            "A⊗HomLie(L)".to_string(),
            tensor_span(na, &mult_space, nl, &lie_l)?,
        ),
        (
            "End(A)⊗{[[L,L],φ(L)]=0}".to_string(),
            tensor_span(na, &Subspace::full(na * na), nl, &cond)?,
        ),
    ];
    TensorFormula::build(summands, (na * nl) * (na * nl))
}
