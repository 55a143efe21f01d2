//! Bilinear forms, quasiderivations and the cocycle/quasiderivation sequence.
//!
//! A form `f` is the vector of `F[i][j] = f(e_i, e_j)` at `i*n + j`.

use num_traits::Zero;
use serde::Serialize;

use super::{first_violation, Rows, StructureKind};
use crate::algebra::{AlgebraSpec, BilinearForm, LinearMap};
use crate::error::{Error, Result};
use crate::exactlin::scalar::{one, zero_vec};
use crate::exactlin::{nullspace_of, Echelon, Scalar, Subspace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BilinearKind {
    /// `f([x,y],z) + f([z,x],y) + f([y,z],x) = 0`, no symmetry imposed.
    AsymCocycle,
    SkewCocycle,
    SymCocycle,
    /// `(x, y) ↦ λ([x,y])` for `λ ∈ L*`.
    Coboundary2,
    /// `f([x,y],z) = f([z,x],y)`.
    BSpace,
    SymInvariantForm,
}

impl BilinearKind {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "asym-cocycle" => BilinearKind::AsymCocycle,
            "skew-cocycle" => BilinearKind::SkewCocycle,
            "sym-cocycle" => BilinearKind::SymCocycle,
            "coboundary" => BilinearKind::Coboundary2,
            "b-space" => BilinearKind::BSpace,
            "sym-invariant" => BilinearKind::SymInvariantForm,
            other => return Err(Error::Parse(format!("unknown bilinear kind `{other}`"))),
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BilinearKind::AsymCocycle => "asym-cocycle",
            BilinearKind::SkewCocycle => "skew-cocycle",
            BilinearKind::SymCocycle => "sym-cocycle",
            BilinearKind::Coboundary2 => "coboundary",
            BilinearKind::BSpace => "b-space",
            BilinearKind::SymInvariantForm => "sym-invariant",
        }
    }
}

/// Adds `sign · f([e_a, e_b], e_c)` to row 0.
fn add_bracket_first(
    alg: &AlgebraSpec,
    rows: &mut Rows,
    a: usize,
    b: usize,
    c: usize,
    sign: &Scalar,
) {
    let n = alg.dim();
    for (r, w) in alg.product(a, b) {
        rows.add(0, r * n + c, sign * w);
    }
}

fn cocycle_rows(alg: &AlgebraSpec, e: &mut Echelon) {
    let n = alg.dim();
    let mut rows = Rows::new(1);
    let plus = one();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                add_bracket_first(alg, &mut rows, a, b, c, &plus);
                add_bracket_first(alg, &mut rows, c, a, b, &plus);
                add_bracket_first(alg, &mut rows, b, c, a, &plus);
                rows.flush(e);
            }
        }
    }
}

fn symmetry_rows(n: usize, e: &mut Echelon, skew: bool) {
    let sign = if skew { one() } else { -one() };
    for i in 0..n {
        for j in i..n {
            if i == j {
                if skew {
                    e.insert([(i * n + i, one())]);
                }
            } else {
                e.insert([(i * n + j, one()), (j * n + i, sign.clone())]);
            }
        }
    }
}

/// Exact solution space in the `n²`-dimensional space of forms.
pub fn solve_bilinear(alg: &AlgebraSpec, kind: BilinearKind) -> Result<Subspace> {
    alg.require_lie()?;
    let n = alg.dim();
    let mut e = Echelon::new(n * n);
    match kind {
        BilinearKind::AsymCocycle => cocycle_rows(alg, &mut e),
        BilinearKind::SkewCocycle => {
            cocycle_rows(alg, &mut e);
            symmetry_rows(n, &mut e, true);
        }
        BilinearKind::SymCocycle => {
            cocycle_rows(alg, &mut e);
            symmetry_rows(n, &mut e, false);
        }
        BilinearKind::Coboundary2 => {
            let forms: Vec<Vector> = (0..n)
                .map(|k| {
                    let mut v = zero_vec(n * n);
                    for i in 0..n {
                        for j in 0..n {
                            if let Some((_, c)) = alg.product(i, j).iter().find(|(r, _)| *r == k) {
                                v[i * n + j] = c.clone();
                            }
                        }
                    }
                    v
                })
                .collect();
            return Subspace::span(n * n, &forms);
        }
        BilinearKind::BSpace => {
            let mut rows = Rows::new(1);
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        add_bracket_first(alg, &mut rows, a, b, c, &one());
                        add_bracket_first(alg, &mut rows, c, a, b, &-one());
                        rows.flush(&mut e);
                    }
                }
            }
        }
        BilinearKind::SymInvariantForm => {
            symmetry_rows(n, &mut e, false);
            let mut rows = Rows::new(1);
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        // f([a,b],c) − f(a,[b,c])
                        add_bracket_first(alg, &mut rows, a, b, c, &one());
                        for (r, w) in alg.product(b, c) {
                            rows.add(0, a * n + r, -w.clone());
                        }
                        rows.flush(&mut e);
                    }
                }
            }
        }
    }
    Ok(nullspace_of(&e))
}

/// Module for quasiderivations `L → M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QDerModule {
    /// `M = L`, `y•m = [m, y]`.
    Adjoint,
    /// `M = L*`, `(x•f)(y) = −f([y, x])`.
    Coadjoint,
}

/// Pairs `(D, F)` with `D([x,y]) = y•F(x) − x•F(y)`.
///
/// Coordinates: `D` occupies `[0, n²)`, `F` occupies `[n², 2n²)`. For the adjoint
/// module both are endomorphism vectors; for the coadjoint module entry
/// `i*n + l` is `D(e_i)(e_l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDerSolution {
    pub space: Subspace,
    pub n: usize,
    pub module: QDerModule,
}

impl QDerSolution {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Projection onto the `D` component: the quasiderivations themselves.
    pub fn d_projection(&self) -> Result<Subspace> {
        let nn = self.n * self.n;
        self.space.map(nn, |v| v[..nn].to_vec())
    }
}

fn qder_rows(alg: &AlgebraSpec, module: QDerModule, e: &mut Echelon) {
    let n = alg.dim();
    let nn = n * n;
    let mut rows = Rows::new(n);
    for i in 0..n {
        for j in i + 1..n {
            match module {
                QDerModule::Adjoint => {
                    // D([e_i,e_j]) − [F e_i, e_j] − [e_i, F e_j]
                    for (r, w) in alg.product(i, j) {
                        for k in 0..n {
                            rows.add(k, k * n + r, w.clone());
                        }
                    }
                    for p in 0..n {
                        for (k, c) in alg.product(p, j) {
                            rows.add(*k, nn + p * n + i, -c.clone());
                        }
                        for (k, c) in alg.product(i, p) {
                            rows.add(*k, nn + p * n + j, -c.clone());
                        }
                    }
                }
                QDerModule::Coadjoint => {
                    // at e_l: D([e_i,e_j])(e_l) + F(e_i)([e_l,e_j]) − F(e_j)([e_l,e_i])
                    for l in 0..n {
                        for (r, w) in alg.product(i, j) {
                            rows.add(l, r * n + l, w.clone());
                        }
                        for (s, c) in alg.product(l, j) {
                            rows.add(l, nn + i * n + s, c.clone());
                        }
                        for (s, c) in alg.product(l, i) {
                            rows.add(l, nn + j * n + s, -c.clone());
                        }
                    }
                }
            }
            rows.flush(e);
        }
    }
}

pub fn solve_qder(alg: &AlgebraSpec, module: QDerModule) -> Result<QDerSolution> {
    alg.require_lie()?;
    let n = alg.dim();
    let mut e = Echelon::new(2 * n * n);
    qder_rows(alg, module, &mut e);
    Ok(QDerSolution {
        space: nullspace_of(&e),
        n,
        module,
    })
}

/// Exactness data for `0 → Z²(L) →u QDer(L, L*) →v B(L)`.
#[derive(Clone, Debug)]
pub struct SeqReport {
    pub cocycles: Subspace,
    pub image_u: Subspace,
    /// `ker v ∩ QDer(L, L*)`, in the pair space.
    pub kernel_v: Subspace,
    pub u_injective: bool,
    /// `v` maps every quasiderivation pair into `B(L)`.
    pub v_lands_in_b: bool,
    pub exact: bool,
}

#[derive(Serialize)]
pub struct SeqSummary {
    pub dim_cocycles: usize,
    pub dim_image_u: usize,
    pub dim_kernel_v: usize,
    pub u_injective: bool,
    pub v_lands_in_b: bool,
    pub exact: bool,
}

impl SeqReport {
    pub fn summary(&self) -> SeqSummary {
        SeqSummary {
            dim_cocycles: self.cocycles.dim(),
            dim_image_u: self.image_u.dim(),
            dim_kernel_v: self.kernel_v.dim(),
            u_injective: self.u_injective,
            v_lands_in_b: self.v_lands_in_b,
            exact: self.exact,
        }
    }
}

/// `u(φ) = (D, F)` with `D(x)(y) = φ(x,y)`, `F(x)(y) = −φ(y,x)`.
fn u_map(n: usize, phi: &[Scalar]) -> Vector {
    let nn = n * n;
    let mut out = zero_vec(2 * nn);
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = phi[i * n + j].clone();
            out[nn + i * n + j] = -phi[j * n + i].clone();
        }
    }
    out
}

/// `v(D)(x,y) = D(x)(y) + F(y)(x)`.
fn v_map(n: usize, pair: &[Scalar]) -> Vector {
    let nn = n * n;
    let mut out = zero_vec(nn);
    for i in 0..n {
        for j in 0..n {
            out[i * n + j] = &pair[i * n + j] + &pair[nn + j * n + i];
        }
    }
    out
}

/// Computes both sides of the sequence independently and compares them.
pub fn seq_uv(alg: &AlgebraSpec) -> Result<SeqReport> {
    alg.require_lie()?;
    let n = alg.dim();
    let nn = n * n;
    let cocycles = solve_bilinear(alg, BilinearKind::AsymCocycle)?;
    let image_u = cocycles.map(2 * nn, |phi| u_map(n, phi))?;
    let u_injective = image_u.dim() == cocycles.dim();

    let mut e = Echelon::new(2 * nn);
    qder_rows(alg, QDerModule::Coadjoint, &mut e);
    for i in 0..n {
        for j in 0..n {
            e.insert([(i * n + j, one()), (nn + j * n + i, one())]);
        }
    }
    let kernel_v = nullspace_of(&e);

    let qder = solve_qder(alg, QDerModule::Coadjoint)?;
    let b = solve_bilinear(alg, BilinearKind::BSpace)?;
    let mut v_lands_in_b = true;
    for pair in qder.space.basis_vectors() {
        if !b.contains(&v_map(n, &pair))? {
            v_lands_in_b = false;
            break;
        }
    }
    let exact = u_injective && image_u == kernel_v;
    Ok(SeqReport {
        cocycles,
        image_u,
        kernel_v,
        u_injective,
        v_lands_in_b,
        exact,
    })
}

/// `f_t(x, y) = ⟨φ(y), [x, t]⟩`, checked to be an asymmetric 2-cocycle.
pub fn f_t(
    alg: &AlgebraSpec,
    form: &BilinearForm,
    phi: &LinearMap,
    t: &[Scalar],
) -> Result<BilinearForm> {
    alg.require_lie()?;
    let n = alg.dim();
    form.require_symmetric_invariant(alg)?;
    if phi.dim() != n || t.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: if phi.dim() != n { phi.dim() } else { t.len() },
        });
    }
    if let Some((witness, residual)) = first_violation(alg, &StructureKind::HomLie, phi) {
        return Err(Error::LawViolation {
            law: "Hom-Jacobi identity",
            witness,
            residual,
        });
    }
    let mut m = crate::exactlin::Matrix::zeros(n, n);
    for i in 0..n {
        let xt = alg.mul(&alg.unit(i), t);
        for j in 0..n {
            let v = form.eval(&phi.image_of_basis(j), &xt);
            if !v.is_zero() {
                m.set(i, j, v);
            }
        }
    }
    let f = BilinearForm::new(m);
    if !f.is_cocycle(alg) {
        return Err(Error::LawViolation {
            law: "2-cocycle identity",
            witness: Vec::new(),
            residual: f.to_vector(),
        });
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{killing_form, parse_algebra_name};
    use crate::exactlin::scalar::unit_vec;
    use crate::homsolver::solve_structures;

    fn alg(name: &str) -> AlgebraSpec {
        parse_algebra_name(name).unwrap()
    }

    #[test]
    fn sl3_cocycles_are_coboundaries() {
        let sl3 = alg("sl3");
        let z = solve_bilinear(&sl3, BilinearKind::AsymCocycle).unwrap();
        assert_eq!(z.dim(), 8);
        assert_eq!(z, solve_bilinear(&sl3, BilinearKind::Coboundary2).unwrap());
    }

    // On a 3-dimensional algebra the cocycle expression is an alternating
    // trilinear map, so it imposes a single equation.
    #[test]
    fn sl2_has_non_skew_cocycles() {
        let sl2 = alg("sl2");
        let z = solve_bilinear(&sl2, BilinearKind::AsymCocycle).unwrap();
        let b = solve_bilinear(&sl2, BilinearKind::Coboundary2).unwrap();
        assert_eq!((z.dim(), b.dim()), (8, 3));
        assert!(b.is_subspace_of(&z).unwrap());
        assert_eq!(b, solve_bilinear(&sl2, BilinearKind::SkewCocycle).unwrap());
        // f(e-, e-) = 1 and nothing else
        assert!(z.contains(&unit_vec(9, 0)).unwrap());
    }

    #[test]
    fn abelian_everything_is_a_cocycle() {
        assert_eq!(
            solve_bilinear(&alg("abelian3"), BilinearKind::AsymCocycle)
                .unwrap()
                .dim(),
            9
        );
    }

    #[test]
    fn invariant_forms_of_sl2() {
        let sl2 = alg("sl2");
        let s = solve_bilinear(&sl2, BilinearKind::SymInvariantForm).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s
            .contains(&killing_form(&sl2).unwrap().to_vector())
            .unwrap());
    }

    #[test]
    fn qder_adjoint() {
        let sl3 = alg("sl3");
        let d = solve_qder(&sl3, QDerModule::Adjoint)
            .unwrap()
            .d_projection()
            .unwrap();
        let mut gens: Vec<Vector> = (0..8)
            .map(|i| sl3.ad(&sl3.unit(i)).unwrap().into_row_major())
            .collect();
        gens.push(LinearMap::identity(8).to_vector());
        assert_eq!(d, Subspace::span(64, &gens).unwrap());
        // every endomorphism of sl2 is a quasiderivation
        let d2 = solve_qder(&alg("sl2"), QDerModule::Adjoint)
            .unwrap()
            .d_projection()
            .unwrap();
        assert_eq!(d2.dim(), 9);
        assert_eq!(
            solve_qder(&alg("abelian2"), QDerModule::Adjoint)
                .unwrap()
                .dim(),
            8
        );
    }

    #[test]
    fn sequence_exact() {
        for name in ["sl2", "abelian2", "heisenberg", "nonabelian2"] {
            let r = seq_uv(&alg(name)).unwrap();
            assert!(r.exact && r.v_lands_in_b, "{name}");
        }
        let r = seq_uv(&alg("sl2")).unwrap();
        assert_eq!((r.cocycles.dim(), r.image_u.dim()), (8, 8));
    }

    #[test]
    fn f_t_is_cocycle() {
        let sl2 = alg("sl2");
        let k = killing_form(&sl2).unwrap();
        let hl = solve_structures(&sl2, StructureKind::HomLie).unwrap();
        for phi in hl.basis_maps() {
            for t in 0..3 {
                assert!(f_t(&sl2, &k, &phi, &sl2.unit(t)).is_ok());
            }
        }
        let zero = f_t(&sl2, &k, &LinearMap::identity(3), &zero_vec(3)).unwrap();
        assert!(zero.matrix.is_zero());
        let outside = (0..9)
            .map(|k| LinearMap::from_vector(3, &unit_vec(9, k)).unwrap())
            .find(|m| !hl.contains(m).unwrap())
            .unwrap();
        assert!(matches!(
            f_t(&sl2, &k, &outside, &sl2.unit(0)),
            Err(Error::LawViolation {
                law: "Hom-Jacobi identity",
                ..
            })
        ));
    }
}
