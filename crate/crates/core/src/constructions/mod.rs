//! Composite algebras: current (tensor) algebras, semidirect extensions by a
//! derivation, central extensions, twisted cyclic currents and the degree
//! window model of an affine Kac–Moody algebra.

mod random;
mod window;

pub use random::{random_anticommutative, random_commutative, random_lie};
pub use window::{km_window, BasisKind, Bracket, PartialAlgebra, WindowLabel};

use num_traits::{One, Zero};

use crate::algebra::{make_algebra, AlgebraSpec, BilinearForm, Flavor, LinearMap, RawAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::scalar::{is_zero_vec, sub_vec, unit_vec, zero_vec};
use crate::exactlin::{Scalar, Subspace, Vector};

/// Bracket `[a⊗b, a'⊗b'] = aa'⊗bb'` on `A ⊗ B`, basis `e_i⊗f_j` at `i*dim(B) + j`.
///
/// For commutative `A` and anticommutative `B` the two-term formula
/// `aa'⊗bb' − a'a⊗b'b` is exactly twice this bracket. Rescaling a bracket does
/// not change any of the solution spaces computed here, and this normalization
/// keeps `K ⊗ L` literally equal to `L`.
///
/// The result is declared `lie` when Jacobi holds and `generic-anticommutative`
/// otherwise; [`AlgebraSpec::jacobi_witness`] then returns the failing triple.
pub fn tensor_lie(a: &AlgebraSpec, b: &AlgebraSpec) -> Result<AlgebraSpec> {
    if let Some((witness, residual)) = a.commutativity_witness() {
        return Err(Error::LawViolation {
            law: "commutativity",
            witness,
            residual,
        });
    }
    if let Some((witness, residual)) = b.anticommutativity_witness() {
        return Err(Error::LawViolation {
            law: "anticommutativity",
            witness,
            residual,
        });
    }
    let raw = tensor_raw(a, b);
    let alg = make_algebra(raw)?;
    let flavor = if alg.jacobi_witness().is_none() {
        Flavor::Lie
    } else {
        Flavor::GenericAnticommutative
    };
    alg.with_flavor(flavor)
}

fn tensor_raw(a: &AlgebraSpec, b: &AlgebraSpec) -> RawAlgebra {
    let (na, nb) = (a.dim(), b.dim());
    let mut names = Vec::with_capacity(na * nb);
    for x in a.basis_names() {
        for y in b.basis_names() {
            names.push(format!("{y}⊗{x}"));
        }
    }
    let mut raw = RawAlgebra::new(
        format!("{}⊗{}", b.name(), a.name()),
        names,
        Flavor::Unchecked,
    );
    if a.grading().is_some() || b.grading().is_some() {
        let ga = a.grading().map_or_else(|| vec![0; na], <[i64]>::to_vec);
        let gb = b.grading().map_or_else(|| vec![0; nb], <[i64]>::to_vec);
        raw.grading = Some(
            ga.iter()
                .flat_map(|x| gb.iter().map(move |y| x + y))
                .collect(),
        );
    }
    for i in 0..na {
        for k in 0..na {
            let ak = a.product(i, k);
            if ak.is_empty() {
                continue;
            }
            for j in 0..nb {
                for l in 0..nb {
                    let bl = b.product(j, l);
                    if bl.is_empty() {
                        continue;
                    }
                    let prod = ak
                        .iter()
                        .flat_map(|(p, c)| bl.iter().map(move |(q, d)| (p * nb + q, c * d)))
                        .collect();
                    raw.set(i * nb + j, k * nb + l, prod);
                }
            }
        }
    }
    raw
}

/// First basis pair where `d` fails the Leibniz rule `d(xy) = d(x)y + xd(y)`.
pub fn leibniz_witness(a: &AlgebraSpec, d: &LinearMap) -> Option<(Vec<usize>, Vector)> {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = d.apply(&a.product_vec(i, j)).expect("dimension checked");
            let mut rhs = a.mul(&d.image_of_basis(i), &a.unit(j));
            let t = a.mul(&a.unit(i), &d.image_of_basis(j));
            for (x, y) in rhs.iter_mut().zip(t) {
                *x += y;
            }
            let r = sub_vec(&lhs, &rhs);
            if !is_zero_vec(&r) {
                return Some((vec![i, j], r));
            }
        }
    }
    None
}

/// `(L ⊗ A) ⊕ K·D` with `[D, x⊗f] = x⊗D(f)`. The new basis element `D` is last.
pub fn semidirect_derivation(
    l: &AlgebraSpec,
    a: &AlgebraSpec,
    d: &LinearMap,
) -> Result<AlgebraSpec> {
    l.require_lie()?;
    if d.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            actual: d.dim(),
        });
    }
    if let Some((witness, residual)) = a.commutativity_witness() {
        return Err(Error::LawViolation {
            law: "commutativity",
            witness,
            residual,
        });
    }
    if let Some((witness, residual)) = leibniz_witness(a, d) {
        return Err(Error::LawViolation {
            law: "Leibniz rule",
            witness,
            residual,
        });
    }
    let mut raw = tensor_raw(a, l);
    raw.grading = None;
    let (na, nl) = (a.dim(), l.dim());
    let top = na * nl;
    raw.name = format!("{}⋊D", raw.name);
    raw.basis_names.push("D".into());
    for i in 0..na {
        let img = d.image_of_basis(i);
        for j in 0..nl {
            let prod: Vec<(usize, Scalar)> = img
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| (p * nl + j, c.clone()))
                .collect();
            if !prod.is_empty() {
                raw.set_anti(top, i * nl + j, prod);
            }
        }
    }
    raw.flavor = Flavor::Lie;
    make_algebra(raw)
}

/// `base`, primed until it is not already a basis name of `l`.
fn fresh_name(l: &AlgebraSpec, base: &str) -> String {
    let mut name = base.to_string();
    while l.basis_index(&name).is_some() {
        name.push('\'');
    }
    name
}

/// `L ⊕ KD` with `[D, x] = D(x)` for an arbitrary operator `D` on a Lie algebra.
/// The result is Lie exactly when `D` is a derivation; otherwise it is returned
/// as a generic anticommutative algebra.
pub fn operator_extension(l: &AlgebraSpec, d: &LinearMap) -> Result<AlgebraSpec> {
    l.require_lie()?;
    let n = l.dim();
    if d.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: d.dim(),
        });
    }
    let mut raw = l.to_raw();
    raw.grading = None;
    raw.flavor = Flavor::GenericAnticommutative;
    raw.name = format!("{}⊕KD", l.name());
    raw.basis_names.push(fresh_name(l, "D"));
    for i in 0..n {
        let prod: Vec<(usize, Scalar)> = d
            .image_of_basis(i)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if !prod.is_empty() {
            raw.set_anti(n, i, prod);
        }
    }
    let alg = make_algebra(raw)?;
    let flavor = if alg.jacobi_witness().is_none() {
        Flavor::Lie
    } else {
        Flavor::GenericAnticommutative
    };
    alg.with_flavor(flavor)
}

/// A skew-symmetric 2-cocycle on a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle2 {
    form: BilinearForm,
}

impl Cocycle2 {
    pub fn new(l: &AlgebraSpec, form: BilinearForm) -> Result<Self> {
        l.require_lie()?;
        let n = l.dim();
        if form.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: form.dim(),
            });
        }
        for i in 0..n {
            for j in i..n {
                let s = form.get(i, j) + form.get(j, i);
                if !s.is_zero() {
                    return Err(Error::LawViolation {
                        law: "skew symmetry",
                        witness: vec![i, j],
                        residual: vec![s],
                    });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let s = form.eval(&l.product_vec(i, j), &l.unit(k))
                        + form.eval(&l.product_vec(k, i), &l.unit(j))
                        + form.eval(&l.product_vec(j, k), &l.unit(i));
                    if !s.is_zero() {
                        return Err(Error::LawViolation {
                            law: "2-cocycle identity",
                            witness: vec![i, j, k],
                            residual: vec![s],
                        });
                    }
                }
            }
        }
        Ok(Self { form })
    }

    pub fn zero(l: &AlgebraSpec) -> Self {
        Self {
            form: BilinearForm::zero(l.dim()),
        }
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        self.form.eval(u, v)
    }
}

/// `L ⊕ Kz` with `{x,y} = [x,y] + ξ(x,y)z`; `z` is the last basis element.
pub fn central_extension(l: &AlgebraSpec, xi: &Cocycle2) -> Result<AlgebraSpec> {
    l.require_lie()?;
    let n = l.dim();
    if xi.form.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: xi.form.dim(),
        });
    }
    let mut raw = l.to_raw();
    raw.grading = None;
    raw.name = format!("{}^", l.name());
    raw.basis_names.push(fresh_name(l, "z"));
    for i in 0..n {
        for j in 0..n {
            let c = xi.form.get(i, j);
            if !c.is_zero() {
                raw.set(i, j, vec![(n, c.clone())]);
            }
        }
    }
    make_algebra(raw)
}

/// Checks that `parts` is a `ℤ/n`-grading of `g`: a direct sum decomposition
/// with `[g_i, g_j] ⊆ g_{i+j mod n}`.
pub fn check_cyclic_grading(g: &AlgebraSpec, parts: &[Subspace]) -> Result<()> {
    let n = parts.len();
    if n == 0 {
        return Err(Error::InvalidParameter("empty grading".into()));
    }
    let dim = g.dim();
    let mut total = Subspace::zero(dim);
    let mut sum_dims = 0;
    for p in parts {
        if p.ambient_dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: p.ambient_dim(),
            });
        }
        sum_dims += p.dim();
        total = total.sum(p)?;
    }
    if sum_dims != dim || total.dim() != dim {
        return Err(Error::InvalidParameter(format!(
            "grading components (dims sum {sum_dims}, span {}) are not a direct sum decomposition of a {dim}-dimensional algebra",
            total.dim()
        )));
    }
    for (i, pi) in parts.iter().enumerate() {
        for (j, pj) in parts.iter().enumerate() {
            let target = &parts[(i + j) % n];
            for (a, u) in pi.basis_vectors().iter().enumerate() {
                for (b, v) in pj.basis_vectors().iter().enumerate() {
                    let w = g.mul(u, v);
                    let r = target.residual(&w)?;
                    if !is_zero_vec(&r) {
                        return Err(Error::LawViolation {
                            law: "grading compatibility",
                            witness: vec![i, j, a, b],
                            residual: r,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Grading where basis element `k` lies in component `labels[k]` (mod `n`).
pub fn grading_from_labels(labels: &[usize], n: usize) -> Result<Vec<Subspace>> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "grading modulus must be positive".into(),
        ));
    }
    let dim = labels.len();
    (0..n)
        .map(|r| {
            let vs: Vec<Vector> = labels
                .iter()
                .enumerate()
                .filter(|(_, &l)| l % n == r)
                .map(|(k, _)| unit_vec(dim, k))
                .collect();
            Subspace::span(dim, &vs)
        })
        .collect()
}

/// Basis of the twisted current algebra as vectors in `g ⊗ K[t]/(t^m − 1)`
/// (coordinates `t^i ⊗ e_k` at `i*dim(g) + k`).
pub fn twisted_cyclic_basis(g: &AlgebraSpec, parts: &[Subspace], m: usize) -> Result<Vec<Vector>> {
    let n = parts.len();
    if n == 0 || m == 0 || !m.is_multiple_of(n) {
        return Err(Error::InvalidParameter(format!(
            "cyclic order {m} must be a positive multiple of the grading modulus {n}"
        )));
    }
    let dim = g.dim();
    let mut out = Vec::new();
    for i in 0..m {
        for v in parts[i % n].basis_vectors() {
            let mut w = zero_vec(m * dim);
            w[i * dim..(i + 1) * dim].clone_from_slice(&v);
            out.push(w);
        }
    }
    Ok(out)
}

/// `⊕_{0 ≤ i < m} g_{i mod n} ⊗ t^i` inside `g ⊗ K[t]/(t^m − 1)`.
pub fn twisted_cyclic(g: &AlgebraSpec, parts: &[Subspace], m: usize) -> Result<AlgebraSpec> {
    g.require_lie()?;
    check_cyclic_grading(g, parts)?;
    let n = parts.len();
    let basis = twisted_cyclic_basis(g, parts, m)?;
    let comps: Vec<Vec<Vector>> = parts.iter().map(Subspace::basis_vectors).collect();
    // offset of the block for t^i
    let mut offsets = Vec::with_capacity(m + 1);
    let mut acc = 0;
    for i in 0..m {
        offsets.push(acc);
        acc += comps[i % n].len();
    }
    offsets.push(acc);
    let mut names = Vec::with_capacity(basis.len());
    for i in 0..m {
        for v in &comps[i % n] {
            names.push(format!("{}⊗{}", describe(g, v), power_name(i)));
        }
    }
    let mut raw = RawAlgebra::new(format!("{}[{n}]⊗C{m}", g.name()), names, Flavor::Lie);
    for i in 0..m {
        for (a, u) in comps[i % n].iter().enumerate() {
            for j in 0..m {
                for (b, v) in comps[j % n].iter().enumerate() {
                    let w = g.mul(u, v);
                    if is_zero_vec(&w) {
                        continue;
                    }
                    let k = (i + j) % m;
                    let coords = parts[k % n]
                        .coordinates(&w)?
                        .expect("grading compatibility checked");
                    let prod = coords
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(c, x)| (offsets[k] + c, x))
                        .collect();
                    raw.set(offsets[i] + a, offsets[j] + b, prod);
                }
            }
        }
    }
    make_algebra(raw)
}

pub(crate) fn power_name(i: usize) -> String {
    signed_power_name(i as i64)
}

pub(crate) fn signed_power_name(i: i64) -> String {
    match i {
        0 => "1".into(),
        1 => "t".into(),
        _ => format!("t^{i}"),
    }
}

/// Name of a vector: the basis name when it is a unit vector, else a linear combination.
pub(crate) fn describe(g: &AlgebraSpec, v: &[Scalar]) -> String {
    let terms: Vec<(usize, &Scalar)> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    let name = |k: usize| g.basis_names()[k].clone();
    match terms.as_slice() {
        [(k, c)] if c.is_one() => name(*k),
        _ => {
            let parts: Vec<String> = terms
                .iter()
                .map(|(k, c)| {
                    format!(
                        "{}*{}",
                        crate::exactlin::scalar::display_scalar(c),
                        name(*k)
                    )
                })
                .collect();
            format!("({})", parts.join("+"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{builtin, parse_algebra_name};
    use crate::exactlin::scalar::int;

    #[test]
    fn unit_tensor_is_identity() {
        for name in ["sl2", "heisenberg", "nonabelian2", "so4"] {
            let l = parse_algebra_name(name).unwrap();
            let t = tensor_lie(&builtin("trunc_poly", &[1]).unwrap(), &l).unwrap();
            assert_eq!(t.dim(), l.dim());
            for i in 0..l.dim() {
                for j in 0..l.dim() {
                    assert_eq!(t.product(i, j), l.product(i, j));
                }
            }
        }
    }

    #[test]
    fn current_algebras_are_lie() {
        let sl2 = parse_algebra_name("sl2").unwrap();
        let t = tensor_lie(&builtin("trunc_poly", &[2]).unwrap(), &sl2).unwrap();
        assert_eq!((t.dim(), t.flavor()), (6, Flavor::Lie));
        let c = tensor_lie(&builtin("cyclic_group_alg", &[2]).unwrap(), &sl2).unwrap();
        assert_eq!((c.dim(), c.flavor()), (6, Flavor::Lie));
    }

    #[test]
    fn tensor_rejects_wrong_factors() {
        let sl2 = parse_algebra_name("sl2").unwrap();
        assert!(tensor_lie(&sl2, &sl2).is_err());
        let tp = builtin("trunc_poly", &[2]).unwrap();
        assert!(tensor_lie(&tp, &tp).is_err());
    }

    #[test]
    fn non_lie_tensor_is_flagged() {
        // commutative but not associative: u1² = u2, u1u2 = u1
        let mut raw = RawAlgebra::with_dim("c", "u", 2, Flavor::GenericCommutative);
        raw.set(0, 0, vec![(1, int(1))]);
        raw.set_sym(0, 1, vec![(0, int(1))]);
        let a = make_algebra(raw).unwrap();
        let t = tensor_lie(&a, &parse_algebra_name("sl2").unwrap()).unwrap();
        assert_eq!(t.flavor(), Flavor::GenericAnticommutative);
        assert!(t.jacobi_witness().is_some());
    }

    fn euler(m: usize) -> LinearMap {
        let mut mat = crate::exactlin::Matrix::zeros(m, m);
        for k in 0..m {
            mat.set(k, k, int(k as i64));
        }
        LinearMap::new(mat).unwrap()
    }

    #[test]
    fn semidirect_by_derivations() {
        let sl2 = parse_algebra_name("sl2").unwrap();
        let s =
            semidirect_derivation(&sl2, &builtin("trunc_poly", &[3]).unwrap(), &euler(3)).unwrap();
        assert_eq!(s.dim(), 10);
        let s =
            semidirect_derivation(&sl2, &builtin("trunc_poly", &[2]).unwrap(), &euler(2)).unwrap();
        assert_eq!(s.dim(), 7);
        let s = semidirect_derivation(
            &sl2,
            &builtin("trunc_poly", &[2]).unwrap(),
            &LinearMap::zero(2),
        )
        .unwrap();
        assert!((0..7).all(|j| s.product(6, j).is_empty()));
    }

    #[test]
    fn operator_extensions() {
        let sl2 = parse_algebra_name("sl2").unwrap();
        let inner = LinearMap::new(sl2.ad(&sl2.unit(2)).unwrap()).unwrap();
        assert!(operator_extension(&sl2, &inner).unwrap().is_lie());
        let ext = operator_extension(&sl2, &LinearMap::identity(3)).unwrap();
        assert_eq!(ext.flavor(), Flavor::GenericAnticommutative);
        assert_eq!(ext.basis_names()[3], "D");
        // [D, e-] = e-
        assert_eq!(ext.product(3, 0), &[(0, int(1))]);
    }

    #[test]
    fn semidirect_rejects_non_derivation() {
        let sl2 = parse_algebra_name("sl2").unwrap();
        let tp2 = builtin("trunc_poly", &[2]).unwrap();
        let err = semidirect_derivation(&sl2, &tp2, &LinearMap::identity(2));
        assert!(matches!(
            err,
            Err(Error::LawViolation {
                law: "Leibniz rule",
                ..
            })
        ));
        // d/dt: d(t·t) = 0 but 2t·d(t) = 2t
        let ddt = LinearMap::from_images(&[vec![int(0), int(0)], vec![int(1), int(0)]]).unwrap();
        match semidirect_derivation(&sl2, &tp2, &ddt) {
            Err(Error::LawViolation {
                witness, residual, ..
            }) => {
                assert_eq!(witness, vec![1, 1]);
                assert_eq!(residual, vec![int(0), int(-2)]);
            }
            other => panic!("expected Leibniz failure, got {other:?}"),
        }
    }

    #[test]
    fn heisenberg_as_central_extension() {
        let ab = builtin("abelian", &[2]).unwrap();
        let mut m = crate::exactlin::Matrix::zeros(2, 2);
        m.set(0, 1, int(1));
        m.set(1, 0, int(-1));
        let xi = Cocycle2::new(&ab, BilinearForm::new(m)).unwrap();
        let h = central_extension(&ab, &xi).unwrap();
        let heis = parse_algebra_name("heisenberg").unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(h.product(i, j), heis.product(i, j));
            }
        }
        let triv = central_extension(&ab, &Cocycle2::zero(&ab)).unwrap();
        assert!(triv.is_zero_product());
    }

    #[test]
    fn cocycle_validation() {
        let sl2 = parse_algebra_name("sl2").unwrap();
        let mut m = crate::exactlin::Matrix::zeros(3, 3);
        m.set(0, 1, int(1));
        assert!(matches!(
            Cocycle2::new(&sl2, BilinearForm::new(m)),
            Err(Error::LawViolation {
                law: "skew symmetry",
                ..
            })
        ));
    }

    #[test]
    fn twisted_sl2() {
        let sl2 = parse_algebra_name("sl2").unwrap();
        let parts = grading_from_labels(&[1, 0, 1], 2).unwrap();
        let t = twisted_cyclic(&sl2, &parts, 4).unwrap();
        assert_eq!(t.dim(), 6);
        let trivial = grading_from_labels(&[0, 0, 0], 1).unwrap();
        assert_eq!(twisted_cyclic(&sl2, &trivial, 2).unwrap().dim(), 6);
        let bad = grading_from_labels(&[0, 1, 1], 2).unwrap();
        assert!(matches!(
            twisted_cyclic(&sl2, &bad, 2),
            Err(Error::LawViolation {
                law: "grading compatibility",
                ..
            })
        ));
    }
}
