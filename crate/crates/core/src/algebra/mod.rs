//! Finite-dimensional algebras given by structure constants.

mod builtin;
pub mod json;
mod linear_map;

pub use builtin::{builtin, parse_algebra_name, sl2_standard_triple, BUILTIN_NAMES};
pub use linear_map::LinearMap;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::scalar::{add_scaled, is_zero_vec, sub_vec, zero_vec};
use crate::exactlin::{nullspace, Echelon, Matrix, Scalar, Subspace, Vector};

/// Product of two basis elements: `(k, coefficient)` pairs, sorted, nonzero.
pub type Product = Vec<(usize, Scalar)>;

/// Declared law the table must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Lie,
    CommutativeAssociative,
    GenericAnticommutative,
    GenericCommutative,
    Unchecked,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Lie => "lie",
            Flavor::CommutativeAssociative => "commutative-associative",
            Flavor::GenericAnticommutative => "generic-anticommutative",
            Flavor::GenericCommutative => "generic-commutative",
            Flavor::Unchecked => "unchecked",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "lie" => Flavor::Lie,
            "commutative-associative" => Flavor::CommutativeAssociative,
            "generic-anticommutative" => Flavor::GenericAnticommutative,
            "generic-commutative" => Flavor::GenericCommutative,
            "unchecked" => Flavor::Unchecked,
            other => return Err(Error::Parse(format!("unknown flavor `{other}`"))),
        })
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `(i, j, [(k, coefficient)])`: the product of basis elements i and j.
pub type RawProduct = (usize, usize, Vec<(usize, Scalar)>);

/// Unvalidated structure-constant description.
#[derive(Clone, Debug)]
pub struct RawAlgebra {
    pub name: String,
    pub basis_names: Vec<String>,
    pub flavor: Flavor,
    pub grading: Option<Vec<i64>>,
    /// `(i, j, product)`; repeated pairs are summed.
    pub products: Vec<RawProduct>,
}

impl RawAlgebra {
    pub fn new<S: Into<String>>(name: S, basis_names: Vec<String>, flavor: Flavor) -> Self {
        Self {
            name: name.into(),
            basis_names,
            flavor,
            grading: None,
            products: Vec::new(),
        }
    }

    /// Basis named `prefix1..prefixN`.
    pub fn with_dim<S: Into<String>>(name: S, prefix: &str, dim: usize, flavor: Flavor) -> Self {
        let names = (1..=dim).map(|i| format!("{prefix}{i}")).collect();
        Self::new(name, names, flavor)
    }

    pub fn set(&mut self, i: usize, j: usize, product: Vec<(usize, Scalar)>) -> &mut Self {
        self.products.push((i, j, product));
        self
    }

    /// Sets `e_i e_j = p` and `e_j e_i = -p`.
    pub fn set_anti(&mut self, i: usize, j: usize, product: Vec<(usize, Scalar)>) -> &mut Self {
        let neg = product.iter().map(|(k, c)| (*k, -c.clone())).collect();
        self.products.push((i, j, product));
        self.products.push((j, i, neg));
        self
    }

    /// Sets `e_i e_j = e_j e_i = p`.
    pub fn set_sym(&mut self, i: usize, j: usize, product: Vec<(usize, Scalar)>) -> &mut Self {
        if i != j {
            self.products.push((j, i, product.clone()));
        }
        self.products.push((i, j, product));
        self
    }

    pub fn grading(mut self, degrees: Vec<i64>) -> Self {
        self.grading = Some(degrees);
        self
    }
}

/// A validated finite-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    name: String,
    basis_names: Vec<String>,
    table: Vec<Product>,
    grading: Option<Vec<i64>>,
    flavor: Flavor,
}

/// Validates a raw description against its declared flavor.
pub fn make_algebra(raw: RawAlgebra) -> Result<AlgebraSpec> {
    let n = raw.basis_names.len();
    let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); n * n];
    for (i, j, prod) in raw.products {
        for idx in [i, j] {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx, dim: n });
            }
        }
        for (k, c) in prod {
            if k >= n {
                return Err(Error::IndexOutOfRange { index: k, dim: n });
            }
            *acc[i * n + j].entry(k).or_insert_with(Scalar::zero) += c;
        }
    }
    let table = acc
        .into_iter()
        .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect())
        .collect();
    if let Some(g) = &raw.grading {
        if g.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: g.len(),
            });
        }
    }
    let alg = AlgebraSpec {
        name: raw.name,
        basis_names: raw.basis_names,
        table,
        grading: raw.grading,
        flavor: raw.flavor,
    };
    alg.validate()?;
    Ok(alg)
}

impl AlgebraSpec {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name<S: Into<String>>(mut self, name: S) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|b| b == name)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    pub fn is_lie(&self) -> bool {
        self.flavor == Flavor::Lie
    }

    pub fn require_lie(&self) -> Result<()> {
        if self.is_lie() {
            Ok(())
        } else {
            Err(Error::NotLie(self.flavor.to_string()))
        }
    }

    /// `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn product_vec(&self, i: usize, j: usize) -> Vector {
        let mut v = zero_vec(self.dim());
        for (k, c) in self.product(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// True iff every product is zero.
    pub fn is_zero_product(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Anticommutativity read off the table, independent of the declared flavor.
    pub fn is_anticommutative(&self) -> bool {
        self.anticommutativity_witness().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: v.len(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the table.
    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.mul(u, v))
    }

    pub(crate) fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.product(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// `u e_j`.
    pub(crate) fn mul_basis_right(&self, u: &[Scalar], j: usize) -> Vector {
        let mut out = zero_vec(self.dim());
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, c) in self.product(i, j) {
                out[*k] += a * c;
            }
        }
        out
    }

    /// Matrix of left multiplication `v ↦ x v` (column j is `x e_j`).
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_len(x)?;
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let mut col = zero_vec(n);
            for (i, a) in x.iter().enumerate() {
                if !a.is_zero() {
                    for (k, c) in self.product(i, j) {
                        col[*k] += a * c;
                    }
                }
            }
            for (k, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(k, j, v);
                }
            }
        }
        Ok(m)
    }

    /// `ad x`, the same as [`left_mul_matrix`](Self::left_mul_matrix).
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        self.left_mul_matrix(x)
    }

    pub fn unit(&self, i: usize) -> Vector {
        crate::exactlin::scalar::unit_vec(self.dim(), i)
    }

    pub(crate) fn anticommutativity_witness(&self) -> Option<(Vec<usize>, Vector)> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let r = if i == j {
                    self.product_vec(i, i)
                } else {
                    let mut v = self.product_vec(i, j);
                    add_scaled(
                        &mut v,
                        &crate::exactlin::scalar::one(),
                        &self.product_vec(j, i),
                    );
                    v
                };
                if !is_zero_vec(&r) {
                    return Some((vec![i, j], r));
                }
            }
        }
        None
    }

    pub(crate) fn commutativity_witness(&self) -> Option<(Vec<usize>, Vector)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let r = sub_vec(&self.product_vec(i, j), &self.product_vec(j, i));
                if !is_zero_vec(&r) {
                    return Some((vec![i, j], r));
                }
            }
        }
        None
    }

    /// `(e_i e_j) e_k + (e_j e_k) e_i + (e_k e_i) e_j`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector {
        let mut r = self.mul_basis_right(&self.product_vec(i, j), k);
        let b = self.mul_basis_right(&self.product_vec(j, k), i);
        let c = self.mul_basis_right(&self.product_vec(k, i), j);
        let one = crate::exactlin::scalar::one();
        add_scaled(&mut r, &one, &b);
        add_scaled(&mut r, &one, &c);
        r
    }

    /// First basis triple violating the Jacobi identity.
    pub fn jacobi_witness(&self) -> Option<(Vec<usize>, Vector)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let r = self.jacobiator(i, j, k);
                    if !is_zero_vec(&r) {
                        return Some((vec![i, j, k], r));
                    }
                }
            }
        }
        None
    }

    pub(crate) fn associativity_witness(&self) -> Option<(Vec<usize>, Vector)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.mul_basis_right(&self.product_vec(i, j), k);
                    let right = self.mul(&self.unit(i), &self.product_vec(j, k));
                    let r = sub_vec(&left, &right);
                    if !is_zero_vec(&r) {
                        return Some((vec![i, j, k], r));
                    }
                }
            }
        }
        None
    }

    fn grading_witness(&self) -> Option<(Vec<usize>, Vector)> {
        let g = self.grading.as_ref()?;
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let target = g[i] + g[j];
                let bad: Vector = (0..n)
                    .map(|k| {
                        self.product(i, j)
                            .iter()
                            .find(|(kk, _)| *kk == k && g[k] != target)
                            .map_or_else(Scalar::zero, |(_, c)| c.clone())
                    })
                    .collect();
                if !is_zero_vec(&bad) {
                    return Some((vec![i, j], bad));
                }
            }
        }
        None
    }

    fn validate(&self) -> Result<()> {
        let violation = |law: &'static str, (witness, residual): (Vec<usize>, Vector)| {
            Err(Error::LawViolation {
                law,
                witness,
                residual,
            })
        };
        match self.flavor {
            Flavor::Lie => {
                if let Some(w) = self.anticommutativity_witness() {
                    return violation("anticommutativity", w);
                }
                if let Some(w) = self.jacobi_witness() {
                    return violation("Jacobi identity", w);
                }
            }
            Flavor::CommutativeAssociative => {
                if let Some(w) = self.commutativity_witness() {
                    return violation("commutativity", w);
                }
                if let Some(w) = self.associativity_witness() {
                    return violation("associativity", w);
                }
            }
            Flavor::GenericAnticommutative => {
                if let Some(w) = self.anticommutativity_witness() {
                    return violation("anticommutativity", w);
                }
            }
            Flavor::GenericCommutative => {
                if let Some(w) = self.commutativity_witness() {
                    return violation("commutativity", w);
                }
            }
            Flavor::Unchecked => {}
        }
        if let Some(w) = self.grading_witness() {
            return violation("grading compatibility", w);
        }
        Ok(())
    }

    /// Re-declares the flavor (re-validated).
    pub fn with_flavor(mut self, flavor: Flavor) -> Result<Self> {
        self.flavor = flavor;
        self.validate()?;
        Ok(self)
    }

    pub fn to_raw(&self) -> RawAlgebra {
        let n = self.dim();
        let mut raw = RawAlgebra::new(self.name.clone(), self.basis_names.clone(), self.flavor);
        raw.grading = self.grading.clone();
        for i in 0..n {
            for j in 0..n {
                let p = self.product(i, j);
                if !p.is_empty() {
                    raw.products.push((i, j, p.to_vec()));
                }
            }
        }
        raw
    }
}

/// Center, derived algebra `[L,L]`, and annihilator of the derived algebra.
pub fn structural_subspaces(alg: &AlgebraSpec) -> Result<(Subspace, Subspace, Subspace)> {
    alg.require_lie()?;
    let n = alg.dim();
    // center: sum_i x_i [e_i, e_j] = 0 for all j
    let mut e = Echelon::new(n);
    for j in 0..n {
        for l in 0..n {
            e.insert((0..n).filter_map(|i| {
                alg.product(i, j)
                    .iter()
                    .find(|(k, _)| *k == l)
                    .map(|(_, c)| (i, c.clone()))
            }));
        }
    }
    let center = crate::exactlin::nullspace_of(&e);
    let products: Vec<Vector> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| alg.product_vec(i, j))
        .collect();
    let derived = Subspace::span(n, &products)?;
    let mut e = Echelon::new(n);
    for d in derived.basis_vectors() {
        let ad = alg.left_mul_matrix(&d)?;
        for l in 0..n {
            e.insert_dense(ad.row(l));
        }
    }
    let ann = crate::exactlin::nullspace_of(&e);
    Ok((center, derived, ann))
}

/// A bilinear form `f(e_i, e_j) = matrix[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Self {
        assert_eq!(matrix.rows(), matrix.cols(), "bilinear form must be square");
        Self { matrix }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(Matrix::zeros(n, n))
    }

    /// From the row-major coordinate vector used by the bilinear solvers.
    pub fn from_vector(n: usize, v: &[Scalar]) -> Result<Self> {
        Ok(Self::new(Matrix::from_row_major(n, n, v.to_vec())?))
    }

    pub fn to_vector(&self) -> Vector {
        self.matrix.as_row_major().to_vec()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        self.matrix.get(i, j)
    }

    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let mv = self.matrix.mul_vec(v).expect("form/vector dimension");
        u.iter()
            .zip(&mv)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.matrix
            == self
                .matrix
                .transpose()
                .scale(&crate::exactlin::scalar::int(-1))
    }

    pub fn is_nondegenerate(&self) -> bool {
        crate::exactlin::rref(&self.matrix).1 == self.dim()
    }

    /// `f([x,y],z) = f(x,[y,z])` on all basis triples.
    pub fn is_invariant(&self, alg: &AlgebraSpec) -> bool {
        let n = alg.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    self.eval(&alg.product_vec(i, j), &alg.unit(k))
                        == self.eval(&alg.unit(i), &alg.product_vec(j, k))
                })
            })
        })
    }

    /// `f([x,y],z) + f([z,x],y) + f([y,z],x) = 0` on all basis triples.
    pub fn is_cocycle(&self, alg: &AlgebraSpec) -> bool {
        let n = alg.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let s = self.eval(&alg.product_vec(i, j), &alg.unit(k))
                        + self.eval(&alg.product_vec(k, i), &alg.unit(j))
                        + self.eval(&alg.product_vec(j, k), &alg.unit(i));
                    s.is_zero()
                })
            })
        })
    }
}

impl BilinearForm {
    /// First failure of symmetry or invariance: `(law, basis tuple, residual)`.
    pub fn symmetric_invariant_witness(
        &self,
        alg: &AlgebraSpec,
    ) -> Option<(&'static str, Vec<usize>, Vector)> {
        let n = alg.dim();
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j) != self.get(j, i) {
                    return Some((
                        "symmetry",
                        vec![i, j],
                        vec![self.get(i, j) - self.get(j, i)],
                    ));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let r = self.eval(&alg.product_vec(i, j), &alg.unit(k))
                        - self.eval(&alg.unit(i), &alg.product_vec(j, k));
                    if !r.is_zero() {
                        return Some(("invariance", vec![i, j, k], vec![r]));
                    }
                }
            }
        }
        None
    }

    /// Errors unless the form is symmetric and invariant on `alg`.
    pub fn require_symmetric_invariant(&self, alg: &AlgebraSpec) -> Result<()> {
        if self.dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                actual: self.dim(),
            });
        }
        match self.symmetric_invariant_witness(alg) {
            Some((law, witness, residual)) => Err(Error::LawViolation {
                law,
                witness,
                residual,
            }),
            None => Ok(()),
        }
    }
}

/// `κ(e_i, e_j) = tr(ad e_i ∘ ad e_j)`.
pub fn killing_form(alg: &AlgebraSpec) -> Result<BilinearForm> {
    alg.require_lie()?;
    let n = alg.dim();
    let ads: Vec<Matrix> = (0..n)
        .map(|i| alg.ad(&alg.unit(i)))
        .collect::<Result<_>>()?;
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let prod = ads[i].mul(&ads[j])?;
            let tr = (0..n).fold(Scalar::zero(), |acc, k| acc + prod.get(k, k));
            m.set(i, j, tr.clone());
            m.set(j, i, tr);
        }
    }
    Ok(BilinearForm::new(m))
}

/// `{x : f(x, y) = 0 for all y}` for a form, mostly used as a degeneracy probe.
pub fn form_radical(f: &BilinearForm) -> Subspace {
    nullspace(&f.matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::int;

    fn sl2_raw() -> RawAlgebra {
        let mut raw = RawAlgebra::new(
            "sl2",
            vec!["e-".into(), "h".into(), "e+".into()],
            Flavor::Lie,
        );
        raw.set_anti(0, 1, vec![(0, int(-1))]);
        raw.set_anti(2, 1, vec![(2, int(1))]);
        raw.set_anti(0, 2, vec![(1, int(1))]);
        raw
    }

    #[test]
    fn sl2_table_is_lie() {
        let alg = make_algebra(sl2_raw()).unwrap();
        assert_eq!(alg.dim(), 3);
        assert_eq!(
            alg.multiply(&alg.unit(0), &alg.unit(2)).unwrap(),
            alg.unit(1)
        );
    }

    #[test]
    fn flipped_sign_still_lie() {
        let mut raw = sl2_raw();
        raw.products
            .retain(|(i, j, _)| !matches!((i, j), (0, 2) | (2, 0)));
        raw.set_anti(0, 2, vec![(1, int(-1))]);
        let alg = make_algebra(raw).unwrap();
        assert!(alg.jacobi_witness().is_none());
    }

    #[test]
    fn square_violates_anticommutativity() {
        let mut raw = RawAlgebra::with_dim("bad", "x", 1, Flavor::Lie);
        raw.set(0, 0, vec![(0, int(1))]);
        match make_algebra(raw) {
            Err(Error::LawViolation { law, witness, .. }) => {
                assert_eq!(law, "anticommutativity");
                assert_eq!(witness, vec![0, 0]);
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn index_out_of_range() {
        let mut raw = RawAlgebra::with_dim("bad", "x", 2, Flavor::Unchecked);
        raw.set(0, 1, vec![(5, int(1))]);
        assert!(matches!(
            make_algebra(raw),
            Err(Error::IndexOutOfRange { index: 5, .. })
        ));
    }

    #[test]
    fn jacobi_failure_has_witness() {
        // [a,b]=a, [a,c]=b, others zero: Jacobi fails on (a,b,c)
        let mut raw = RawAlgebra::with_dim("bad", "x", 3, Flavor::Lie);
        raw.set_anti(0, 1, vec![(0, int(1))]);
        raw.set_anti(0, 2, vec![(1, int(1))]);
        assert!(matches!(
            make_algebra(raw),
            Err(Error::LawViolation {
                law: "Jacobi identity",
                ..
            })
        ));
    }

    #[test]
    fn multiply_zero_and_mismatch() {
        let alg = make_algebra(sl2_raw()).unwrap();
        assert_eq!(
            alg.multiply(&zero_vec(3), &alg.unit(1)).unwrap(),
            zero_vec(3)
        );
        assert!(alg.multiply(&zero_vec(2), &alg.unit(1)).is_err());
    }

    #[test]
    fn grading_checked() {
        let mut raw = RawAlgebra::with_dim("g", "x", 2, Flavor::Unchecked).grading(vec![1, 1]);
        raw.set(0, 1, vec![(0, int(1))]);
        assert!(make_algebra(raw).is_err());
    }
}
