//! The `L`-module structure on spaces of endomorphisms.
//!
//! `L` acts on `End(L)` by `(h•φ)(x) = [φ(x), h] − φ([x, h])`. Hom-Lie spaces
//! are submodules; this module checks that, splits a submodule into joint
//! eigenspaces of a torus, counts `sl2` irreducibles and conjugates by
//! `exp(ad x)` for nilpotent `x`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{AlgebraSpec, LinearMap};
use crate::error::{Error, Result};
use crate::exactlin::scalar::{display_scalar, format_scalar, int, is_zero_vec, sub_vec, zero_vec};
use crate::exactlin::{modular_nullity, nullspace, Matrix, Scalar, Subspace, Vector};

const PRIME: u64 = 2_305_843_009_213_693_951; // 2^61 − 1

fn check_dim(alg: &AlgebraSpec, len: usize) -> Result<()> {
    if len != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            actual: len,
        });
    }
    Ok(())
}

/// Matrix of `x ↦ [x, h]`.
fn right_mul_matrix(alg: &AlgebraSpec, h: &[Scalar]) -> Matrix {
    let n = alg.dim();
    let cols: Vec<Vector> = (0..n).map(|j| alg.mul(&alg.unit(j), h)).collect();
    Matrix::from_rows(n, cols).expect("square").transpose()
}

/// `h•φ`.
pub fn act(alg: &AlgebraSpec, h: &[Scalar], phi: &LinearMap) -> Result<LinearMap> {
    alg.require_lie()?;
    check_dim(alg, h.len())?;
    check_dim(alg, phi.dim())?;
    let r = right_mul_matrix(alg, h);
    let m = phi.matrix();
    LinearMap::new(r.mul(m)?.sub(&m.mul(&r)?)?)
}

/// Matrix of `φ ↦ x•φ` on `s`, in the coordinates of `s.basis_vectors()`.
/// Fails with `NotSubmodule` (carrying `x_index` as `h_index`) if `s` is not stable.
fn action_on(alg: &AlgebraSpec, x: &[Scalar], x_index: usize, s: &Subspace) -> Result<Matrix> {
    let n = alg.dim();
    let k = s.dim();
    let mut cols = Vec::with_capacity(k);
    for (j, b) in s.basis_vectors().iter().enumerate() {
        let img = act(alg, x, &LinearMap::from_vector(n, b)?)?;
        match s.coordinates(&img.to_vector())? {
            Some(c) => cols.push(c),
            None => {
                return Err(Error::NotSubmodule {
                    h_index: x_index,
                    phi_index: j,
                })
            }
        }
    }
    Ok(Matrix::from_rows(k, cols)?.transpose())
}

fn check_ambient(alg: &AlgebraSpec, s: &Subspace) -> Result<()> {
    let n = alg.dim();
    if s.ambient_dim() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            actual: s.ambient_dim(),
        });
    }
    Ok(())
}

/// Checks `e_i•φ_j ∈ s` for every basis element and every basis map of `s`.
pub fn require_submodule(alg: &AlgebraSpec, s: &Subspace) -> Result<()> {
    check_ambient(alg, s)?;
    for i in 0..alg.dim() {
        action_on(alg, &alg.unit(i), i, s)?;
    }
    Ok(())
}

pub fn is_submodule(alg: &AlgebraSpec, s: &Subspace) -> Result<bool> {
    match require_submodule(alg, s) {
        Ok(()) => Ok(true),
        Err(Error::NotSubmodule { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightComponent {
    /// One eigenvalue per torus element.
    pub weight: Vec<Scalar>,
    pub component: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSummary {
    pub weight: Vec<String>,
    pub dim: usize,
}

impl WeightComponent {
    pub fn summary(&self) -> WeightSummary {
        WeightSummary {
            weight: self.weight.iter().map(format_scalar).collect(),
            dim: self.component.dim(),
        }
    }
}

fn lcm_denominators<'a>(values: impl Iterator<Item = &'a Scalar>) -> BigInt {
    values.fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let d = lcm_denominators(row.iter());
    row.iter()
        .map(|v| (v * Scalar::from_integer(d.clone())).to_integer())
        .collect()
}

/// Splits the `t`-invariant subspace `c` of `K^k` into eigenspaces of `t`.
fn split(t: &Matrix, c: &Subspace) -> Result<Vec<(Scalar, Subspace)>> {
    let k = t.rows();
    let basis = c.basis_vectors();
    let m = basis.len();
    // Rational eigenvalues of the integer matrix d·t are integers.
    let d = Scalar::from_integer(lcm_denominators(t.as_row_major().iter()));
    let td = t.scale(&d);
    let bound = (0..k)
        .map(|r| {
            td.row(r)
                .iter()
                .fold(Scalar::zero(), |acc, v| acc + v.abs())
        })
        .max()
        .unwrap_or_else(Scalar::zero)
        .to_integer()
        .to_i64()
        .ok_or(Error::NonSplitAction)?;
    let tb: Vec<Vector> = basis.iter().map(|b| td.mul_vec(b)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut found = 0;
    let mut mu: i64 = 0;
    while found < m && mu.abs() <= bound {
        let muq = int(mu);
        // (d·t − μ)B, one row per ambient coordinate, one column per basis vector
        let rows: Vec<Vector> = (0..k)
            .map(|r| {
                (0..m)
                    .map(|col| &tb[col][r] - &muq * &basis[col][r])
                    .collect()
            })
            .collect();
        let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
        if modular_nullity(&int_rows, m, PRIME) > 0 {
            let ns = nullspace(&Matrix::from_rows(m, rows)?);
            if !ns.is_zero() {
                let vecs: Vec<Vector> = ns
                    .basis_vectors()
                    .iter()
                    .map(|coef| {
                        let mut v = zero_vec(k);
                        for (b, a) in basis.iter().zip(coef) {
                            for (slot, x) in v.iter_mut().zip(b) {
                                *slot += a * x;
                            }
                        }
                        v
                    })
                    .collect();
                found += vecs.len();
                out.push((muq / &d, Subspace::span(k, &vecs)?));
            }
        }
        mu = if mu > 0 { -mu } else { -mu + 1 };
    }
    if found < m {
        return Err(Error::NonSplitAction);
    }
    Ok(out)
}

/// Joint eigenspaces of the commuting `torus` acting on the submodule `s`,
/// sorted by weight. Empty components are not listed.
pub fn weight_decompose(
    alg: &AlgebraSpec,
    torus: &[Vector],
    s: &Subspace,
) -> Result<Vec<WeightComponent>> {
    require_submodule(alg, s)?;
    for (i, a) in torus.iter().enumerate() {
        check_dim(alg, a.len())?;
        for b in &torus[i + 1..] {
            if !is_zero_vec(&alg.mul(a, b)) {
                return Err(Error::InvalidParameter(
                    "torus elements do not commute".into(),
                ));
            }
        }
    }
    let k = s.dim();
    if k == 0 {
        return Ok(Vec::new());
    }
    let mut parts: Vec<(Vec<Scalar>, Subspace)> = vec![(Vec::new(), Subspace::full(k))];
    for (i, h) in torus.iter().enumerate() {
        let t = action_on(alg, h, i, s)?;
        let mut next = Vec::new();
        for (w, c) in parts {
            for (lambda, sub) in split(&t, &c)? {
                let mut w2 = w.clone();
                w2.push(lambda);
                next.push((w2, sub));
            }
        }
        parts = next;
    }
    let mut out: Vec<WeightComponent> = parts
        .into_iter()
        .map(|(weight, c)| {
            let maps: Vec<Vector> = c
                .basis_vectors()
                .iter()
                .map(|coords| s.from_coordinates(coords))
                .collect::<Result<_>>()?;
            Ok(WeightComponent {
                weight,
                component: Subspace::span(s.ambient_dim(), &maps)?,
            })
        })
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| a.weight.cmp(&b.weight));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sl2Decomposition {
    /// Dimensions of the irreducible summands, largest first.
    pub irreducibles: Vec<usize>,
    /// `(weight, multiplicity)` of `h`, ascending.
    pub weights: Vec<(i64, usize)>,
}

/// `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
pub fn is_sl2_triple(alg: &AlgebraSpec, e: &[Scalar], h: &[Scalar], f: &[Scalar]) -> Result<bool> {
    for v in [e, h, f] {
        check_dim(alg, v.len())?;
    }
    let two = int(2);
    let scaled = |c: &Scalar, v: &[Scalar]| v.iter().map(|x| c * x).collect::<Vector>();
    Ok(alg.mul(h, e) == scaled(&two, e)
        && alg.mul(h, f) == scaled(&-two.clone(), f)
        && alg.mul(e, f) == h)
}

/// Irreducible summands of the `sl2`-module `s`, by counting `h`-weights:
/// the number of irreducibles with highest weight `w ≥ 0` is `m(w) − m(w+2)`.
pub fn sl2_decompose(
    alg: &AlgebraSpec,
    triple: [&[Scalar]; 3],
    s: &Subspace,
) -> Result<Sl2Decomposition> {
    let [e, h, f] = triple;
    if !is_sl2_triple(alg, e, h, f)? {
        return Err(Error::InvalidParameter("not an sl2-triple".into()));
    }
    check_ambient(alg, s)?;
    for (i, x) in triple.iter().enumerate() {
        action_on(alg, x, i, s)?;
    }
    let comps = weight_decompose(alg, &[h.to_vec()], s)?;
    let mut weights = Vec::new();
    for c in &comps {
        let w = &c.weight[0];
        let wi = w
            .is_integer()
            .then(|| w.to_integer().to_i64())
            .flatten()
            .ok_or_else(|| {
                Error::InvalidParameter(format!("non-integral weight {}", display_scalar(w)))
            })?;
        weights.push((wi, c.component.dim()));
    }
    let mult = |w: i64| weights.iter().find(|(x, _)| *x == w).map_or(0, |(_, m)| *m);
    let top = weights.iter().map(|(w, _)| *w).max().unwrap_or(0);
    let mut irreducibles = Vec::new();
    for w in (0..=top).rev() {
        let (a, b) = (mult(w), mult(w + 2));
        if a < b || mult(-w) != a {
            return Err(Error::InvalidParameter(
                "weights do not come from an sl2-module".into(),
            ));
        }
        irreducibles.extend(std::iter::repeat_n(w as usize + 1, a - b));
    }
    if irreducibles.iter().sum::<usize>() != s.dim() {
        return Err(Error::InvalidParameter(
            "weights do not come from an sl2-module".into(),
        ));
    }
    Ok(Sl2Decomposition {
        irreducibles,
        weights,
    })
}

/// `exp(ad x)` as a finite sum, or `NotNilpotent` if `ad x` is not nilpotent.
pub fn exp_ad(alg: &AlgebraSpec, x: &[Scalar]) -> Result<Matrix> {
    check_dim(alg, x.len())?;
    let n = alg.dim();
    let a = alg.ad(x)?;
    let mut sum = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for k in 1..=n {
        term = term
            .mul(&a)?
            .scale(&Scalar::new(BigInt::one(), BigInt::from(k)));
        if term.is_zero() {
            return Ok(sum);
        }
        sum = sum.add(&term)?;
    }
    Err(Error::NotNilpotent(
        x.iter().map(display_scalar).collect::<Vec<_>>().join(","),
    ))
}

/// `α⁻¹ ∘ φ ∘ α` with `α = exp(ad x)`.
pub fn conjugate(alg: &AlgebraSpec, phi: &LinearMap, x: &[Scalar]) -> Result<LinearMap> {
    check_dim(alg, phi.dim())?;
    let alpha = exp_ad(alg, x)?;
    let neg: Vector = x.iter().map(|v| -v).collect();
    let inverse = exp_ad(alg, &neg)?;
    LinearMap::new(inverse.mul(phi.matrix())?.mul(&alpha)?)
}

/// `J_φ(x,y,z) = [[x,y],φ(z)] + [[z,x],φ(y)] + [[y,z],φ(x)]`.
pub fn hom_jacobiator(
    alg: &AlgebraSpec,
    phi: &LinearMap,
    x: &[Scalar],
    y: &[Scalar],
    z: &[Scalar],
) -> Result<Vector> {
    let m = |u: &[Scalar], v: &[Scalar]| alg.mul(u, v);
    let mut out = m(&m(x, y), &phi.apply(z)?);
    for (a, b, c) in [(z, x, y), (y, z, x)] {
        for (slot, v) in out.iter_mut().zip(m(&m(a, b), &phi.apply(c)?)) {
            *slot += v;
        }
    }
    Ok(out)
}

/// First basis triple where `J_{h•φ} ≠ h•J_φ`, with the difference.
/// `(h•J)(x,y,z) = [J(x,y,z),h] − J([x,h],y,z) − J(x,[y,h],z) − J(x,y,[z,h])`.
pub fn equivariance_witness(
    alg: &AlgebraSpec,
    h: &[Scalar],
    phi: &LinearMap,
) -> Result<Option<(Vec<usize>, Vector)>> {
    let hphi = act(alg, h, phi)?;
    let n = alg.dim();
    let j = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| hom_jacobiator(alg, phi, x, y, z);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (x, y, z) = (alg.unit(a), alg.unit(b), alg.unit(c));
                let lhs = hom_jacobiator(alg, &hphi, &x, &y, &z)?;
                let mut rhs = alg.mul(&j(&x, &y, &z)?, h);
                rhs = sub_vec(&rhs, &j(&alg.mul(&x, h), &y, &z)?);
                rhs = sub_vec(&rhs, &j(&x, &alg.mul(&y, h), &z)?);
                rhs = sub_vec(&rhs, &j(&x, &y, &alg.mul(&z, h))?);
                let diff = sub_vec(&lhs, &rhs);
                if !is_zero_vec(&diff) {
                    return Ok(Some((vec![a, b, c], diff)));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_algebra_name, sl2_standard_triple};
    use crate::exactlin::scalar::unit_vec;
    use crate::homsolver::{solve_structures, StructureKind};

    fn sl2() -> AlgebraSpec {
        parse_algebra_name("sl2").unwrap()
    }

    fn unit_map(n: usize, row: usize, col: usize) -> LinearMap {
        LinearMap::from_vector(n, &unit_vec(n * n, row * n + col)).unwrap()
    }

    #[test]
    fn action_examples() {
        let l = sl2();
        let h = l.unit(1);
        assert!(act(&l, &h, &LinearMap::identity(3)).unwrap().is_zero());
        // e- ↦ e+ has h-weight 2 under this action
        let phi = unit_map(3, 2, 0);
        assert_eq!(act(&l, &h, &phi).unwrap(), phi.scale(&int(2)));
        let heis = parse_algebra_name("heisenberg").unwrap();
        let z = heis.unit(2);
        assert!(act(&heis, &z, &unit_map(3, 0, 1)).unwrap().is_zero());
    }

    #[test]
    fn submodules() {
        let l = sl2();
        let hl = solve_structures(&l, StructureKind::HomLie).unwrap().space;
        assert!(is_submodule(&l, &hl).unwrap());
        let id = Subspace::span(9, &[LinearMap::identity(3).to_vector()]).unwrap();
        assert!(is_submodule(&l, &id).unwrap());
        let line = Subspace::span(9, &[unit_map(3, 0, 1).to_vector()]).unwrap();
        assert!(matches!(
            require_submodule(&l, &line),
            Err(Error::NotSubmodule { .. })
        ));
    }

    #[test]
    fn sl2_weights() {
        let l = sl2();
        let hl = solve_structures(&l, StructureKind::HomLie).unwrap().space;
        let comps = weight_decompose(&l, &[l.unit(1)], &hl).unwrap();
        let got: Vec<(Scalar, usize)> = comps
            .iter()
            .map(|c| (c.weight[0].clone(), c.component.dim()))
            .collect();
        let want: Vec<(Scalar, usize)> = [(-2, 1), (-1, 1), (0, 2), (1, 1), (2, 1)]
            .iter()
            .map(|&(w, d)| (int(w), d))
            .collect();
        assert_eq!(got, want);
        for c in &comps {
            for b in c.component.basis_vectors() {
                let phi = LinearMap::from_vector(3, &b).unwrap();
                assert_eq!(act(&l, &l.unit(1), &phi).unwrap(), phi.scale(&c.weight[0]));
            }
        }
        let all = weight_decompose(&l, &[], &hl).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].component, hl);
    }

    #[test]
    fn sl2_modules() {
        let l = sl2();
        let (e, h, f) = sl2_standard_triple();
        let t = [e.as_slice(), h.as_slice(), f.as_slice()];
        let hl = solve_structures(&l, StructureKind::HomLie).unwrap().space;
        assert_eq!(sl2_decompose(&l, t, &hl).unwrap().irreducibles, vec![5, 1]);
        let id = Subspace::span(9, &[LinearMap::identity(3).to_vector()]).unwrap();
        assert_eq!(sl2_decompose(&l, t, &id).unwrap().irreducibles, vec![1]);
        assert_eq!(
            sl2_decompose(&l, t, &Subspace::full(9))
                .unwrap()
                .irreducibles,
            vec![5, 3, 1]
        );
        assert!(sl2_decompose(&l, [h.as_slice(), e.as_slice(), f.as_slice()], &hl).is_err());
    }

    #[test]
    fn non_split_torus() {
        // e- − e+ has negative Killing square, so ad of it has imaginary eigenvalues
        let l = sl2();
        let x: Vector = vec![int(1), int(0), int(-1)];
        assert!(matches!(
            weight_decompose(&l, &[x], &Subspace::full(9)),
            Err(Error::NonSplitAction)
        ));
    }

    #[test]
    fn conjugation() {
        let l = sl2();
        let hl = solve_structures(&l, StructureKind::HomLie).unwrap();
        let ep = l.unit(2);
        assert_eq!(
            conjugate(&l, &LinearMap::identity(3), &ep).unwrap(),
            LinearMap::identity(3)
        );
        for phi in hl.basis_maps() {
            assert!(hl.contains(&conjugate(&l, &phi, &ep).unwrap()).unwrap());
            assert_eq!(conjugate(&l, &phi, &zero_vec(3)).unwrap(), phi);
        }
        assert!(matches!(
            conjugate(&l, &LinearMap::identity(3), &l.unit(1)),
            Err(Error::NotNilpotent(_))
        ));
    }

    #[test]
    fn jacobiator_is_equivariant() {
        for name in ["sl2", "heisenberg", "nonabelian2"] {
            let l = parse_algebra_name(name).unwrap();
            let n = l.dim();
            for k in 0..n * n {
                let phi = LinearMap::from_vector(n, &unit_vec(n * n, k)).unwrap();
                for h in 0..n {
                    assert_eq!(
                        equivariance_witness(&l, &l.unit(h), &phi).unwrap(),
                        None,
                        "{name}"
                    );
                }
            }
        }
    }
}
