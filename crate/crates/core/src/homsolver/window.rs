//! Hom-Lie structures on a degree window.
//!
//! A triple contributes its Hom-Jacobi equation only when every bracket the
//! equation needs is defined, including the brackets against every basis
//! element the unknown map is allowed to hit. Solving is done per degree shift
//! `k` (maps sending degree `i` into degree `i + k`); the unshifted space is
//! the sum over all shifts that fit in the window.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::Multiplicativity;
use crate::algebra::LinearMap;
use crate::constructions::{Bracket, PartialAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::scalar::{unit_vec, zero_vec};
use crate::exactlin::{nullspace_of, Echelon, Scalar, Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InnerReport {
    pub shift: Option<i64>,
    pub full_dim: usize,
    pub predicted_dim: usize,
    /// Predicted maps (identity, maps into `z`) lie in the solved space.
    pub predicted_included: bool,
    /// Inner window bound `N − 2`.
    pub inner_bound: i64,
    pub restricted_dim: usize,
    pub restricted_predicted_dim: usize,
    /// `dim(R + P) − dim(P)` for the restricted solution span `R` and restricted prediction `P`.
    pub excess: usize,
    /// `(shift, dim)` for every shift solved.
    pub per_shift: Vec<(i64, usize)>,
}

#[derive(Clone, Debug)]
pub struct WindowSolution {
    /// Subspace of `End` of the window space (row-major, ambient `dim²`).
    pub space: Subspace,
    pub dim: usize,
    pub report: InnerReport,
}

impl WindowSolution {
    pub fn contains(&self, phi: &LinearMap) -> Result<bool> {
        self.space.contains(&phi.to_vector())
    }
}

/// Every inner bracket is defined, and so is every bracket of its support
/// against the allowed targets of the map.
fn admissible(
    pa: &PartialAlgebra,
    targets: &[Vec<usize>],
    terms: &[(usize, usize, usize)],
) -> bool {
    terms.iter().all(|&(x, y, w)| match pa.bracket(x, y) {
        Bracket::Defined(inner) => inner
            .iter()
            .all(|(r, _)| targets[w].iter().all(|&p| pa.is_defined(*r, p))),
        Bracket::OutOfWindow => false,
    })
}

fn solve_shift(pa: &PartialAlgebra, k: i64) -> Subspace {
    let n = pa.dim();
    // targets[c] = basis elements φ(e_c) may involve
    let targets: Vec<Vec<usize>> = (0..n)
        .map(|c| {
            (0..n)
                .filter(|&a| pa.degree(a) == pa.degree(c) + k)
                .collect()
        })
        .collect();
    let mut local = BTreeMap::new();
    for (c, ts) in targets.iter().enumerate() {
        for &a in ts {
            let next = local.len();
            local.insert(a * n + c, next);
        }
    }
    let m = local.len();
    let mut e = Echelon::new(m);
    let mut rows: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); n];
    'triples: for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let terms = [(a, b, c), (c, a, b), (b, c, a)];
                if !admissible(pa, &targets, &terms) {
                    continue;
                }
                for &(x, y, w) in &terms {
                    let inner = pa.bracket_vec(x, y).expect("admissible");
                    for (r, wr) in inner.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        for &p in &targets[w] {
                            if let Bracket::Defined(prod) = pa.bracket(r, p) {
                                for (q, coef) in prod {
                                    *rows[*q]
                                        .entry(local[&(p * n + w)])
                                        .or_insert_with(Scalar::zero) += wr * coef;
                                }
                            }
                        }
                    }
                }
                for row in rows.iter_mut() {
                    if !row.is_empty() {
                        let r = std::mem::take(row);
                        e.insert(r.into_iter().filter(|(_, v)| !v.is_zero()));
                    }
                }
                if e.is_full() {
                    break 'triples;
                }
            }
        }
    }
    let sol = nullspace_of(&e);
    let inverse: Vec<usize> = {
        let mut inv = vec![0; m];
        for (&g, &l) in &local {
            inv[l] = g;
        }
        inv
    };
    let vectors: Vec<Vector> = sol
        .basis_vectors()
        .into_iter()
        .map(|v| {
            let mut out = zero_vec(n * n);
            for (l, x) in v.into_iter().enumerate() {
                out[inverse[l]] = x;
            }
            out
        })
        .collect();
    Subspace::span(n * n, &vectors).expect("ambient n²")
}

/// Identity (for shift 0 or unshifted) plus every map `e_c ↦ z` of the given shift.
pub fn predicted_window_span(pa: &PartialAlgebra, shift: Option<i64>) -> Subspace {
    let n = pa.dim();
    let z = pa.central_index();
    let mut gens = Vec::new();
    if shift.unwrap_or(0) == 0 {
        gens.push(LinearMap::identity(n).to_vector());
    }
    for c in 0..n {
        if shift.is_none_or(|k| pa.degree(c) + k == 0) {
            gens.push(unit_vec(n * n, z * n + c));
        }
    }
    Subspace::span(n * n, &gens).expect("ambient n²")
}

fn restrict(n: usize, cols: &[usize], v: &[Scalar]) -> Vector {
    let mut out = zero_vec(n * n);
    for a in 0..n {
        for &c in cols {
            out[a * n + c] = v[a * n + c].clone();
        }
    }
    out
}

/// Hom-Lie structures of the window, for one degree shift or for all of them.
pub fn solve_window(pa: &PartialAlgebra, degree_shift: Option<i64>) -> Result<WindowSolution> {
    let big_n = pa.window();
    if big_n < 2 {
        return Err(Error::WindowTooSmall(big_n));
    }
    let n = pa.dim();
    let shifts: Vec<i64> = match degree_shift {
        Some(k) => vec![k],
        None => (-2 * big_n..=2 * big_n).collect(),
    };
    let mut space = Subspace::zero(n * n);
    let mut per_shift = Vec::new();
    for &k in &shifts {
        let s = solve_shift(pa, k);
        per_shift.push((k, s.dim()));
        space = space.sum(&s)?;
    }
    let predicted = predicted_window_span(pa, degree_shift);
    let predicted_included = predicted.is_subspace_of(&space)?;
    let inner_bound = big_n - 2;
    let cols = pa.indices_within(inner_bound);
    let restricted = space.map(n * n, |v| restrict(n, &cols, v))?;
    let restricted_pred = predicted.map(n * n, |v| restrict(n, &cols, v))?;
    let excess = restricted.sum(&restricted_pred)?.dim() - restricted_pred.dim();
    let report = InnerReport {
        shift: degree_shift,
        full_dim: space.dim(),
        predicted_dim: predicted.dim(),
        predicted_included,
        inner_bound,
        restricted_dim: restricted.dim(),
        restricted_predicted_dim: restricted_pred.dim(),
        excess,
        per_shift,
    };
    Ok(WindowSolution {
        space,
        dim: n,
        report,
    })
}

/// `φ([e_i, e_j]) = [φ(e_i), φ(e_j)]` on every pair where both sides are defined.
pub fn is_multiplicative_partial(pa: &PartialAlgebra, phi: &LinearMap) -> Result<Multiplicativity> {
    let n = pa.dim();
    if phi.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: phi.dim(),
        });
    }
    for i in 0..n {
        for j in 0..n {
            let Some(ij) = pa.bracket_vec(i, j) else {
                continue;
            };
            let Some(rhs) = pa.product(&phi.image_of_basis(i), &phi.image_of_basis(j)) else {
                continue;
            };
            let lhs = phi.apply(&ij)?;
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{killing_form, parse_algebra_name};
    use crate::constructions::km_window;
    use crate::exactlin::scalar::int;
    use crate::exactlin::Matrix;

    fn sl2_window(n: i64) -> PartialAlgebra {
        let g = parse_algebra_name("sl2").unwrap();
        km_window(&g, &killing_form(&g).unwrap(), n, None).unwrap()
    }

    fn id_plus_beta(pa: &PartialAlgebra, lambda: i64) -> LinearMap {
        let mut m = Matrix::identity(pa.dim());
        m.set(pa.central_index(), pa.euler_index(), int(lambda));
        LinearMap::new(m).unwrap()
    }

    #[test]
    fn identity_and_beta_at_shift_zero() {
        let pa = sl2_window(2);
        let sol = solve_window(&pa, Some(0)).unwrap();
        assert!(sol.report.predicted_included);
        assert!(sol.contains(&LinearMap::identity(pa.dim())).unwrap());
        assert!(sol.contains(&id_plus_beta(&pa, 3)).unwrap());
    }

    #[test]
    fn central_maps_in_unshifted_space() {
        let pa = sl2_window(2);
        let sol = solve_window(&pa, None).unwrap();
        assert!(sol.report.predicted_included);
        let n = pa.dim();
        for c in 0..n {
            assert!(sol
                .space
                .contains(&unit_vec(n * n, pa.central_index() * n + c))
                .unwrap());
        }
    }

    #[test]
    fn multiplicative_family() {
        let pa = sl2_window(2);
        assert!(is_multiplicative_partial(&pa, &id_plus_beta(&pa, 5))
            .unwrap()
            .holds());
        let twice = LinearMap::new(Matrix::identity(pa.dim()).scale(&int(2))).unwrap();
        assert!(!is_multiplicative_partial(&pa, &twice).unwrap().holds());
    }

    #[test]
    fn shifted_report() {
        let sol = solve_window(&sl2_window(3), Some(1)).unwrap();
        assert!(sol.report.predicted_included);
        assert_eq!(sol.report.per_shift.len(), 1);
    }
}
