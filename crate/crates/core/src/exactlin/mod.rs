//! Exact rational linear algebra: elimination, nullspaces, subspaces.

mod elim;
mod matrix;
pub mod scalar;
mod subspace;

pub(crate) use elim::modular_nullity;
pub use elim::{Echelon, SparseRow};
pub use matrix::Matrix;
pub use scalar::{Scalar, Vector};
pub use subspace::Subspace;

use num_traits::Zero;

/// Reduced row-echelon form (same shape as `m`, zero rows last) and rank.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        e.insert_dense(m.row(i));
    }
    let rows = e.rref_rows();
    let rank = rows.len();
    let mut out = Matrix::zeros(m.rows(), m.cols());
    for (i, (_, row)) in rows.into_iter().enumerate() {
        for (c, v) in row {
            out.set(i, c, v);
        }
    }
    (out, rank)
}

/// `{v : m·v = 0}`.
pub fn nullspace(m: &Matrix) -> Subspace {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        e.insert_dense(m.row(i));
    }
    nullspace_of(&e)
}

/// Solution space of the homogeneous system accumulated in `e`.
pub fn nullspace_of(e: &Echelon) -> Subspace {
    let n = e.ncols();
    let rows = e.rref_rows();
    let pivot_set: std::collections::BTreeSet<usize> = rows.iter().map(|(p, _)| *p).collect();
    let free: Vec<usize> = (0..n).filter(|c| !pivot_set.contains(c)).collect();
    let mut vectors = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = scalar::zero_vec(n);
        v[f] = scalar::one();
        for (p, row) in &rows {
            if let Some((_, coef)) = row.iter().find(|(c, _)| *c == f) {
                if !coef.is_zero() {
                    v[*p] = -coef.clone();
                }
            }
        }
        vectors.push(v);
    }
    Subspace::span(n, &vectors).expect("nullspace vectors have ambient length")
}

/// Coefficients expressing `v` in the (linearly independent) `basis`, if `v` lies in its span.
pub fn express_in_basis<V: AsRef<[Scalar]>>(basis: &[V], v: &[Scalar]) -> Option<Vector> {
    let k = basis.len();
    let n = v.len();
    // Columns: basis vectors then -v; a null vector with last coordinate 1 gives the coefficients.
    let mut m = Matrix::zeros(n, k + 1);
    for (j, b) in basis.iter().enumerate() {
        let b = b.as_ref();
        assert_eq!(b.len(), n, "basis vector length");
        for (i, x) in b.iter().enumerate() {
            if !x.is_zero() {
                m.set(i, j, x.clone());
            }
        }
    }
    for (i, x) in v.iter().enumerate() {
        if !x.is_zero() {
            m.set(i, k, -x.clone());
        }
    }
    let ns = nullspace(&m);
    // At most one-dimensional when the basis is independent.
    ns.basis_vectors().into_iter().rev().find_map(|row| {
        let last = row[k].clone();
        if last.is_zero() {
            None
        } else {
            Some(row[..k].iter().map(|x| x / &last).collect())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::scalar::int;
    use super::*;

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(3);
        assert_eq!(rref(&id), (id.clone(), 3));
        let z = Matrix::zeros(2, 4);
        assert_eq!(rref(&z), (z.clone(), 0));
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(rref(&m), (Matrix::from_i64(&[&[1, 2], &[0, 0]]), 1));
        assert_eq!(rref(&Matrix::zeros(0, 3)).1, 0);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace(&Matrix::zeros(3, 3)), Subspace::full(3));
        assert_eq!(nullspace(&Matrix::identity(4)), Subspace::zero(4));
        let ns = nullspace(&Matrix::from_i64(&[&[1, 1, 0]]));
        assert_eq!(ns.dim(), 2);
        assert!(ns.contains(&[int(1), int(-1), int(0)]).unwrap());
        assert!(ns.contains(&[int(0), int(0), int(1)]).unwrap());
    }

    #[test]
    fn express_in_given_basis() {
        let basis = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        let c = express_in_basis(&basis, &[int(3), int(1)]).unwrap();
        assert_eq!(c, vec![int(2), int(1)]);
        let line = vec![vec![int(1), int(1)]];
        assert!(express_in_basis(&line, &[int(1), int(0)]).is_none());
    }
}
