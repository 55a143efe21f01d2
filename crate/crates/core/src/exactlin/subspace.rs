use num_traits::Zero;

use super::elim::Echelon;
use super::matrix::Matrix;
use super::scalar::{zero_vec, Scalar, Vector};
use crate::error::{Error, Result};

/// A subspace of `Q^n` held by its canonical reduced row-echelon basis.
///
/// Two subspaces are equal as sets iff they compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub(crate) fn from_echelon(e: &Echelon) -> Self {
        let ambient = e.ncols();
        let rows = e.rref_rows();
        let mut basis = Matrix::zeros(rows.len(), ambient);
        let mut pivots = Vec::with_capacity(rows.len());
        for (i, (p, row)) in rows.into_iter().enumerate() {
            pivots.push(p);
            for (c, v) in row {
                basis.set(i, c, v);
            }
        }
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    /// Span of the given vectors.
    pub fn span<V: AsRef<[Scalar]>>(ambient: usize, vectors: &[V]) -> Result<Self> {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            let v = v.as_ref();
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    actual: v.len(),
                });
            }
            e.insert_dense(v);
        }
        Ok(Self::from_echelon(&e))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Canonical basis; rows are the basis vectors.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                actual: n,
            });
        }
        Ok(())
    }

    /// Residual of `v` after reduction against the canonical basis.
    pub fn residual(&self, v: &[Scalar]) -> Result<Vector> {
        self.check_ambient(v.len())?;
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = r[p].clone();
            if !c.is_zero() {
                for (x, b) in r.iter_mut().zip(self.basis.row(i)) {
                    if !b.is_zero() {
                        *x -= &c * b;
                    }
                }
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.residual(v)?.iter().all(Zero::is_zero))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not a member.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Inverse of [`coordinates`](Self::coordinates).
    pub fn from_coordinates(&self, coords: &[Scalar]) -> Result<Vector> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: coords.len(),
            });
        }
        let mut v = zero_vec(self.ambient);
        for (i, c) in coords.iter().enumerate() {
            super::scalar::add_scaled(&mut v, c, self.basis.row(i));
        }
        Ok(v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        for i in 0..self.dim() {
            if !other.contains(self.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        let mut e = Echelon::new(self.ambient);
        for m in [&self.basis, &other.basis] {
            for i in 0..m.rows() {
                e.insert_dense(m.row(i));
            }
        }
        Ok(Self::from_echelon(&e))
    }

    /// Linear equations cutting out this subspace: rows `a` with `a·v = 0` for all members.
    pub fn annihilator(&self) -> Subspace {
        super::nullspace(&self.basis)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        let eqs = self
            .annihilator()
            .basis
            .vstack(&other.annihilator().basis)?;
        Ok(super::nullspace(&eqs))
    }

    /// Sum and intersection together.
    pub fn combine(&self, other: &Subspace) -> Result<(Subspace, Subspace)> {
        Ok((self.sum(other)?, self.intersection(other)?))
    }

    /// Image under a linear map given as a closure on vectors.
    pub fn map<F>(&self, target_dim: usize, f: F) -> Result<Subspace>
    where
        F: Fn(&[Scalar]) -> Vector,
    {
        let images: Vec<Vector> = (0..self.dim()).map(|i| f(self.basis.row(i))).collect();
        Subspace::span(target_dim, &images)
    }
}
