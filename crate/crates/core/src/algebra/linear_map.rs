use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Vector};

/// Endomorphism of an algebra's underlying space.
///
/// Stored as the matrix `M` with `φ(e_j) = Σ_i M[i][j] e_i`; the coordinate vector
/// used by the solvers is `M` flattened row-major, so entry `(i, j)` sits at `i*n + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                actual: matrix.cols(),
            });
        }
        Ok(Self { matrix })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            matrix: Matrix::identity(n),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            matrix: Matrix::zeros(n, n),
        }
    }

    pub fn from_vector(n: usize, v: &[Scalar]) -> Result<Self> {
        Ok(Self {
            matrix: Matrix::from_row_major(n, n, v.to_vec())?,
        })
    }

    /// `images[j] = φ(e_j)`.
    pub fn from_images(images: &[Vector]) -> Result<Self> {
        let n = images.len();
        Self::new(Matrix::from_rows(n, images.to_vec())?.transpose())
    }

    pub fn to_vector(&self) -> Vector {
        self.matrix.as_row_major().to_vec()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        self.matrix.mul_vec(v)
    }

    /// `φ(e_j)`.
    pub fn image_of_basis(&self, j: usize) -> Vector {
        self.matrix.column(j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(Self {
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(Self {
            matrix: self.matrix.add(&other.matrix)?,
        })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(Self {
            matrix: self.matrix.sub(&other.matrix)?,
        })
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        Self {
            matrix: self.matrix.scale(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `self ⊗ other` acting on `A ⊗ B` with basis index `i * dim(B) + j`.
    pub fn tensor(&self, other: &LinearMap) -> LinearMap {
        Self {
            matrix: self.matrix.kron(&other.matrix),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::int;

    #[test]
    fn images_and_vectorization() {
        // φ(e0) = e1, φ(e1) = 0
        let phi = LinearMap::from_images(&[vec![int(0), int(1)], vec![int(0), int(0)]]).unwrap();
        assert_eq!(phi.to_vector(), vec![int(0), int(0), int(1), int(0)]);
        assert_eq!(phi.apply(&[int(1), int(0)]).unwrap(), vec![int(0), int(1)]);
        assert!(phi.compose(&phi).unwrap().is_zero());
    }

    #[test]
    fn tensor_acts_factorwise() {
        let a = LinearMap::from_images(&[vec![int(0), int(1)], vec![int(1), int(0)]]).unwrap();
        let b = LinearMap::identity(2);
        let ab = a.tensor(&b);
        // e0⊗f1 (index 1) ↦ e1⊗f1 (index 3)
        assert_eq!(ab.image_of_basis(1), vec![int(0), int(0), int(0), int(1)]);
    }
}
