//! Bilinear forms on coordinate spaces.

use crate::error::{check_dim, Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Symmetric,
    Skew,
    General,
}

/// `B(x,y) = Σ x_a m[a][b] y_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Matrix,
    symmetry: Symmetry,
}

impl BilinearForm {
    /// Validates that `matrix` is square and has the declared symmetry.
    pub fn new(matrix: Matrix, symmetry: Symmetry) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::InvalidArgument("bilinear form needs a square matrix".into()));
        }
        let ok = match symmetry {
            Symmetry::Symmetric => matrix.is_symmetric(),
            Symmetry::Skew => matrix.is_skew(),
            Symmetry::General => true,
        };
        if !ok {
            return Err(Error::InvalidArgument(format!("matrix is not {symmetry:?}")));
        }
        Ok(BilinearForm { matrix, symmetry })
    }

    /// Tags the matrix with the strongest symmetry it has.
    pub fn detect(matrix: Matrix) -> Result<Self> {
        let symmetry = if matrix.is_symmetric() {
            Symmetry::Symmetric
        } else if matrix.is_skew() {
            Symmetry::Skew
        } else {
            Symmetry::General
        };
        Self::new(matrix, symmetry)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.matrix.determinant().expect("square").is_zero()
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Result<Scalar> {
        check_dim(self.dim(), x.dim())?;
        x.pairing(&self.matrix.apply(y)?)
    }

    /// `B(e_a, v)` for a 0-based basis index.
    pub(crate) fn eval_basis_left(&self, a: usize, v: &[Scalar]) -> Scalar {
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(b, c)| self.matrix.entry(a, b) * c).sum()
    }

    /// `B(v, e_b)` for a 0-based basis index.
    pub(crate) fn eval_basis_right(&self, v: &[Scalar], b: usize) -> Scalar {
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(a, c)| c * self.matrix.entry(a, b)).sum()
    }
}
