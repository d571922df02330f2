//! Coordinate vectors and matrices with exact elimination.

use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, check_index, Error, Result};
use crate::scalar::Scalar;

/// A coordinate vector in a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector {
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector { coords: vec![Scalar::zero(); n] }
    }

    /// The basis vector `e_i` (1-based) of `F^n`.
    pub fn basis(i: usize, n: usize) -> Result<Self> {
        check_index(i, n)?;
        let mut v = Vector::zeros(n);
        v.coords[i - 1] = Scalar::one();
        Ok(v)
    }

    pub fn from_vec(coords: Vec<Scalar>) -> Self {
        Vector { coords }
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector { coords: xs.iter().map(|&x| Scalar::from_int(x)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn component(&self, i: usize) -> Result<&Scalar> {
        check_index(i, self.dim())?;
        Ok(&self.coords[i - 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector { coords: self.coords.iter().map(|c| c * s).collect() }
    }

    /// The natural pairing `Σ x_i y_i`.
    pub fn pairing(&self, other: &Vector) -> Result<Scalar> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.coords.iter().zip(&other.coords).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum())
    }

    /// First nonzero coordinate as (1-based index, value).
    pub fn first_nonzero(&self) -> Option<(usize, &Scalar)> {
        self.coords.iter().enumerate().find(|(_, c)| !c.is_zero()).map(|(k, c)| (k + 1, c))
    }

    /// Concatenation `(self, other)` in `F^{n+m}`.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut coords = self.coords.clone();
        coords.extend_from_slice(&other.coords);
        Vector { coords }
    }
}

impl<'a> Add<&'a Vector> for &'a Vector {
    type Output = Vector;
    /// Panics on dimension mismatch.
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Vector> for &'a Vector {
    type Output = Vector;
    /// Panics on dimension mismatch.
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

/// A matrix acting on column vectors: `m[a][b]` is the coefficient of `e_a` in `m(e_b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m.data[k * n + k] = Scalar::one();
        }
        m
    }

    /// Builds from a function of 1-based (row, column).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for a in 1..=rows {
            for b in 1..=cols {
                data.push(f(a, b));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            check_dim(c, row.len())?;
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
    }

    /// The matrix whose `b`-th column is `columns[b]`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        for c in columns {
            check_dim(rows, c.dim())?;
        }
        Ok(Matrix::from_fn(rows, columns.len(), |a, b| columns[b - 1].coords()[a - 1].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.data.chunks(self.cols).map(<[Scalar]>::to_vec).collect()
    }

    pub fn get(&self, a: usize, b: usize) -> Result<&Scalar> {
        check_index(a, self.rows)?;
        check_index(b, self.cols)?;
        Ok(&self.data[(a - 1) * self.cols + (b - 1)])
    }

    pub fn set(&mut self, a: usize, b: usize, value: Scalar) -> Result<()> {
        check_index(a, self.rows)?;
        check_index(b, self.cols)?;
        self.data[(a - 1) * self.cols + (b - 1)] = value;
        Ok(())
    }

    /// 0-based unchecked access.
    pub(crate) fn entry(&self, a: usize, b: usize) -> &Scalar {
        &self.data[a * self.cols + b]
    }

    pub(crate) fn entry_mut(&mut self, a: usize, b: usize) -> &mut Scalar {
        &mut self.data[a * self.cols + b]
    }

    pub fn column(&self, b: usize) -> Result<Vector> {
        check_index(b, self.cols)?;
        Ok(Vector::from_vec((0..self.rows).map(|a| self.entry(a, b - 1).clone()).collect()))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |a, b| self.entry(b - 1, a - 1).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|c| c * s).collect() }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.cols, other.rows)?;
        let mut out = Matrix::zeros(self.rows, other.cols);
        for a in 0..self.rows {
            for k in 0..self.cols {
                let x = self.entry(a, k);
                if x.is_zero() {
                    continue;
                }
                for b in 0..other.cols {
                    let y = other.entry(k, b);
                    if !y.is_zero() {
                        *out.entry_mut(a, b) += &(x * y);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        check_dim(self.cols, v.dim())?;
        let mut out = vec![Scalar::zero(); self.rows];
        for (b, x) in v.coords().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (a, o) in out.iter_mut().enumerate() {
                let m = self.entry(a, b);
                if !m.is_zero() {
                    *o += &(m * x);
                }
            }
        }
        Ok(Vector::from_vec(out))
    }

    /// Commutator `self·other − other·self`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        Ok(&self.mul(other)? - &other.mul(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && *self == -&self.transpose()
    }

    /// First nonzero entry as (1-based row, 1-based column, value).
    pub fn first_nonzero(&self) -> Option<(usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k / self.cols + 1, k % self.cols + 1, c))
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.eliminate(None).0
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::InvalidArgument("determinant of a non-square matrix".into()));
        }
        let mut work = self.clone();
        let (rank, det) = work.eliminate(None);
        Ok(if rank < self.rows { Scalar::zero() } else { det })
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::InvalidArgument("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = Matrix::identity(n);
        let (rank, _) = work.eliminate(Some(&mut inv));
        if rank < n {
            return Err(Error::Singular("matrix is not invertible".into()));
        }
        Ok(inv)
    }

    /// Gauss-Jordan elimination in place, mirroring row operations on `aug`.
    /// Returns the rank and the product of pivots with permutation sign.
    fn eliminate(&mut self, mut aug: Option<&mut Matrix>) -> (usize, Scalar) {
        let mut det = Scalar::one();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.entry(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                self.swap_rows(p, row);
                if let Some(m) = aug.as_deref_mut() {
                    m.swap_rows(p, row);
                }
                det = -det;
            }
            let pivot = self.entry(row, col).clone();
            det = &det * &pivot;
            let inv = pivot.recip().expect("nonzero pivot");
            self.scale_row(row, &inv);
            if let Some(m) = aug.as_deref_mut() {
                m.scale_row(row, &inv);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let f = self.entry(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                self.axpy_row(r, row, &f);
                if let Some(m) = aug.as_deref_mut() {
                    m.axpy_row(r, row, &f);
                }
            }
            row += 1;
        }
        (row, det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for c in 0..self.cols {
            let x = self.entry_mut(r, c);
            if !x.is_zero() {
                *x = &*x * s;
            }
        }
    }

    /// row[target] -= f * row[source]
    fn axpy_row(&mut self, target: usize, source: usize, f: &Scalar) {
        for c in 0..self.cols {
            let s = self.entry(source, c);
            if s.is_zero() {
                continue;
            }
            let d = f * s;
            *self.entry_mut(target, c) -= &d;
        }
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    /// Panics on shape mismatch.
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    /// Panics on shape mismatch.
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|c| -c).collect() }
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Scalar>>::deserialize(d)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_int_rows(&[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]).unwrap();
        assert_eq!(m.determinant().unwrap(), Scalar::from_int(5));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(3));
        let s = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(s.rank(), 1);
        assert!(s.determinant().unwrap().is_zero());
        assert!(matches!(s.inverse(), Err(Error::Singular(_))));
    }

    #[test]
    fn row_swap_sign() {
        let m = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(m.determinant().unwrap(), Scalar::from_int(-1));
    }

    #[test]
    fn complex_entries() {
        let i = Scalar::i();
        let m = Matrix::from_rows(vec![vec![Scalar::one(), i.clone()], vec![-&i, Scalar::from_int(2)]]).unwrap();
        assert_eq!(m.determinant().unwrap(), Scalar::one());
        assert_eq!(m.mul(&m.inverse().unwrap()).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn apply_matches_columns() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[3, 4], &[5, 6]]).unwrap();
        let e2 = Vector::basis(2, 2).unwrap();
        assert_eq!(m.apply(&e2).unwrap(), m.column(2).unwrap());
        assert!(m.apply(&Vector::zeros(3)).is_err());
        assert!(m.get(4, 1).is_err());
    }
}
