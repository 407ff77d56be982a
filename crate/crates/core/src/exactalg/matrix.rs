use std::fmt;

use num_traits::Zero;

use super::ring::{scalar_to_json, Ring, Scalar};
use crate::error::{Error, Result};

/// Dense matrix over an exact ring. Matrices act on column vectors, so the
/// composite "g after f" is the product `g * f`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{}[", self.ring, self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        Matrix {
            ring,
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_vec(ring: Ring, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let data = data.into_iter().map(|v| ring.normalize(v)).collect();
        Ok(Matrix { ring, rows, cols, data })
    }

    /// Builds a matrix from integer rows. Panics on ragged input, so it is
    /// meant for literals.
    pub fn from_rows(ring: Ring, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows_with_cols(ring, rows, cols)
    }

    /// Like [`Matrix::from_rows`] but keeps the column count when there are
    /// no rows.
    pub fn from_rows_with_cols(ring: Ring, rows: &[&[i64]], cols: usize) -> Self {
        let mut m = Self::zeros(ring, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix literal");
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, ring.from_i64(*v));
            }
        }
        m
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        let v = self.ring.normalize(v);
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Scalar) {
        let cur = self.get(r, c).clone();
        self.set(r, c, self.ring.add(&cur, v));
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.ring, self.rows)
    }

    fn check_ring(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), other.ring.to_string()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.ring, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        let ring = self.ring;
        out.data.iter_mut().for_each(|v| *v = ring.normalize(v.clone()));
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |r, a, b| r.add(a, b))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |r, a, b| r.sub(a, b))
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Ring, &Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        self.check_ring(other)?;
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch(format!(
                "{:?} vs {:?}",
                self.shape(),
                other.shape()
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f(&self.ring, a, b))
            .collect();
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|v| self.ring.neg(v)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|v| self.ring.mul(v, s)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.ring, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        out
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        let mut out = Matrix::zeros(self.ring, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(out)
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            ring: self.ring,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn block_diag(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        let mut out = Matrix::zeros(self.ring, self.rows + other.rows, self.cols + other.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, other);
        Ok(out)
    }

    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let mut out = Matrix::zeros(self.ring, rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn column(&self, c: usize) -> Matrix {
        self.submatrix(0..self.rows, c..c + 1)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: &Scalar) {
        for c in 0..self.cols {
            let v = self.ring.mul(self.get(src, c), k);
            self.add_to(dst, c, &v);
        }
    }

    /// col[dst] += k * col[src]
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: &Scalar) {
        for r in 0..self.rows {
            let v = self.ring.mul(self.get(r, src), k);
            self.add_to(r, dst, &v);
        }
    }

    pub fn scale_row(&mut self, r: usize, k: &Scalar) {
        for c in 0..self.cols {
            let v = self.ring.mul(self.get(r, c), k);
            self.set(r, c, v);
        }
    }

    pub fn scale_col(&mut self, c: usize, k: &Scalar) {
        for r in 0..self.rows {
            let v = self.ring.mul(self.get(r, c), k);
            self.set(r, c, v);
        }
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.rows)
            .map(|r| serde_json::Value::Array((0..self.cols).map(|c| scalar_to_json(self.get(r, c))).collect()))
            .collect();
        serde_json::json!({ "rows": self.rows, "cols": self.cols, "entries": rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_identity() {
        let z = Ring::Integers;
        let a = Matrix::from_rows(z, &[&[1, 2], &[3, 4]]);
        let i = Matrix::identity(z, 2);
        assert_eq!(a.mul(&i).unwrap(), a);
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq, Matrix::from_rows(z, &[&[7, 10], &[15, 22]]));
    }

    #[test]
    fn empty_shapes_multiply() {
        let z = Ring::Integers;
        let a = Matrix::zeros(z, 3, 0);
        let b = Matrix::zeros(z, 0, 2);
        assert_eq!(a.mul(&b).unwrap(), Matrix::zeros(z, 3, 2));
        assert!(Matrix::identity(z, 0).is_identity());
    }

    #[test]
    fn mismatched_shapes_error() {
        let z = Ring::Integers;
        let a = Matrix::zeros(z, 2, 3);
        assert!(matches!(a.mul(&a), Err(Error::DimensionMismatch(_))));
        let q = Matrix::zeros(Ring::Rationals, 3, 3);
        assert!(matches!(a.mul(&q), Err(Error::RingMismatch(..))));
    }
}
