//! Small dense matrices over `Cyclo` with exact elimination.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalars::Cyclo;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Cyclo>,
}

pub type Mat2 = Matrix;
pub type Mat3 = Matrix;
pub type Mat4 = Matrix;

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Cyclo::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Cyclo::one();
        }
        m
    }

    pub fn diag(entries: &[Cyclo]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Cyclo>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Cyclo::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Cyclo] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Cyclo>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map(&self, f: impl Fn(&Cyclo) -> Cyclo) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Cyclo) -> Matrix {
        self.map(|x| x * c)
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Matrix {
        self.map(Cyclo::conj)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn adjoint(&self) -> Matrix {
        self.conj().transpose()
    }

    pub fn trace(&self) -> Cyclo {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cyclo::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(Cyclo::is_real)
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        self.add(&o.scale(&Cyclo::from_int(-1)))
    }

    /// Determinant by elimination; returns zero for singular input.
    pub fn det(&self) -> Cyclo {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Cyclo::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Cyclo::zero();
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pivot = a[(col, col)].clone();
            det *= &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] * &inv;
                for c in col..n {
                    let delta = &f * &a[(col, c)];
                    a[(r, c)] -= &delta;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Solve `self · X = rhs` for square nonsingular `self`.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix> {
        if !self.is_square() || rhs.rows != self.rows {
            return Err(Error::InvalidArgument("incompatible shapes for solve".into()));
        }
        let n = self.rows;
        let m = rhs.cols;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap_rows(p, col);
            b.swap_rows(p, col);
            let inv = a[(col, col)].inv()?;
            for c in 0..n {
                a[(col, c)] *= &inv;
            }
            for c in 0..m {
                b[(col, c)] *= &inv;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    let delta = &f * &a[(col, c)];
                    a[(r, c)] -= &delta;
                }
                for c in 0..m {
                    let delta = &f * &b[(col, c)];
                    b[(r, c)] -= &delta;
                }
            }
        }
        Ok(b)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.solve(&Matrix::identity(self.rows))
    }

    pub fn pow(&self, k: u32) -> Matrix {
        (0..k).fold(Matrix::identity(self.rows), |acc, _| &acc * self)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Cyclo;
    fn index(&self, (i, j): (usize, usize)) -> &Cyclo {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cyclo {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let t = a * &o[(k, j)];
                    out[(i, j)] += &t;
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(";")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        Ok(())
    }
}

/// Rows separated by `;`, entries by `,`, each entry in scalar syntax.
impl FromStr for Matrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| row.split(',').map(|e| e.trim().parse::<Cyclo>()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let c = rows.first().map_or(0, Vec::len);
        if c == 0 || rows.iter().any(|r| r.len() != c) {
            return Err(Error::Parse(format!("malformed matrix `{s}`")));
        }
        Ok(Matrix::from_rows(rows))
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_inverse() {
        let m = Matrix::from_ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.det(), Cyclo::from_int(18));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(3));
        let sing = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert!(sing.det().is_zero());
        assert_eq!(sing.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn det_needs_row_swap() {
        let m = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.det(), Cyclo::from_int(-1));
    }

    #[test]
    fn parse_roundtrip() {
        let m: Matrix = "j, 1/2; 0, -i".parse().unwrap();
        assert_eq!(m[(0, 0)], Cyclo::j());
        assert_eq!(m[(1, 1)], -Cyclo::i());
        assert_eq!(m.to_string().parse::<Matrix>().unwrap(), m);
        assert!("1,2;3".parse::<Matrix>().is_err());
    }

    #[test]
    fn adjoint_of_complex_entries() {
        let m: Matrix = "i, j; 0, 1".parse().unwrap();
        let a = m.adjoint();
        assert_eq!(a[(0, 0)], -Cyclo::i());
        assert_eq!(a[(1, 0)], Cyclo::j2());
    }
}
