use std::fmt;

use super::cyclotomic::CycNum;
use super::ratfunc::TRat;
use crate::error::{Error, Result};

/// The exact scalar types used by the dense linear algebra below.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn conj(&self) -> Self;
}

impl Scalar for CycNum {
    fn zero_like(&self) -> Self {
        CycNum::zero(self.order())
    }
    fn one_like(&self) -> Self {
        CycNum::one(self.order())
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        CycNum::inv(self)
    }
    fn conj(&self) -> Self {
        CycNum::conj(self)
    }
}

impl Scalar for TRat {
    fn zero_like(&self) -> Self {
        TRat::zero()
    }
    fn one_like(&self) -> Self {
        TRat::one()
    }
    fn is_zero(&self) -> bool {
        TRat::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        TRat::inv(self)
    }
    fn conj(&self) -> Self {
        TRat::conj(self)
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn filled(rows: usize, cols: usize, v: T) -> Mat<T> {
        Mat {
            rows,
            cols,
            data: vec![v; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Mat<T> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Mat<T> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize, one: &T) -> Mat<T> {
        let zero = one.zero_like();
        Mat::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&T) -> T) -> Mat<T> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn conj(&self) -> Mat<T> {
        self.map(|x| x.conj())
    }

    pub fn sub_matrix(&self, rows: &[usize], cols: &[usize]) -> Mat<T> {
        Mat::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn mul(&self, o: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let zero = self.data.first().or(o.data.first()).map(|x| x.zero_like());
        Mat::from_fn(self.rows, o.cols, |i, j| {
            let mut acc = zero.clone().expect("nonempty");
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = o.get(k, j);
                if b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b));
            }
            acc
        })
    }

    pub fn add(&self, o: &Mat<T>) -> Mat<T> {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Mat<T>) -> Mat<T> {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Solves A X = B for square nonsingular A.
    pub fn solve(&self, b: &Mat<T>) -> Result<Mat<T>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, b.rows);
        let n = self.rows;
        let m = b.cols;
        let mut a = self.clone();
        let mut x = b.clone();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or_else(|| Error::Singular(format!("no pivot in column {}", col)))?;
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                }
                for j in 0..m {
                    x.data.swap(piv * m + j, col * m + j);
                }
            }
            let pinv = a.get(col, col).inv()?;
            for j in col..n {
                let v = a.get(col, j).mul(&pinv);
                a.set(col, j, v);
            }
            for j in 0..m {
                let v = x.get(col, j).mul(&pinv);
                x.set(col, j, v);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in col..n {
                    let v = a.get(r, j).sub(&f.mul(a.get(col, j)));
                    a.set(r, j, v);
                }
                for j in 0..m {
                    let xc = x.get(col, j);
                    if xc.is_zero() {
                        continue;
                    }
                    let v = x.get(r, j).sub(&f.mul(xc));
                    x.set(r, j, v);
                }
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Mat<T>> {
        let one = self.data.first().expect("nonempty").one_like();
        self.solve(&Mat::identity(self.rows, &one))
    }

    /// Solves X A = B, i.e. the transpose system.
    pub fn solve_right(&self, b: &Mat<T>) -> Result<Mat<T>> {
        Ok(self.transpose().solve(&b.transpose())?.transpose())
    }

    /// Least-structure solve of an overdetermined consistent system A x = B (A has full column rank).
    pub fn solve_consistent(&self, b: &Mat<T>) -> Result<Mat<T>> {
        let n = self.cols;
        let m = b.cols;
        let mut a = self.clone();
        let mut x = b.clone();
        let mut pivots = Vec::with_capacity(n);
        let mut row = 0;
        for col in 0..n {
            let piv = (row..a.rows)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or_else(|| Error::Singular(format!("rank deficiency at column {}", col)))?;
            if piv != row {
                for j in 0..n {
                    a.data.swap(piv * n + j, row * n + j);
                }
                for j in 0..m {
                    x.data.swap(piv * m + j, row * m + j);
                }
            }
            let pinv = a.get(row, col).inv()?;
            for j in col..n {
                let v = a.get(row, j).mul(&pinv);
                a.set(row, j, v);
            }
            for j in 0..m {
                let v = x.get(row, j).mul(&pinv);
                x.set(row, j, v);
            }
            for r in 0..a.rows {
                if r == row || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in col..n {
                    let v = a.get(r, j).sub(&f.mul(a.get(row, j)));
                    a.set(r, j, v);
                }
                for j in 0..m {
                    let v = x.get(r, j).sub(&f.mul(x.get(row, j)));
                    x.set(r, j, v);
                }
            }
            pivots.push(row);
            row += 1;
        }
        for r in row..x.rows {
            if (0..m).any(|j| !x.get(r, j).is_zero()) {
                return Err(Error::Invariant("inconsistent linear system".into()));
            }
        }
        Ok(Mat::from_fn(n, m, |i, j| x.get(pivots[i], j).clone()))
    }
}

impl<T: fmt::Debug> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?}, ", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
