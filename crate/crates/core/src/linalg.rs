//! Small dense matrices over truncated series.

use std::ops::{Mul, Sub};

use crate::report::Residual;
use crate::scalar::{Scalar, ScalarError, Series};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMatrix<C: Scalar> {
    rows: usize,
    cols: usize,
    order: usize,
    data: Vec<Series<C>>,
}

impl<C: Scalar> SeriesMatrix<C> {
    pub fn zero(rows: usize, cols: usize, order: usize) -> Self {
        SeriesMatrix { rows, cols, order, data: vec![Series::zero(order); rows * cols] }
    }

    pub fn identity(n: usize, order: usize) -> Self {
        let mut m = Self::zero(n, n, order);
        for k in 0..n {
            m.set(k, k, Series::one(order));
        }
        m
    }

    /// Permutation matrix swapping the two tensor factors of `C^a ⊗ C^b`.
    pub fn swap(a: usize, b: usize, order: usize) -> Self {
        let mut m = Self::zero(a * b, a * b, order);
        for i in 0..a {
            for k in 0..b {
                m.set(k * a + i, i * b + k, Series::one(order));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Series<C> {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: Series<C>) {
        self.data[i * self.cols + j] = s;
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Series<C>)> {
        self.data.iter().enumerate().map(move |(k, s)| ((k / self.cols, k % self.cols), s))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Series::is_zero)
    }

    pub fn residual(&self) -> Residual {
        self.data.iter().fold(Residual::zero(), |r, s| r.merge(Residual::of_series(s)))
    }

    pub fn scale(&self, s: &Series<C>) -> Self {
        SeriesMatrix { rows: self.rows, cols: self.cols, order: self.order, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn try_map<D: Scalar, E>(&self, mut f: impl FnMut(&Series<C>) -> Result<Series<D>, E>) -> Result<SeriesMatrix<D>, E> {
        Ok(SeriesMatrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data: self.data.iter().map(&mut f).collect::<Result<_, _>>()?,
        })
    }

    /// Kronecker product.
    pub fn kron(&self, o: &Self) -> Self {
        let mut m = Self::zero(self.rows * o.rows, self.cols * o.cols, self.order);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        m.set(i * o.rows + k, j * o.cols + l, a * o.get(k, l));
                    }
                }
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows, self.order);
        for ((i, j), s) in self.entries() {
            m.set(j, i, s.clone());
        }
        m
    }

    /// Determinant by cofactor expansion (matrices here are at most 4x4).
    pub fn det(&self) -> Series<C> {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let idx: Vec<usize> = (0..self.cols).collect();
        self.det_minor(0, &idx)
    }

    fn det_minor(&self, row: usize, cols: &[usize]) -> Series<C> {
        if cols.is_empty() {
            return Series::one(self.order);
        }
        let mut acc = Series::zero(self.order);
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a * &self.det_minor(row + 1, &rest);
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Gauss-Jordan inverse; pivots must have invertible constant terms.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n, self.order);
        for col in 0..n {
            let piv = (col..n).find(|&r| a.get(r, col).coeff(0).try_inverse().is_some()).ok_or(ScalarError::NotUnit)?;
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                    inv.data.swap(piv * n + j, col * n + j);
                }
            }
            let p_inv = a.get(col, col).inverse()?;
            for j in 0..n {
                let x = a.get(col, j) * &p_inv;
                a.set(col, j, x);
                let y = inv.get(col, j) * &p_inv;
                inv.set(col, j, y);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let x = a.get(r, j) - &(&f * a.get(col, j));
                    a.set(r, j, x);
                    let y = inv.get(r, j) - &(&f * inv.get(col, j));
                    inv.set(r, j, y);
                }
            }
        }
        Ok(inv)
    }
}

impl<'a, C: Scalar> Mul<&'a SeriesMatrix<C>> for &'a SeriesMatrix<C> {
    type Output = SeriesMatrix<C>;
    fn mul(self, o: &SeriesMatrix<C>) -> SeriesMatrix<C> {
        assert_eq!(self.cols, o.rows, "matrix shape mismatch");
        let mut m = SeriesMatrix::zero(self.rows, o.cols, self.order);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let x = m.get(i, j) + &(a * b);
                        m.set(i, j, x);
                    }
                }
            }
        }
        m
    }
}

impl<'a, C: Scalar> Sub<&'a SeriesMatrix<C>> for &'a SeriesMatrix<C> {
    type Output = SeriesMatrix<C>;
    fn sub(self, o: &SeriesMatrix<C>) -> SeriesMatrix<C> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix shape mismatch");
        SeriesMatrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}
