//! Dense matrices over a [`Ring`], fraction-free determinants and
//! congruence transforms of symmetric matrices.

use std::fmt;

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
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

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).plus(&a.times(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn det(&self) -> Result<R> {
        det_bareiss(self)
    }
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every division performed is exact in `R`; a failure to divide exactly
/// is reported as an internal error.
pub fn det_bareiss<R: Ring>(m: &Matrix<R>) -> Result<R> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(R::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Ok(R::zero());
            };
            a.swap_rows(k, p);
            negate = !negate;
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            let aik = a.get(i, k).clone();
            for j in k + 1..n {
                let v = a
                    .get(i, j)
                    .times(&pivot)
                    .minus(&aik.times(a.get(k, j)))
                    .div_exact(&prev)
                    .ok_or_else(|| Error::Internal("inexact Bareiss division".into()))?;
                a.set(i, j, v);
            }
            a.set(i, k, R::zero());
        }
        prev = pivot;
    }
    let d = a.get(n - 1, n - 1).clone();
    Ok(if negate { d.negate() } else { d })
}

/// Determinant over ℚ(t): each row is multiplied by the product of its
/// distinct denominators, the polynomial determinant is taken by Bareiss,
/// and the cleared factor is divided back out.
pub fn det_ratfunc(m: &Matrix<RatFunc>) -> Result<RatFunc> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(
            "determinant of a non-square matrix".into(),
        ));
    }
    let mut cleared = Poly::constant(Ring::one(), 't');
    let mut rows = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let mut l = Poly::constant(Ring::one(), 't');
        for e in m.row(i) {
            if !e.is_zero() && !e.is_polynomial() {
                let g = l.gcd(e.den());
                l = (&l * e.den()).div_rem(&g)?.0;
            }
        }
        let row = m
            .row(i)
            .iter()
            .map(|e| {
                let (q, r) = (&l * e.num()).div_rem(e.den())?;
                if !r.is_zero() {
                    return Err(Error::Internal(
                        "denominator clearing left a remainder".into(),
                    ));
                }
                Ok(q)
            })
            .collect::<Result<Vec<_>>>()?;
        cleared = &cleared * &l;
        rows.push(row);
    }
    let d = det_bareiss(&Matrix::from_rows(rows)?)?;
    RatFunc::new(d, cleared)
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|c| c.to_string()).collect();
        let mut widths = vec![0; self.cols];
        for (k, s) in cells.iter().enumerate() {
            widths[k % self.cols.max(1)] = widths[k % self.cols.max(1)].max(s.chars().count());
        }
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>w$}", cells[i * self.cols + j], w = widths[j]))
                .collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// A square matrix equal to its transpose.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix<R> {
    inner: Matrix<R>,
}

impl<R: Ring> SymMatrix<R> {
    pub fn new(m: Matrix<R>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "symmetric matrix must be square, got {}x{}",
                m.rows, m.cols
            )));
        }
        if !m.is_symmetric() {
            return Err(Error::InvalidParameter("matrix is not symmetric".into()));
        }
        Ok(SymMatrix { inner: m })
    }

    /// Fills the upper triangle from `f(i, j)` with `i ≤ j` and mirrors it.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                if i != j {
                    m.set(j, i, v.clone());
                }
                m.set(i, j, v);
            }
        }
        SymMatrix { inner: m }
    }

    pub fn dim(&self) -> usize {
        self.inner.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        self.inner.get(i, j)
    }

    /// Sets entries `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.inner.set(j, i, v.clone());
        self.inner.set(i, j, v);
    }

    pub fn as_matrix(&self) -> &Matrix<R> {
        &self.inner
    }

    pub fn into_matrix(self) -> Matrix<R> {
        self.inner
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SymMatrix<S> {
        SymMatrix {
            inner: self.inner.map(f),
        }
    }

    pub fn det(&self) -> R {
        det_bareiss(&self.inner).expect("square by construction")
    }

    /// `Sᵀ·M·S`.
    pub fn congruence(&self, s: &Matrix<R>) -> Result<Self> {
        if !s.is_square() || s.rows != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "congruence of a {n}x{n} matrix by a {}x{} matrix",
                s.rows,
                s.cols,
                n = self.dim()
            )));
        }
        let out = s.transpose().mul(&self.inner)?.mul(s)?;
        if !out.is_symmetric() {
            return Err(Error::Internal("congruence broke symmetry".into()));
        }
        Ok(SymMatrix { inner: out })
    }
}

impl<R: Ring> fmt::Display for SymMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}
