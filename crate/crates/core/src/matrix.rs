//! Small dense matrices over real or complex scalars.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex;
use num_traits::{One, Zero};

use crate::scalar::{self, Real};

/// Singular values at or below this bound count as zero in [`float_kernel`].
pub const FLOAT_KERNEL_THRESHOLD: f64 = 1e-10;

/// Anything a matrix can be built from: a commutative ring with exact or
/// tolerant zero tests.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds from nested rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged matrix rows");
        Self {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |r, c| if r == c { entries[r].clone() } else { T::zero() })
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

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, factor: &T) -> Self {
        self.map(|x| x.clone() * factor.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Matrix product; zero entries of `self` are skipped, which keeps the
    /// sparse block matrices of this crate cheap on the exact backend.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn pow(&self, exponent: u32) -> Self {
        assert!(self.is_square());
        let mut result = Self::identity(self.rows);
        for _ in 0..exponent {
            result = result.matmul(self);
        }
        result
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        (0..self.rows).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Determinant by Laplace expansion along the first row. Intended for the
    /// small (n <= 4) matrices that appear here.
    pub fn det(&self) -> T {
        assert!(self.is_square());
        match self.rows {
            0 => T::one(),
            1 => self.get(0, 0).clone(),
            2 => {
                self.get(0, 0).clone() * self.get(1, 1).clone()
                    - self.get(0, 1).clone() * self.get(1, 0).clone()
            }
            n => {
                let mut acc = T::zero();
                for c in 0..n {
                    let a = self.get(0, c);
                    if a.is_zero() {
                        continue;
                    }
                    let term = a.clone() * self.minor(0, c).det();
                    acc = if c % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    /// The submatrix with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    /// Cofactor matrix: entry `(r, c)` is `(-1)^(r+c)` times the `(r, c)` minor.
    pub fn cofactors(&self) -> Self {
        assert!(self.is_square());
        Self::from_fn(self.rows, self.cols, |r, c| {
            let m = self.minor(r, c).det();
            if (r + c) % 2 == 0 {
                m
            } else {
                -m
            }
        })
    }

    /// Transposed cofactor matrix, `adj(A) * A = det(A) * I`.
    pub fn adjugate(&self) -> Self {
        self.cofactors().transpose()
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }
}

impl<T: Ring> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: Self) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Ring> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: Self) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: Self) -> Matrix<T> {
        self.matmul(rhs)
    }
}

/// Complex matrix over the real field `R`.
pub type CMatrix<R> = Matrix<Complex<R>>;

impl<R: Real> Matrix<Complex<R>> {
    pub fn conj(&self) -> Self {
        self.map(Complex::conj)
    }

    /// Hermitian conjugate `A⁺`.
    pub fn adjoint(&self) -> Self {
        self.conj().transpose()
    }

    /// Largest `max(|re|, |im|)` over all entries, as a double.
    pub fn max_abs(&self) -> f64 {
        self.entries().map(scalar::max_abs_f64).fold(0.0, f64::max)
    }

    /// Entrywise comparison with the backend's notion of closeness.
    pub fn close_to(&self, other: &Self, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .entries()
                .zip(other.entries())
                .all(|(a, b)| scalar::close(a, b, tol))
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Self::identity(n));
        let pivots = rref(&mut aug, n, 1e-12);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(aug.block(0, n, n, n))
    }

    pub fn to_float(&self) -> CMatrix<f64> {
        self.map(|z| Complex::new(z.re.to_f64(), z.im.to_f64()))
    }
}

impl<R: Real> Matrix<R> {
    pub fn max_abs_real(&self) -> f64 {
        self.entries().map(|x| x.to_f64().abs()).fold(0.0, f64::max)
    }

    pub fn close_to_real(&self, other: &Self, tol: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .entries()
                .zip(other.entries())
                .all(|(a, b)| a.close_to(b, tol))
    }
}

/// Reduces the first `pivot_cols` columns of `m` to reduced row echelon form
/// in place. Returns the pivot column of each pivot row. On exact backends the
/// pivot test is exact and `tol` is ignored; on float backends the pivot is
/// the entry of largest modulus and entries with modulus at or below `tol`
/// count as zero.
fn rref<R: Real>(m: &mut CMatrix<R>, pivot_cols: usize, tol: f64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..pivot_cols {
        if row == m.rows {
            break;
        }
        let candidate = if R::EXACT {
            (row..m.rows).find(|&r| !m.get(r, col).is_zero())
        } else {
            (row..m.rows)
                .map(|r| (r, m.get(r, col).norm_sqr().to_f64()))
                .filter(|(_, n)| n.sqrt() > tol)
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .map(|(r, _)| r)
        };
        let Some(pivot_row) = candidate else { continue };
        if pivot_row != row {
            for c in 0..m.cols {
                m.data.swap(pivot_row * m.cols + c, row * m.cols + c);
            }
        }
        let inv = scalar::inverse(m.get(row, col)).expect("nonzero pivot");
        for c in 0..m.cols {
            let v = m.get(row, c).clone() * inv.clone();
            m.set(row, c, v);
        }
        for r in (0..m.rows).filter(|&r| r != row) {
            let factor = m.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            for c in 0..m.cols {
                let v = m.get(r, c).clone() - factor.clone() * m.get(row, c).clone();
                m.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Exact kernel basis by Gauss-Jordan elimination over the Gaussian
/// rationals. One basis column per free variable; the free variable is set
/// to one and the other free variables to zero.
pub fn exact_kernel<R: Real>(matrix: &CMatrix<R>) -> Vec<Vec<Complex<R>>> {
    let mut m = matrix.clone();
    let pivots = rref(&mut m, matrix.cols, 0.0);
    let free: Vec<usize> = (0..matrix.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Complex::<R>::zero(); matrix.cols];
            v[f] = Complex::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -m.get(prow, f).clone();
            }
            v
        })
        .collect()
}

/// Float kernel basis: right singular vectors whose singular value is at or
/// below `threshold · max(1, σ_max)` (plus the trailing vectors of a wide
/// matrix).
pub fn float_kernel<R: Real>(matrix: &CMatrix<R>, threshold: f64) -> Vec<Vec<Complex<R>>> {
    let (rows, cols) = (matrix.rows(), matrix.cols());
    // pad wide matrices with zero rows so the SVD returns a full V
    let n = rows.max(cols);
    let dm = DMatrix::<Complex<f64>>::from_fn(n, cols, |r, c| {
        if r < rows {
            let z = matrix.get(r, c);
            Complex::new(z.re.to_f64(), z.im.to_f64())
        } else {
            Complex::new(0.0, 0.0)
        }
    });
    let svd = dm.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let cutoff = threshold * svd.singular_values.iter().copied().fold(1.0, f64::max);
    svd.singular_values
        .iter()
        .enumerate()
        .filter(|(_, s)| **s <= cutoff)
        .map(|(k, _)| {
            (0..cols)
                .map(|c| {
                    let z = v_t[(k, c)].conj();
                    Complex::new(
                        R::from_f64(z.re).expect("finite"),
                        R::from_f64(z.im).expect("finite"),
                    )
                })
                .collect()
        })
        .collect()
}

/// Rank of a complex matrix under the backend's zero test.
pub fn rank<R: Real>(matrix: &CMatrix<R>) -> usize {
    matrix.cols() - R::kernel(matrix).len()
}
