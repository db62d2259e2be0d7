//! Hermitian 3×3 matrices, the λ-basis, and 9-vector components.
//!
//! `Herm(3)` is a 9-dimensional real vector space. A [`NineVector`] holds the
//! real components `X⁰..X⁸` of a [`Herm3`] in the basis `λ_0..λ_8`, where
//! `λ_1..λ_7` are the Gell-Mann matrices, `λ_0 = diag(1, 1, 0)` and
//! `λ_8 = diag(0, 0, 1)`. The dual family `λ^A` equals `λ_A` except
//! `λ^8 = 2 λ_8`, which makes `Tr(λ^A λ_B) = 2 δ^A_B`.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{CMatrix, Matrix};
use crate::scalar::{self, cx_int, Real};

/// Absolute tolerance for the Hermiticity test on the float backend.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Real components `X^A`, `A = 0..8`, in the λ-basis.
#[derive(Clone, Debug, PartialEq)]
pub struct NineVector<R: Real>(pub [R; 9]);

impl<R: Real> NineVector<R> {
    pub fn new(components: [R; 9]) -> Self {
        Self(components)
    }

    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| R::zero()))
    }

    /// The unit vector `e_A`.
    pub fn unit(a: usize) -> Self {
        let mut v = Self::zero();
        v.0[a] = R::one();
        v
    }

    pub fn from_i64(values: [i64; 9]) -> Self {
        Self(values.map(R::from_i64))
    }

    pub fn from_slice(values: &[R]) -> Result<Self> {
        if values.len() != 9 {
            return Err(Error::Arity {
                expected: 9,
                got: values.len(),
            });
        }
        Ok(Self(std::array::from_fn(|a| values[a].clone())))
    }

    pub fn components(&self) -> &[R; 9] {
        &self.0
    }

    pub fn get(&self, a: usize) -> &R {
        &self.0[a]
    }

    pub fn scale(&self, factor: &R) -> Self {
        Self(std::array::from_fn(|a| self.0[a].clone() * factor.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|a| self.0[a].clone() + other.0[a].clone()))
    }

    pub fn to_float(&self) -> NineVector<f64> {
        NineVector(std::array::from_fn(|a| self.0[a].to_f64()))
    }
}

/// A Hermitian 3×3 complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Herm3<R: Real>(CMatrix<R>);

impl<R: Real> Herm3<R> {
    /// Validates `X = X⁺`: exactly on the exact backend, within
    /// [`HERMITIAN_TOL`] (absolute) on the float backend.
    pub fn new(matrix: CMatrix<R>) -> Result<Self> {
        assert!(matrix.rows() == 3 && matrix.cols() == 3, "Herm3 must be 3x3");
        for r in 0..3 {
            for c in r..3 {
                let diff = matrix.get(r, c).clone() - matrix.get(c, r).conj();
                if !scalar::is_negligible(&diff, HERMITIAN_TOL) {
                    return Err(Error::NotHermitian { row: r, col: c });
                }
            }
        }
        Ok(Self(matrix))
    }

    pub fn identity() -> Self {
        Self(Matrix::identity(3))
    }

    pub fn matrix(&self) -> &CMatrix<R> {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix<R> {
        self.0
    }

    /// `det X`; real for Hermitian `X` (the imaginary part is dropped).
    pub fn det(&self) -> R {
        self.0.det().re
    }

    pub(crate) fn from_trusted(matrix: CMatrix<R>) -> Self {
        Self(matrix)
    }
}

/// The two families `λ_A` and `λ^A`.
#[derive(Clone, Debug)]
pub struct LambdaBasis<R: Real> {
    pub lower: [CMatrix<R>; 9],
    pub upper: [CMatrix<R>; 9],
}

impl<R: Real> LambdaBasis<R> {
    pub fn new() -> Self {
        let lower: [CMatrix<R>; 9] = std::array::from_fn(lambda_lower);
        let upper = std::array::from_fn(|a| {
            if a == 8 {
                lower[8].scale(&cx_int(2, 0))
            } else {
                lower[a].clone()
            }
        });
        Self { lower, upper }
    }

    /// `Tr(λ^A λ_B)` for all 81 pairs, row `A`, column `B`.
    pub fn trace_table(&self) -> Matrix<Complex<R>> {
        Matrix::from_fn(9, 9, |a, b| self.upper[a].matmul(&self.lower[b]).trace())
    }
}

impl<R: Real> Default for LambdaBasis<R> {
    fn default() -> Self {
        Self::new()
    }
}

/// `λ_A` for `A` in `0..9`.
pub fn lambda_lower<R: Real>(a: usize) -> CMatrix<R> {
    let z = || Complex::<R>::zero();
    let one = || Complex::<R>::one();
    let i = || scalar::imag_unit::<R>();
    let mut m = Matrix::<Complex<R>>::zeros(3, 3);
    let mut put = |r: usize, c: usize, v: Complex<R>| m.set(r, c, v);
    match a {
        0 => {
            put(0, 0, one());
            put(1, 1, one());
        }
        1 => {
            put(0, 1, one());
            put(1, 0, one());
        }
        2 => {
            put(0, 1, z() - i());
            put(1, 0, i());
        }
        3 => {
            put(0, 0, one());
            put(1, 1, z() - one());
        }
        4 => {
            put(0, 2, one());
            put(2, 0, one());
        }
        5 => {
            put(0, 2, z() - i());
            put(2, 0, i());
        }
        6 => {
            put(1, 2, one());
            put(2, 1, one());
        }
        7 => {
            put(1, 2, z() - i());
            put(2, 1, i());
        }
        8 => put(2, 2, one()),
        _ => panic!("λ-basis index {a} out of range"),
    }
    m
}

/// `X = X^A λ_A`.
pub fn herm_from_components<R: Real>(x: &NineVector<R>) -> Herm3<R> {
    let mut acc = Matrix::<Complex<R>>::zeros(3, 3);
    for (a, xa) in x.0.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        acc = &acc + &lambda_lower::<R>(a).scale(&scalar::real(xa.clone()));
    }
    Herm3::from_trusted(acc)
}

/// `X^A = ½ Tr(λ^A X)`.
pub fn components_from_herm<R: Real>(x: &Herm3<R>) -> NineVector<R> {
    let basis = LambdaBasis::<R>::new();
    let half = R::from_ratio(1, 2);
    NineVector(std::array::from_fn(|a| {
        basis.upper[a].matmul(x.matrix()).trace().re * half.clone()
    }))
}

/// Validating variant of [`components_from_herm`] for a raw matrix.
pub fn components_from_matrix<R: Real>(x: &CMatrix<R>) -> Result<NineVector<R>> {
    Ok(components_from_herm(&Herm3::new(x.clone())?))
}
