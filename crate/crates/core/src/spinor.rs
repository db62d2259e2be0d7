//! Finslerian 3-spinors and their symplectic 3-product.

use num_complex::Complex;
use num_traits::Zero;

use crate::scalar::Real;

/// A Finslerian 3-spinor: a column in `C³`.
#[derive(Clone, Debug, PartialEq)]
pub struct Spinor3<R: Real>(pub [Complex<R>; 3]);

impl<R: Real> Spinor3<R> {
    pub fn new(a: Complex<R>, b: Complex<R>, c: Complex<R>) -> Self {
        Self([a, b, c])
    }

    pub fn zero() -> Self {
        Self(std::array::from_fn(|_| Complex::zero()))
    }

    /// The standard basis column `e_k`, `k` in `0..3`.
    pub fn unit(k: usize) -> Self {
        let mut s = Self::zero();
        s.0[k] = Complex::new(R::one(), R::zero());
        s
    }

    pub fn from_slice(values: &[Complex<R>]) -> Self {
        Self(std::array::from_fn(|k| values[k].clone()))
    }

    pub fn components(&self) -> &[Complex<R>; 3] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &Complex<R>) -> Self {
        Self(std::array::from_fn(|k| self.0[k].clone() * factor.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|k| self.0[k].clone() + other.0[k].clone()))
    }

    pub fn to_float(&self) -> Spinor3<f64> {
        Spinor3(std::array::from_fn(|k| {
            Complex::new(self.0[k].re.to_f64(), self.0[k].im.to_f64())
        }))
    }
}

/// `[ξ, η, λ] = ε_abc ξ^a η^b λ^c` with `ε_123 = 1`.
///
/// Summed directly over the six nonzero Levi-Civita entries; this equals the
/// determinant of the matrix with columns `ξ, η, λ`.
pub fn symplectic3<R: Real>(xi: &Spinor3<R>, eta: &Spinor3<R>, lambda: &Spinor3<R>) -> Complex<R> {
    const EVEN: [[usize; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
    const ODD: [[usize; 3]; 3] = [[0, 2, 1], [2, 1, 0], [1, 0, 2]];
    let term = |[a, b, c]: [usize; 3]| xi.0[a].clone() * eta.0[b].clone() * lambda.0[c].clone();
    let even = EVEN.into_iter().map(term).fold(Complex::<R>::zero(), |acc, t| acc + t);
    let odd = ODD.into_iter().map(term).fold(Complex::<R>::zero(), |acc, t| acc + t);
    even - odd
}
