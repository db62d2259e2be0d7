//! Dimensional reduction of a 9-vector to 4-dimensional quantities.
//!
//! Under the embedded `SL(2,C)` the components split into a Lorentz 4-vector
//! `X^α = X⁰..X³`, a real Majorana 4-spinor `θ = (X⁴, X⁵, X⁶, X⁷)`, and the
//! scalar `X⁸`. In these terms
//!
//! ```text
//! |X|³ = g_μν X^μ X^ν X⁸ − g_μν X^μ θ̄ γ^ν θ,   θ̄ = θᵀ γ⁰
//! ```
//!
//! with `g = diag(1, -1, -1, -1)` and the purely imaginary Majorana γ-matrices
//! below.

use num_complex::Complex;
use num_traits::Zero;

use crate::herm::NineVector;
use crate::matrix::{CMatrix, Matrix};
use crate::scalar::{cx_int, real, Real};

/// A 9-vector split as 4 + 4 + 1.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedVector<R: Real> {
    pub four_vector: [R; 4],
    pub majorana: [R; 4],
    pub scalar: R,
}

impl<R: Real> ReducedVector<R> {
    /// Concatenates back into `(X⁰..X³, θ¹..θ⁴, X⁸)`.
    pub fn concat(&self) -> NineVector<R> {
        NineVector(std::array::from_fn(|a| match a {
            0..=3 => self.four_vector[a].clone(),
            4..=7 => self.majorana[a - 4].clone(),
            _ => self.scalar.clone(),
        }))
    }
}

/// Positional split of the components.
pub fn reduce<R: Real>(x: &NineVector<R>) -> ReducedVector<R> {
    ReducedVector {
        four_vector: std::array::from_fn(|a| x.0[a].clone()),
        majorana: std::array::from_fn(|i| x.0[4 + i].clone()),
        scalar: x.0[8].clone(),
    }
}

/// Dirac matrices in the Majorana representation and the Minkowski metric.
#[derive(Clone, Debug)]
pub struct MajoranaGammas<R: Real> {
    pub gamma: [CMatrix<R>; 4],
    pub metric: [R; 4],
}

impl<R: Real> MajoranaGammas<R> {
    pub fn new() -> Self {
        // entries given as multiples of i
        const G: [[[i64; 4]; 4]; 4] = [
            [[0, 0, 1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, 1, 0, 0]],
            [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]],
            [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
            [[0, 0, -1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, 1, 0, 0]],
        ];
        let one = R::one();
        Self {
            gamma: std::array::from_fn(|mu| Matrix::from_fn(4, 4, |r, c| cx_int(0, G[mu][r][c]))),
            metric: [one.clone(), -one.clone(), -one.clone(), -one],
        }
    }

    /// `γ^μ γ^ν + γ^ν γ^μ`.
    pub fn anticommutator(&self, mu: usize, nu: usize) -> CMatrix<R> {
        let a = self.gamma[mu].matmul(&self.gamma[nu]);
        let b = self.gamma[nu].matmul(&self.gamma[mu]);
        &a + &b
    }

    /// Checks `γ^μ γ^ν + γ^ν γ^μ = 2 g^{μν} I` for all 16 pairs, returning
    /// the first failing pair.
    pub fn clifford_violation(&self) -> Option<(usize, usize)> {
        for mu in 0..4 {
            for nu in 0..4 {
                let g = if mu == nu {
                    self.metric[mu].clone() * R::from_i64(2)
                } else {
                    R::zero()
                };
                let want = Matrix::identity(4).scale(&real(g));
                if self.anticommutator(mu, nu) != want {
                    return Some((mu, nu));
                }
            }
        }
        None
    }

    /// `θ̄ γ^ν θ = θᵀ γ⁰ γ^ν θ`.
    pub fn spinor_bilinear(&self, theta: &[R; 4], nu: usize) -> Complex<R> {
        let th: Vec<Complex<R>> = theta.iter().cloned().map(real).collect();
        let v = self.gamma[0].matmul(&self.gamma[nu]).mul_vec(&th);
        th.iter()
            .zip(&v)
            .fold(Complex::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }
}

impl<R: Real> Default for MajoranaGammas<R> {
    fn default() -> Self {
        Self::new()
    }
}

/// `g_μν X^μ X^ν X⁸ − g_μν X^μ θ̄ γ^ν θ`. The bilinears are real for real `θ`;
/// the real part is returned.
pub fn length_cubed_4d<R: Real>(r: &ReducedVector<R>) -> R {
    length_cubed_4d_with(&MajoranaGammas::new(), r)
}

/// As [`length_cubed_4d`], reusing prebuilt γ-matrices.
pub fn length_cubed_4d_with<R: Real>(gammas: &MajoranaGammas<R>, r: &ReducedVector<R>) -> R {
    let x = &r.four_vector;
    let square = (0..4).fold(R::zero(), |acc, mu| {
        acc + gammas.metric[mu].clone() * x[mu].clone() * x[mu].clone()
    });
    let current = (0..4).fold(Complex::<R>::zero(), |acc, nu| {
        if x[nu].is_zero() {
            return acc;
        }
        acc + real(gammas.metric[nu].clone() * x[nu].clone()) * gammas.spinor_bilinear(&r.majorana, nu)
    });
    square * r.scalar.clone() - current.re
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Rational;

    #[test]
    fn positional_split() {
        let x = NineVector::<Q>::from_i64([1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let r = reduce(&x);
        assert_eq!(r.four_vector, [1, 2, 3, 4].map(Q::from_i64));
        assert_eq!(r.majorana, [5, 6, 7, 8].map(Q::from_i64));
        assert_eq!(r.scalar, Q::from_i64(9));
        assert_eq!(r.concat(), x);
    }

    #[test]
    fn clifford_relations_hold_exactly() {
        assert_eq!(MajoranaGammas::<Q>::new().clifford_violation(), None);
    }

    #[test]
    fn gamma_entries_purely_imaginary() {
        let g = MajoranaGammas::<Q>::new();
        for m in &g.gamma {
            assert!(m.entries().all(|z| z.re.is_zero()));
        }
    }

    #[test]
    fn pure_time_vector() {
        let r = ReducedVector {
            four_vector: [1, 0, 0, 0].map(Q::from_i64),
            majorana: [0; 4].map(Q::from_i64),
            scalar: Q::from_i64(1),
        };
        assert_eq!(length_cubed_4d(&r), Q::from_i64(1));
    }

    #[test]
    fn single_spinor_component() {
        // θ = e₁: γ⁰γ⁰ = I, so θ̄γ⁰θ = θᵀθ = 1 and the length is -1
        let r = ReducedVector {
            four_vector: [1, 0, 0, 0].map(Q::from_i64),
            majorana: [1, 0, 0, 0].map(Q::from_i64),
            scalar: Q::from_i64(0),
        };
        let g = MajoranaGammas::<Q>::new();
        let direct = g.spinor_bilinear(&r.majorana, 0);
        assert_eq!(direct, cx_int(1, 0));
        assert_eq!(length_cubed_4d(&r), -direct.re);
    }
}
