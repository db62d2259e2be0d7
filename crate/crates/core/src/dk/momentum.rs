//! The momentum matrix `P^{rṡ}`, its cofactors, and the quadratic wave
//! equation
//!
//! ```text
//! P^{rṡ} β_ṡ = M i^r
//! P_{rṡ} i^r = M² β_ṡ
//! ```
//!
//! where `P_{rṡ}` is the cofactor of `P^{rṡ}`, so that
//! `P^{rṡ} P_{tṡ} = det(P) δ^r_t`.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::herm::{herm_from_components, NineVector};
use crate::matrix::{CMatrix, Matrix};
use crate::scalar::{real, Real};
use crate::spinor::Spinor3;

/// The 9-momentum `P^A` of a particle (natural units).
pub type Momentum9<R> = NineVector<R>;

/// The 9-mass `M > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mass<R: Real>(R);

impl<R: Real> Mass<R> {
    pub fn new(value: R) -> Result<Self> {
        if value > R::zero() {
            Ok(Self(value))
        } else {
            Err(Error::NonPositiveMass(value.to_string()))
        }
    }

    pub fn value(&self) -> &R {
        &self.0
    }

    pub fn complex(&self) -> Complex<R> {
        real(self.0.clone())
    }

    /// `M³`, the value of `det P` on the mass shell.
    pub fn cubed(&self) -> R {
        self.0.clone() * self.0.clone() * self.0.clone()
    }
}

/// `P^{rṡ}` (row `r`, column `ṡ`) together with its cofactor matrix
/// `P_{rṡ}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentumMatrix<R: Real> {
    pub upper: CMatrix<R>,
    pub cofactors: CMatrix<R>,
}

impl<R: Real> MomentumMatrix<R> {
    /// `P^{rṡ}` with 1-based indices.
    pub fn p(&self, r: usize, s: usize) -> Complex<R> {
        self.upper.get(r - 1, s - 1).clone()
    }

    /// `P_{rṡ}` with 1-based indices.
    pub fn cof(&self, r: usize, s: usize) -> Complex<R> {
        self.cofactors.get(r - 1, s - 1).clone()
    }

    pub fn det(&self) -> R {
        self.upper.det().re
    }

    /// `Σ_ṡ P^{rṡ} P_{tṡ}`, row `r`, column `t`.
    pub fn contraction(&self) -> CMatrix<R> {
        self.upper.matmul(&self.cofactors.transpose())
    }

    /// `P^{rṡ} P_{tṡ} = det(P) δ^r_t`, exact on exact backends.
    pub fn satisfies_contraction(&self, tol: f64) -> bool {
        let want = Matrix::identity(3).scale(&self.upper.det());
        self.contraction().close_to(&want, tol)
    }
}

/// Builds `P^{rṡ}` from `P^A`:
///
/// ```text
/// P⁰+P³     P¹−iP²    P⁴−iP⁵
/// P¹+iP²    P⁰−P³     P⁶−iP⁷
/// P⁴+iP⁵    P⁶+iP⁷    P⁸
/// ```
pub fn momentum_matrix<R: Real>(p: &Momentum9<R>) -> MomentumMatrix<R> {
    let upper = herm_from_components(p).into_matrix();
    let cofactors = upper.cofactors();
    MomentumMatrix { upper, cofactors }
}

/// `(P^{rṡ} β_ṡ − M i^r, P_{rṡ} i^r − M² β_ṡ)`; both vanish exactly on
/// solutions.
pub fn wave_equation_residual<R: Real>(
    p: &Momentum9<R>,
    m: &Mass<R>,
    i: &Spinor3<R>,
    beta: &Spinor3<R>,
) -> (Spinor3<R>, Spinor3<R>) {
    wave_equation_residual_with(&momentum_matrix(p), m, i, beta)
}

pub fn wave_equation_residual_with<R: Real>(
    pm: &MomentumMatrix<R>,
    m: &Mass<R>,
    i: &Spinor3<R>,
    beta: &Spinor3<R>,
) -> (Spinor3<R>, Spinor3<R>) {
    let mc = m.complex();
    let upper = pm.upper.mul_vec(beta.components());
    let lower = pm.cofactors.transpose().mul_vec(i.components());
    let msq = mc.clone() * mc.clone();
    (
        Spinor3(std::array::from_fn(|r| upper[r].clone() - mc.clone() * i.0[r].clone())),
        Spinor3(std::array::from_fn(|s| lower[s].clone() - msq.clone() * beta.0[s].clone())),
    )
}

/// `(det P − M³) v` for each component of a spinor: the cubic analog of the
/// Klein-Gordon operator.
pub fn klein_gordon_residual<R: Real>(p: &Momentum9<R>, m: &Mass<R>, v: &Spinor3<R>) -> Spinor3<R> {
    let factor = real(crate::cubic::length_cubed(p) - m.cubed());
    v.scale(&factor)
}

/// The auxiliary variables
///
/// ```text
/// M ξ₁ = P^{21} i¹ − P^{11} i²     M ξ₄ = P^{22} i¹ − P^{12} i²
/// M ξ₂ = P^{31} i¹ − P^{11} i³     M ξ₅ = P^{32} i¹ − P^{12} i³
/// M ξ₃ = P^{31} i² − P^{21} i³     M ξ₆ = P^{32} i² − P^{22} i³
/// ```
pub fn xi_variables<R: Real>(p: &Momentum9<R>, i: &Spinor3<R>, m: &Mass<R>) -> [Complex<R>; 6] {
    xi_variables_with(&momentum_matrix(p), i, m)
}

pub fn xi_variables_with<R: Real>(pm: &MomentumMatrix<R>, i: &Spinor3<R>, m: &Mass<R>) -> [Complex<R>; 6] {
    let inv_m = real(R::one() / m.value().clone());
    let s = |k: usize| i.0[k - 1].clone();
    let p = |r, c| pm.p(r, c);
    let raw = [
        p(2, 1) * s(1) - p(1, 1) * s(2),
        p(3, 1) * s(1) - p(1, 1) * s(3),
        p(3, 1) * s(2) - p(2, 1) * s(3),
        p(2, 2) * s(1) - p(1, 2) * s(2),
        p(3, 2) * s(1) - p(1, 2) * s(3),
        p(3, 2) * s(2) - p(2, 2) * s(3),
    ];
    raw.map(|v| v * inv_m.clone())
}

/// Left-hand sides of the lower equation rewritten through the ξ-variables:
///
/// ```text
///  P^{33} ξ₄ − P^{23} ξ₅ + P^{13} ξ₆   (= M β₁)
/// −P^{33} ξ₁ + P^{23} ξ₂ − P^{13} ξ₃   (= M β₂)
/// −P^{31} ξ₄ + P^{21} ξ₅ − P^{11} ξ₆   (= M β₃)
/// ```
pub fn lower_equation_from_xi<R: Real>(pm: &MomentumMatrix<R>, xi: &[Complex<R>; 6]) -> Spinor3<R> {
    let p = |r, c| pm.p(r, c);
    let x = |k: usize| xi[k - 1].clone();
    Spinor3([
        p(3, 3) * x(4) - p(2, 3) * x(5) + p(1, 3) * x(6),
        Complex::<R>::zero() - p(3, 3) * x(1) + p(2, 3) * x(2) - p(1, 3) * x(3),
        Complex::<R>::zero() - p(3, 1) * x(4) + p(2, 1) * x(5) - p(1, 1) * x(6),
    ])
}
