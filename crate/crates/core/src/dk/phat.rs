//! The 12×12 linearization `P̂` and the δ-matrices.
//!
//! With `Ψ = (i¹, i², i³, β₁, β₂, β₃, ξ₁, …, ξ₆)`, the quadratic wave equation
//! is equivalent to `P̂ Ψ = M Ψ` where, in 3×3 blocks,
//!
//! ```text
//!       | 0   P   0   0  |
//! P̂  =  | 0   0   P₁  P₂ |
//!       | P₃  0   0   0  |
//!       | P₄  0   0   0  |
//! ```
//!
//! Every entry is linear in `P^A`, so `P̂ = P^A δ_A` for nine constant
//! matrices. `P̂⁴ = det(P) P̂`, and polarizing that identity gives the
//! symmetrized relations satisfied by the δ-matrices.

use std::sync::OnceLock;

use num_complex::Complex;
use num_traits::Zero;

use crate::cubic::{cubic_tensor, length_cubed};
use crate::dk::momentum::{momentum_matrix, Momentum9, MomentumMatrix};
use crate::herm::NineVector;
use crate::matrix::{CMatrix, Matrix};
use crate::scalar::{real, Rational, Real};

/// The 12×12 matrix `P̂(P)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhatMatrix<R: Real>(pub CMatrix<R>);

impl<R: Real> PhatMatrix<R> {
    pub fn matrix(&self) -> &CMatrix<R> {
        &self.0
    }

    pub fn pow(&self, exponent: u32) -> CMatrix<R> {
        self.0.pow(exponent)
    }
}

fn block<R: Real>(rows: [[Complex<R>; 3]; 3]) -> CMatrix<R> {
    Matrix::from_rows(rows.into_iter().map(Vec::from).collect())
}

/// `P₁`: only the middle row is populated.
pub fn block_p1<R: Real>(pm: &MomentumMatrix<R>) -> CMatrix<R> {
    let p = |r, c| pm.p(r, c);
    let z = Complex::<R>::zero;
    block([[z(), z(), z()], [-p(3, 3), p(2, 3), -p(1, 3)], [z(), z(), z()]])
}

/// `P₂`: first and last rows populated.
pub fn block_p2<R: Real>(pm: &MomentumMatrix<R>) -> CMatrix<R> {
    let p = |r, c| pm.p(r, c);
    let z = Complex::<R>::zero;
    block([
        [p(3, 3), -p(2, 3), p(1, 3)],
        [z(), z(), z()],
        [-p(3, 1), p(2, 1), -p(1, 1)],
    ])
}

/// `P₃`: built from the first column of `P`.
pub fn block_p3<R: Real>(pm: &MomentumMatrix<R>) -> CMatrix<R> {
    let p = |r, c| pm.p(r, c);
    let z = Complex::<R>::zero;
    block([
        [p(2, 1), -p(1, 1), z()],
        [p(3, 1), z(), -p(1, 1)],
        [z(), p(3, 1), -p(2, 1)],
    ])
}

/// `P₄`: built from the second column of `P`.
pub fn block_p4<R: Real>(pm: &MomentumMatrix<R>) -> CMatrix<R> {
    let p = |r, c| pm.p(r, c);
    let z = Complex::<R>::zero;
    block([
        [p(2, 2), -p(1, 2), z()],
        [p(3, 2), z(), -p(1, 2)],
        [z(), p(3, 2), -p(2, 2)],
    ])
}

/// Lays out the blocks of `P̂`.
pub fn assemble_phat<R: Real>(p: &Momentum9<R>) -> PhatMatrix<R> {
    assemble_phat_with(&momentum_matrix(p))
}

pub fn assemble_phat_with<R: Real>(pm: &MomentumMatrix<R>) -> PhatMatrix<R> {
    let mut m = Matrix::zeros(12, 12);
    m.set_block(0, 3, &pm.upper);
    m.set_block(3, 6, &block_p1(pm));
    m.set_block(3, 9, &block_p2(pm));
    m.set_block(6, 0, &block_p3(pm));
    m.set_block(9, 0, &block_p4(pm));
    PhatMatrix(m)
}

/// The nine constant matrices `δ_A` with `P̂ = P^A δ_A`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeltaFamily<R: Real> {
    pub deltas: [CMatrix<R>; 9],
}

impl<R: Real> DeltaFamily<R> {
    /// `P^A δ_A`.
    pub fn combine(&self, p: &NineVector<R>) -> CMatrix<R> {
        self.deltas
            .iter()
            .zip(p.components())
            .filter(|(_, pa)| !pa.is_zero())
            .fold(Matrix::zeros(12, 12), |acc, (d, pa)| &acc + &d.scale(&real(pa.clone())))
    }

    /// Every entry of every δ is one of `0, ±1, ±i`.
    pub fn entries_are_units_or_zero(&self) -> bool {
        let allowed = [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)];
        self.deltas.iter().all(|d| {
            d.entries().all(|z| {
                allowed
                    .iter()
                    .any(|&(re, im)| z.re == R::from_i64(re) && z.im == R::from_i64(im))
            })
        })
    }

    pub fn get(&self, a: usize) -> &CMatrix<R> {
        &self.deltas[a]
    }
}

/// `δ_A = P̂(e_A)`: the linearization evaluated at each unit momentum.
pub fn delta_family<R: Real>() -> DeltaFamily<R> {
    DeltaFamily {
        deltas: std::array::from_fn(|a| assemble_phat(&NineVector::unit(a)).0),
    }
}

/// The exact δ-family, built once and shared.
pub fn exact_delta_family() -> &'static DeltaFamily<Rational> {
    static FAMILY: OnceLock<DeltaFamily<Rational>> = OnceLock::new();
    FAMILY.get_or_init(delta_family)
}

/// Tolerance for float comparisons of matrix identities, relative to the
/// largest entry involved.
pub const IDENTITY_TOL: f64 = 1e-10;

/// `‖a − b‖_max <= tol · max(1, ‖a‖_max, ‖b‖_max)`; equality on exact backends.
pub fn matrices_agree<R: Real>(a: &CMatrix<R>, b: &CMatrix<R>, tol: f64) -> bool {
    if R::EXACT {
        return a == b;
    }
    let scale = 1f64.max(a.max_abs()).max(b.max_abs());
    (a - b).max_abs() <= tol * scale
}

/// `(P^A δ_A)⁴ = G_ABC P^A P^B P^C (P^D δ_D)`.
pub fn quartic_identity_check<R: Real>(p: &Momentum9<R>) -> bool {
    quartic_identity_check_with(&delta_family(), p)
}

pub fn quartic_identity_check_with<R: Real>(deltas: &DeltaFamily<R>, p: &Momentum9<R>) -> bool {
    let phat = deltas.combine(p);
    let lhs = phat.pow(4);
    let rhs = phat.scale(&real(length_cubed(p)));
    matrices_agree(&lhs, &rhs, IDENTITY_TOL)
}

/// All 24 orderings of four indices (with repeats when indices repeat).
fn orderings(idx: [usize; 4]) -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                let d = 6 - a - b - c;
                out.push([idx[a], idx[b], idx[c], idx[d]]);
            }
        }
    }
    out
}

/// `δ_(A δ_B δ_C δ_D)`: the sum of the products over all 24 orderings.
pub fn symmetrized_product<R: Real>(deltas: &DeltaFamily<R>, idx: [usize; 4]) -> CMatrix<R> {
    orderings(idx).into_iter().fold(Matrix::zeros(12, 12), |acc, [a, b, c, d]| {
        let prod = deltas.deltas[a]
            .matmul(&deltas.deltas[b])
            .matmul(&deltas.deltas[c])
            .matmul(&deltas.deltas[d]);
        &acc + &prod
    })
}

/// `6 {G_ABC δ_D + G_ABD δ_C + G_ACD δ_B + G_BCD δ_A}`.
pub fn symmetrized_rhs<R: Real>(deltas: &DeltaFamily<R>, [a, b, c, d]: [usize; 4]) -> CMatrix<R> {
    let g = cubic_tensor();
    let six = R::from_i64(6);
    [(g.get(a, b, c), d), (g.get(a, b, d), c), (g.get(a, c, d), b), (g.get(b, c, d), a)]
        .into_iter()
        .fold(Matrix::zeros(12, 12), |acc, (gv, k)| {
            let coeff = real(six.clone() * R::from_rational(gv));
            &acc + &deltas.deltas[k].scale(&coeff)
        })
}

/// `δ_(A δ_B δ_C δ_D) = 6 {G_ABC δ_D + G_ABD δ_C + G_ACD δ_B + G_BCD δ_A}`.
pub fn symmetrized_relation_check(a: usize, b: usize, c: usize, d: usize) -> bool {
    symmetrized_relation_check_with(exact_delta_family(), [a, b, c, d])
}

pub fn symmetrized_relation_check_with<R: Real>(deltas: &DeltaFamily<R>, idx: [usize; 4]) -> bool {
    matrices_agree(
        &symmetrized_product(deltas, idx),
        &symmetrized_rhs(deltas, idx),
        IDENTITY_TOL,
    )
}

/// All multisets `A <= B <= C <= D` over `0..9` (495 of them).
pub fn index_multisets() -> impl Iterator<Item = [usize; 4]> {
    (0..9).flat_map(|a| {
        (a..9).flat_map(move |b| (b..9).flat_map(move |c| (c..9).map(move |d| [a, b, c, d])))
    })
}

/// `P̂ − M·I`.
pub fn shifted<R: Real>(phat: &PhatMatrix<R>, mass: &R) -> CMatrix<R> {
    let id = Matrix::<Complex<R>>::identity(12);
    &phat.0 - &id.scale(&real(mass.clone()))
}
