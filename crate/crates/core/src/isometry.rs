//! Isometries: the `SL(3,C)` action on spinors and on `Herm(3)`.
//!
//! A spinor map `D` acts on 3-spinors by `ξ ↦ Dξ` and scales the symplectic
//! 3-product by `det D`. On Hermitian matrices it acts by `X ↦ D X D⁺`, and
//! in the λ-basis this is the real 9×9 matrix
//! `L(D)^A_B = ½ Tr(λ^A D λ_B D⁺)`. When `det D = 1` the cubic length is
//! preserved.

use num_complex::Complex;
use num_traits::One;

use crate::error::{Error, Result};
use crate::herm::{Herm3, LambdaBasis, NineVector};
use crate::matrix::{CMatrix, Matrix};
use crate::scalar::{self, Real};
use crate::spinor::Spinor3;

/// Tolerance on `|det D - 1|` for float spinor maps.
pub const UNIMODULAR_TOL: f64 = 1e-12;

/// A linear map `D` on 3-spinors.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorMap<R: Real>(CMatrix<R>);

impl<R: Real> SpinorMap<R> {
    pub fn new(matrix: CMatrix<R>) -> Self {
        assert!(matrix.rows() == 3 && matrix.cols() == 3, "spinor map must be 3x3");
        Self(matrix)
    }

    /// Accepts only `det D = 1` (within [`UNIMODULAR_TOL`] on float backends).
    pub fn special(matrix: CMatrix<R>) -> Result<Self> {
        let map = Self::new(matrix);
        if map.is_special() {
            Ok(map)
        } else {
            Err(Error::NotUnimodular(format!("{:?}", map.det())))
        }
    }

    pub fn identity() -> Self {
        Self(Matrix::identity(3))
    }

    pub fn matrix(&self) -> &CMatrix<R> {
        &self.0
    }

    pub fn det(&self) -> Complex<R> {
        self.0.det()
    }

    pub fn is_special(&self) -> bool {
        let diff = self.det() - Complex::one();
        scalar::is_negligible(&diff, UNIMODULAR_TOL)
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self(self.0.matmul(&other.0))
    }
}

/// `L(D)`: a real 9×9 matrix acting on [`NineVector`] components.
pub type NineMap<R> = Matrix<R>;

/// `ξ' = D ξ`.
pub fn transform_spinor<R: Real>(d: &SpinorMap<R>, xi: &Spinor3<R>) -> Spinor3<R> {
    Spinor3::from_slice(&d.0.mul_vec(xi.components()))
}

/// `X' = D X D⁺`; Hermitian whenever `X` is.
pub fn transform_herm<R: Real>(d: &SpinorMap<R>, x: &Herm3<R>) -> Herm3<R> {
    Herm3::from_trusted(d.0.matmul(x.matrix()).matmul(&d.0.adjoint()))
}

/// `½ Tr(λ^A D λ_B D⁺)` before discarding its (vanishing) imaginary part.
pub fn induced_entry<R: Real>(d: &SpinorMap<R>, basis: &LambdaBasis<R>, a: usize, b: usize) -> Complex<R> {
    let dd = d.0.adjoint();
    let t = basis.upper[a]
        .matmul(&d.0)
        .matmul(&basis.lower[b])
        .matmul(&dd)
        .trace();
    t * scalar::real(R::from_ratio(1, 2))
}

/// `L(D)^A_B = ½ Tr(λ^A D λ_B D⁺)`; row `A`, column `B`.
pub fn induced_matrix<R: Real>(d: &SpinorMap<R>) -> NineMap<R> {
    let basis = LambdaBasis::<R>::new();
    Matrix::from_fn(9, 9, |a, b| induced_entry(d, &basis, a, b).re)
}

/// Applies a 9×9 map to component vectors.
pub fn apply<R: Real>(l: &NineMap<R>, x: &NineVector<R>) -> NineVector<R> {
    let v = l.mul_vec(x.components());
    NineVector(std::array::from_fn(|a| v[a].clone()))
}

/// Embeds `d ∈ SL(2,C)` as `diag(d, 1)`.
pub fn embed_sl2<R: Real>(d: &CMatrix<R>) -> Result<SpinorMap<R>> {
    assert!(d.rows() == 2 && d.cols() == 2, "embed_sl2 expects a 2x2 matrix");
    let det = d.det();
    if !scalar::is_negligible(&(det.clone() - Complex::one()), UNIMODULAR_TOL) {
        return Err(Error::NotUnimodular(format!("{det:?}")));
    }
    let mut m = Matrix::identity(3);
    m.set_block(0, 0, d);
    Ok(SpinorMap(m))
}

/// Closed-form blocks of `L(diag(d, 1))`: the Lorentz block on `X⁰..X³` and
/// the block on `X⁴..X⁷`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sl2Blocks<R: Real> {
    /// `L(D₂)^α_β`, `α, β = 0..3`.
    pub lorentz: Matrix<R>,
    /// `M(D₂)^i_j`, `i, j = 1..4`, stored 0-based.
    pub majorana: Matrix<R>,
}

/// Entry tables for the embedded `SL(2,C)`, written out term by term.
///
/// Every entry is a sum of the form `z + z̄` or `i(z - z̄)` and is therefore
/// real; the real parts are returned. See [`sl2_block_tables_complex`] for
/// the unreduced values.
pub fn sl2_block_tables<R: Real>(d: &CMatrix<R>) -> Sl2Blocks<R> {
    let (l, m) = sl2_block_tables_complex(d);
    Sl2Blocks {
        lorentz: l.map(|z| z.re.clone()),
        majorana: m.map(|z| z.re.clone()),
    }
}

/// The Lorentz and Majorana tables as complex matrices, with `d^a_b` read
/// from `d[(a-1, b-1)]`.
pub fn sl2_block_tables_complex<R: Real>(d: &CMatrix<R>) -> (CMatrix<R>, CMatrix<R>) {
    assert!(d.rows() == 2 && d.cols() == 2, "sl2_block_tables expects a 2x2 matrix");
    let e = |a: usize, b: usize| d.get(a - 1, b - 1).clone();
    let c = |a: usize, b: usize| d.get(a - 1, b - 1).conj();
    // d^a_b * conj(d^p_q)
    let m = |a: usize, b: usize, p: usize, q: usize| e(a, b) * c(p, q);
    let half = scalar::real(R::from_ratio(1, 2));
    let i_half = scalar::imag_unit::<R>() * half.clone();

    let l = [
        [
            half.clone() * (m(1, 1, 1, 1) + m(1, 2, 1, 2) + m(2, 1, 2, 1) + m(2, 2, 2, 2)),
            half.clone() * (m(1, 1, 1, 2) + m(2, 1, 2, 2) + m(1, 2, 1, 1) + m(2, 2, 2, 1)),
            i_half.clone() * (m(1, 2, 1, 1) + m(2, 2, 2, 1) - m(1, 1, 1, 2) - m(2, 1, 2, 2)),
            half.clone() * (m(1, 1, 1, 1) + m(2, 1, 2, 1) - m(1, 2, 1, 2) - m(2, 2, 2, 2)),
        ],
        [
            half.clone() * (m(1, 1, 2, 1) + m(2, 1, 1, 1) + m(1, 2, 2, 2) + m(2, 2, 1, 2)),
            half.clone() * (m(1, 1, 2, 2) + m(2, 1, 1, 2) + m(1, 2, 2, 1) + m(2, 2, 1, 1)),
            i_half.clone() * (m(1, 2, 2, 1) + m(2, 2, 1, 1) - m(1, 1, 2, 2) - m(2, 1, 1, 2)),
            half.clone() * (m(1, 1, 2, 1) + m(2, 1, 1, 1) - m(1, 2, 2, 2) - m(2, 2, 1, 2)),
        ],
        [
            i_half.clone() * (m(1, 1, 2, 1) - m(2, 1, 1, 1) + m(1, 2, 2, 2) - m(2, 2, 1, 2)),
            i_half.clone() * (m(1, 1, 2, 2) - m(2, 1, 1, 2) + m(1, 2, 2, 1) - m(2, 2, 1, 1)),
            half.clone() * (m(1, 1, 2, 2) + m(2, 2, 1, 1) - m(1, 2, 2, 1) - m(2, 1, 1, 2)),
            i_half.clone() * (m(1, 1, 2, 1) - m(2, 1, 1, 1) - m(1, 2, 2, 2) + m(2, 2, 1, 2)),
        ],
        [
            half.clone() * (m(1, 1, 1, 1) - m(2, 1, 2, 1) + m(1, 2, 1, 2) - m(2, 2, 2, 2)),
            half.clone() * (m(1, 1, 1, 2) - m(2, 1, 2, 2) + m(1, 2, 1, 1) - m(2, 2, 2, 1)),
            i_half.clone() * (m(1, 2, 1, 1) - m(2, 2, 2, 1) - m(1, 1, 1, 2) + m(2, 1, 2, 2)),
            half.clone() * (m(1, 1, 1, 1) - m(1, 2, 1, 2) - m(2, 1, 2, 1) + m(2, 2, 2, 2)),
        ],
    ];

    // ½(z̄ + z), ½i(z̄ - z), ½i(z - z̄)
    let sum = |a, b| half.clone() * (c(a, b) + e(a, b));
    let conj_diff = |a, b| i_half.clone() * (c(a, b) - e(a, b));
    let diff = |a, b| i_half.clone() * (e(a, b) - c(a, b));
    let mm = [
        [sum(1, 1), conj_diff(1, 1), sum(1, 2), conj_diff(1, 2)],
        [diff(1, 1), sum(1, 1), diff(1, 2), sum(1, 2)],
        [sum(2, 1), conj_diff(2, 1), sum(2, 2), conj_diff(2, 2)],
        [diff(2, 1), sum(2, 1), diff(2, 2), sum(2, 2)],
    ];

    (
        Matrix::from_fn(4, 4, |r, c| l[r][c].clone()),
        Matrix::from_fn(4, 4, |r, c| mm[r][c].clone()),
    )
}

/// Assembles `diag(lorentz, majorana, 1)` as a 9×9 map.
pub fn block_diagonal_map<R: Real>(blocks: &Sl2Blocks<R>) -> NineMap<R> {
    let mut out = Matrix::zeros(9, 9);
    out.set_block(0, 0, &blocks.lorentz);
    out.set_block(4, 4, &blocks.majorana);
    out.set(8, 8, R::one());
    out
}

/// `true` when every entry outside the 4 + 4 + 1 diagonal blocks vanishes
/// (within `tol` on float backends) and the `(8, 8)` entry is one.
pub fn has_reduction_blocks<R: Real>(l: &NineMap<R>, tol: f64) -> bool {
    let group = |k: usize| match k {
        0..=3 => 0,
        4..=7 => 1,
        _ => 2,
    };
    (0..9).all(|r| {
        (0..9).all(|c| group(r) == group(c) || l.get(r, c).is_negligible(tol))
    }) && (l.get(8, 8).clone() - R::one()).is_negligible(tol)
}

/// Minkowski metric `diag(1, -1, -1, -1)`.
pub fn minkowski<R: Real>() -> Matrix<R> {
    let one = R::one();
    Matrix::diagonal(&[one.clone(), -one.clone(), -one.clone(), -one])
}

/// `Lᵀ g L`; equals `g` for a Lorentz transformation.
pub fn minkowski_pullback<R: Real>(l: &Matrix<R>) -> Matrix<R> {
    l.transpose().matmul(&minkowski()).matmul(l)
}

/// `true` when `z` is real under the backend's zero test.
pub fn is_real<R: Real>(z: &Complex<R>, tol: f64) -> bool {
    z.im.is_negligible(tol)
}

/// The elementary transvection `I + t·E_(row, col)`, `row != col`; its
/// determinant is exactly one.
pub fn transvection<R: Real>(row: usize, col: usize, t: Complex<R>) -> SpinorMap<R> {
    assert_ne!(row, col, "transvection needs an off-diagonal position");
    let mut m = Matrix::identity(3);
    m.set(row, col, t);
    SpinorMap(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::length_cubed;
    use crate::herm::{components_from_herm, herm_from_components};
    use crate::scalar::{cx_int, Rational};
    use crate::spinor::symplectic3;

    type Q = Rational;

    fn diag_q(entries: [(i64, i64); 3]) -> SpinorMap<Q> {
        SpinorMap::new(Matrix::diagonal(&entries.map(|(n, d)| scalar::real(Q::from_ratio(n, d)))))
    }

    #[test]
    fn identity_acts_trivially() {
        let xi = Spinor3::<Q>::new(cx_int(1, 2), cx_int(0, -1), cx_int(3, 0));
        assert_eq!(transform_spinor(&SpinorMap::identity(), &xi), xi);
        let x = herm_from_components(&NineVector::<Q>::from_i64([1, 2, 3, 4, 5, 6, 7, 8, 9]));
        assert_eq!(transform_herm(&SpinorMap::identity(), &x), x);
        assert_eq!(induced_matrix(&SpinorMap::<Q>::identity()), Matrix::identity(9));
    }

    #[test]
    fn determinant_two_doubles_symplectic_product() {
        let d = diag_q([(2, 1), (1, 1), (1, 1)]);
        let xi = Spinor3::<Q>::new(cx_int(1, 2), cx_int(0, -1), cx_int(3, 0));
        let eta = Spinor3::<Q>::new(cx_int(2, 0), cx_int(1, 1), cx_int(-1, 4));
        let la = Spinor3::<Q>::new(cx_int(0, 3), cx_int(5, 0), cx_int(1, -2));
        let before = symplectic3(&xi, &eta, &la);
        let after = symplectic3(
            &transform_spinor(&d, &xi),
            &transform_spinor(&d, &eta),
            &transform_spinor(&d, &la),
        );
        assert_eq!(after, before * cx_int(2, 0));
        assert!(!d.is_special());
    }

    #[test]
    fn diagonal_scaling_of_identity() {
        let d = diag_q([(2, 1), (1, 1), (1, 2)]);
        assert!(d.is_special());
        let x = transform_herm(&d, &Herm3::identity());
        let expected = diag_q([(4, 1), (1, 1), (1, 4)]);
        assert_eq!(x.matrix(), expected.matrix());
    }

    #[test]
    fn induced_matrix_agrees_with_action() {
        let d = transvection(0, 2, cx_int::<Q>(2, -1)).compose(&transvection(1, 0, cx_int(0, 3)));
        let l = induced_matrix(&d);
        let x = NineVector::<Q>::from_i64([3, -1, 2, 0, 5, -4, 1, 1, -2]);
        let direct = components_from_herm(&transform_herm(&d, &herm_from_components(&x)));
        assert_eq!(apply(&l, &x), direct);
        assert_eq!(length_cubed(&apply(&l, &x)), length_cubed(&x));
    }

    #[test]
    fn embed_rejects_non_unimodular() {
        let d = Matrix::from_rows(vec![
            vec![cx_int::<Q>(2, 0), cx_int(0, 0)],
            vec![cx_int(0, 0), cx_int(1, 0)],
        ]);
        assert!(matches!(embed_sl2(&d), Err(Error::NotUnimodular(_))));
        assert!(SpinorMap::<Q>::special(Matrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn embed_places_block() {
        let d = Matrix::from_rows(vec![
            vec![cx_int::<Q>(1, 0), cx_int(1, 0)],
            vec![cx_int(0, 0), cx_int(1, 0)],
        ]);
        let e = embed_sl2(&d).unwrap();
        let mut want = Matrix::identity(3);
        want.set(0, 1, cx_int(1, 0));
        assert_eq!(e.matrix(), &want);
        assert_eq!(embed_sl2(&Matrix::<Complex<Q>>::identity(2)).unwrap(), SpinorMap::identity());
    }

    #[test]
    fn identity_block_tables() {
        let b = sl2_block_tables(&Matrix::<Complex<Q>>::identity(2));
        assert_eq!(b.lorentz, Matrix::identity(4));
        assert_eq!(b.majorana, Matrix::identity(4));
    }
}
