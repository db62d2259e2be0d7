//! Reference computations written independently of the library internals.
#![allow(dead_code, clippy::needless_range_loop)]

use finsler3::scalar::{cx_int, real};
use finsler3::{CMatrix, Matrix, NineVector, Rational, Real};
use num_complex::Complex;
use num_traits::Zero;

pub type Q = Rational;
pub type Cq = Complex<Q>;

pub fn q(n: i64) -> Q {
    Q::from_i64(n)
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::from_ratio(n, d)
}

pub fn nine(values: [i64; 9]) -> NineVector<Q> {
    NineVector::from_i64(values)
}

/// `X^{rṡ}` straight from the entry dictionary
///
/// ```text
/// X⁰+X³     X¹−iX²    X⁴−iX⁵
/// X¹+iX²    X⁰−X³     X⁶−iX⁷
/// X⁴+iX⁵    X⁶+iX⁷    X⁸
/// ```
pub fn dictionary_matrix<R: Real>(x: &NineVector<R>) -> [[Complex<R>; 3]; 3] {
    let c = |a: usize| x.0[a].clone();
    let z = |re: R, im: R| Complex::new(re, im);
    [
        [z(c(0) + c(3), R::zero()), z(c(1), -c(2)), z(c(4), -c(5))],
        [z(c(1), c(2)), z(c(0) - c(3), R::zero()), z(c(6), -c(7))],
        [z(c(4), c(5)), z(c(6), c(7)), z(c(8), R::zero())],
    ]
}

/// Determinant by the six-term permutation sum.
pub fn leibniz3<R: Real>(m: &[[Complex<R>; 3]; 3]) -> Complex<R> {
    let perms: [([usize; 3], i64); 6] = [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([0, 2, 1], -1),
        ([2, 1, 0], -1),
        ([1, 0, 2], -1),
    ];
    perms.iter().fold(Complex::zero(), |acc, (p, sign)| {
        let term = m[0][p[0]].clone() * m[1][p[1]].clone() * m[2][p[2]].clone();
        acc + term * real(R::from_i64(*sign))
    })
}

/// `det X` through the dictionary and the permutation sum.
pub fn det_oracle<R: Real>(x: &NineVector<R>) -> R {
    let d = leibniz3(&dictionary_matrix(x));
    assert!(d.im.is_negligible(1e-9), "determinant of a Hermitian matrix is real");
    d.re
}

/// `G(x, y, z)` by finite-difference polarization of the determinant:
/// `6 G(x,y,z) = f(x+y+z) − f(x+y) − f(x+z) − f(y+z) + f(x) + f(y) + f(z)`.
pub fn polarized(x: &NineVector<Q>, y: &NineVector<Q>, z: &NineVector<Q>) -> Q {
    let f = |v: &NineVector<Q>| det_oracle(v);
    let s = |a: &NineVector<Q>, b: &NineVector<Q>| a.add(b);
    let total = f(&s(&s(x, y), z)) - f(&s(x, y)) - f(&s(x, z)) - f(&s(y, z)) + f(x) + f(y) + f(z);
    total / q(6)
}

pub fn to_array<R: Real>(m: &CMatrix<R>) -> [[Complex<R>; 3]; 3] {
    std::array::from_fn(|r| std::array::from_fn(|c| m.get(r, c).clone()))
}

/// Naive triple-loop product.
pub fn mul<R: Real>(a: &CMatrix<R>, b: &CMatrix<R>) -> CMatrix<R> {
    Matrix::from_fn(a.rows(), b.cols(), |r, c| {
        (0..a.cols()).fold(Complex::zero(), |acc, k| acc + a.get(r, k).clone() * b.get(k, c).clone())
    })
}

pub fn dagger<R: Real>(a: &CMatrix<R>) -> CMatrix<R> {
    Matrix::from_fn(a.cols(), a.rows(), |r, c| a.get(c, r).conj())
}

pub fn gi(re: i64, im: i64) -> Cq {
    cx_int(re, im)
}

/// Small deterministic generator for oracle-side sampling (SplitMix64).
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[-bound, bound]`.
    pub fn int(&mut self, bound: i64) -> i64 {
        (self.next_u64() % (2 * bound as u64 + 1)) as i64 - bound
    }

    pub fn nine(&mut self, bound: i64) -> NineVector<Q> {
        NineVector(std::array::from_fn(|_| q(self.int(bound))))
    }
}

/// Signed 2×2 minors of a 3×3 matrix: `cof[r][s] = (−1)^{r+s} det(minor_{rs})`.
pub fn cofactors3<R: Real>(m: &[[Complex<R>; 3]; 3]) -> [[Complex<R>; 3]; 3] {
    std::array::from_fn(|r| {
        std::array::from_fn(|s| {
            let rows: Vec<usize> = (0..3).filter(|&k| k != r).collect();
            let cols: Vec<usize> = (0..3).filter(|&k| k != s).collect();
            let minor = m[rows[0]][cols[0]].clone() * m[rows[1]][cols[1]].clone()
                - m[rows[0]][cols[1]].clone() * m[rows[1]][cols[0]].clone();
            if (r + s) % 2 == 0 {
                minor
            } else {
                Complex::<R>::zero() - minor
            }
        })
    })
}

/// Residuals of `P^{rṡ} β_ṡ = M i^r` and `P_{rṡ} i^r = M² β_ṡ`, built from
/// the dictionary and explicit minors.
pub fn quadratic_residual_oracle<R: Real>(
    p: &NineVector<R>,
    m: &R,
    i: &[Complex<R>; 3],
    beta: &[Complex<R>; 3],
) -> Vec<Complex<R>> {
    let pm = dictionary_matrix(p);
    let cof = cofactors3(&pm);
    let mc = real(m.clone());
    let mut out = Vec::with_capacity(6);
    for r in 0..3 {
        let lhs = (0..3).fold(Complex::<R>::zero(), |acc, s| acc + pm[r][s].clone() * beta[s].clone());
        out.push(lhs - mc.clone() * i[r].clone());
    }
    for s in 0..3 {
        let lhs = (0..3).fold(Complex::<R>::zero(), |acc, r| acc + cof[r][s].clone() * i[r].clone());
        out.push(lhs - mc.clone() * mc.clone() * beta[s].clone());
    }
    out
}

/// `Ψ ↦ P̂Ψ − MΨ` with `P̂ = P^A δ_A` summed by hand.
pub fn linear_residual_oracle(
    deltas: &[CMatrix<Q>; 9],
    p: &NineVector<Q>,
    m: &Q,
    psi: &[Cq; 12],
) -> Vec<Cq> {
    (0..12)
        .map(|r| {
            let mut acc = Cq::zero() - real(m.clone()) * psi[r].clone();
            for (a, d) in deltas.iter().enumerate() {
                if p.0[a].is_zero() {
                    continue;
                }
                for c in 0..12 {
                    acc += real(p.0[a].clone()) * d.get(r, c).clone() * psi[c].clone();
                }
            }
            acc
        })
        .collect()
}
