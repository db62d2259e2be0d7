//! The cubic Finslerian length `|X|³ = det X = G_ABC X^A X^B X^C`.

use std::sync::OnceLock;

use num_complex::Complex;
use num_traits::Zero;

use crate::herm::{herm_from_components, lambda_lower, NineVector};
use crate::matrix::CMatrix;
use crate::scalar::{Rational, Real};

/// Number of index triples `A <= B <= C` over `0..9`.
pub const INDEPENDENT_COMPONENTS: usize = 165;

/// Totally symmetric rank-3 tensor on `Herm(3)`, stored as its 165
/// independent components `G_ABC` with `A <= B <= C`.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicTensor {
    entries: Vec<Rational>,
}

impl CubicTensor {
    /// Position of the sorted triple in lexicographic order.
    fn slot(a: usize, b: usize, c: usize) -> usize {
        static TABLE: OnceLock<Vec<usize>> = OnceLock::new();
        let table = TABLE.get_or_init(|| {
            let mut t = vec![0; 729];
            for (k, [a, b, c]) in sorted_triples().enumerate() {
                for [p, q, r] in [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]] {
                    t[81 * p + 9 * q + r] = k;
                }
            }
            t
        });
        table[81 * a + 9 * b + c]
    }

    /// `G_ABC` for any ordering of the indices.
    pub fn get(&self, a: usize, b: usize, c: usize) -> &Rational {
        &self.entries[Self::slot(a, b, c)]
    }

    /// `(A, B, C, G_ABC)` for every sorted triple.
    pub fn iter(&self) -> impl Iterator<Item = ([usize; 3], &Rational)> {
        sorted_triples().zip(self.entries.iter())
    }

    /// Triples with a nonzero component.
    pub fn nonzero(&self) -> impl Iterator<Item = ([usize; 3], &Rational)> {
        self.iter().filter(|(_, g)| !g.is_zero())
    }

    /// `G_ABC X^A X^B X^C`, summing each sorted triple once with its
    /// multiplicity (the number of distinct orderings of its indices).
    pub fn eval<R: Real>(&self, x: &NineVector<R>) -> R {
        self.nonzero().fold(R::zero(), |acc, ([a, b, c], g)| {
            let mult = R::from_i64(multiplicity([a, b, c]));
            acc + mult * R::from_rational(g) * x.0[a].clone() * x.0[b].clone() * x.0[c].clone()
        })
    }

    /// The fully polarized trilinear form `G_ABC X^A Y^B Z^C`.
    pub fn eval_trilinear<R: Real>(&self, x: &NineVector<R>, y: &NineVector<R>, z: &NineVector<R>) -> R {
        let mut acc = R::zero();
        for a in 0..9 {
            for b in 0..9 {
                for c in 0..9 {
                    let g = self.get(a, b, c);
                    if g.is_zero() {
                        continue;
                    }
                    acc = acc
                        + R::from_rational(g) * x.0[a].clone() * y.0[b].clone() * z.0[c].clone();
                }
            }
        }
        acc
    }
}

/// Sorted index triples `A <= B <= C` in lexicographic order.
pub fn sorted_triples() -> impl Iterator<Item = [usize; 3]> {
    (0..9).flat_map(|a| (a..9).flat_map(move |b| (b..9).map(move |c| [a, b, c])))
}

/// Number of distinct orderings of an index triple: 1, 3, or 6.
pub fn multiplicity(t: [usize; 3]) -> i64 {
    let [a, b, c] = t;
    match (a == b, b == c, a == c) {
        (true, true, _) => 1,
        (true, false, _) | (false, true, _) | (false, false, true) => 3,
        (false, false, false) => 6,
    }
}

/// Mixed determinant `Σ_σ sgn σ X_{1σ1} Y_{2σ2} Z_{3σ3}`; equals `det X`
/// when `X = Y = Z`.
fn mixed_det<R: Real>(x: &CMatrix<R>, y: &CMatrix<R>, z: &CMatrix<R>) -> Complex<R> {
    const PERMS: [([usize; 3], bool); 6] = [
        ([0, 1, 2], true),
        ([1, 2, 0], true),
        ([2, 0, 1], true),
        ([0, 2, 1], false),
        ([2, 1, 0], false),
        ([1, 0, 2], false),
    ];
    PERMS.iter().fold(Complex::zero(), |acc, &([p, q, r], even)| {
        let term = x.get(0, p).clone() * y.get(1, q).clone() * z.get(2, r).clone();
        if even {
            acc + term
        } else {
            acc - term
        }
    })
}

fn polarize_determinant() -> CubicTensor {
    let basis: Vec<CMatrix<Rational>> = (0..9).map(lambda_lower).collect();
    let sixth = Rational::from_ratio(1, 6);
    let entries = sorted_triples()
        .map(|[a, b, c]| {
            let orderings = [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]];
            let sum = orderings
                .iter()
                .fold(Complex::<Rational>::zero(), |acc, &[p, q, r]| {
                    acc + mixed_det(&basis[p], &basis[q], &basis[r])
                });
            assert!(sum.im.is_zero(), "polarized determinant must be real");
            sum.re * sixth.clone()
        })
        .collect();
    CubicTensor { entries }
}

/// The unique symmetric `G` with `G_ABC X^A X^B X^C = det X`, obtained by
/// polarizing the determinant of `X^A λ_A`. Computed once.
pub fn cubic_tensor() -> &'static CubicTensor {
    static TENSOR: OnceLock<CubicTensor> = OnceLock::new();
    TENSOR.get_or_init(polarize_determinant)
}

/// `|X|³ = G_ABC X^A X^B X^C`. Indefinite: any sign is possible.
pub fn length_cubed<R: Real>(x: &NineVector<R>) -> R {
    cubic_tensor().eval(x)
}

/// The expanded nine-term polynomial for `|X|³` in the λ-basis.
pub fn length_cubed_expanded<R: Real>(x: &NineVector<R>) -> R {
    let v = |a: usize| x.0[a].clone();
    let two = R::from_i64(2);
    let sq = |a: usize| v(a) * v(a);
    (sq(0) - sq(1) - sq(2) - sq(3)) * v(8) - v(0) * (sq(4) + sq(5) + sq(6) + sq(7))
        + two.clone() * v(1) * (v(4) * v(6) + v(5) * v(7))
        + two * v(2) * (v(5) * v(6) - v(4) * v(7))
        + v(3) * (sq(4) + sq(5) - sq(6) - sq(7))
}

/// `det(X^A λ_A)` computed directly from the matrix.
pub fn length_cubed_by_det<R: Real>(x: &NineVector<R>) -> R {
    herm_from_components(x).det()
}

/// `|X| = ∛(det X)`, using the real cube root so negative determinants give
/// negative lengths.
pub fn length<R: Real>(x: &NineVector<R>) -> f64 {
    length_cubed(x).to_f64().cbrt()
}
