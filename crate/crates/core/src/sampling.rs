//! Seeded random inputs for verification campaigns.
//!
//! Each trial draws from its own ChaCha stream selected by the trial index,
//! so results do not depend on scheduling or thread count.

use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cubic::length_cubed;
use crate::dk::momentum::{Mass, Momentum9};
use crate::herm::{components_from_herm, Herm3, NineVector};
use crate::isometry::{transform_herm, transvection, SpinorMap};
use crate::matrix::{CMatrix, Matrix};
use crate::scalar::{cx_int, real, Real};

/// Default bound for integer entries, `[-9, 9]`.
pub const DEFAULT_BOUND: i64 = 9;

/// Bound for transvection parameters; keeps exact products small.
pub const TRANSVECTION_BOUND: i64 = 2;

/// Number of transvections multiplied into an exact `SL(3)` sample.
pub const TRANSVECTION_FACTORS: usize = 6;

/// The generator for trial `trial` of a campaign seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn int_in(rng: &mut impl Rng, bound: i64) -> i64 {
    rng.random_range(-bound..=bound)
}

pub fn int_vector<R: Real>(rng: &mut impl Rng, bound: i64) -> NineVector<R> {
    NineVector(std::array::from_fn(|_| R::from_i64(int_in(rng, bound))))
}

pub fn gaussian_int<R: Real>(rng: &mut impl Rng, bound: i64) -> Complex<R> {
    cx_int(int_in(rng, bound), int_in(rng, bound))
}

/// A product of elementary transvections with Gaussian-integer parameters;
/// determinant exactly one on every backend.
pub fn transvection_sl3<R: Real>(rng: &mut impl Rng) -> SpinorMap<R> {
    (0..TRANSVECTION_FACTORS).fold(SpinorMap::identity(), |acc, _| {
        let row = rng.random_range(0..3);
        let col = (row + rng.random_range(1..3)) % 3;
        acc.compose(&transvection(row, col, gaussian_int(rng, TRANSVECTION_BOUND)))
    })
}

fn unit_box(rng: &mut impl Rng) -> Complex<f64> {
    Complex::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
}

/// Entries from the complex unit box, divided by the principal cube root of
/// the determinant. Draws with `|det| < 1e-6` are rejected.
pub fn float_sl3(rng: &mut impl Rng) -> SpinorMap<f64> {
    loop {
        let m: CMatrix<f64> = Matrix::from_fn(3, 3, |_, _| unit_box(rng));
        let det = m.det();
        if det.norm() < 1e-6 {
            continue;
        }
        let scale = det.cbrt().inv();
        return SpinorMap::new(m.scale(&scale));
    }
}

/// `[[a, b], [c, (1 + bc)/a]]` with Gaussian integers `a ≠ 0`, `b`, `c`.
pub fn exact_sl2<R: Real>(rng: &mut impl Rng, bound: i64) -> CMatrix<R> {
    let a = loop {
        let a: Complex<R> = gaussian_int(rng, bound);
        if a != Complex::new(R::zero(), R::zero()) {
            break a;
        }
    };
    let b = gaussian_int(rng, bound);
    let c = gaussian_int(rng, bound);
    let one: Complex<R> = cx_int(1, 0);
    let d = (one + b.clone() * c.clone()) / a.clone();
    Matrix::from_rows(vec![vec![a, b], vec![c, d]])
}

/// Unit-box entries divided by a square root of the determinant. Draws with
/// `|det| < 0.1` are rejected to keep entries of order one.
pub fn float_sl2(rng: &mut impl Rng) -> CMatrix<f64> {
    loop {
        let m: CMatrix<f64> = Matrix::from_fn(2, 2, |_, _| unit_box(rng));
        let det = m.det();
        if det.norm() < 0.1 {
            continue;
        }
        return m.scale(&det.sqrt().inv());
    }
}

/// `M` from a short list of positive rationals.
pub fn mass<R: Real>(rng: &mut impl Rng) -> Mass<R> {
    const CHOICES: [(i64, i64); 6] = [(1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (5, 3)];
    let (n, d) = CHOICES[rng.random_range(0..CHOICES.len())];
    Mass::new(R::from_ratio(n, d)).expect("positive mass")
}

/// `D · diag(M t, M / t, M) · D⁺` with `D` a transvection product and `t` a
/// positive rational: positive definite with `det P = M³`.
pub fn on_shell_momentum<R: Real>(rng: &mut impl Rng, m: &Mass<R>) -> Momentum9<R> {
    let t = R::from_ratio(rng.random_range(1..=4), rng.random_range(1..=4));
    let mv = m.value().clone();
    let diag = Matrix::diagonal(&[
        real(mv.clone() * t.clone()),
        real(mv.clone() / t),
        real(mv),
    ]);
    let d = transvection_sl3(rng);
    let rest = Herm3::new(diag).expect("real diagonal matrix is Hermitian");
    components_from_herm(&transform_herm(&d, &rest))
}

/// A random integer momentum with `det P ≠ M³`.
pub fn off_shell_momentum<R: Real>(rng: &mut impl Rng, m: &Mass<R>, bound: i64) -> Momentum9<R> {
    loop {
        let p: Momentum9<R> = int_vector(rng, bound);
        if !length_cubed(&p).close_to(&m.cubed(), 1e-6) {
            return p;
        }
    }
}
