//! Reduction of the 9-dimensional equation to 4-dimensional Dirac and
//! Klein-Gordon equations.
//!
//! Take `P^α = p^α` for `α = 0..3`, `P⁴ = … = P⁷ = 0` and `P⁸ = M`. Then
//! `P = diag(p₂, M)` with the 2×2 Hermitian matrix
//! `p₂ = [[p⁰+p³, p¹−ip²], [p¹+ip², p⁰−p³]]`, whose determinant is the
//! Minkowski square `g_μν p^μ p^ν`. The cofactor matrix is
//! `diag(M·cof(p₂), det p₂)`, so the quadratic system splits into
//!
//! - the 2-spinor pair `p₂ β = M i`, `adj(p₂) i = M β` on `(i¹, i², β₁, β₂)`,
//! - the scalar pair `β₃ = i³`, `det(p₂) i³ = M² β₃`, which forces
//!   `(g_μν p^μ p^ν − M²) i³ = 0`.

use num_complex::Complex;
use num_traits::Zero;

use crate::dk::momentum::{momentum_matrix, Mass, Momentum9};
use crate::dk::solve::{check_transport, solve, TwelveColumn, FLOAT_RESIDUAL_TOL};
use crate::herm::NineVector;
use crate::matrix::{CMatrix, Matrix};
use crate::scalar::{self, real, Real};

/// Outcome of the 4-dimensional reduction.
#[derive(Clone, Debug)]
pub struct SplitReport<R: Real> {
    pub momentum: Momentum9<R>,
    pub mass: R,
    /// `P` has the form `diag(p₂, M)`.
    pub block_diagonal: bool,
    /// Cofactors have the form `diag(M·cof(p₂), det p₂)`.
    pub cofactors_block_diagonal: bool,
    /// `p₂`.
    pub dirac_matrix: CMatrix<R>,
    /// `adj(p₂)`.
    pub dirac_companion: CMatrix<R>,
    /// The quadratic system restricted to `(i¹, i², β₁, β₂)` (lower half
    /// divided by `M`) equals the 2-spinor system built from `p₂` directly,
    /// and has no coupling to `(i³, β₃)`.
    pub dirac_system_matches: bool,
    /// `g_μν p^μ p^ν`.
    pub minkowski_square: R,
    /// `g_μν p^μ p^ν − M²`.
    pub klein_gordon_factor: R,
    /// `g_μν p^μ p^ν = M²`.
    pub on_shell: bool,
    /// Kernel dimension of the 2-spinor system alone.
    pub dirac_kernel_dimension: usize,
    /// The scalar relation admits `i³ ≠ 0`.
    pub klein_gordon_solvable: bool,
    /// Kernel basis of the full 12×12 equation.
    pub solutions: Vec<TwelveColumn<R>>,
    /// Each full solution satisfies the Dirac pair, `i³ = β₃`, and the scalar
    /// relation, and transports to the quadratic system.
    pub solutions_decouple: bool,
}

impl<R: Real> SplitReport<R> {
    /// Structural checks pass and solvability matches the mass shell.
    pub fn consistent(&self) -> bool {
        let nonempty = !self.solutions.is_empty();
        self.block_diagonal
            && self.cofactors_block_diagonal
            && self.dirac_system_matches
            && self.solutions_decouple
            && nonempty == self.on_shell
            && (self.dirac_kernel_dimension > 0) == self.on_shell
            && self.klein_gordon_solvable == self.on_shell
    }
}

/// `[[−M I₂, p₂], [adj(p₂), −M I₂]]` acting on `(i¹, i², β₁, β₂)`.
pub fn dirac_system<R: Real>(p2: &CMatrix<R>, m: &R) -> CMatrix<R> {
    let mut s = Matrix::zeros(4, 4);
    let neg_m = Matrix::<Complex<R>>::identity(2).scale(&real(-m.clone()));
    s.set_block(0, 0, &neg_m);
    s.set_block(0, 2, p2);
    s.set_block(2, 0, &p2.adjugate());
    s.set_block(2, 2, &neg_m);
    s
}

/// Builds `P = (p⁰, p¹, p², p³, 0, 0, 0, 0, M)` and checks the splitting.
pub fn reduce_equation<R: Real>(p: &[R; 4], m: &Mass<R>) -> SplitReport<R> {
    let tol = FLOAT_RESIDUAL_TOL;
    let mv = m.value().clone();
    let momentum = NineVector(std::array::from_fn(|a| match a {
        0..=3 => p[a].clone(),
        8 => mv.clone(),
        _ => R::zero(),
    }));
    let pm = momentum_matrix(&momentum);
    let zero_ish = |z: &Complex<R>| scalar::is_negligible(z, tol);

    let block_diagonal = [(0, 2), (1, 2), (2, 0), (2, 1)]
        .iter()
        .all(|&(r, c)| zero_ish(pm.upper.get(r, c)))
        && scalar::close(pm.upper.get(2, 2), &real(mv.clone()), tol);

    let p2 = pm.upper.block(0, 0, 2, 2);
    let det2 = p2.det();
    let cof2 = p2.cofactors();
    let cofactors_block_diagonal = (0..3).all(|r| {
        (0..3).all(|c| {
            let want = match (r, c) {
                (0..=1, 0..=1) => cof2.get(r, c).clone() * real(mv.clone()),
                (2, 2) => det2.clone(),
                _ => Complex::zero(),
            };
            scalar::close(pm.cofactors.get(r, c), &want, tol)
        })
    });

    // Quadratic system on (i, β) with the lower half divided by M:
    // [[−M I, P], [adj(P)/M, −M I]].
    let mut full = Matrix::zeros(6, 6);
    let neg_m3 = Matrix::<Complex<R>>::identity(3).scale(&real(-mv.clone()));
    full.set_block(0, 0, &neg_m3);
    full.set_block(0, 3, &pm.upper);
    full.set_block(3, 0, &pm.cofactors.transpose().scale(&real(R::one() / mv.clone())));
    full.set_block(3, 3, &neg_m3);
    let dirac_idx = [0, 1, 3, 4];
    let scalar_idx = [2, 5];
    let direct = dirac_system(&p2, &mv);
    let restricted_matches = dirac_idx.iter().enumerate().all(|(a, &r)| {
        dirac_idx
            .iter()
            .enumerate()
            .all(|(b, &c)| scalar::close(full.get(r, c), direct.get(a, b), tol))
    });
    let uncoupled = dirac_idx.iter().all(|&r| {
        scalar_idx
            .iter()
            .all(|&c| zero_ish(full.get(r, c)) && zero_ish(full.get(c, r)))
    });
    let dirac_system_matches = restricted_matches && uncoupled;

    let minkowski_square = det2.re.clone();
    let klein_gordon_factor = minkowski_square.clone() - mv.clone() * mv.clone();
    let on_shell = klein_gordon_factor.is_negligible(tol);
    let dirac_kernel_dimension = R::kernel(&direct).len();
    // the scalar block [[−M, M], [det p₂ / M, −M]] on (i³, β₃)
    let scalar_block = Matrix::from_rows(vec![
        vec![real(-mv.clone()), real(mv.clone())],
        vec![real(minkowski_square.clone() / mv.clone()), real(-mv.clone())],
    ]);
    let klein_gordon_solvable = !R::kernel(&scalar_block).is_empty();

    let solutions = solve(&momentum, m);
    let kg = real(klein_gordon_factor.clone());
    let solutions_decouple = solutions.iter().all(|psi| {
        let (i, beta) = (psi.i(), psi.beta());
        let pair = [i.0[0].clone(), i.0[1].clone(), beta.0[0].clone(), beta.0[1].clone()];
        let dirac_ok = direct.mul_vec(&pair).iter().all(zero_ish);
        let scalar_ok = zero_ish(&(i.0[2].clone() - beta.0[2].clone()))
            && zero_ish(&(kg.clone() * i.0[2].clone()));
        dirac_ok && scalar_ok && check_transport(&momentum, m, psi).passed()
    });

    SplitReport {
        momentum,
        mass: mv,
        block_diagonal,
        cofactors_block_diagonal,
        dirac_companion: p2.adjugate(),
        dirac_matrix: p2,
        dirac_system_matches,
        minkowski_square,
        klein_gordon_factor,
        on_shell,
        dirac_kernel_dimension,
        klein_gordon_solvable,
        solutions,
        solutions_decouple,
    }
}
