//! Solutions of `(P^A δ_A − M) Ψ = 0` and their transport to and from the
//! quadratic two-equation form.
//!
//! Off the mass shell (`det P ≠ M³`) the kernel is trivial: applying `P̂`
//! three more times to `P̂Ψ = MΨ` gives `M⁴Ψ = det(P) M Ψ`. On the shell `P`
//! is invertible, any `i ∈ C³` determines `β = M P⁻¹ i`, and the kernel is
//! 3-dimensional.

use num_complex::Complex;
use num_traits::Zero;

use crate::cubic::length_cubed;
use crate::dk::momentum::{
    momentum_matrix, wave_equation_residual_with, xi_variables_with, Mass, Momentum9,
};
use crate::dk::phat::{assemble_phat_with, shifted};
use crate::error::{Error, Result};
use crate::herm::{components_from_herm, herm_from_components};
use crate::isometry::{transform_herm, transform_spinor, SpinorMap};
use crate::scalar::{self, Real};
use crate::spinor::Spinor3;

/// Tolerance for float residuals and float on-shell tests.
pub const FLOAT_RESIDUAL_TOL: f64 = 1e-9;

/// `Ψ = (i¹, i², i³, β₁, β₂, β₃, ξ₁, …, ξ₆)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwelveColumn<R: Real>(pub [Complex<R>; 12]);

impl<R: Real> TwelveColumn<R> {
    pub fn from_slice(values: &[Complex<R>]) -> Self {
        Self(std::array::from_fn(|k| values[k].clone()))
    }

    /// Assembles `(i, β, ξ)`.
    pub fn from_parts(i: &Spinor3<R>, beta: &Spinor3<R>, xi: &[Complex<R>; 6]) -> Self {
        Self(std::array::from_fn(|k| match k {
            0..=2 => i.0[k].clone(),
            3..=5 => beta.0[k - 3].clone(),
            _ => xi[k - 6].clone(),
        }))
    }

    pub fn i(&self) -> Spinor3<R> {
        Spinor3::from_slice(&self.0[0..3])
    }

    pub fn beta(&self) -> Spinor3<R> {
        Spinor3::from_slice(&self.0[3..6])
    }

    pub fn xi(&self) -> [Complex<R>; 6] {
        std::array::from_fn(|k| self.0[6 + k].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// `(P̂ − M) Ψ`.
pub fn equation_residual<R: Real>(p: &Momentum9<R>, m: &Mass<R>, psi: &TwelveColumn<R>) -> Vec<Complex<R>> {
    let phat = assemble_phat_with(&momentum_matrix(p));
    shifted(&phat, m.value()).mul_vec(&psi.0)
}

/// Largest `|P^A|`, at least one.
fn momentum_scale<R: Real>(p: &Momentum9<R>) -> f64 {
    p.components().iter().map(|x| x.to_f64().abs()).fold(1.0, f64::max)
}

/// Size of the terms in a residual of either formulation:
/// `max(1, |fields|) · max(1, M)² · max(1, |P|)²`.
pub fn residual_scale<R: Real>(p: &Momentum9<R>, m: &Mass<R>, fields: &[Complex<R>]) -> f64 {
    let field = fields.iter().map(scalar::max_abs_f64).fold(1.0, f64::max);
    field * m.value().to_f64().max(1.0).powi(2) * momentum_scale(p).powi(2)
}

/// `det P = M³`, exact on exact backends. On float backends the difference
/// is compared against `max(1, |P|)³ · max(1, M)³`, the size of the terms
/// that cancel in the determinant.
pub fn is_on_shell<R: Real>(p: &Momentum9<R>, m: &Mass<R>) -> bool {
    let diff = length_cubed(p) - m.cubed();
    if R::EXACT {
        return diff.is_zero();
    }
    let scale = momentum_scale(p).powi(3) * m.value().to_f64().max(1.0).powi(3);
    diff.to_f64().abs() <= FLOAT_RESIDUAL_TOL * scale
}

/// Kernel basis of `P^A δ_A − M`. Empty off the mass shell.
pub fn solve<R: Real>(p: &Momentum9<R>, m: &Mass<R>) -> Vec<TwelveColumn<R>> {
    let phat = assemble_phat_with(&momentum_matrix(p));
    R::kernel(&shifted(&phat, m.value()))
        .iter()
        .map(|v| TwelveColumn::from_slice(v))
        .collect()
}

/// Like [`solve`] but taking a raw mass value, rejecting `M <= 0`.
pub fn solve_checked<R: Real>(p: &Momentum9<R>, mass: R) -> Result<Vec<TwelveColumn<R>>> {
    let m = Mass::new(mass)?;
    Ok(solve(p, &m))
}

/// From a solution `(i, β)` of the quadratic system to the 12-column, filling
/// in `ξ` from `i`.
pub fn expand_solution<R: Real>(
    p: &Momentum9<R>,
    m: &Mass<R>,
    i: &Spinor3<R>,
    beta: &Spinor3<R>,
) -> TwelveColumn<R> {
    let xi = xi_variables_with(&momentum_matrix(p), i, m);
    TwelveColumn::from_parts(i, beta, &xi)
}

/// Consistency of one kernel column with the quadratic formulation.
#[derive(Clone, Debug, PartialEq)]
pub struct TransportCheck {
    /// `(P̂ − M)Ψ` vanishes.
    pub linear_residual_zero: bool,
    /// `(i, β)` solve the quadratic system.
    pub quadratic_residual_zero: bool,
    /// The ξ slots equal the ξ-variables computed from `i`.
    pub xi_match: bool,
    /// Re-expanding `(i, β)` reproduces `Ψ`.
    pub round_trip: bool,
    /// `(det P − M³)` annihilates every component of `i` and `β`.
    pub klein_gordon_zero: bool,
    /// Largest residual entry (zero on exact backends).
    pub residual_max_abs: f64,
}

impl TransportCheck {
    pub fn passed(&self) -> bool {
        self.linear_residual_zero
            && self.quadratic_residual_zero
            && self.xi_match
            && self.round_trip
            && self.klein_gordon_zero
    }
}

/// Checks both directions of the equivalence for one column.
pub fn check_transport<R: Real>(p: &Momentum9<R>, m: &Mass<R>, psi: &TwelveColumn<R>) -> TransportCheck {
    let tol = FLOAT_RESIDUAL_TOL;
    let pm = momentum_matrix(p);
    let linear = shifted(&assemble_phat_with(&pm), m.value()).mul_vec(&psi.0);
    let scale = residual_scale(p, m, &psi.0);
    let near_zero = |z: &Complex<R>| {
        if R::EXACT {
            z.is_zero()
        } else {
            scalar::max_abs_f64(z) <= tol * scale
        }
    };
    let residual_max_abs = linear.iter().map(scalar::max_abs_f64).fold(0.0, f64::max);
    let linear_residual_zero = linear.iter().all(near_zero);

    let (i, beta) = (psi.i(), psi.beta());
    let (upper, lower) = wave_equation_residual_with(&pm, m, &i, &beta);
    let quadratic_residual_zero = upper.0.iter().chain(lower.0.iter()).all(near_zero);

    let xi = xi_variables_with(&pm, &i, m);
    let xi_match = xi
        .iter()
        .zip(psi.xi().iter())
        .all(|(a, b)| near_zero(&(a.clone() - b.clone())));
    let expanded = TwelveColumn::from_parts(&i, &beta, &xi);
    let round_trip = expanded
        .0
        .iter()
        .zip(psi.0.iter())
        .all(|(a, b)| near_zero(&(a.clone() - b.clone())));

    let kg = scalar::real(length_cubed(p) - m.cubed());
    let klein_gordon_zero = if R::EXACT {
        i.0.iter().chain(beta.0.iter()).all(|v| (kg.clone() * v.clone()).is_zero())
    } else {
        is_on_shell(p, m) || i.is_zero() && beta.is_zero()
    };

    TransportCheck {
        linear_residual_zero,
        quadratic_residual_zero,
        xi_match,
        round_trip,
        klein_gordon_zero,
        residual_max_abs,
    }
}

/// `P ↦ D P D⁺` in component form.
pub fn transform_momentum<R: Real>(d: &SpinorMap<R>, p: &Momentum9<R>) -> Momentum9<R> {
    components_from_herm(&transform_herm(d, &herm_from_components(p)))
}

/// `(i, β) ↦ (D i, (D⁺)⁻¹ β)`.
///
/// The upper equation keeps its form because
/// `(D P D⁺)(D⁺)⁻¹β = D P β = M D i`. For the lower one, the cofactor
/// contraction `Σ_r P_{rṡ} i^r` is `adj(P) i`, and with `det D = 1`
/// `adj(D P D⁺) = (D⁺)⁻¹ adj(P) D⁻¹`, so `adj(P') D i = (D⁺)⁻¹ adj(P) i
/// = M² (D⁺)⁻¹ β`. Fails when `D` is singular.
pub fn transform_solution<R: Real>(
    d: &SpinorMap<R>,
    i: &Spinor3<R>,
    beta: &Spinor3<R>,
) -> Result<(Spinor3<R>, Spinor3<R>)> {
    let inv_adj = d
        .matrix()
        .adjoint()
        .inverse()
        .ok_or_else(|| Error::NotUnimodular("singular spinor map".into()))?;
    let new_beta = Spinor3::from_slice(&inv_adj.mul_vec(beta.components()));
    Ok((transform_spinor(d, i), new_beta))
}

/// Solver summary, shaped for the JSON report.
#[derive(Clone, Debug)]
pub struct SolveReport<R: Real> {
    pub momentum: Momentum9<R>,
    pub mass: R,
    pub on_shell: bool,
    pub kernel_dimension: usize,
    pub basis: Vec<TwelveColumn<R>>,
    pub residual_max_abs: f64,
}

pub fn solve_report<R: Real>(p: &Momentum9<R>, m: &Mass<R>) -> SolveReport<R> {
    let basis = solve(p, m);
    let residual_max_abs = basis
        .iter()
        .flat_map(|psi| equation_residual(p, m, psi))
        .map(|z| scalar::max_abs_f64(&z))
        .fold(0.0, f64::max);
    SolveReport {
        momentum: p.clone(),
        mass: m.value().clone(),
        on_shell: is_on_shell(p, m),
        kernel_dimension: basis.len(),
        basis,
        residual_max_abs,
    }
}
