//! Exact algebra of Finslerian 3-spinors.
//!
//! The crate covers three layers:
//!
//! - [`spinor`], [`herm`], [`cubic`]: 3-spinors with their symplectic
//!   3-product, the 9-dimensional real space of Hermitian 3×3 matrices, and
//!   the cubic length `|X|³ = det X`.
//! - [`isometry`], [`reduction`]: the `SL(3,C)` action `X ↦ D X D⁺`, its 9×9
//!   matrix `L(D)`, the embedded `SL(2,C)`, and the 4 + 4 + 1 splitting of a
//!   9-vector seen by a 4-dimensional observer.
//! - [`dk`]: the momentum-space wave equation for a free 3-spinor particle,
//!   its 12×12 linearization `P̂ = P^A δ_A`, and the quartic identities of the
//!   δ-matrices.
//!
//! Everything is generic over a [`Real`] backend: [`Rational`] for exact
//! certification of identities, `f64` for sampling.

pub mod campaign;
pub mod cubic;
pub mod dk;
pub mod error;
pub mod herm;
pub mod isometry;
pub mod json;
pub mod matrix;
pub mod reduction;
pub mod sampling;
pub mod scalar;
pub mod spinor;

pub use cubic::{cubic_tensor, length, length_cubed, CubicTensor};
pub use error::{Error, Result};
pub use herm::{components_from_herm, herm_from_components, Herm3, LambdaBasis, NineVector};
pub use matrix::{CMatrix, Matrix};
pub use scalar::{ExactComplex, FloatComplex, Rational, Real};
pub use spinor::{symplectic3, Spinor3};
