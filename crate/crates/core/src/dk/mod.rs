//! The momentum-space wave equation of a free 3-spinor particle and its
//! Duffin-Kemmer form.

pub mod momentum;
pub mod phat;
pub mod solve;
pub mod split;

pub use momentum::{momentum_matrix, Mass, Momentum9, MomentumMatrix};
pub use phat::{assemble_phat, delta_family, exact_delta_family, DeltaFamily, PhatMatrix};
pub use solve::{solve, solve_report, SolveReport, TwelveColumn};
pub use split::{reduce_equation, SplitReport};
