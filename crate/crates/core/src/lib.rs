//! Finite-volume GRP solver for the ten-moment Gaussian closure equations.

pub mod config;
pub mod convergence;
pub mod driver;
pub mod error;
pub mod fv1d;
pub mod fv2d;
pub mod grp;
pub mod io;
pub mod par;
pub mod potential;
pub mod problems;
pub mod reconstruction;
pub mod riemann;
pub mod state;

pub use error::{Error, Result};
pub use fv1d::{BoundaryCondition, Grid1D, SchemeConfig, Solution1D};
pub use fv2d::{Grid2D, Options2D, Solution2D, SplitOrder};
pub use potential::{Potential, PotentialKind};
pub use reconstruction::Limiter;
pub use riemann::{RiemannFan, Region, Side, WaveKind};
pub use state::{Cons, Prim, Vec6};
