//! Variational toolkit for doubly nonlinear evolution equations
//! `∂ψ(ẋ(t)) + ∂φ(x(t)) ∋ 0` in `R^n`.
//!
//! Instead of stepping the equation in time, the primal solvers minimize a
//! global-in-time energy-dissipation functional over whole trajectories; a
//! trajectory is a solution exactly when the minimum value is zero. The crate
//! also carries two independent certification routes for that null-minimum
//! property: a convex relaxation of the problem to space-time measures
//! constrained by the continuity equation, and a dual bound built from
//! cylinder-function subsolutions of a Hamilton-Jacobi inequality.
//!
//! Module map:
//! - [`convex`]: dissipation potentials, Fenchel conjugation, subdifferential
//!   selection, Fenchel-Young gap diagnostics.
//! - [`energy`]: energies `φ(t,x)`, friction fields, and the slope
//!   `S = ψ*(-Dφ)`.
//! - [`degiorgi`]: discrete trajectories and quadrature of the weighted
//!   energy-dissipation functional.
//! - [`solver`]: direct transcription minimization and the minimizing-movements
//!   (implicit Euler) baseline.
//! - [`relax`]: 1-D grid realization of the measure-relaxed problem with a
//!   first-order primal-dual solver and characteristic reconstruction.
//! - [`hj`]: Hamilton-Jacobi dual certificates: feasibility checks, backward
//!   boundedness, and parametric dual ascent.

pub mod convex;
pub mod degiorgi;
mod descent;
pub mod energy;
mod error;
pub mod hj;
pub mod relax;
pub mod solver;

pub use convex::DissipationPotential;
pub use degiorgi::{DeGiorgiParams, Trajectory};
pub use energy::{EnergyModel, FrictionField};
pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
