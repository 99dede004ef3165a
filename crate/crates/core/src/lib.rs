//! Numerical core for second-moment renormalized nonlinear diffusion.
//!
//! The crate covers the pieces needed to study `v_t = Δv^p` through Rényi
//! entropies:
//!
//! - [`grid`]: uniform 1D and radial grids with trapezoid quadrature;
//! - [`density`]: nonnegative densities with cached moments, dilation and
//!   normalization;
//! - [`profiles`]: Gaussian and Barenblatt steady states matched to a
//!   prescribed mass and second moment;
//! - [`entropy`]: Rényi/Shannon entropies, Fisher informations, relative
//!   entropies and entropy powers;
//! - [`evolve`]: an explicit conservative finite-volume solver plus exact
//!   heat and Barenblatt reference trajectories;
//! - [`rescale`]: the second-moment rescaling `u(y, τ)` of a trajectory;
//! - [`bounds`]: decay bounds, rate comparison, entropy-power concavity and
//!   the functional inequality suite.
//!
//! Everything is `no_std` with `alloc`; IO, CLI and file formats live in the
//! `renyi-flow` crate.

#![no_std]
#![forbid(unsafe_code)]
// `!(x > 0.0)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![cfg_attr(test, allow(unused_imports))]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
mod interp;
mod math;
mod quadrature;

pub mod bounds;
pub mod density;
pub mod entropy;
pub mod evolve;
pub mod grid;
pub mod mixture;
pub mod profiles;
pub mod rescale;

pub use bounds::{
    compare_rates, concavity_check, inequality_suite, linear_bound, nonlinear_bound, verify_decay, DecayCurve,
    InequalityReport, Theorem,
};
pub use density::{Density, Moments, PowerTail};
pub use entropy::{EntropyReport, SHANNON_WINDOW};
pub use error::{Error, Result};
pub use evolve::{solve, SolverConfig, Trajectory};
pub use grid::{Grid, GridKind};
pub use mixture::{GaussianComponent, GaussianMixture};
pub use profiles::{ProfileKind, SteadyProfile};
pub use rescale::{to_scaled, ScaledTrajectory};

/// Critical exponent `n / (n + 2)`; Barenblatt profiles have a finite second
/// moment only above it.
pub fn critical_exponent(n: usize) -> f64 {
    n as f64 / (n as f64 + 2.0)
}

/// Checks `p > n / (n + 2)`.
pub fn check_admissible(p: f64, n: usize) -> Result<()> {
    if !(p.is_finite() && p > critical_exponent(n)) {
        return Err(Error::InadmissibleExponent { p, n });
    }
    Ok(())
}

/// Crate version, echoed in experiment manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
