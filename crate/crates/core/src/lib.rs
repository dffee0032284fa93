//! Gradient descent for smooth objectives satisfying the Polyak–Łojasiewicz
//! condition when only a relatively inexact gradient is available.
//!
//! The crate provides
//!
//! * [`NoisyOracle`]: gradients corrupted by noise drawn uniformly from a ball
//!   of radius `alpha * |grad f(x)|`, either at a fixed level or at a level
//!   requested by the solver;
//! * three solvers sharing the update `x <- x - h * g`: a constant step
//!   baseline, [`run_adaptive_l`] (backtracking on the smoothness estimate)
//!   and [`run_adaptive_l_alpha`] (backtracking on both the smoothness estimate
//!   and the assumed noise level);
//! * closed-form complexity and trajectory bounds in [`theory`];
//! * benchmark objectives with analytic gradients in [`testbed`].

mod config;
mod descent;
mod error;
mod objective;
mod trace;
mod vector;

pub mod noise;
pub mod solvers;
pub mod testbed;
pub mod theory;

pub use config::SolverConfig;
pub use descent::{descent_test, descent_test_relaxed};
pub use error::{Error, Result};
pub use noise::{sample_ball, GradientSample, NoisyOracle, OracleMode};
pub use objective::Objective;
pub use solvers::{
    acceptance_test_executions, constant_step_size, inner_repeat_total, run_adaptive_l,
    run_adaptive_l_alpha, run_constant_step, step_size, stopping_rule, SolverKind,
};
pub use trace::{IterationRecord, RunTrace, Termination};
pub use vector::{euclidean_norm, Vector};
