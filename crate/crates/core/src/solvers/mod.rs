//! Gradient methods sharing the update `x^{k+1} = x^k - h_k g(x^k)`.

mod adaptive;
mod constant;

pub use adaptive::{run_adaptive_l, run_adaptive_l_alpha};
pub use constant::run_constant_step;

use crate::error::{Error, Result};
use crate::trace::RunTrace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolverKind {
    ConstantStep,
    /// Backtracking on the smoothness estimate with a known noise level.
    AdaptiveL,
    /// Backtracking on both the smoothness estimate and the noise level.
    AdaptiveLAlpha,
}

impl SolverKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SolverKind::ConstantStep => "constant_step",
            SolverKind::AdaptiveL => "adaptive_l",
            SolverKind::AdaptiveLAlpha => "adaptive_l_alpha",
        }
    }
}

impl std::str::FromStr for SolverKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "constant_step" => Ok(SolverKind::ConstantStep),
            "adaptive_l" => Ok(SolverKind::AdaptiveL),
            "adaptive_l_alpha" => Ok(SolverKind::AdaptiveLAlpha),
            other => Err(Error::param(
                "solver",
                format!("unknown solver `{other}` (expected constant_step, adaptive_l or adaptive_l_alpha)"),
            )),
        }
    }
}

/// Step `(1/L) (1 - 2 alpha) / (1 - alpha)` minimizing the inexact descent
/// bound; requires `alpha < 0.5`.
pub fn step_size(smoothness: f64, alpha: f64) -> Result<f64> {
    if !(smoothness > 0.0 && smoothness.is_finite()) {
        return Err(Error::param(
            "smoothness",
            format!("{smoothness} is not positive"),
        ));
    }
    if !(0.0..0.5).contains(&alpha) {
        return Err(Error::param(
            "alpha",
            format!("{alpha} is outside [0, 0.5); the step degenerates to zero"),
        ));
    }
    Ok((1.0 - 2.0 * alpha) / (1.0 - alpha) / smoothness)
}

/// Constant step `(1/L) (1 - alpha) / (1 + alpha)^2`; requires `alpha < 1`.
pub fn constant_step_size(smoothness: f64, alpha: f64) -> Result<f64> {
    if !(smoothness > 0.0 && smoothness.is_finite()) {
        return Err(Error::param(
            "smoothness",
            format!("{smoothness} is not positive"),
        ));
    }
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::param("alpha", format!("{alpha} is outside [0, 1)")));
    }
    Ok((1.0 - alpha) / ((1.0 + alpha) * (1.0 + alpha)) / smoothness)
}

/// `|g|^2 <= 2 epsilon (1 - alpha)^2`, which certifies `f - f* <= epsilon / mu`
/// through the inexact PL inequality.
pub fn stopping_rule(noisy_grad_norm: f64, epsilon: f64, alpha: f64) -> bool {
    noisy_grad_norm * noisy_grad_norm <= 2.0 * epsilon * (1.0 - alpha) * (1.0 - alpha)
}

/// Failed acceptance tests summed over the run.
pub fn inner_repeat_total(trace: &RunTrace) -> usize {
    trace.records().iter().map(|r| r.inner_repeats).sum()
}

/// Acceptance tests evaluated over the recorded iterations: one passing test
/// per iteration plus every failure.
pub fn acceptance_test_executions(trace: &RunTrace) -> usize {
    trace.iterations() + inner_repeat_total(trace)
}
