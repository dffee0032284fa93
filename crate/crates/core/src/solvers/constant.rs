use crate::config::SolverConfig;
use crate::error::{Error, Result};
use crate::noise::{NoisyOracle, OracleMode};
use crate::trace::{IterationRecord, RunTrace, Termination};
use crate::vector::Vector;

use super::{constant_step_size, stopping_rule};

/// Gradient descent with the constant step `(1/L)(1 - alpha)/(1 + alpha)^2`
/// for known `L` and noise level `alpha < 1`.
///
/// No acceptance test is performed; the stopping rule (if configured) is
/// evaluated with the assumed `alpha`.
pub fn run_constant_step(
    oracle: &mut NoisyOracle<'_>,
    x0: &Vector,
    smoothness: f64,
    alpha: f64,
    config: &SolverConfig,
) -> Result<RunTrace> {
    config.validate_common()?;
    let h = constant_step_size(smoothness, alpha)?;
    match oracle.mode() {
        OracleMode::FixedRelative { alpha: actual } if actual > alpha => {
            return Err(Error::OracleConfig(format!(
                "oracle noise {actual} exceeds the assumed level {alpha}"
            )))
        }
        OracleMode::OnRequest { .. } => {
            return Err(Error::OracleConfig(
                "the constant step method expects a fixed-level oracle".into(),
            ))
        }
        _ => {}
    }
    let objective = oracle.objective();
    if x0.len() != objective.dimension() {
        return Err(Error::DimensionMismatch {
            expected: objective.dimension(),
            actual: x0.len(),
        });
    }
    let f_star = objective.f_star();

    let f0 = objective.value(x0.as_slice());
    let mut trace = RunTrace::new(x0.clone(), f0);
    if !f0.is_finite() {
        return Err(Error::Diverged {
            trace: Box::new(trace),
        });
    }
    let mut x = x0.clone();
    for k in 0..config.max_iterations {
        let sample = match oracle.noisy_gradient(&x, None) {
            Ok(s) => s,
            Err(Error::NonFinite { .. }) => {
                trace.finish(x, Termination::BudgetExhausted);
                return Err(Error::Diverged {
                    trace: Box::new(trace),
                });
            }
            Err(e) => return Err(e),
        };
        let next = x
            .add_scaled(-h, &sample.noisy)
            .ok()
            .map(|p| {
                let v = objective.value(p.as_slice());
                (p, v)
            })
            .filter(|(_, v)| v.is_finite());
        let Some((next, f_next)) = next else {
            trace.finish(x, Termination::BudgetExhausted);
            return Err(Error::Diverged {
                trace: Box::new(trace),
            });
        };
        let noisy_norm = sample.noisy.norm();
        trace.record_iteration(IterationRecord {
            k,
            f_value: f_next,
            gap: f_star.map(|s| f_next - s),
            exact_grad_norm: sample.exact.norm(),
            noisy_grad_norm: noisy_norm,
            smoothness,
            alpha,
            step_size: h,
            inner_repeats: 0,
            dist_from_x0: next.distance(x0),
        });
        x = next;
        if let Some(eps) = config.epsilon {
            if stopping_rule(noisy_norm, eps, alpha) {
                trace.finish(x, Termination::StoppingRuleFired);
                return Ok(trace);
            }
        }
    }
    trace.finish(x, Termination::BudgetExhausted);
    Ok(trace)
}
