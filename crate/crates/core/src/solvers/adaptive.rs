//! The two backtracking methods.
//!
//! Both halve the smoothness estimate at the start of every iteration and
//! double it after each failed acceptance test. The jointly adaptive method
//! additionally tracks `beta = 0.5 - alpha`, doubling it (up to
//! `0.5 - alpha_min`) at the start of an iteration and halving it on every
//! failure, so the assumed noise level never reaches 0.5.

use crate::config::SolverConfig;
use crate::descent::descent_test_relaxed;
use crate::error::{Error, Result};
use crate::noise::{GradientSample, NoisyOracle, OracleMode};
use crate::trace::{IterationRecord, RunTrace, Termination};
use crate::vector::Vector;

use super::{step_size, stopping_rule};

#[derive(Debug, Clone, Copy)]
enum NoiseSchedule {
    Fixed {
        alpha: f64,
    },
    Adaptive {
        beta: f64,
        beta_max: f64,
        alpha_min: f64,
    },
}

impl NoiseSchedule {
    fn alpha(self) -> f64 {
        match self {
            NoiseSchedule::Fixed { alpha } => alpha,
            // 0.5 - (0.5 - alpha_min) can round below alpha_min.
            NoiseSchedule::Adaptive {
                beta, alpha_min, ..
            } => (0.5 - beta).max(alpha_min),
        }
    }

    fn relax(&mut self) {
        if let NoiseSchedule::Adaptive { beta, beta_max, .. } = self {
            *beta = (2.0 * *beta).min(*beta_max);
        }
    }

    fn tighten(&mut self) {
        if let NoiseSchedule::Adaptive { beta, .. } = self {
            *beta *= 0.5;
        }
    }
}

/// Gradient descent with backtracking on the smoothness estimate for a known
/// noise level `config.alpha`.
///
/// The noisy gradient is queried once per outer iteration; retries only
/// change the smoothness estimate. The oracle must be exact or fixed-level
/// with a level not exceeding `config.alpha`.
pub fn run_adaptive_l(
    oracle: &mut NoisyOracle<'_>,
    x0: &Vector,
    config: &SolverConfig,
) -> Result<RunTrace> {
    config.validate_adaptive_l()?;
    match oracle.mode() {
        OracleMode::FixedRelative { alpha } if alpha > config.alpha => {
            return Err(Error::OracleConfig(format!(
                "oracle noise {alpha} exceeds the assumed level {}",
                config.alpha
            )))
        }
        OracleMode::OnRequest { .. } => {
            return Err(Error::OracleConfig(
                "adaptive_l expects an exact or fixed-level oracle".into(),
            ))
        }
        _ => {}
    }
    run(
        oracle,
        x0,
        config,
        NoiseSchedule::Fixed {
            alpha: config.alpha,
        },
    )
}

/// Gradient descent with backtracking on both the smoothness estimate and the
/// assumed noise level.
///
/// With an [`OracleMode::OnRequest`] oracle every trial queries the gradient
/// at the current assumed level, so a retry re-samples the noise. With an
/// exact or fixed-level oracle the gradient is queried once per outer
/// iteration and only the step and acceptance test follow the assumed level.
pub fn run_adaptive_l_alpha(
    oracle: &mut NoisyOracle<'_>,
    x0: &Vector,
    config: &SolverConfig,
) -> Result<RunTrace> {
    config.validate_adaptive_l_alpha()?;
    if let OracleMode::OnRequest { alpha_floor } = oracle.mode() {
        if alpha_floor > config.alpha_min {
            return Err(Error::OracleConfig(format!(
                "oracle floor {alpha_floor} is above alpha_min = {}",
                config.alpha_min
            )));
        }
    }
    run(
        oracle,
        x0,
        config,
        NoiseSchedule::Adaptive {
            beta: 0.5 - config.alpha_0,
            beta_max: 0.5 - config.alpha_min,
            alpha_min: config.alpha_min,
        },
    )
}

fn query(oracle: &mut NoisyOracle<'_>, x: &Vector, alpha: f64) -> Result<GradientSample> {
    let requested = matches!(oracle.mode(), OracleMode::OnRequest { .. }).then_some(alpha);
    oracle.noisy_gradient(x, requested)
}

fn run(
    oracle: &mut NoisyOracle<'_>,
    x0: &Vector,
    config: &SolverConfig,
    mut schedule: NoiseSchedule,
) -> Result<RunTrace> {
    let objective = oracle.objective();
    if x0.len() != objective.dimension() {
        return Err(Error::DimensionMismatch {
            expected: objective.dimension(),
            actual: x0.len(),
        });
    }
    config.check_against_pl(objective.pl_hint())?;
    let requery_on_retry = matches!(oracle.mode(), OracleMode::OnRequest { .. });
    let f_star = objective.f_star();

    let mut x = x0.clone();
    let mut f_curr = objective.value(x.as_slice());
    let mut trace = RunTrace::new(x0.clone(), f_curr);
    if !f_curr.is_finite() {
        return Err(Error::Diverged {
            trace: Box::new(trace),
        });
    }
    let mut smoothness = config.l_0;

    macro_rules! diverged {
        () => {{
            trace.finish(x, Termination::BudgetExhausted);
            return Err(Error::Diverged {
                trace: Box::new(trace),
            });
        }};
    }

    for k in 0..config.max_iterations {
        smoothness = (smoothness / 2.0).max(config.l_min);
        schedule.relax();
        let mut alpha = schedule.alpha();

        let mut sample = match query(oracle, &x, alpha) {
            Ok(s) => s,
            Err(Error::NonFinite { .. }) => diverged!(),
            Err(e) => return Err(e),
        };
        let mut repeats = 0usize;
        let (next, f_next, h) = loop {
            assert!(alpha < 0.5, "assumed noise level reached 0.5");
            let h = step_size(smoothness, alpha)?;
            // A trial point that overflows counts as a failed test.
            if let Ok(trial) = x.add_scaled(-h, &sample.noisy) {
                let f_trial = objective.value(trial.as_slice());
                let displacement = trial.sub(&x);
                if descent_test_relaxed(
                    f_trial,
                    f_curr,
                    &sample.noisy,
                    &displacement,
                    smoothness,
                    alpha,
                    config.descent_slack,
                ) {
                    break (trial, f_trial, h);
                }
            }
            repeats += 1;
            if repeats > config.max_inner_repeats {
                trace.finish(x, Termination::InnerCapExceeded);
                return Ok(trace);
            }
            smoothness *= 2.0;
            schedule.tighten();
            alpha = schedule.alpha();
            if requery_on_retry {
                sample = match query(oracle, &x, alpha) {
                    Ok(s) => s,
                    Err(Error::NonFinite { .. }) => diverged!(),
                    Err(e) => return Err(e),
                };
            }
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
            inner_repeats: repeats,
            dist_from_x0: next.distance(x0),
        });
        x = next;
        f_curr = f_next;

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
