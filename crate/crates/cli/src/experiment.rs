//! Sweeps over `(alpha, seed)` cells.

use rayon::prelude::*;
use relgrad::{
    run_adaptive_l, run_adaptive_l_alpha, run_constant_step, NoisyOracle, Objective, OracleMode,
    RunTrace, SolverKind, Termination,
};

use crate::config::{ExperimentConfig, OracleKind};
use crate::error::{HarnessError, Result};

/// Outcome of a single run.
#[derive(Debug, Clone)]
pub struct CellResult {
    pub alpha: f64,
    pub seed: u64,
    pub trace: RunTrace,
    /// The run produced a non-finite value; `trace` holds what came before.
    pub diverged: bool,
}

impl CellResult {
    pub fn final_value(&self) -> f64 {
        self.trace.final_value()
    }

    pub fn failed(&self) -> bool {
        self.diverged || self.trace.termination() == Termination::InnerCapExceeded
    }

    pub fn status(&self) -> &'static str {
        if self.diverged {
            "diverged"
        } else {
            self.trace.termination().as_str()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub alpha: f64,
    pub median_final: f64,
    pub reference: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct ExperimentOutcome {
    /// Cells ordered by swept level, then by seed.
    pub cells: Vec<CellResult>,
    pub summary: Vec<SummaryRow>,
}

impl ExperimentOutcome {
    pub fn any_failed(&self) -> bool {
        self.cells.iter().any(CellResult::failed)
    }

    pub fn cells_for(&self, alpha: f64) -> impl Iterator<Item = &CellResult> {
        self.cells
            .iter()
            .filter(move |c| c.alpha.to_bits() == alpha.to_bits())
    }
}

/// Median of finite and non-finite values alike; NaNs sort last.
pub fn median(values: &[f64]) -> f64 {
    assert!(!values.is_empty(), "median of an empty sample");
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        0.5 * (sorted[mid - 1] + sorted[mid])
    }
}

/// Runs one cell.
pub fn run_cell(
    config: &ExperimentConfig,
    objective: &dyn Objective,
    alpha: f64,
    seed: u64,
) -> Result<CellResult> {
    let solver = config.solver_config(alpha, seed)?;
    let x0 = config.x0.resolve(objective.dimension())?;
    let mode = match config.oracle {
        OracleKind::Fixed if alpha == 0.0 => OracleMode::Exact,
        OracleKind::Fixed => OracleMode::FixedRelative { alpha },
        OracleKind::OnRequest => OracleMode::OnRequest {
            alpha_floor: solver.alpha_min,
        },
    };
    let mut oracle = NoisyOracle::new(objective, mode, seed)?;
    let outcome = match config.solver {
        SolverKind::AdaptiveLAlpha => run_adaptive_l_alpha(&mut oracle, &x0, &solver),
        SolverKind::AdaptiveL => run_adaptive_l(&mut oracle, &x0, &solver),
        SolverKind::ConstantStep => {
            let smoothness = config.constant_step_smoothness()?.ok_or_else(|| {
                HarnessError::validation("smoothness", "constant_step needs a smoothness constant")
            })?;
            run_constant_step(&mut oracle, &x0, smoothness, solver.alpha, &solver)
        }
    };
    match outcome {
        Ok(trace) => Ok(CellResult {
            alpha,
            seed,
            trace,
            diverged: false,
        }),
        Err(relgrad::Error::Diverged { trace }) => Ok(CellResult {
            alpha,
            seed,
            trace: *trace,
            diverged: true,
        }),
        Err(e) => Err(e.into()),
    }
}

/// Runs every `(alpha, seed)` cell, in parallel, and aggregates medians of
/// the final values per swept level.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentOutcome> {
    config.validate()?;
    let objective = config.function.build()?;
    let seeds = config.seeds();
    let grid: Vec<(f64, u64)> = config
        .alphas
        .iter()
        .flat_map(|a| seeds.iter().map(move |s| (*a, *s)))
        .collect();
    let cells = grid
        .par_iter()
        .map(|&(alpha, seed)| run_cell(config, objective.as_ref(), alpha, seed))
        .collect::<Result<Vec<_>>>()?;

    let summary = config
        .alphas
        .iter()
        .enumerate()
        .map(|(i, &alpha)| {
            let finals: Vec<f64> = cells
                .iter()
                .filter(|c| c.alpha.to_bits() == alpha.to_bits())
                .map(CellResult::final_value)
                .collect();
            SummaryRow {
                alpha,
                median_final: median(&finals),
                reference: config.reference.as_ref().map(|r| r[i]),
            }
        })
        .collect();
    Ok(ExperimentOutcome { cells, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_odd_and_even_samples() {
        assert_eq!(median(&[3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&[4.0, 1.0, 3.0, 2.0]), 2.5);
        assert_eq!(median(&[5.0]), 5.0);
    }

    #[test]
    fn quadratic_smoke_run_is_monotone() {
        let config = ExperimentConfig::from_json(
            r#"{
                "function": {"kind": "quadratic", "eigenvalues": [1, 1]},
                "solver": "adaptive_l",
                "x0": [1, 0],
                "alphas": [0],
                "l_min": 1, "l_0": 1,
                "epsilon": 1e-300,
                "iterations": 20,
                "seeds": [0]
            }"#,
        )
        .unwrap();
        let outcome = run_experiment(&config).unwrap();
        let trace = &outcome.cells[0].trace;
        assert!(trace.iterations() >= 1);
        for r in trace.records() {
            assert!(r.f_value <= trace.value_at(r.k));
        }
        assert_eq!(outcome.summary.len(), 1);
    }

    #[test]
    fn divergence_is_reported_not_raised() {
        // A constant step of 1 on curvature 10 blows up.
        let config = ExperimentConfig::from_json(
            r#"{
                "function": {"kind": "quadratic", "eigenvalues": [10]},
                "solver": "constant_step",
                "smoothness": 1,
                "x0": [1],
                "alphas": [0],
                "l_min": 1, "l_0": 1,
                "iterations": 5000,
                "seeds": [0]
            }"#,
        )
        .unwrap();
        let outcome = run_experiment(&config).unwrap();
        assert!(outcome.cells[0].diverged);
        assert!(outcome.any_failed());
        assert_eq!(outcome.cells[0].status(), "diverged");
    }
}
