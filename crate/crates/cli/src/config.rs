//! JSON experiment configuration.

use std::path::{Path, PathBuf};

use relgrad::testbed::{NesterovSkokov, Quadratic, Rosenbrock};
use relgrad::{Objective, SolverConfig, SolverKind, Vector};
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

pub const DEFAULT_SEED_COUNT: usize = 11;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FunctionSpec {
    Rosenbrock,
    NesterovSkokov {
        n: usize,
    },
    Quadratic {
        eigenvalues: Vec<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        shift: Option<Vec<f64>>,
    },
}

impl FunctionSpec {
    pub fn build(&self) -> Result<Box<dyn Objective>> {
        let objective: Box<dyn Objective> = match self {
            FunctionSpec::Rosenbrock => Box::new(Rosenbrock),
            FunctionSpec::NesterovSkokov { n } => Box::new(
                NesterovSkokov::new(*n)
                    .map_err(|e| HarnessError::validation("function.n", e.to_string()))?,
            ),
            FunctionSpec::Quadratic { eigenvalues, shift } => Box::new(
                Quadratic::new(eigenvalues.clone(), shift.clone())
                    .map_err(|e| HarnessError::validation("function.eigenvalues", e.to_string()))?,
            ),
        };
        Ok(objective)
    }
}

/// Starting point: explicit coordinates or a named preset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StartPoint {
    Explicit(Vec<f64>),
    Named(NamedStart),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedStart {
    Zeros,
    Ones,
    /// `(-1, 1, ..., 1)`.
    MinusOneThenOnes,
}

impl StartPoint {
    pub fn resolve(&self, dimension: usize) -> Result<Vector> {
        let coords = match self {
            StartPoint::Explicit(v) => {
                if v.len() != dimension {
                    return Err(HarnessError::validation(
                        "x0",
                        format!("has {} components, the function needs {dimension}", v.len()),
                    ));
                }
                v.clone()
            }
            StartPoint::Named(NamedStart::Zeros) => vec![0.0; dimension],
            StartPoint::Named(NamedStart::Ones) => vec![1.0; dimension],
            StartPoint::Named(NamedStart::MinusOneThenOnes) => {
                let mut v = vec![1.0; dimension];
                v[0] = -1.0;
                v
            }
        };
        Vector::new(coords).map_err(|e| HarnessError::validation("x0", e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleKind {
    /// Noise at the swept level regardless of what the solver assumes.
    #[default]
    Fixed,
    /// The solver requests its current level; the swept level is the floor.
    OnRequest,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub name: Option<String>,
    pub function: FunctionSpec,
    #[serde(with = "solver_kind")]
    pub solver: SolverKind,
    #[serde(default)]
    pub oracle: OracleKind,
    pub x0: StartPoint,
    /// Oracle noise levels to sweep.
    pub alphas: Vec<f64>,
    pub l_min: f64,
    pub l_0: f64,
    #[serde(default)]
    pub alpha_min: Option<f64>,
    #[serde(default)]
    pub alpha_0: Option<f64>,
    /// Assumed noise level of `adaptive_l` and `constant_step`; defaults to
    /// the swept level.
    #[serde(default)]
    pub alpha: Option<f64>,
    /// Smoothness constant for `constant_step` and the bounds report;
    /// defaults to the objective's own value when it has one.
    #[serde(default)]
    pub smoothness: Option<f64>,
    /// PL constant for the bounds report.
    #[serde(default)]
    pub mu: Option<f64>,
    #[serde(default)]
    pub epsilon: Option<f64>,
    pub iterations: usize,
    #[serde(default = "default_inner_cap")]
    pub max_inner_repeats: usize,
    #[serde(default)]
    pub seeds: Option<Vec<u64>>,
    #[serde(default)]
    pub seed_count: Option<usize>,
    #[serde(default)]
    pub out_dir: Option<PathBuf>,
    /// Values to compare the sweep medians against, one per swept level.
    #[serde(default)]
    pub reference: Option<Vec<f64>>,
}

fn default_inner_cap() -> usize {
    60
}

mod solver_kind {
    use relgrad::SolverKind;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(kind: &SolverKind, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(kind.as_str())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<SolverKind, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

/// Command-line overrides applied on top of a config file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub seed_count: Option<usize>,
    pub out_dir: Option<PathBuf>,
    pub iterations: Option<usize>,
    pub solver: Option<SolverKind>,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: ExperimentConfig = serde_json::from_str(text)
            .map_err(|e| HarnessError::validation("<config>", e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| HarnessError::io(format!("reading {}", path.display()), e))?;
        Self::from_json(&text)
    }

    pub fn apply(&mut self, overrides: &Overrides) -> Result<()> {
        if let Some(n) = overrides.seed_count {
            self.seed_count = Some(n);
            self.seeds = None;
        }
        if let Some(dir) = &overrides.out_dir {
            self.out_dir = Some(dir.clone());
        }
        if let Some(n) = overrides.iterations {
            self.iterations = n;
        }
        if let Some(kind) = overrides.solver {
            self.solver = kind;
        }
        self.validate()
    }

    pub fn seeds(&self) -> Vec<u64> {
        match &self.seeds {
            Some(seeds) => seeds.clone(),
            None => (0..self.seed_count.unwrap_or(DEFAULT_SEED_COUNT) as u64).collect(),
        }
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| "experiment".to_owned())
    }

    pub fn out_dir(&self) -> PathBuf {
        self.out_dir
            .clone()
            .unwrap_or_else(|| PathBuf::from("out").join(self.display_name()))
    }

    pub fn validate(&self) -> Result<()> {
        if self.alphas.is_empty() {
            return Err(HarnessError::validation("alphas", "sweep list is empty"));
        }
        if let Some(a) = self.alphas.iter().find(|a| !(**a >= 0.0 && a.is_finite())) {
            return Err(HarnessError::validation(
                "alphas",
                format!("{a} is not a finite nonnegative level"),
            ));
        }
        if self.seeds().is_empty() {
            return Err(HarnessError::validation("seeds", "no seeds to run"));
        }
        if self.iterations == 0 {
            return Err(HarnessError::validation("iterations", "must be positive"));
        }
        if let Some(reference) = &self.reference {
            if reference.len() != self.alphas.len() {
                return Err(HarnessError::validation(
                    "reference",
                    "needs one value per swept level",
                ));
            }
        }
        let dimension = self.function.build()?.dimension();
        self.x0.resolve(dimension)?;
        for (i, alpha) in self.alphas.iter().enumerate() {
            self.solver_config(*alpha, 0)
                .and_then(|c| self.check_cell(&c, *alpha))
                .map_err(|e| match e {
                    HarnessError::Validation { field, message } => HarnessError::Validation {
                        field,
                        message: format!("{message} (swept level #{i} = {alpha})"),
                    },
                    other => other,
                })?;
        }
        Ok(())
    }

    /// Solver settings for one `(alpha, seed)` cell.
    pub fn solver_config(&self, level: f64, seed: u64) -> Result<SolverConfig> {
        let defaults = SolverConfig::default();
        let (alpha_min, alpha_0) = match (self.solver, self.oracle) {
            (SolverKind::AdaptiveLAlpha, OracleKind::OnRequest) => {
                let floor = self.alpha_min.unwrap_or(level).max(level);
                (floor, self.alpha_0.unwrap_or(floor).max(floor))
            }
            _ => (
                self.alpha_min.unwrap_or(defaults.alpha_min),
                self.alpha_0.unwrap_or(defaults.alpha_0),
            ),
        };
        Ok(SolverConfig {
            l_min: self.l_min,
            l_0: self.l_0,
            alpha: self.alpha.unwrap_or(level),
            alpha_min,
            alpha_0,
            epsilon: self.epsilon,
            max_iterations: self.iterations,
            max_inner_repeats: self.max_inner_repeats,
            descent_slack: 0.0,
            seed,
        })
    }

    fn check_cell(&self, c: &SolverConfig, level: f64) -> Result<()> {
        let field_of = |e: relgrad::Error| match e {
            relgrad::Error::InvalidParameter { name, reason } => {
                HarnessError::validation(name, reason)
            }
            other => HarnessError::validation("<solver>", other.to_string()),
        };
        match self.solver {
            SolverKind::AdaptiveLAlpha => c.validate_adaptive_l_alpha().map_err(field_of)?,
            SolverKind::AdaptiveL => {
                c.validate_adaptive_l().map_err(field_of)?;
                if level > c.alpha {
                    return Err(HarnessError::validation(
                        "alpha",
                        format!(
                            "assumed level {} is below the oracle level {level}",
                            c.alpha
                        ),
                    ));
                }
            }
            SolverKind::ConstantStep => {
                c.validate_common().map_err(field_of)?;
                if !(0.0..1.0).contains(&c.alpha) || level > c.alpha {
                    return Err(HarnessError::validation(
                        "alpha",
                        format!(
                            "assumed level {} must lie in [oracle level {level}, 1)",
                            c.alpha
                        ),
                    ));
                }
                if self.constant_step_smoothness()?.is_none() {
                    return Err(HarnessError::validation(
                        "smoothness",
                        "constant_step needs a smoothness constant",
                    ));
                }
            }
        }
        if self.oracle == OracleKind::OnRequest && self.solver != SolverKind::AdaptiveLAlpha {
            return Err(HarnessError::validation(
                "oracle",
                "on_request oracles are only used by adaptive_l_alpha",
            ));
        }
        Ok(())
    }

    pub fn constant_step_smoothness(&self) -> Result<Option<f64>> {
        Ok(self.smoothness.or(self.function.build()?.smoothness_hint()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ROSENBROCK: &str = r#"{
        "name": "r",
        "function": {"kind": "rosenbrock"},
        "solver": "adaptive_l_alpha",
        "x0": "zeros",
        "alphas": [0.001, 1.0],
        "l_min": 0.01, "l_0": 1.0, "alpha_min": 0.001, "alpha_0": 0.01,
        "iterations": 10
    }"#;

    #[test]
    fn parses_and_defaults() {
        let c = ExperimentConfig::from_json(ROSENBROCK).unwrap();
        assert_eq!(c.seeds(), (0..11).collect::<Vec<_>>());
        assert_eq!(c.oracle, OracleKind::Fixed);
        assert_eq!(c.out_dir(), PathBuf::from("out/r"));
        let cell = c.solver_config(1.0, 4).unwrap();
        assert_eq!((cell.alpha_min, cell.alpha_0, cell.seed), (0.001, 0.01, 4));
    }

    #[test]
    fn start_points() {
        assert_eq!(
            StartPoint::Named(NamedStart::MinusOneThenOnes)
                .resolve(3)
                .unwrap()
                .as_slice(),
            &[-1.0, 1.0, 1.0]
        );
        assert!(StartPoint::Explicit(vec![1.0]).resolve(2).is_err());
        let parsed: StartPoint = serde_json::from_str("[0.5, 2]").unwrap();
        assert_eq!(parsed, StartPoint::Explicit(vec![0.5, 2.0]));
    }

    fn field_of(text: &str) -> String {
        match ExperimentConfig::from_json(text) {
            Err(HarnessError::Validation { field, .. }) => field,
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn validation_names_the_field() {
        assert_eq!(
            field_of(&ROSENBROCK.replace("[0.001, 1.0]", "[]")),
            "alphas"
        );
        assert_eq!(
            field_of(&ROSENBROCK.replace("\"l_0\": 1.0", "\"l_0\": 0.001")),
            "l_0"
        );
        assert_eq!(
            field_of(&ROSENBROCK.replace("\"alpha_0\": 0.01", "\"alpha_0\": 0.7")),
            "alpha_0"
        );
        assert_eq!(
            field_of(&ROSENBROCK.replace("\"zeros\"", "[1, 2, 3]")),
            "x0"
        );
        assert_eq!(
            field_of(&ROSENBROCK.replace("adaptive_l_alpha", "adaptive_l")),
            "alpha"
        );
        assert_eq!(
            field_of(&ROSENBROCK.replace("adaptive_l_alpha", "constant_step")),
            "smoothness"
        );
        assert_eq!(
            field_of(
                &ROSENBROCK.replace("\"iterations\": 10", "\"iterations\": 10, \"seeds\": []")
            ),
            "seeds"
        );
        assert_eq!(
            field_of(&ROSENBROCK.replace("\"iterations\": 10", "\"iterations\": 10, \"bogus\": 1")),
            "<config>"
        );
    }

    #[test]
    fn overrides_apply() {
        let mut c = ExperimentConfig::from_json(ROSENBROCK).unwrap();
        c.apply(&Overrides {
            seed_count: Some(3),
            iterations: Some(5),
            out_dir: Some("elsewhere".into()),
            solver: None,
        })
        .unwrap();
        assert_eq!(c.seeds(), vec![0, 1, 2]);
        assert_eq!(c.iterations, 5);
        assert_eq!(c.out_dir(), PathBuf::from("elsewhere"));
        let bad = Overrides {
            solver: Some(SolverKind::AdaptiveL),
            ..Default::default()
        };
        assert!(c.apply(&bad).is_err());
    }

    #[test]
    fn on_request_uses_level_as_floor() {
        let text = ROSENBROCK
            .replace("\"x0\"", "\"oracle\": \"on_request\", \"x0\"")
            .replace("[0.001, 1.0]", "[0.001, 0.2]");
        let c = ExperimentConfig::from_json(&text).unwrap();
        let cell = c.solver_config(0.2, 0).unwrap();
        assert_eq!((cell.alpha_min, cell.alpha_0), (0.2, 0.2));
    }
}
