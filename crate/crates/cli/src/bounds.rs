//! Theoretical bounds for a config, with markers where a constant is missing.

use std::fmt;

use relgrad::theory::{self, ProblemConstants};

use crate::config::ExperimentConfig;
use crate::error::{HarnessError, Result};

/// Why a bound could not be computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Missing {
    Mu,
    Smoothness,
    Epsilon,
    /// No guarantee exists at or beyond one half.
    NoiseTooLarge,
}

impl fmt::Display for Missing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Missing::Mu => "μ unknown",
            Missing::Smoothness => "L unknown",
            Missing::Epsilon => "ε unknown",
            Missing::NoiseTooLarge => "no guarantee for α ≥ 0.5",
        })
    }
}

pub type Bound<T> = std::result::Result<T, Missing>;

/// Bounds for one noise level.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub alpha: f64,
    pub alpha_min: f64,
    pub l_min: f64,
    pub smoothness: Option<f64>,
    pub mu: Option<f64>,
    pub epsilon: Option<f64>,
    pub initial_gap: Option<f64>,
    pub xi: Bound<f64>,
    pub xi_max: Bound<f64>,
    pub l_max_alg1: Bound<f64>,
    pub l_max_alg2: Bound<f64>,
    pub alpha_max: Bound<f64>,
    pub n_star: Bound<u64>,
    pub n_star_star: Bound<u64>,
    pub traj_radius_alg1: Bound<f64>,
    pub traj_radius_alg2: Bound<f64>,
    pub rate_factor: Bound<f64>,
}

fn invalid(e: relgrad::Error) -> HarnessError {
    match e {
        relgrad::Error::InvalidParameter { name, reason } => HarnessError::validation(name, reason),
        other => HarnessError::from(other),
    }
}

impl BoundsReport {
    pub fn compute(
        alpha: f64,
        alpha_min: f64,
        l_min: f64,
        smoothness: Option<f64>,
        mu: Option<f64>,
        epsilon: Option<f64>,
        initial_gap: Option<f64>,
    ) -> Result<Self> {
        let alpha_min = alpha_min.min(alpha);
        let mut report = BoundsReport {
            alpha,
            alpha_min,
            l_min,
            smoothness,
            mu,
            epsilon,
            initial_gap,
            xi: Err(Missing::NoiseTooLarge),
            xi_max: Err(Missing::NoiseTooLarge),
            l_max_alg1: Err(Missing::Smoothness),
            l_max_alg2: Err(Missing::Smoothness),
            alpha_max: Err(Missing::Smoothness),
            n_star: Err(Missing::Smoothness),
            n_star_star: Err(Missing::Smoothness),
            traj_radius_alg1: Err(Missing::Smoothness),
            traj_radius_alg2: Err(Missing::Smoothness),
            rate_factor: Err(Missing::Smoothness),
        };
        if alpha >= 0.5 {
            report.mark_all(Missing::NoiseTooLarge);
            if let Some(l) = smoothness {
                report.l_max_alg1 = theory::l_max_alg1(l).map_err(invalid).map(Ok)?;
            }
            return Ok(report);
        }
        report.xi = Ok(theory::xi_alg1(alpha).map_err(invalid)?);
        let Some(l) = smoothness else {
            return Ok(report);
        };
        let Some(mu) = mu else {
            report.mark_all(Missing::Mu);
            report.fill_smoothness_only(l)?;
            return Ok(report);
        };
        let gap = initial_gap
            .ok_or_else(|| HarnessError::validation("function", "optimal value unknown"))?;
        let constants = ProblemConstants {
            smoothness: l,
            mu,
            alpha,
            alpha_min,
            l_min,
            initial_gap: gap,
        };
        constants.validate().map_err(invalid)?;
        // epsilon only enters the iteration counts
        let b =
            theory::TheoryBounds::compute(&constants, epsilon.unwrap_or(1.0)).map_err(invalid)?;
        report.xi_max = Ok(b.xi_max);
        report.l_max_alg1 = Ok(b.l_max_alg1);
        report.l_max_alg2 = Ok(b.l_max_alg2);
        report.alpha_max = Ok(b.alpha_max);
        report.traj_radius_alg1 = Ok(b.traj_radius_alg1);
        report.traj_radius_alg2 = Ok(b.traj_radius_alg2);
        report.rate_factor = theory::constant_rate_factor(l, mu, alpha)
            .map_err(invalid)
            .map(Ok)?;
        if epsilon.is_some() {
            report.n_star = Ok(b.n_star);
            report.n_star_star = Ok(b.n_star_star);
        } else {
            report.n_star = Err(Missing::Epsilon);
            report.n_star_star = Err(Missing::Epsilon);
        }
        Ok(report)
    }

    fn mark_all(&mut self, why: Missing) {
        self.l_max_alg1 = Err(why);
        self.l_max_alg2 = Err(why);
        self.alpha_max = Err(why);
        self.xi_max = Err(why);
        self.n_star = Err(why);
        self.n_star_star = Err(why);
        self.traj_radius_alg1 = Err(why);
        self.traj_radius_alg2 = Err(why);
        self.rate_factor = Err(why);
    }

    fn fill_smoothness_only(&mut self, l: f64) -> Result<()> {
        if self.l_min > l {
            return Err(HarnessError::validation(
                "l_min",
                format!("{} exceeds smoothness {l}", self.l_min),
            ));
        }
        self.l_max_alg1 = Ok(theory::l_max_alg1(l).map_err(invalid)?);
        self.l_max_alg2 = Ok(theory::l_max_alg2(l, self.alpha, self.alpha_min).map_err(invalid)?);
        let alpha_max = theory::alpha_max_alg2(self.alpha, l, self.l_min).map_err(invalid)?;
        self.alpha_max = Ok(alpha_max);
        self.xi_max = Ok(theory::xi_alg1(alpha_max).map_err(invalid)?);
        Ok(())
    }

    /// One report per swept level of `config`.
    pub fn for_config(config: &ExperimentConfig) -> Result<Vec<Self>> {
        let objective = config.function.build()?;
        let x0 = config.x0.resolve(objective.dimension())?;
        let initial_gap = objective
            .f_star()
            .map(|f| objective.value(x0.as_slice()) - f);
        let mu = config.mu.or(objective.pl_hint());
        let smoothness = config.smoothness.or(objective.smoothness_hint());
        let alpha_min = config
            .alpha_min
            .unwrap_or(relgrad::SolverConfig::default().alpha_min);
        config
            .alphas
            .iter()
            .map(|&a| {
                BoundsReport::compute(
                    a,
                    alpha_min,
                    config.l_min,
                    smoothness,
                    mu,
                    config.epsilon,
                    initial_gap,
                )
            })
            .collect()
    }
}

fn show<T: fmt::Display>(v: &Option<T>, missing: Missing) -> String {
    match v {
        Some(v) => v.to_string(),
        None => missing.to_string(),
    }
}

fn bound<T: fmt::Display>(v: &Bound<T>) -> String {
    match v {
        Ok(v) => v.to_string(),
        Err(m) => m.to_string(),
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alpha = {}", self.alpha)?;
        writeln!(
            f,
            "  L                 {}",
            show(&self.smoothness, Missing::Smoothness)
        )?;
        writeln!(f, "  mu                {}", show(&self.mu, Missing::Mu))?;
        writeln!(f, "  L_min             {}", self.l_min)?;
        writeln!(f, "  alpha_min         {}", self.alpha_min)?;
        writeln!(
            f,
            "  epsilon           {}",
            show(&self.epsilon, Missing::Epsilon)
        )?;
        match self.initial_gap {
            Some(g) => writeln!(f, "  f(x0) - f*        {g}")?,
            None => writeln!(f, "  f(x0) - f*        f* unknown")?,
        }
        writeln!(f, "  xi                {}", bound(&self.xi))?;
        writeln!(f, "  xi_max            {}", bound(&self.xi_max))?;
        writeln!(f, "  L_max (adaptive L)        {}", bound(&self.l_max_alg1))?;
        writeln!(f, "  L_max (adaptive L, alpha) {}", bound(&self.l_max_alg2))?;
        writeln!(f, "  alpha_max         {}", bound(&self.alpha_max))?;
        writeln!(f, "  N*                {}", bound(&self.n_star))?;
        writeln!(f, "  N**               {}", bound(&self.n_star_star))?;
        writeln!(
            f,
            "  radius (adaptive L)        {}",
            bound(&self.traj_radius_alg1)
        )?;
        writeln!(
            f,
            "  radius (adaptive L, alpha) {}",
            bound(&self.traj_radius_alg2)
        )?;
        write!(f, "  constant-step rate {}", bound(&self.rate_factor))
    }
}
