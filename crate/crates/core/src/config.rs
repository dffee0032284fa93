use crate::error::{Error, Result};

/// Tunables shared by all solvers.
///
/// `alpha` is the assumed noise level for the constant step and adaptive-L
/// methods; `alpha_min`/`alpha_0` parameterize the jointly adaptive method.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub l_min: f64,
    pub l_0: f64,
    pub alpha: f64,
    pub alpha_min: f64,
    pub alpha_0: f64,
    /// Target accuracy of the gradient-norm stopping rule. `None` disables
    /// the rule and runs the full budget.
    pub epsilon: Option<f64>,
    pub max_iterations: usize,
    pub max_inner_repeats: usize,
    /// Relative slack in the acceptance test; zero means exact comparison.
    pub descent_slack: f64,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            l_min: 0.01,
            l_0: 1.0,
            alpha: 0.0,
            alpha_min: 0.001,
            alpha_0: 0.01,
            epsilon: None,
            max_iterations: 1000,
            max_inner_repeats: 60,
            descent_slack: 0.0,
            seed: 0,
        }
    }
}

fn check_half_open(name: &'static str, value: f64) -> Result<()> {
    if !(0.0..0.5).contains(&value) {
        return Err(Error::param(name, format!("{value} is outside [0, 0.5)")));
    }
    Ok(())
}

impl SolverConfig {
    /// Checks the fields common to every solver.
    pub fn validate_common(&self) -> Result<()> {
        if !(self.l_min > 0.0 && self.l_min.is_finite()) {
            return Err(Error::param(
                "l_min",
                format!("{} is not positive", self.l_min),
            ));
        }
        if !(self.l_0 >= self.l_min && self.l_0.is_finite()) {
            return Err(Error::param(
                "l_0",
                format!("{} is below l_min = {}", self.l_0, self.l_min),
            ));
        }
        if let Some(eps) = self.epsilon {
            if !(eps > 0.0 && eps.is_finite()) {
                return Err(Error::param("epsilon", format!("{eps} is not positive")));
            }
        }
        if self.max_iterations == 0 {
            return Err(Error::param("max_iterations", "must be positive"));
        }
        if self.max_inner_repeats == 0 {
            return Err(Error::param("max_inner_repeats", "must be positive"));
        }
        if !(self.descent_slack >= 0.0 && self.descent_slack.is_finite()) {
            return Err(Error::param(
                "descent_slack",
                "must be a nonnegative number",
            ));
        }
        Ok(())
    }

    pub fn validate_adaptive_l(&self) -> Result<()> {
        self.validate_common()?;
        check_half_open("alpha", self.alpha)
    }

    pub fn validate_adaptive_l_alpha(&self) -> Result<()> {
        self.validate_common()?;
        check_half_open("alpha_min", self.alpha_min)?;
        check_half_open("alpha_0", self.alpha_0)?;
        if self.alpha_0 < self.alpha_min {
            return Err(Error::param(
                "alpha_0",
                format!("{} is below alpha_min = {}", self.alpha_0, self.alpha_min),
            ));
        }
        Ok(())
    }

    /// `l_min` must not undercut a known PL constant.
    pub fn check_against_pl(&self, mu: Option<f64>) -> Result<()> {
        match mu {
            Some(mu) if self.l_min < mu => Err(Error::param(
                "l_min",
                format!("{} is below the PL constant {mu}", self.l_min),
            )),
            _ => Ok(()),
        }
    }
}
