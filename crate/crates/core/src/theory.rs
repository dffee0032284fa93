//! Closed-form bounds for the adaptive methods on `L`-smooth objectives
//! satisfying the PL condition with constant `mu`.
//!
//! Every function here is a pure function of its arguments. Logarithms are
//! natural.

use crate::error::{Error, Result};

fn positive(name: &'static str, v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::param(
            name,
            format!("{v} is not a positive finite number"),
        ))
    }
}

fn nonnegative(name: &'static str, v: f64) -> Result<f64> {
    if v >= 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::param(
            name,
            format!("{v} is not a nonnegative finite number"),
        ))
    }
}

fn half_open(name: &'static str, v: f64) -> Result<f64> {
    if (0.0..0.5).contains(&v) {
        Ok(v)
    } else {
        Err(Error::param(name, format!("{v} is outside [0, 0.5)")))
    }
}

/// Rate modifier `(1 - 2 alpha)^2` of the adaptive-L method.
pub fn xi_alg1(alpha: f64) -> Result<f64> {
    let alpha = half_open("alpha", alpha)?;
    Ok((1.0 - 2.0 * alpha).powi(2))
}

/// Rate modifier when the oracle level cannot be requested:
/// `(1 - 2 a_k)^2 (1 - a)^2 / (1 - a_k)^2` for assumed level `a_k` and true
/// level `a`.
pub fn xi_no_assumption(alpha_k: f64, alpha_true: f64) -> Result<f64> {
    let a_k = half_open("alpha_k", alpha_k)?;
    let a = half_open("alpha_true", alpha_true)?;
    Ok((1.0 - 2.0 * a_k).powi(2) * (1.0 - a).powi(2) / (1.0 - a_k).powi(2))
}

/// Largest smoothness estimate the adaptive-L method can accept: `2L`.
pub fn l_max_alg1(smoothness: f64) -> Result<f64> {
    Ok(2.0 * positive("smoothness", smoothness)?)
}

/// Largest smoothness estimate of the jointly adaptive method:
/// `2L max{1, (0.5 - alpha_min)/(0.5 - alpha)}`.
pub fn l_max_alg2(smoothness: f64, alpha: f64, alpha_min: f64) -> Result<f64> {
    let l = positive("smoothness", smoothness)?;
    let alpha = half_open("alpha", alpha)?;
    let alpha_min = half_open("alpha_min", alpha_min)?;
    if alpha_min > alpha {
        return Err(Error::param(
            "alpha_min",
            format!("{alpha_min} exceeds alpha = {alpha}"),
        ));
    }
    Ok(2.0 * l * f64::max(1.0, (0.5 - alpha_min) / (0.5 - alpha)))
}

/// Largest assumed noise level of the jointly adaptive method:
/// `0.5 - (0.5 - alpha)/2 * min{1, L_min/L}`.
pub fn alpha_max_alg2(alpha: f64, smoothness: f64, l_min: f64) -> Result<f64> {
    let alpha = half_open("alpha", alpha)?;
    let l = positive("smoothness", smoothness)?;
    let l_min = positive("l_min", l_min)?;
    if l < l_min {
        return Err(Error::param(
            "smoothness",
            format!("{l} is below l_min = {l_min}"),
        ));
    }
    Ok(0.5 - 0.5 * (0.5 - alpha) * f64::min(1.0, l_min / l))
}

/// Iterations sufficient for an `epsilon / mu` gap:
/// `ceil(L_max / (mu xi) * ln(mu * gap0 / epsilon))`, or 1 when the start is
/// already within the target.
pub fn iteration_bound(
    l_max: f64,
    mu: f64,
    xi: f64,
    epsilon: f64,
    initial_gap: f64,
) -> Result<u64> {
    let l_max = positive("l_max", l_max)?;
    let mu = positive("mu", mu)?;
    let xi = positive("xi", xi)?;
    let epsilon = positive("epsilon", epsilon)?;
    let gap = nonnegative("initial_gap", initial_gap)?;
    let ratio = mu * gap / epsilon;
    if ratio <= 1.0 {
        return Ok(1);
    }
    let n = (l_max / (mu * xi) * ratio.ln()).ceil();
    Ok(if n >= u64::MAX as f64 {
        u64::MAX
    } else {
        (n as u64).max(1)
    })
}

/// Radius of the ball around `x^0` containing every iterate:
/// `2 L_max / (mu xi) * sqrt(2 gap0 / L_min)`.
pub fn trajectory_radius(
    l_max: f64,
    mu: f64,
    xi: f64,
    l_min: f64,
    initial_gap: f64,
) -> Result<f64> {
    let l_max = positive("l_max", l_max)?;
    let mu = positive("mu", mu)?;
    let xi = positive("xi", xi)?;
    let l_min = positive("l_min", l_min)?;
    let gap = nonnegative("initial_gap", initial_gap)?;
    Ok(2.0 * l_max / (mu * xi) * (2.0 * gap / l_min).sqrt())
}

/// Upper bound on acceptance-test executions of the jointly adaptive method
/// over `n` iterations: `2n + log2(2 max{L/L_min, (0.5 - alpha_min)/(0.5 - alpha)})`.
pub fn inner_repeat_bound(
    n: u64,
    smoothness: f64,
    l_min: f64,
    alpha: f64,
    alpha_min: f64,
) -> Result<f64> {
    if n == 0 {
        return Err(Error::param("n", "must be positive"));
    }
    let l = positive("smoothness", smoothness)?;
    let l_min = positive("l_min", l_min)?;
    let alpha = half_open("alpha", alpha)?;
    let alpha_min = half_open("alpha_min", alpha_min)?;
    let worst = f64::max(l / l_min, (0.5 - alpha_min) / (0.5 - alpha));
    Ok(2.0 * n as f64 + (2.0 * worst).log2())
}

/// Per-iteration contraction `1 - (mu/L) (1 - alpha)^2 / (1 + alpha)^2` of the
/// constant step method.
pub fn constant_rate_factor(smoothness: f64, mu: f64, alpha: f64) -> Result<f64> {
    let l = positive("smoothness", smoothness)?;
    let mu = positive("mu", mu)?;
    if mu > l {
        return Err(Error::param("mu", format!("{mu} exceeds smoothness {l}")));
    }
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::param("alpha", format!("{alpha} is outside [0, 1)")));
    }
    Ok(1.0 - mu / l * (1.0 - alpha).powi(2) / (1.0 + alpha).powi(2))
}

/// Problem constants the bounds are computed from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemConstants {
    pub smoothness: f64,
    pub mu: f64,
    pub alpha: f64,
    pub alpha_min: f64,
    pub l_min: f64,
    /// `f(x^0) - f*`.
    pub initial_gap: f64,
}

impl ProblemConstants {
    pub fn validate(&self) -> Result<()> {
        positive("smoothness", self.smoothness)?;
        positive("mu", self.mu)?;
        positive("l_min", self.l_min)?;
        half_open("alpha", self.alpha)?;
        half_open("alpha_min", self.alpha_min)?;
        nonnegative("initial_gap", self.initial_gap)?;
        if self.mu > self.smoothness {
            return Err(Error::param(
                "mu",
                format!("{} exceeds smoothness {}", self.mu, self.smoothness),
            ));
        }
        if self.alpha_min > self.alpha {
            return Err(Error::param(
                "alpha_min",
                format!("{} exceeds alpha = {}", self.alpha_min, self.alpha),
            ));
        }
        if self.l_min > self.smoothness {
            return Err(Error::param(
                "l_min",
                format!("{} exceeds smoothness {}", self.l_min, self.smoothness),
            ));
        }
        Ok(())
    }
}

/// Every bound for one set of constants and target accuracy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoryBounds {
    pub xi: f64,
    pub xi_max: f64,
    pub l_max_alg1: f64,
    pub l_max_alg2: f64,
    pub alpha_max: f64,
    pub n_star: u64,
    pub n_star_star: u64,
    pub traj_radius_alg1: f64,
    pub traj_radius_alg2: f64,
    /// `1 - (mu / L_max) xi` for the adaptive-L method.
    pub rate_factor: f64,
}

impl TheoryBounds {
    pub fn compute(c: &ProblemConstants, epsilon: f64) -> Result<Self> {
        c.validate()?;
        let xi = xi_alg1(c.alpha)?;
        let l_max_alg1 = l_max_alg1(c.smoothness)?;
        let l_max_alg2 = l_max_alg2(c.smoothness, c.alpha, c.alpha_min)?;
        let alpha_max = alpha_max_alg2(c.alpha, c.smoothness, c.l_min)?;
        let xi_max = xi_alg1(alpha_max)?;
        Ok(TheoryBounds {
            xi,
            xi_max,
            l_max_alg1,
            l_max_alg2,
            alpha_max,
            n_star: iteration_bound(l_max_alg1, c.mu, xi, epsilon, c.initial_gap)?,
            n_star_star: iteration_bound(l_max_alg2, c.mu, xi_max, epsilon, c.initial_gap)?,
            traj_radius_alg1: trajectory_radius(l_max_alg1, c.mu, xi, c.l_min, c.initial_gap)?,
            traj_radius_alg2: trajectory_radius(l_max_alg2, c.mu, xi_max, c.l_min, c.initial_gap)?,
            rate_factor: 1.0 - c.mu / l_max_alg1 * xi,
        })
    }
}
