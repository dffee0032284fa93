//! Relatively inexact gradient oracles.
//!
//! A noisy gradient is `grad f(x) + e` where `e` is uniform on the ball of
//! radius `alpha * |grad f(x)|`. The noise therefore vanishes at stationary
//! points and always satisfies `|g - grad f(x)| <= alpha |grad f(x)|`.
//!
//! Random numbers come from ChaCha8 seeded with a `u64`, so a run is
//! reproducible bit-for-bit across platforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::vector::{euclidean_norm, Vector};

/// Name of the generator, recorded alongside experiment outputs.
pub const RNG_ALGORITHM: &str = "ChaCha8";

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OracleMode {
    Exact,
    /// Noise at a fixed relative level.
    FixedRelative {
        alpha: f64,
    },
    /// The caller chooses the relative level of each call; requests below
    /// `alpha_floor` are served at the floor.
    OnRequest {
        alpha_floor: f64,
    },
}

impl OracleMode {
    fn validate(self) -> Result<Self> {
        let level = match self {
            OracleMode::Exact => return Ok(self),
            OracleMode::FixedRelative { alpha } => alpha,
            OracleMode::OnRequest { alpha_floor } => alpha_floor,
        };
        if !(level >= 0.0 && level.is_finite()) {
            return Err(Error::OracleConfig(format!(
                "relative noise level {level} must be finite and nonnegative"
            )));
        }
        Ok(self)
    }
}

/// Exact and noisy gradient at one point.
#[derive(Debug, Clone)]
pub struct GradientSample {
    pub exact: Vector,
    pub noisy: Vector,
    /// Relative level the noise was drawn at.
    pub alpha: f64,
}

/// Draws a point uniformly from the closed ball of `radius` in R^`dimension`.
///
/// A standard Gaussian direction is normalized and scaled by
/// `radius * U^(1/n)`, which gives the exact uniform law in any dimension.
pub fn sample_ball<R: Rng + ?Sized>(dimension: usize, radius: f64, rng: &mut R) -> Vec<f64> {
    assert!(dimension > 0, "ball dimension must be positive");
    assert!(radius >= 0.0, "ball radius must be nonnegative");
    if radius == 0.0 {
        return vec![0.0; dimension];
    }
    let mut direction: Vec<f64> = Vec::with_capacity(dimension);
    let norm = loop {
        direction.clear();
        direction.extend((0..dimension).map(|_| rng.sample::<f64, _>(StandardNormal)));
        let norm = euclidean_norm(&direction);
        if norm > 0.0 {
            break norm;
        }
    };
    let u: f64 = rng.random();
    let r = radius * u.powf(1.0 / dimension as f64);
    direction.iter_mut().for_each(|c| *c *= r / norm);
    // Rounding in the last step may push the norm a hair past the radius.
    while euclidean_norm(&direction) > radius {
        direction
            .iter_mut()
            .for_each(|c| *c *= 1.0 - 4.0 * f64::EPSILON);
    }
    direction
}

/// Gradient oracle over an objective with its own seeded generator.
///
/// One oracle serves one run; concurrent runs need separately seeded oracles.
pub struct NoisyOracle<'a> {
    objective: &'a dyn Objective,
    mode: OracleMode,
    rng: ChaCha8Rng,
    calls: u64,
}

impl<'a> NoisyOracle<'a> {
    pub fn new(objective: &'a dyn Objective, mode: OracleMode, seed: u64) -> Result<Self> {
        Ok(NoisyOracle {
            objective,
            mode: mode.validate()?,
            rng: ChaCha8Rng::seed_from_u64(seed),
            calls: 0,
        })
    }

    pub fn exact(objective: &'a dyn Objective) -> Self {
        Self::new(objective, OracleMode::Exact, 0).expect("exact mode is always valid")
    }

    pub fn objective(&self) -> &'a dyn Objective {
        self.objective
    }

    pub fn mode(&self) -> OracleMode {
        self.mode
    }

    /// Number of gradient queries served so far.
    pub fn calls(&self) -> u64 {
        self.calls
    }

    /// Noisy gradient at `x`.
    ///
    /// `requested_alpha` must be given exactly when the oracle is in
    /// [`OracleMode::OnRequest`].
    pub fn noisy_gradient(
        &mut self,
        x: &Vector,
        requested_alpha: Option<f64>,
    ) -> Result<GradientSample> {
        let alpha = match (self.mode, requested_alpha) {
            (OracleMode::Exact, None) => 0.0,
            (OracleMode::FixedRelative { alpha }, None) => alpha,
            (OracleMode::OnRequest { alpha_floor }, Some(req)) => {
                if !(req.is_finite() && req >= 0.0) {
                    return Err(Error::OracleConfig(format!(
                        "requested accuracy {req} must be finite and nonnegative"
                    )));
                }
                req.max(alpha_floor)
            }
            (OracleMode::OnRequest { .. }, None) => {
                return Err(Error::OracleConfig(
                    "an on-request oracle needs a requested accuracy".into(),
                ))
            }
            (mode, Some(_)) => {
                return Err(Error::OracleConfig(format!(
                    "accuracy can only be requested from an on-request oracle, not {mode:?}"
                )))
            }
        };
        self.sample(x, alpha)
    }

    fn sample(&mut self, x: &Vector, alpha: f64) -> Result<GradientSample> {
        let n = self.objective.dimension();
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: x.len(),
            });
        }
        self.calls += 1;
        let mut grad = vec![0.0; n];
        self.objective.gradient(x.as_slice(), &mut grad);
        let exact = Vector::new(grad)?;
        let radius = alpha * exact.norm();
        if !radius.is_finite() {
            return Err(Error::NonFinite { index: 0 });
        }
        let mut noise = sample_ball(n, radius, &mut self.rng);
        let noisy = loop {
            let candidate: Vec<f64> = exact
                .as_slice()
                .iter()
                .zip(&noise)
                .map(|(g, e)| g + e)
                .collect();
            let err: Vec<f64> = candidate
                .iter()
                .zip(exact.as_slice())
                .map(|(a, b)| a - b)
                .collect();
            // Keep the certificate exact after the addition rounds.
            if euclidean_norm(&err) <= radius {
                break Vector::new(candidate)?;
            }
            noise
                .iter_mut()
                .for_each(|c| *c *= 1.0 - 4.0 * f64::EPSILON);
        };
        Ok(GradientSample {
            exact,
            noisy,
            alpha,
        })
    }
}

impl std::fmt::Debug for NoisyOracle<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("NoisyOracle")
            .field("objective", &self.objective.name())
            .field("mode", &self.mode)
            .field("calls", &self.calls)
            .finish()
    }
}
