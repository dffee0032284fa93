#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relgrad::testbed::Quadratic;
use relgrad::{Objective, Vector};

/// Central-difference gradient with step `h`.
pub fn central_difference(f: &dyn Objective, x: &[f64], h: f64) -> Vec<f64> {
    let mut probe = x.to_vec();
    (0..x.len())
        .map(|i| {
            probe[i] = x[i] + h;
            let plus = f.value(&probe);
            probe[i] = x[i] - h;
            let minus = f.value(&probe);
            probe[i] = x[i];
            (plus - minus) / (2.0 * h)
        })
        .collect()
}

pub fn norm(v: &[f64]) -> f64 {
    v.iter().map(|c| c * c).sum::<f64>().sqrt()
}

pub fn uniform_point(rng: &mut ChaCha8Rng, n: usize, half_width: f64) -> Vec<f64> {
    (0..n)
        .map(|_| rng.random_range(-half_width..=half_width))
        .collect()
}

/// Diagonal quadratic whose extreme eigenvalues are exactly `mu` and `l`.
pub fn quadratic_with(mu: f64, l: f64, n: usize, rng: &mut ChaCha8Rng) -> Quadratic {
    let mut eig: Vec<f64> = (0..n).map(|_| rng.random_range(mu..=l)).collect();
    eig[0] = mu;
    if n > 1 {
        eig[n - 1] = l;
    }
    let shift = uniform_point(rng, n, 1.0);
    Quadratic::new(eig, Some(shift)).unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn vector(c: Vec<f64>) -> Vector {
    Vector::new(c).unwrap()
}

/// Forwards to an objective while hiding its smoothness and PL hints.
pub struct NoHints<T>(pub T);

impl<T: Objective> Objective for NoHints<T> {
    fn dimension(&self) -> usize {
        self.0.dimension()
    }

    fn value(&self, x: &[f64]) -> f64 {
        self.0.value(x)
    }

    fn gradient(&self, x: &[f64], out: &mut [f64]) {
        self.0.gradient(x, out)
    }

    fn f_star(&self) -> Option<f64> {
        self.0.f_star()
    }
}
