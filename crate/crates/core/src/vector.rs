use std::ops::Index;

use crate::error::{Error, Result};

/// A point or direction in R^n with finite components.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(components: Vec<f64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some(index) = components.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Vector(components))
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "vector dimension must be positive");
        Vector(vec![0.0; n])
    }

    pub fn filled(n: usize, value: f64) -> Self {
        assert!(n > 0, "vector dimension must be positive");
        assert!(value.is_finite());
        Vector(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn norm(&self) -> f64 {
        euclidean_norm(&self.0)
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// `self - other`.
    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.len(), other.len());
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `self + scale * direction`; fails if the result overflows.
    pub fn add_scaled(&self, scale: f64, direction: &Vector) -> Result<Vector> {
        debug_assert_eq!(self.len(), direction.len());
        Vector::new(
            self.0
                .iter()
                .zip(&direction.0)
                .map(|(x, d)| x + scale * d)
                .collect(),
        )
    }

    pub fn distance(&self, other: &Vector) -> f64 {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }
}

impl Index<usize> for Vector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl TryFrom<Vec<f64>> for Vector {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Vector::new(v)
    }
}

impl AsRef<[f64]> for Vector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// Euclidean norm, computed without intermediate overflow for large entries.
pub fn euclidean_norm(v: &[f64]) -> f64 {
    let scale = v.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return scale;
    }
    if (1e-150..1e150).contains(&scale) {
        return v.iter().map(|c| c * c).sum::<f64>().sqrt();
    }
    scale * v.iter().map(|c| (c / scale).powi(2)).sum::<f64>().sqrt()
}
