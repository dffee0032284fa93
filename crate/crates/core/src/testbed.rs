//! Benchmark objectives with analytic gradients and known optima.

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::vector::Vector;

fn check_len(x: &[f64], expected: usize) -> Result<()> {
    if x.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            actual: x.len(),
        });
    }
    Ok(())
}

/// `100 (x2 - x1^2)^2 + (x1 - 1)^2`, minimized at `(1, 1)` with value 0.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rosenbrock;

pub fn rosenbrock(x: &[f64]) -> Result<f64> {
    check_len(x, 2)?;
    Ok(Rosenbrock.value(x))
}

pub fn rosenbrock_grad(x: &[f64]) -> Result<Vector> {
    check_len(x, 2)?;
    let mut g = vec![0.0; 2];
    Rosenbrock.gradient(x, &mut g);
    Vector::new(g)
}

impl Objective for Rosenbrock {
    fn dimension(&self) -> usize {
        2
    }

    fn value(&self, x: &[f64]) -> f64 {
        let r = x[1] - x[0] * x[0];
        100.0 * r * r + (x[0] - 1.0) * (x[0] - 1.0)
    }

    fn gradient(&self, x: &[f64], out: &mut [f64]) {
        let r = x[1] - x[0] * x[0];
        out[0] = -400.0 * x[0] * r + 2.0 * (x[0] - 1.0);
        out[1] = 200.0 * r;
    }

    fn f_star(&self) -> Option<f64> {
        Some(0.0)
    }

    fn name(&self) -> String {
        "rosenbrock".to_owned()
    }
}

/// Nesterov–Skokov function
/// `1/4 (1 - x1)^2 + sum_{i<n} (x_{i+1} - 2 x_i^2 + 1)^2`, minimized at the
/// all-ones vector with value 0.
#[derive(Debug, Clone, Copy)]
pub struct NesterovSkokov {
    n: usize,
}

impl NesterovSkokov {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::param("n", format!("{n} is below 2")));
        }
        Ok(NesterovSkokov { n })
    }
}

pub fn nesterov_skokov(x: &[f64]) -> Result<f64> {
    Ok(NesterovSkokov::new(x.len())?.value(x))
}

pub fn nesterov_skokov_grad(x: &[f64]) -> Result<Vector> {
    let f = NesterovSkokov::new(x.len())?;
    let mut g = vec![0.0; x.len()];
    f.gradient(x, &mut g);
    Vector::new(g)
}

impl Objective for NesterovSkokov {
    fn dimension(&self) -> usize {
        self.n
    }

    fn value(&self, x: &[f64]) -> f64 {
        let head = 0.25 * (1.0 - x[0]) * (1.0 - x[0]);
        head + x
            .windows(2)
            .map(|w| {
                let r = w[1] - 2.0 * w[0] * w[0] + 1.0;
                r * r
            })
            .sum::<f64>()
    }

    fn gradient(&self, x: &[f64], out: &mut [f64]) {
        out.iter_mut().for_each(|g| *g = 0.0);
        out[0] = -0.5 * (1.0 - x[0]);
        for i in 0..self.n - 1 {
            let r = x[i + 1] - 2.0 * x[i] * x[i] + 1.0;
            out[i] -= 8.0 * x[i] * r;
            out[i + 1] += 2.0 * r;
        }
    }

    fn f_star(&self) -> Option<f64> {
        Some(0.0)
    }

    fn name(&self) -> String {
        format!("nesterov_skokov_{}", self.n)
    }
}

/// Diagonal quadratic `1/2 sum_i l_i (x_i - s_i)^2`.
///
/// Its gradient is Lipschitz with `L = max l_i` and it satisfies the PL
/// inequality with `mu = min l_i`; the optimal value is 0 at the shift.
#[derive(Debug, Clone, PartialEq)]
pub struct Quadratic {
    eigenvalues: Vec<f64>,
    shift: Vec<f64>,
}

impl Quadratic {
    pub fn new(eigenvalues: Vec<f64>, shift: Option<Vec<f64>>) -> Result<Self> {
        if eigenvalues.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some(bad) = eigenvalues.iter().find(|l| !(**l > 0.0 && l.is_finite())) {
            return Err(Error::param(
                "eigenvalues",
                format!("{bad} is not a positive finite number"),
            ));
        }
        let shift = match shift {
            Some(s) => {
                check_len(&s, eigenvalues.len())?;
                Vector::new(s)?.into_inner()
            }
            None => vec![0.0; eigenvalues.len()],
        };
        Ok(Quadratic { eigenvalues, shift })
    }

    /// `lambda/2 |x|^2`.
    pub fn isotropic(n: usize, lambda: f64) -> Self {
        Quadratic::new(vec![lambda; n], None).expect("valid isotropic quadratic")
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn shift(&self) -> &[f64] {
        &self.shift
    }

    pub fn mu(&self) -> f64 {
        self.eigenvalues
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }

    pub fn smoothness(&self) -> f64 {
        self.eigenvalues.iter().copied().fold(0.0, f64::max)
    }

    pub fn value_checked(&self, x: &[f64]) -> Result<f64> {
        check_len(x, self.eigenvalues.len())?;
        Ok(self.value(x))
    }

    pub fn gradient_checked(&self, x: &[f64]) -> Result<Vector> {
        check_len(x, self.eigenvalues.len())?;
        let mut g = vec![0.0; x.len()];
        self.gradient(x, &mut g);
        Vector::new(g)
    }
}

impl Objective for Quadratic {
    fn dimension(&self) -> usize {
        self.eigenvalues.len()
    }

    fn value(&self, x: &[f64]) -> f64 {
        0.5 * self
            .eigenvalues
            .iter()
            .zip(&self.shift)
            .zip(x)
            .map(|((l, s), xi)| l * (xi - s) * (xi - s))
            .sum::<f64>()
    }

    fn gradient(&self, x: &[f64], out: &mut [f64]) {
        for (((g, l), s), xi) in out
            .iter_mut()
            .zip(&self.eigenvalues)
            .zip(&self.shift)
            .zip(x)
        {
            *g = l * (xi - s);
        }
    }

    fn f_star(&self) -> Option<f64> {
        Some(0.0)
    }

    fn smoothness_hint(&self) -> Option<f64> {
        Some(self.smoothness())
    }

    fn pl_hint(&self) -> Option<f64> {
        Some(self.mu())
    }

    fn name(&self) -> String {
        format!("quadratic_{}", self.eigenvalues.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rosenbrock_values() {
        assert_eq!(rosenbrock(&[1.0, 1.0]).unwrap(), 0.0);
        assert_eq!(
            rosenbrock_grad(&[1.0, 1.0]).unwrap().as_slice(),
            &[0.0, 0.0]
        );
        assert_eq!(rosenbrock(&[0.0, 0.0]).unwrap(), 1.0);
        assert_eq!(
            rosenbrock_grad(&[0.0, 0.0]).unwrap().as_slice(),
            &[-2.0, 0.0]
        );
        assert_eq!(rosenbrock(&[1.0, 2.0]).unwrap(), 100.0);
        assert_eq!(
            rosenbrock_grad(&[1.0, 2.0]).unwrap().as_slice(),
            &[-400.0, 200.0]
        );
        assert!(matches!(
            rosenbrock(&[1.0]),
            Err(Error::DimensionMismatch {
                expected: 2,
                actual: 1
            })
        ));
    }

    /// Straightforward term-by-term evaluation.
    fn ns_reference(x: &[f64]) -> f64 {
        let mut total = 0.25 * (1.0 - x[0]).powi(2);
        for i in 1..x.len() {
            total += (x[i] - 2.0 * x[i - 1].powi(2) + 1.0).powi(2);
        }
        total
    }

    #[test]
    fn nesterov_skokov_values() {
        for n in [2, 3, 100] {
            assert_eq!(nesterov_skokov(&vec![1.0; n]).unwrap(), 0.0);
            assert!(nesterov_skokov_grad(&vec![1.0; n])
                .unwrap()
                .as_slice()
                .iter()
                .all(|g| *g == 0.0));
        }
        let zero = vec![0.0; 100];
        assert_eq!(ns_reference(&zero), 99.25);
        assert_eq!(nesterov_skokov(&zero).unwrap(), 99.25);

        let mut x = vec![1.0; 100];
        x[0] = -1.0;
        assert_eq!(ns_reference(&x), 1.0);
        assert_eq!(nesterov_skokov(&x).unwrap(), 1.0);
        assert!(NesterovSkokov::new(1).is_err());
        assert!(nesterov_skokov(&[0.0]).is_err());
    }

    #[test]
    fn quadratic_values() {
        let q = Quadratic::new(vec![1.0, 4.0], None).unwrap();
        assert_eq!(q.value_checked(&[1.0, 1.0]).unwrap(), 2.5);
        assert_eq!(
            q.gradient_checked(&[1.0, 1.0]).unwrap().as_slice(),
            &[1.0, 4.0]
        );
        assert_eq!((q.mu(), q.smoothness()), (1.0, 4.0));

        let shifted = Quadratic::new(vec![0.5, 2.0, 3.0], Some(vec![1.0, -2.0, 0.5])).unwrap();
        assert_eq!(shifted.value(&[1.0, -2.0, 0.5]), 0.0);
        assert!(shifted.value_checked(&[0.0]).is_err());
        assert!(Quadratic::new(vec![1.0, 0.0], None).is_err());
        assert!(Quadratic::new(vec![1.0], Some(vec![0.0, 0.0])).is_err());
    }
}
