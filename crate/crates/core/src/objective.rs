/// A differentiable objective with an exact gradient.
///
/// Implementations are evaluated only at points of length [`dimension`];
/// the solvers check this once on entry.
///
/// [`dimension`]: Objective::dimension
pub trait Objective: Sync {
    fn dimension(&self) -> usize;

    fn value(&self, x: &[f64]) -> f64;

    /// Writes the exact gradient at `x` into `out`.
    fn gradient(&self, x: &[f64], out: &mut [f64]);

    /// Known optimal value, used only for reporting gaps.
    fn f_star(&self) -> Option<f64> {
        None
    }

    /// Global Lipschitz constant of the gradient, when known.
    fn smoothness_hint(&self) -> Option<f64> {
        None
    }

    /// Polyak–Łojasiewicz constant, when known.
    fn pl_hint(&self) -> Option<f64> {
        None
    }

    fn name(&self) -> String {
        "objective".to_owned()
    }
}
