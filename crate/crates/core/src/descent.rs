use crate::vector::Vector;

/// Inexact descent inequality used as the acceptance test of the adaptive
/// solvers:
///
/// ```text
/// f_next <= f_curr + <g, d> + L/2 |d|^2 + alpha/(1 - alpha) |g| |d|
/// ```
///
/// where `g` is the noisy gradient at the current point and `d` the
/// displacement to the trial point. Compared exactly, without slack.
pub fn descent_test(
    f_next: f64,
    f_curr: f64,
    g_tilde: &Vector,
    displacement: &Vector,
    smoothness: f64,
    alpha: f64,
) -> bool {
    descent_test_relaxed(
        f_next,
        f_curr,
        g_tilde,
        displacement,
        smoothness,
        alpha,
        0.0,
    )
}

/// [`descent_test`] with the right-hand side widened by
/// `relative_slack * |rhs|`.
pub fn descent_test_relaxed(
    f_next: f64,
    f_curr: f64,
    g_tilde: &Vector,
    displacement: &Vector,
    smoothness: f64,
    alpha: f64,
    relative_slack: f64,
) -> bool {
    let step = displacement.norm();
    let rhs = f_curr
        + g_tilde.dot(displacement)
        + 0.5 * smoothness * step * step
        + alpha / (1.0 - alpha) * g_tilde.norm() * step;
    f_next <= rhs + relative_slack * rhs.abs()
}
