use crate::vector::Vector;

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Termination {
    StoppingRuleFired,
    BudgetExhausted,
    /// The acceptance test failed more times in one iteration than allowed.
    InnerCapExceeded,
}

impl Termination {
    pub fn as_str(self) -> &'static str {
        match self {
            Termination::StoppingRuleFired => "stopping_rule",
            Termination::BudgetExhausted => "budget",
            Termination::InnerCapExceeded => "inner_cap",
        }
    }
}

/// One accepted step `x^k -> x^{k+1}`.
///
/// Gradient norms are taken at `x^k`, the function value and distance at
/// `x^{k+1}`. `smoothness` and `alpha` are the values the step was accepted
/// with.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationRecord {
    pub k: usize,
    pub f_value: f64,
    pub gap: Option<f64>,
    pub exact_grad_norm: f64,
    pub noisy_grad_norm: f64,
    pub smoothness: f64,
    pub alpha: f64,
    pub step_size: f64,
    /// Failed acceptance tests before this step was accepted.
    pub inner_repeats: usize,
    pub dist_from_x0: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunTrace {
    initial_point: Vector,
    initial_value: f64,
    records: Vec<IterationRecord>,
    final_point: Vector,
    termination: Termination,
}

impl RunTrace {
    pub fn new(x0: Vector, f0: f64) -> Self {
        RunTrace {
            final_point: x0.clone(),
            initial_point: x0,
            initial_value: f0,
            records: Vec::new(),
            termination: Termination::BudgetExhausted,
        }
    }

    /// Appends `record`.
    ///
    /// # Panics
    ///
    /// If `record.k` is not the next consecutive index.
    pub fn record_iteration(&mut self, record: IterationRecord) {
        assert_eq!(
            record.k,
            self.records.len(),
            "iteration records must be consecutive from 0"
        );
        self.records.push(record);
    }

    pub fn records(&self) -> &[IterationRecord] {
        &self.records
    }

    pub fn initial_point(&self) -> &Vector {
        &self.initial_point
    }

    pub fn initial_value(&self) -> f64 {
        self.initial_value
    }

    pub fn final_point(&self) -> &Vector {
        &self.final_point
    }

    /// Objective value at the final point.
    pub fn final_value(&self) -> f64 {
        self.records
            .last()
            .map_or(self.initial_value, |r| r.f_value)
    }

    pub fn termination(&self) -> Termination {
        self.termination
    }

    /// Number of accepted iterations.
    pub fn iterations(&self) -> usize {
        self.records.len()
    }

    /// Objective value at `x^k`, for `k` in `0..=iterations()`.
    pub fn value_at(&self, k: usize) -> f64 {
        if k == 0 {
            self.initial_value
        } else {
            self.records[k - 1].f_value
        }
    }

    /// Largest accepted smoothness estimate.
    pub fn max_smoothness(&self) -> Option<f64> {
        self.records.iter().map(|r| r.smoothness).reduce(f64::max)
    }

    pub fn max_alpha(&self) -> Option<f64> {
        self.records.iter().map(|r| r.alpha).reduce(f64::max)
    }

    pub fn max_distance_from_x0(&self) -> f64 {
        self.records
            .iter()
            .map(|r| r.dist_from_x0)
            .fold(0.0, f64::max)
    }

    pub(crate) fn finish(&mut self, final_point: Vector, termination: Termination) {
        self.final_point = final_point;
        self.termination = termination;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(k: usize) -> IterationRecord {
        IterationRecord {
            k,
            f_value: 1.0 / (k as f64 + 1.0),
            gap: None,
            exact_grad_norm: 1.0,
            noisy_grad_norm: 1.0,
            smoothness: 1.0,
            alpha: 0.0,
            step_size: 1.0,
            inner_repeats: 0,
            dist_from_x0: 0.0,
        }
    }

    fn trace_of(len: usize) -> RunTrace {
        let mut t = RunTrace::new(Vector::zeros(2), 2.0);
        for k in 0..len {
            t.record_iteration(record(k));
        }
        t
    }

    #[test]
    fn appends_consecutive_records() {
        assert_eq!(trace_of(1).records().len(), 1);
        let mut t = trace_of(3);
        t.record_iteration(record(3));
        assert_eq!(t.records().len(), 4);
        assert_eq!(t.value_at(0), 2.0);
        assert_eq!(t.value_at(4), 0.25);
        assert_eq!(t.final_value(), 0.25);
    }

    #[test]
    #[should_panic(expected = "consecutive")]
    fn out_of_order_record_panics() {
        let mut t = trace_of(3);
        t.record_iteration(record(5));
    }

    #[test]
    fn empty_trace_reports_initial_value() {
        let t = trace_of(0);
        assert_eq!(t.final_value(), 2.0);
        assert_eq!(t.max_smoothness(), None);
        assert_eq!(t.max_distance_from_x0(), 0.0);
    }
}
