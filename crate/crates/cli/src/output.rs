//! CSV writers. Floats use Rust's shortest round-trip formatting.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use relgrad::RunTrace;

use crate::error::{HarnessError, Result};
use crate::experiment::{median, ExperimentOutcome};

pub const TRACE_HEADER: &str =
    "k,f,gap,exact_grad_norm,noisy_grad_norm,L_k,alpha_k,step_size,inner_repeats,dist_from_x0";

pub fn fmt_f64(v: f64) -> String {
    format!("{v:?}")
}

pub fn trace_csv(trace: &RunTrace) -> String {
    let mut out = String::with_capacity(64 * (trace.iterations() + 1));
    out.push_str(TRACE_HEADER);
    out.push('\n');
    for r in trace.records() {
        let gap = r.gap.map(fmt_f64).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.k,
            fmt_f64(r.f_value),
            gap,
            fmt_f64(r.exact_grad_norm),
            fmt_f64(r.noisy_grad_norm),
            fmt_f64(r.smoothness),
            fmt_f64(r.alpha),
            fmt_f64(r.step_size),
            r.inner_repeats,
            fmt_f64(r.dist_from_x0),
        );
    }
    out
}

/// Per-cell finals followed by one `median` row per swept level.
pub fn summary_csv(outcome: &ExperimentOutcome) -> String {
    let mut out = String::from("alpha,seed,iterations,termination,final_f\n");
    for c in &outcome.cells {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            fmt_f64(c.alpha),
            c.seed,
            c.trace.iterations(),
            c.status(),
            fmt_f64(c.final_value()),
        );
    }
    for row in &outcome.summary {
        let _ = writeln!(
            out,
            "{},median,,,{}",
            fmt_f64(row.alpha),
            fmt_f64(row.median_final)
        );
    }
    out
}

/// Median objective value over seeds at every iteration, one column per
/// swept level. Row `k` holds `f(x^k)`; runs that stopped early contribute
/// only while they last.
pub fn curves_csv(outcome: &ExperimentOutcome) -> String {
    let alphas: Vec<f64> = outcome.summary.iter().map(|r| r.alpha).collect();
    let mut out = String::from("k");
    for a in &alphas {
        let _ = write!(out, ",alpha={}", fmt_f64(*a));
    }
    out.push('\n');
    let longest = outcome
        .cells
        .iter()
        .map(|c| c.trace.iterations())
        .max()
        .unwrap_or(0);
    for k in 0..=longest {
        let _ = write!(out, "{k}");
        for a in &alphas {
            let values: Vec<f64> = outcome
                .cells_for(*a)
                .filter(|c| k <= c.trace.iterations())
                .map(|c| c.trace.value_at(k))
                .collect();
            if values.is_empty() {
                out.push(',');
            } else {
                let _ = write!(out, ",{}", fmt_f64(median(&values)));
            }
        }
        out.push('\n');
    }
    out
}

pub fn trace_file_name(alpha: f64, seed: u64) -> String {
    format!("trace_alpha_{}_seed_{seed}.csv", fmt_f64(alpha))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents)
        .map_err(|e| HarnessError::io(format!("writing {}", path.display()), e))
}

/// Writes every per-run trace plus `summary.csv` and `curves.csv` into `dir`.
/// Returns the paths written.
pub fn write_outputs(dir: &Path, outcome: &ExperimentOutcome) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)
        .map_err(|e| HarnessError::io(format!("creating {}", dir.display()), e))?;
    let mut written = Vec::with_capacity(outcome.cells.len() + 2);
    for cell in &outcome.cells {
        let path = dir.join(trace_file_name(cell.alpha, cell.seed));
        write(&path, &trace_csv(&cell.trace))?;
        written.push(path);
    }
    for (name, contents) in [
        ("summary.csv", summary_csv(outcome)),
        ("curves.csv", curves_csv(outcome)),
    ] {
        let path = dir.join(name);
        write(&path, &contents)?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortest_round_trip_formatting() {
        for v in [0.1, 1.0, 1.5e-19, 2.631, 1e300, -0.0074, 0.1 + 0.2] {
            let s = fmt_f64(v);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), v.to_bits(), "{s}");
        }
        assert_eq!(fmt_f64(0.0074), "0.0074");
        assert_eq!(fmt_f64(1.5e-19), "1.5e-19");
        assert_eq!(trace_file_name(0.001, 3), "trace_alpha_0.001_seed_3.csv");
    }
}
