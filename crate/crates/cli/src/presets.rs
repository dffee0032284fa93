//! Checked-in configurations reproducing the published result tables.

use crate::config::ExperimentConfig;
use crate::error::{HarnessError, Result};

pub const PRESETS: &[(&str, &str)] = &[
    (
        "rosenbrock_t1",
        include_str!("../presets/rosenbrock_t1.json"),
    ),
    (
        "rosenbrock_t2",
        include_str!("../presets/rosenbrock_t2.json"),
    ),
    ("ns_t3", include_str!("../presets/ns_t3.json")),
    ("ns_t4", include_str!("../presets/ns_t4.json")),
    ("ns_t5", include_str!("../presets/ns_t5.json")),
    ("ns_t6", include_str!("../presets/ns_t6.json")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    PRESETS.iter().map(|(name, _)| *name)
}

pub fn preset(name: &str) -> Result<ExperimentConfig> {
    let name = name.strip_suffix(".json").unwrap_or(name);
    let (_, text) = PRESETS.iter().find(|(n, _)| *n == name).ok_or_else(|| {
        HarnessError::validation(
            "preset",
            format!(
                "unknown preset `{name}`; available: {}",
                names().collect::<Vec<_>>().join(", ")
            ),
        )
    })?;
    ExperimentConfig::from_json(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_preset_parses() {
        for name in names() {
            let c = preset(name).unwrap();
            assert_eq!(c.name.as_deref(), Some(name));
            assert_eq!(c.reference.as_ref().map(Vec::len), Some(c.alphas.len()));
        }
        assert!(preset("ns_t4.json").is_ok());
        assert!(matches!(
            preset("nope"),
            Err(HarnessError::Validation { .. })
        ));
    }
}
