//! Outcome records for the verification suite.
//!
//! A matrix entry names one check: a stable identifier, a short label
//! used for filtering and ordering, a plain-language statement of the
//! claim, and the outcome. Wall-clock time is kept for the table view
//! but left out of the JSON form, so two runs with the same seed produce
//! byte-identical serialized reports.

use serde::{Deserialize, Serialize};

/// Outcome of a single check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail { detail: String },
    Skipped { reason: String },
}

impl CheckStatus {
    pub fn is_fail(&self) -> bool {
        matches!(self, CheckStatus::Fail { .. })
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, CheckStatus::Pass)
    }

    fn word(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail { .. } => "FAIL",
            CheckStatus::Skipped { .. } => "skip",
        }
    }
}

/// One verified claim with its outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub id: String,
    pub label: String,
    pub claim: String,
    #[serde(flatten)]
    pub status: CheckStatus,
    #[serde(skip)]
    pub millis: u128,
}

/// The full outcome of a suite run, ordered by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationMatrix {
    pub seed: u64,
    pub entries: Vec<CheckEntry>,
}

impl VerificationMatrix {
    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| e.status.is_fail()).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn find(&self, id: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Deterministic JSON rendering; excludes runtimes.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matrix serialization cannot fail")
    }

    /// Human-readable table with per-check runtimes and a summary line.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let wid = self.entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
        let wlabel = self.entries.iter().map(|e| e.label.len()).max().unwrap_or(0);
        for e in &self.entries {
            out.push_str(&format!(
                "{:<4}  {:<wid$}  {:<wlabel$}  {:>6} ms\n",
                e.status.word(),
                e.id,
                e.label,
                e.millis,
            ));
            match &e.status {
                CheckStatus::Fail { detail } => {
                    out.push_str(&format!("      detail: {detail}\n"));
                }
                CheckStatus::Skipped { reason } => {
                    out.push_str(&format!("      reason: {reason}\n"));
                }
                CheckStatus::Pass => {}
            }
        }
        let passed = self.entries.iter().filter(|e| e.status.is_pass()).count();
        let skipped = self.entries.len() - passed - self.failures();
        out.push_str(&format!(
            "{} checks: {} passed, {} failed, {} skipped (seed {})\n",
            self.entries.len(),
            passed,
            self.failures(),
            skipped,
            self.seed,
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationMatrix {
        VerificationMatrix {
            seed: 0,
            entries: vec![
                CheckEntry {
                    id: "alpha".into(),
                    label: "alpha check".into(),
                    claim: "a claim".into(),
                    status: CheckStatus::Pass,
                    millis: 12,
                },
                CheckEntry {
                    id: "beta".into(),
                    label: "beta check".into(),
                    claim: "another claim".into(),
                    status: CheckStatus::Fail { detail: "expected 1, got 2".into() },
                    millis: 3,
                },
            ],
        }
    }

    #[test]
    fn json_is_runtime_free_and_round_trips() {
        let m = sample();
        let text = m.to_json();
        assert!(!text.contains("millis"));
        assert!(text.contains("\"status\": \"fail\""));
        assert!(text.contains("\"detail\": \"expected 1, got 2\""));
        let back: VerificationMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back.entries[0].status, CheckStatus::Pass);
        assert!(back.entries[1].status.is_fail());
        assert_eq!(back.entries[0].millis, 0);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn summary_counts() {
        let m = sample();
        assert_eq!(m.failures(), 1);
        assert!(!m.passed());
        let table = m.render_table();
        assert!(table.contains("FAIL"));
        assert!(table.contains("2 checks: 1 passed, 1 failed, 0 skipped"));
        assert!(m.find("beta").is_some());
        assert!(m.find("gamma").is_none());
    }
}
