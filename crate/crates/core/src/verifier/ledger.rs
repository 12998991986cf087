//! Known findings: the mismatches a suite is expected to reproduce.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::report::CheckCase;
use crate::error::{Error, Result};

/// The findings that ship with the crate, produced by the default suite.
pub const DEFAULT_LEDGER: &str = include_str!("../../data/known_findings.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub theorem_id: String,
    pub params: Value,
    pub expected: Value,
    pub actual: Value,
    /// Free text; not compared.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Finding {
    fn key(&self) -> String {
        serde_json::to_string(&(&self.theorem_id, &self.params, &self.expected, &self.actual))
            .expect("finding serializes")
    }

    fn point(&self) -> String {
        point_key(&self.theorem_id, &self.params)
    }
}

impl From<&CheckCase> for Finding {
    fn from(c: &CheckCase) -> Self {
        Finding {
            theorem_id: c.theorem_id.to_string(),
            params: serde_json::to_value(&c.params).expect("params serialize"),
            expected: c.expected.clone(),
            actual: c.actual.clone(),
            note: None,
        }
    }
}

/// Identity of a grid point, independent of map key order.
pub(crate) fn point_key(theorem_id: &str, params: &Value) -> String {
    // serde_json::Value maps are sorted by key
    serde_json::to_string(&(theorem_id, params)).expect("point serializes")
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Ledger {
    pub findings: Vec<Finding>,
}

/// Differences between a run and the ledger. Both lists empty means the run
/// reproduced the ledger exactly.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LedgerDiff {
    /// Mismatches not listed in the ledger.
    pub unexpected: Vec<Finding>,
    /// Ledger entries on evaluated points that did not reproduce.
    pub resolved: Vec<Finding>,
}

impl LedgerDiff {
    pub fn is_clean(&self) -> bool {
        self.unexpected.is_empty() && self.resolved.is_empty()
    }
}

impl Ledger {
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Ok(Ledger::default());
        }
        let findings: Vec<Finding> =
            serde_json::from_str(text).map_err(|e| Error::Config(format!("ledger: {e}")))?;
        Ok(Ledger { findings })
    }

    pub fn builtin() -> Self {
        Self::parse(DEFAULT_LEDGER).expect("embedded ledger parses")
    }

    /// Reads a ledger file; an empty file (such as `/dev/null`) is an empty
    /// ledger.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("reading {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn from_cases(cases: &[CheckCase]) -> Self {
        Ledger {
            findings: cases.iter().map(Finding::from).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.findings).expect("ledger serializes");
        s.push('\n');
        s
    }

    /// Compares mismatches against the ledger entries whose points were
    /// evaluated; `evaluated` holds `point_key` values.
    pub fn compare(&self, mismatches: &[CheckCase], evaluated: &BTreeSet<String>) -> LedgerDiff {
        let known: BTreeSet<String> = self.findings.iter().map(Finding::key).collect();
        let seen: Vec<Finding> = mismatches.iter().map(Finding::from).collect();
        let seen_keys: BTreeSet<String> = seen.iter().map(Finding::key).collect();
        LedgerDiff {
            unexpected: seen
                .into_iter()
                .filter(|f| !known.contains(&f.key()))
                .collect(),
            resolved: self
                .findings
                .iter()
                .filter(|f| evaluated.contains(&f.point()) && !seen_keys.contains(&f.key()))
                .cloned()
                .collect(),
        }
    }
}
