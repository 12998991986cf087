//! Suite configuration and the sweep driver.

use std::collections::BTreeSet;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::checks::{Check, Runner};
use super::ledger::point_key;
use super::report::Report;
use crate::codec::DEFAULT_BUDGET;
use crate::error::{Error, Result};
use crate::field::PrimePower;

const DEFAULT_SUITE: &str = include_str!("../../data/default_suite.json");

fn default_budget() -> u64 {
    DEFAULT_BUDGET
}

/// A check over the product of `q` and `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    pub check: String,
    pub q: Vec<u64>,
    pub m: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub name: String,
    /// Codewords the exhaustive distance search may enumerate per code.
    #[serde(default = "default_budget")]
    pub budget: u64,
    #[serde(default)]
    pub checks: Vec<CheckSpec>,
}

impl SuiteConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: SuiteConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(format!("suite: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// `default` is the full sweep, `none` is empty.
    pub fn named(name: &str) -> Option<Self> {
        match name {
            "default" => Some(Self::parse(DEFAULT_SUITE).expect("embedded suite parses")),
            "none" => Some(SuiteConfig {
                name: "none".into(),
                budget: DEFAULT_BUDGET,
                checks: Vec::new(),
            }),
            _ => None,
        }
    }

    /// A suite name, or else a path to a JSON configuration.
    pub fn resolve(name_or_path: &str) -> Result<Self> {
        if let Some(cfg) = Self::named(name_or_path) {
            return Ok(cfg);
        }
        let path = Path::new(name_or_path);
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::Config(format!("no suite named {name_or_path:?} and cannot read it: {e}"))
        })?;
        Self::parse(&text)
    }

    fn validate(&self) -> Result<()> {
        for spec in &self.checks {
            spec.check.parse::<Check>()?;
            for &q in &spec.q {
                PrimePower::new(q).map_err(|e| Error::Config(format!("{}: {e}", spec.check)))?;
            }
            if spec.m.iter().any(|&m| m == 0 || m > 12) {
                return Err(Error::Config(format!("{}: m must lie in 1..=12", spec.check)));
            }
        }
        Ok(())
    }

    /// Keeps only the entries of one check.
    pub fn restrict(&mut self, check_id: &str) -> Result<()> {
        check_id.parse::<Check>()?;
        self.checks.retain(|c| c.check == check_id);
        Ok(())
    }
}

/// A finished sweep: the report plus the identity of every evaluated point,
/// which the ledger comparison needs.
#[derive(Debug, Clone)]
pub struct SuiteRun {
    pub report: Report,
    pub evaluated: BTreeSet<String>,
}

pub fn run_suite(cfg: &SuiteConfig, reproducible: bool) -> Result<SuiteRun> {
    cfg.validate()?;
    let start = Instant::now();
    let mut runner = Runner::new(cfg.budget);
    let mut report = Report::empty(cfg.name.clone());
    let mut evaluated = BTreeSet::new();
    for spec in &cfg.checks {
        let check: Check = spec.check.parse()?;
        let mut outcomes = Vec::new();
        for &q in &spec.q {
            for &m in &spec.m {
                outcomes.extend(runner.run(check, q, m));
            }
        }
        for o in &outcomes {
            let params = serde_json::to_value(&o.params).expect("params serialize");
            evaluated.insert(point_key(check.id(), &params));
        }
        report.push(check.id(), spec.q.clone(), spec.m.clone(), outcomes);
    }
    report.canonicalize();
    report.runtime_ms = if reproducible {
        0
    } else {
        start.elapsed().as_millis() as u64
    };
    Ok(SuiteRun { report, evaluated })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite() {
        let run = run_suite(&SuiteConfig::named("none").unwrap(), true).unwrap();
        assert_eq!(run.report.counts.total(), 0);
        assert!(run.report.mismatches.is_empty());
    }

    #[test]
    fn restriction() {
        let mut cfg = SuiteConfig::named("default").unwrap();
        cfg.restrict("bch2").unwrap();
        assert!(!cfg.checks.is_empty());
        assert!(cfg.checks.iter().all(|c| c.check == "bch2"));
        assert!(cfg.restrict("bogus").is_err());
    }

    #[test]
    fn bad_configs() {
        assert!(SuiteConfig::parse(r#"{"name":"x","checks":[{"check":"bch2","q":[6],"m":[5]}]}"#).is_err());
        assert!(SuiteConfig::parse(r#"{"name":"x","checks":[{"check":"nope","q":[2],"m":[5]}]}"#).is_err());
        assert!(SuiteConfig::parse("{").is_err());
    }
}
