//! Verdicts, per-point cases and the aggregate report.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Str(&'static str),
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<u64> for ParamValue {
    fn from(v: u64) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<u32> for ParamValue {
    fn from(v: u32) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<&'static str> for ParamValue {
    fn from(v: &'static str) -> Self {
        ParamValue::Str(v)
    }
}

/// Named parameters of a grid point, serialized as a map in insertion order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Params(pub Vec<(&'static str, ParamValue)>);

impl Params {
    pub fn with(mut self, key: &'static str, v: impl Into<ParamValue>) -> Self {
        self.0.push((key, v.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&ParamValue> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Match,
    Mismatch { expected: Value, actual: Value },
    /// The claim's hypotheses do not cover the point.
    OutOfRange(String),
    /// The oracle could not run within its budget.
    Skipped(String),
}

impl Verdict {
    /// Match or mismatch depending on equality.
    pub fn compare<T: Serialize + PartialEq>(expected: T, actual: T) -> Self {
        if expected == actual {
            Verdict::Match
        } else {
            Verdict::Mismatch {
                expected: serde_json::to_value(expected).expect("serializable"),
                actual: serde_json::to_value(actual).expect("serializable"),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub params: Params,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckCase {
    pub theorem_id: &'static str,
    pub params: Params,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    #[serde(rename = "match")]
    pub matched: u64,
    pub mismatch: u64,
    pub out_of_range: u64,
    pub skipped: u64,
}

impl Counts {
    pub fn total(&self) -> u64 {
        self.matched + self.mismatch + self.out_of_range + self.skipped
    }

    fn add(&mut self, v: &Verdict) {
        match v {
            Verdict::Match => self.matched += 1,
            Verdict::Mismatch { .. } => self.mismatch += 1,
            Verdict::OutOfRange(_) => self.out_of_range += 1,
            Verdict::Skipped(_) => self.skipped += 1,
        }
    }

    fn merge(&mut self, o: &Counts) {
        self.matched += o.matched;
        self.mismatch += o.mismatch;
        self.out_of_range += o.out_of_range;
        self.skipped += o.skipped;
    }
}

/// One block of the grid: a check over the product of its `q` and `m` lists.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridEntry {
    pub theorem_id: &'static str,
    pub q: Vec<u64>,
    pub m: Vec<u32>,
    pub points: u64,
    pub counts: Counts,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub grid: Vec<GridEntry>,
    pub counts: Counts,
    pub mismatches: Vec<CheckCase>,
    pub runtime_ms: u64,
}

impl Report {
    pub fn empty(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            grid: Vec::new(),
            counts: Counts::default(),
            mismatches: Vec::new(),
            runtime_ms: 0,
        }
    }

    /// Adds a grid block with its outcomes.
    pub fn push(&mut self, theorem_id: &'static str, q: Vec<u64>, m: Vec<u32>, outcomes: Vec<Outcome>) {
        let mut counts = Counts::default();
        for o in outcomes {
            counts.add(&o.verdict);
            if let Verdict::Mismatch { expected, actual } = o.verdict {
                self.mismatches.push(CheckCase {
                    theorem_id,
                    params: o.params,
                    expected,
                    actual,
                });
            }
        }
        self.counts.merge(&counts);
        self.grid.push(GridEntry {
            theorem_id,
            q,
            m,
            points: counts.total(),
            counts,
        });
    }

    /// Sorts mismatches by check id, then parameters.
    pub fn canonicalize(&mut self) {
        self.mismatches
            .sort_by(|a, b| (a.theorem_id, &a.params).cmp(&(b.theorem_id, &b.params)));
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_order_is_stable() {
        let mut r = Report::empty("t");
        let p = Params::default().with("q", 2u64).with("family", "primitive");
        r.push(
            "x",
            vec![2],
            vec![3],
            vec![Outcome {
                params: p,
                verdict: Verdict::compare(1, 2),
            }],
        );
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.starts_with(r#"{"suite":"t","grid":"#));
        assert!(s.contains(r#""counts":{"match":0,"mismatch":1,"out_of_range":0,"skipped":0}"#));
        assert!(s.contains(r#""params":{"q":2,"family":"primitive"},"expected":1,"actual":2"#));
        assert!(s.ends_with(r#""runtime_ms":0}"#));
    }
}
