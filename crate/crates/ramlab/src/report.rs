//! Versioned reports: a list of claims, each with its computed value, the
//! pinned expectation when there is one, and a status.

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const REPORT_SCHEMA: &str = "ramlab.report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    UnverifiedAdvisory,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Claim {
    pub id: String,
    /// Stable key naming the statement the claim checks.
    pub anchor: String,
    pub computed: Value,
    pub expected: Option<Value>,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema: String,
    pub scenario: Value,
    pub claims: Vec<Claim>,
    /// Supporting data: filtrations, ledgers, intermediate valuations.
    pub details: Value,
}

impl Report {
    pub fn new(scenario: Value) -> Self {
        Report {
            schema: String::from(REPORT_SCHEMA),
            scenario,
            claims: Vec::new(),
            details: Value::Object(Default::default()),
        }
    }

    /// A claim with a pinned expectation; equal JSON is a match.
    pub fn pinned(&mut self, id: &str, anchor: &str, computed: Value, expected: Value) {
        let status = if computed == expected { Status::Match } else { Status::Mismatch };
        self.claims.push(Claim { id: id.into(), anchor: anchor.into(), computed, expected: Some(expected), status });
    }

    /// Pinned when `expected` is given, advisory otherwise.
    pub fn claim(&mut self, id: &str, anchor: &str, computed: Value, expected: Option<Value>) {
        match expected {
            Some(e) => self.pinned(id, anchor, computed, e),
            None => self.advisory(id, anchor, computed, None),
        }
    }

    /// Never a mismatch: either nothing is pinned or the comparison is structural.
    pub fn advisory(&mut self, id: &str, anchor: &str, computed: Value, expected: Option<Value>) {
        self.claims.push(Claim {
            id: id.into(),
            anchor: anchor.into(),
            computed,
            expected,
            status: Status::UnverifiedAdvisory,
        });
    }

    pub fn detail(&mut self, key: &str, v: Value) {
        if let Value::Object(m) = &mut self.details {
            m.insert(key.into(), v);
        }
    }

    pub fn has_mismatch(&self) -> bool {
        self.claims.iter().any(|c| c.status == Status::Mismatch)
    }

    pub fn claim_by_id(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
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
    use serde_json::json;

    #[test]
    fn statuses_and_round_trip() {
        let mut r = Report::new(json!({"kind": "test"}));
        r.pinned("a", "x.a", json!(5), json!(5));
        r.pinned("b", "x.b", json!([1, 3]), json!([1, 2]));
        r.advisory("c", "x.c", json!("shape"), None);
        r.detail("k", json!({"z": 1, "a": 2}));
        assert!(r.has_mismatch());
        let text = r.to_json();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), text);
        assert!(text.contains("\"unverified-advisory\""));
    }
}
