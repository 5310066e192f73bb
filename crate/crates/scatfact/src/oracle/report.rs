use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

/// A counterexample, with enough context to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub word: String,
    pub detail: String,
}

/// Result of one exhaustive (or seeded sampled) check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub instances_checked: u64,
    pub witnesses: Vec<Witness>,
    pub status: Status,
    pub elapsed_ms: u64,
    /// Measured quantities, e.g. the largest count seen.
    #[serde(default)]
    pub observed: BTreeMap<String, String>,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub(crate) fn new(claim_id: &str) -> Self {
        VerificationReport {
            claim_id: claim_id.to_string(),
            params: BTreeMap::new(),
            instances_checked: 0,
            witnesses: Vec::new(),
            status: Status::Pass,
            elapsed_ms: 0,
            observed: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn param(&mut self, key: &str, value: impl Into<serde_json::Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    pub(crate) fn observe(&mut self, key: &str, value: impl ToString) {
        self.observed.insert(key.to_string(), value.to_string());
    }

    pub(crate) fn witness(&mut self, word: impl ToString, detail: impl Into<String>) {
        self.witnesses.push(Witness {
            word: word.to_string(),
            detail: detail.into(),
        });
    }

    /// Sorts witnesses and derives the status from them.
    pub(crate) fn finish(mut self, elapsed: Duration) -> Self {
        self.witnesses.sort();
        self.witnesses.dedup();
        self.status = if self.witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        self.elapsed_ms = elapsed.as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
