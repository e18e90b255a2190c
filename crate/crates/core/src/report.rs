use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// One input on which a claim did not hold.
///
/// `input` names the swept parameters (`"i"`, `"n"`, `"flavor"`, ...) with
/// decimal string values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    #[serde(flatten)]
    pub input: BTreeMap<String, String>,
    pub reason: String,
}

impl Counterexample {
    pub fn new(reason: impl Into<String>) -> Self {
        Counterexample {
            input: BTreeMap::new(),
            reason: reason.into(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.input.insert(key.to_string(), value.to_string());
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.input.get(key).map(String::as_str)
    }
}

/// Outcome of sweeping one claim over a finite range.
///
/// `status` is derived from `counterexamples`: it is `Pass` exactly when the
/// list is empty.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub range: String,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_secs: f64,
}

impl VerificationReport {
    pub fn new(
        claim: impl Into<String>,
        range: impl Into<String>,
        counterexamples: Vec<Counterexample>,
        elapsed_secs: f64,
    ) -> Self {
        let status = if counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            claim: claim.into(),
            range: range.into(),
            status,
            counterexamples,
            elapsed_secs,
        }
    }

    /// Runs `check` and records its wall time.
    pub fn timed(
        claim: impl Into<String>,
        range: impl Into<String>,
        check: impl FnOnce() -> Vec<Counterexample>,
    ) -> Self {
        let start = Instant::now();
        let found = check();
        Self::new(claim, range, found, start.elapsed().as_secs_f64())
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
