//! Check outcomes and run reports shared by the suites and the CLI.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
    pub details: Value,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>, passed: bool, details: Value) -> Self {
        let status = if passed { Status::Pass } else { Status::Fail };
        Self { name: name.into(), status, details }
    }

    pub fn skip(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Skip, details: Value::String(reason.into()) }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
    pub all_passed: bool,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn new(command: impl Into<String>, parameters: BTreeMap<String, Value>, seed: u64, checks: Vec<CheckOutcome>, wall_time_ms: f64) -> Self {
        let all_passed = checks.iter().all(CheckOutcome::passed);
        Self { command: command.into(), parameters, seed, checks, all_passed, wall_time_ms }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// The report with the timing field zeroed, for replay comparisons.
    pub fn without_timing(&self) -> Self {
        Self { wall_time_ms: 0.0, ..self.clone() }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed())
    }
}
