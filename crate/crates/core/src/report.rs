//! Structured outcomes of verification suites.
//!
//! Every numeric payload is serialized as an exact decimal or fraction
//! string, so a report never loses precision on its way to a consumer.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

/// One failed case: the operation, its inputs, and both exactly
/// evaluated sides.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub op: String,
    pub inputs: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
}

impl Failure {
    pub fn new<K, V>(
        op: &str,
        inputs: impl IntoIterator<Item = (K, V)>,
        lhs: impl ToString,
        rhs: impl ToString,
    ) -> Self
    where
        K: Into<String>,
        V: ToString,
    {
        Failure {
            op: op.to_string(),
            inputs: inputs
                .into_iter()
                .map(|(k, v)| (k.into(), v.to_string()))
                .collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// Outcome of a suite run: total case count and the list of failures.
/// Empty failures ⇔ pass.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Merges sub-reports in order under a new name; counts add,
    /// failures concatenate, elapsed times sum.
    pub fn merged(suite: impl Into<String>, parts: impl IntoIterator<Item = Report>) -> Report {
        let mut cases = 0;
        let mut failures = Vec::new();
        let mut elapsed_ms = 0;
        for part in parts {
            cases += part.cases;
            failures.extend(part.failures);
            elapsed_ms += part.elapsed_ms;
        }
        Report {
            suite: suite.into(),
            cases,
            failures,
            elapsed_ms,
        }
    }

    pub fn with_elapsed_ms(mut self, elapsed_ms: u64) -> Report {
        self.elapsed_ms = elapsed_ms;
        self
    }
}

/// Accumulates cases as a suite runs. Failure records are built lazily
/// so the heavy sweeps never pay for string formatting on passing cases.
pub struct ReportBuilder {
    suite: String,
    cases: u64,
    failures: Vec<Failure>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(suite: impl Into<String>) -> Self {
        ReportBuilder {
            suite: suite.into(),
            cases: 0,
            failures: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn record(&mut self, pass: bool, failure: impl FnOnce() -> Failure) {
        self.cases += 1;
        if !pass {
            self.failures.push(failure());
        }
    }

    pub fn has_failures(&self) -> bool {
        !self.failures.is_empty()
    }

    pub fn finish(self) -> Report {
        Report {
            suite: self.suite,
            cases: self.cases,
            failures: self.failures,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}
