//! The machine-readable report written by every subcommand.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "cremona-lab/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Verbatim printed data that does not survive recomputation.
    RecordedDiscrepancy,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::RecordedDiscrepancy => "discrepancy",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub source_ref: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    pub tolerance: Option<f64>,
}

impl Check {
    pub fn new(id: impl Into<String>, source_ref: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            source_ref: source_ref.into(),
            status: Status::Skipped,
            computed: String::new(),
            expected: String::new(),
            tolerance: None,
        }
    }

    pub fn expect(mut self, expected: impl Into<String>) -> Self {
        self.expected = expected.into();
        self
    }

    pub fn tol(mut self, t: f64) -> Self {
        self.tolerance = Some(t);
        self
    }

    /// Record the computed value and pass iff `ok`.
    pub fn verdict(mut self, ok: bool, computed: impl Into<String>) -> Self {
        self.status = if ok { Status::Pass } else { Status::Fail };
        self.computed = computed.into();
        self
    }

    pub fn with_status(mut self, status: Status, computed: impl Into<String>) -> Self {
        self.status = status;
        self.computed = computed.into();
        self
    }

    /// A computation that errored out counts as a failure.
    pub fn error(self, e: impl std::fmt::Display) -> Self {
        self.verdict(false, format!("error: {e}"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub tool_version: String,
    pub command: String,
    pub checks: Vec<Check>,
    pub flags: Vec<String>,
    pub timing: Timing,
}

impl Report {
    /// Checks are sorted by id; duplicate ids are a programming error.
    pub fn new(command: &str, mut checks: Vec<Check>, flags: Vec<String>, elapsed_ms: u64) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let ids: BTreeSet<_> = checks.iter().map(|c| &c.id).collect();
        assert_eq!(ids.len(), checks.len(), "duplicate check ids");
        Report {
            schema: SCHEMA.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            checks,
            flags,
            timing: Timing { elapsed_ms },
        }
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// 1 iff some check failed.
    pub fn exit_code(&self) -> i32 {
        if self.failed().next().is_some() {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }
}
