//! Verification reports: one record per checked identity.

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

/// Result of evaluating one identity: the number of surviving residual
/// terms (zero means the identity holds) and, on failure, a rendering of
/// the residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub residual_terms: usize,
    pub residual: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Self {
            residual_terms: 0,
            residual: None,
        }
    }

    pub fn fail(residual_terms: usize, residual: impl Into<String>) -> Self {
        Self {
            residual_terms: residual_terms.max(1),
            residual: Some(residual.into()),
        }
    }

    pub fn from_residual(terms: usize, render: impl FnOnce() -> String) -> Self {
        if terms == 0 {
            Self::pass()
        } else {
            Self::fail(terms, render())
        }
    }

    pub fn expect(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass()
        } else {
            Self::fail(1, detail())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub identity: String,
    pub anchor: String,
    pub status: Status,
    pub residual_terms: usize,
    pub millis: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<String>,
}

impl CheckRecord {
    /// Runs `check`, timing it.
    pub fn run(
        suite: &str,
        identity: impl Into<String>,
        anchor: &str,
        check: impl FnOnce() -> Outcome,
    ) -> Self {
        let start = Instant::now();
        let outcome = check();
        let millis = start.elapsed().as_millis() as u64;
        Self {
            suite: suite.to_string(),
            identity: identity.into(),
            anchor: anchor.to_string(),
            status: if outcome.residual_terms == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            residual_terms: outcome.residual_terms,
            millis,
            residual: outcome.residual,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.records.push(record);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(CheckRecord::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed())
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// First record whose identity equals `identity`.
    pub fn find(&self, identity: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.identity == identity)
    }

    /// Zeroes every wall time, for byte-stable output.
    pub fn without_timing(mut self) -> Self {
        for r in &mut self.records {
            r.millis = 0;
        }
        self
    }

    /// Overrides the suite label on every record.
    pub fn with_suite(mut self, suite: &str) -> Self {
        for r in &mut self.records {
            r.suite = suite.to_string();
        }
        self
    }
}

impl FromIterator<CheckRecord> for Report {
    fn from_iter<I: IntoIterator<Item = CheckRecord>>(iter: I) -> Self {
        Self {
            records: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            writeln!(
                f,
                "[{}] {:<10} {:<48} residual={} ({} ms)",
                r.status, r.suite, r.identity, r.residual_terms, r.millis
            )?;
            if let Some(res) = &r.residual {
                writeln!(f, "        residual: {res}")?;
            }
        }
        Ok(())
    }
}
