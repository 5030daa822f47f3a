use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// A documented discrepancy between a printed value and the value its
    /// defining formula produces. Does not count as a failure.
    Conflict,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Conflict => "CONFLICT",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    /// The identity being checked, in words or symbols.
    pub anchor: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub conflict: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, id: impl Into<String>, anchor: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.checks.push(Check {
            id: id.into(),
            anchor: anchor.into(),
            status,
            detail: detail.into(),
        });
    }

    /// Records PASS when `ok`, FAIL otherwise.
    pub fn check(&mut self, id: impl Into<String>, anchor: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(id, anchor, status, detail);
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
    }

    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Conflict => s.conflict += 1,
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.summary().fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn find(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let s = self.summary();
        serde_json::json!({
            "suite": self.suite,
            "checks": self.checks,
            "summary": {"pass": s.pass, "fail": s.fail, "conflict": s.conflict},
        })
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            writeln!(f, "  {:<8} {}  [{}]", c.status.to_string(), c.id, c.anchor)?;
            if !c.detail.is_empty() && c.status != Status::Pass {
                for line in c.detail.lines() {
                    writeln!(f, "           {line}")?;
                }
            }
        }
        let s = self.summary();
        writeln!(f, "  {} pass, {} fail, {} conflict", s.pass, s.fail, s.conflict)
    }
}
