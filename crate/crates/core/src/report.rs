//! Verification reports.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    /// Number of failing instances found; the witness is the shortest of them.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failures: Option<usize>,
    /// Number of instances examined.
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time: Option<f64>,
}

impl Check {
    /// A check over `cases` instances with the given failing witnesses.
    pub fn from_failures(
        name: impl Into<String>,
        degree: Option<usize>,
        cases: usize,
        mut failures: Vec<Value>,
    ) -> Check {
        failures.sort_by_cached_key(|v| {
            let s = v.to_string();
            (s.len(), s)
        });
        let n = failures.len();
        Check {
            name: name.into(),
            status: if n == 0 { Status::Pass } else { Status::Fail },
            witness: failures.into_iter().next(),
            degree,
            failures: if n == 0 { None } else { Some(n) },
            cases,
            wall_time: None,
        }
    }

    pub fn skipped(name: impl Into<String>, reason: &str) -> Check {
        Check {
            name: name.into(),
            status: Status::Skipped,
            witness: Some(Value::String(reason.to_string())),
            degree: None,
            failures: None,
            cases: 0,
            wall_time: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    /// Runs `f`, recording its wall time on the produced check.
    pub fn timed(&mut self, f: impl FnOnce() -> Check) {
        let t0 = Instant::now();
        let mut c = f();
        c.wall_time = Some(t0.elapsed().as_secs_f64());
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Prefixes every check name, used when merging sub-reports.
    pub fn prefixed(mut self, prefix: &str) -> Report {
        for c in &mut self.checks {
            c.name = format!("{prefix}/{}", c.name);
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Deterministic order: by check name, then witness text.
    pub fn sorted(mut self) -> Report {
        self.checks.sort_by(|a, b| {
            a.name.cmp(&b.name).then_with(|| {
                let wa = a.witness.as_ref().map(|w| w.to_string());
                let wb = b.witness.as_ref().map(|w| w.to_string());
                wa.cmp(&wb)
            })
        });
        self
    }

    pub fn strip_timings(mut self) -> Report {
        for c in &mut self.checks {
            c.wall_time = None;
        }
        self
    }

    /// One line per check, for humans.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let st = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            s.push_str(&format!("{st:4} {} ({} cases)", c.name, c.cases));
            if let Some(w) = &c.witness {
                if c.status == Status::Fail {
                    s.push_str(&format!(" witness {w}"));
                }
            }
            s.push('\n');
        }
        s
    }
}
