//! Verification records shared by the worked examples and the CLI.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub witness: Option<String>,
    pub duration_ms: f64,
}

impl Check {
    pub fn new(id: impl Into<String>, ok: bool, witness: impl Into<String>) -> Self {
        let witness = witness.into();
        Check {
            id: id.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: (!witness.is_empty()).then_some(witness),
            duration_ms: 0.0,
        }
    }

    pub fn error(id: impl Into<String>, message: impl fmt::Display) -> Self {
        Check {
            id: id.into(),
            status: Status::Error,
            witness: Some(message.to_string()),
            duration_ms: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Runs `body`, turning an `Err` into an error record and stamping the
/// elapsed time onto every check it produced.
pub fn timed<F>(id: &str, body: F) -> Vec<Check>
where
    F: FnOnce() -> crate::Result<Vec<Check>>,
{
    let start = Instant::now();
    let mut checks = match body() {
        Ok(c) => c,
        Err(e) => vec![Check::error(id, e)],
    };
    let ms = start.elapsed().as_secs_f64() * 1000.0;
    let share = ms / checks.len().max(1) as f64;
    for c in &mut checks {
        c.duration_ms = share;
    }
    checks
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub status: Status,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let status = if checks.iter().all(Check::passed) {
            Status::Pass
        } else if checks.iter().any(|c| c.status == Status::Error) {
            Status::Error
        } else {
            Status::Fail
        };
        Report { status, checks }
    }

    pub fn merge(reports: impl IntoIterator<Item = Report>) -> Self {
        Report::new(reports.into_iter().flat_map(|r| r.checks).collect())
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with every duration zeroed, for byte comparison between runs.
    pub fn to_json_untimed(&self) -> String {
        let mut copy = self.clone();
        for c in &mut copy.checks {
            c.duration_ms = 0.0;
        }
        copy.to_json()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{:<5} {}", c.status.to_string().to_uppercase(), c.id)?;
            if let Some(w) = &c.witness {
                write!(f, "  [{w}]")?;
            }
            writeln!(f, "  ({:.1} ms)", c.duration_ms)?;
        }
        let total = self.checks.len();
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        write!(f, "{passed}/{total} checks passed")
    }
}
