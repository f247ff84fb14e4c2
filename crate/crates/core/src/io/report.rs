//! Task reports, their text and JSON renderings, and the exit-code rule.

use serde::Serialize;

use crate::error::Error;
use crate::verdict::Witness;

use super::bundle::RawBundle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub task: String,
    pub kind: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outputs: Option<RawBundle>,
}

impl Report {
    pub fn error(task: &str, kind: &str, e: &Error) -> Self {
        Report {
            task: task.to_string(),
            kind: kind.to_string(),
            status: Status::Error,
            witness: None,
            error: Some(e.to_string()),
            notes: Vec::new(),
            outputs: None,
        }
    }

    /// `PASS <task>`, `FAIL <task> witness=.. got=.. expected=..` or `ERROR <task>: <message>`.
    pub fn line(&self) -> String {
        let mut s = format!("{} {}", self.status.label(), self.task);
        if let Some(w) = &self.witness {
            s.push_str(&format!(" witness={} got={} expected={}", w.at, w.got, w.expected));
        }
        if let Some(e) = &self.error {
            s.push_str(&format!(": {e}"));
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn emit_report(reports: &[Report], format: Format) -> String {
    match format {
        Format::Text => reports.iter().map(|r| r.line() + "\n").collect(),
        Format::Json => {
            super::bundle::to_json(&serde_json::to_value(reports).expect("report serialization cannot fail")) + "\n"
        }
    }
}

/// 0 if every report passed, 2 if any errored, 1 otherwise.
pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Error) {
        2
    } else if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}
