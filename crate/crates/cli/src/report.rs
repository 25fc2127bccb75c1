//! Machine-readable command reports.
//!
//! A report echoes the command, lists one status entry per check (with the
//! first counterexample when a check fails), and carries the operation's
//! result payload. Identical inputs produce byte-identical reports except
//! for the timing field.

use serde::Serialize;
use serde_json::Value;

#[derive(Serialize, Clone, Debug)]
pub struct Counterexample {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct CheckEntry {
    pub name: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl CheckEntry {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckEntry {
            name: name.into(),
            status: "pass".into(),
            counterexample: None,
        }
    }

    pub fn fail(name: impl Into<String>, counterexample: Option<Counterexample>) -> Self {
        CheckEntry {
            name: name.into(),
            status: "fail".into(),
            counterexample,
        }
    }

    pub fn of(name: impl Into<String>, passed: bool, cx: Option<Counterexample>) -> Self {
        if passed {
            Self::pass(name)
        } else {
            Self::fail(name, cx)
        }
    }
}

#[derive(Serialize, Debug)]
pub struct Report {
    pub command: String,
    pub order: usize,
    pub mode: String,
    pub checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub timing_ms: f64,
}

impl Report {
    pub fn new(command: impl Into<String>, order: usize, mode: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            order,
            mode: mode.into(),
            checks: Vec::new(),
            result: None,
            timing_ms: 0.0,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == "pass")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// CSV view: one `name,status,index` row per check.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,status,index\n");
        for c in &self.checks {
            let idx = c
                .counterexample
                .as_ref()
                .map(|cx| cx.index.to_string())
                .unwrap_or_default();
            out.push_str(&format!("{},{},{}\n", c.name, c.status, idx));
        }
        out
    }
}
