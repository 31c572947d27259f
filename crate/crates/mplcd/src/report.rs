//! Machine- and human-readable run reports.
//!
//! A [`Report`] echoes the command, its inputs, structured outputs, and a
//! list of named checks. The JSON rendering is canonical (sorted object keys,
//! stable field order), so re-parsing and re-rendering a report is
//! byte-identical; the text rendering carries the same facts.

use serde::{Deserialize, Serialize};

use crate::cyclic::CriterionTrace;
use crate::gf::Field;

/// Outcome of one named check.
///
/// `PaperDiscrepancy` is a first-class result, not a failure: it marks the
/// places where the source text of the worked examples disagrees with what
/// the mathematics (and the source's own factor tables) force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    PaperDiscrepancy,
    NotDeskVerifiable,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::PaperDiscrepancy => "paper_discrepancy",
            Status::NotDeskVerifiable => "not_desk_verifiable",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl CheckItem {
    pub fn new(name: impl Into<String>, status: Status, detail: impl Into<String>) -> CheckItem {
        CheckItem {
            name: name.into(),
            status,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: serde_json::Value,
    pub outputs: serde_json::Value,
    pub checks: Vec<CheckItem>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            inputs: serde_json::Value::Null,
            outputs: serde_json::Value::Null,
            checks: Vec::new(),
        }
    }

    /// Canonical JSON rendering (sorted keys, two-space indent).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> crate::error::Result<Report> {
        Ok(serde_json::from_str(text)?)
    }

    /// Human-readable rendering with the same facts as the JSON form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        if !self.inputs.is_null() {
            out.push_str("inputs:\n");
            render_value(&mut out, &self.inputs, 2);
        }
        if !self.outputs.is_null() {
            out.push_str("outputs:\n");
            render_value(&mut out, &self.outputs, 2);
        }
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            for c in &self.checks {
                out.push_str(&format!("  [{}] {}", c.status, c.name));
                if !c.detail.is_empty() {
                    out.push_str(&format!(" — {}", c.detail));
                }
                out.push('\n');
            }
        }
        out
    }

    pub fn worst_status(&self) -> Status {
        let mut worst = Status::Pass;
        for c in &self.checks {
            match (c.status, worst) {
                (Status::Fail, _) => worst = Status::Fail,
                (Status::PaperDiscrepancy, Status::Pass | Status::NotDeskVerifiable) => {
                    worst = Status::PaperDiscrepancy
                }
                (Status::NotDeskVerifiable, Status::Pass) => worst = Status::NotDeskVerifiable,
                _ => {}
            }
        }
        worst
    }

    /// 0 when nothing failed (discrepancy and not-desk-verifiable allowed
    /// unless `strict`), 1 on check failure. Input errors exit 2 upstream.
    pub fn exit_code(&self, strict: bool) -> i32 {
        match self.worst_status() {
            Status::Fail => 1,
            Status::Pass => 0,
            Status::PaperDiscrepancy | Status::NotDeskVerifiable => {
                if strict {
                    1
                } else {
                    0
                }
            }
        }
    }
}

fn render_value(out: &mut String, v: &serde_json::Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        serde_json::Value::Object(map) => {
            for (k, val) in map {
                match val {
                    serde_json::Value::Object(_) | serde_json::Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(out, val, indent + 2);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar_to_text(val))),
                }
            }
        }
        serde_json::Value::Array(items) => {
            for item in items {
                match item {
                    serde_json::Value::Object(_) | serde_json::Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_value(out, item, indent + 2);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", scalar_to_text(item))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_to_text(other))),
    }
}

fn scalar_to_text(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Serialize a structural-criterion trace with readable polynomial strings.
pub fn trace_to_json(field: &Field, trace: &[CriterionTrace]) -> serde_json::Value {
    serde_json::Value::Array(
        trace
            .iter()
            .map(|t| {
                serde_json::json!({
                    "factor": t.factor.to_string(field),
                    "mult_in_g": t.mult_in_g,
                    "mult_in_modulus": t.mult_in_modulus,
                    "partner": t.partner,
                    "self_paired": t.self_paired,
                    "outcome": serde_json::to_value(t.outcome).expect("serializable"),
                })
            })
            .collect(),
    )
}
