//! Verification and listing reports with deterministic JSON and text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

pub const TOOL_NAME: &str = "wreath-fock";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// Both sides of a failed identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub expected: String,
    pub actual: String,
}

/// One point of a parameter grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl Instance {
    pub fn pass(id: impl Into<String>) -> Self {
        Instance {
            id: id.into(),
            status: Status::Pass,
            counterexample: None,
        }
    }

    pub fn fail(id: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Instance {
            id: id.into(),
            status: Status::Fail,
            counterexample: Some(Counterexample {
                expected: expected.into(),
                actual: actual.into(),
            }),
        }
    }

    /// Compares two renderable values for exact equality.
    pub fn compare<T: PartialEq + std::fmt::Display>(id: impl Into<String>, expected: &T, actual: &T) -> Self {
        if expected == actual {
            Self::pass(id)
        } else {
            Self::fail(id, expected.to_string(), actual.to_string())
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// A tabular section: fixed column names and string cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
    pub parameters: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Table>,
    pub instances: Vec<Instance>,
    pub summary: Summary,
    /// Wall-clock milliseconds; only filled in on request since it breaks
    /// byte-for-byte reproducibility.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            tool: TOOL_NAME.into(),
            version: TOOL_VERSION.into(),
            command: command.into(),
            theorem: None,
            identity: None,
            parameters: BTreeMap::new(),
            table: None,
            instances: Vec::new(),
            summary: Summary::default(),
            elapsed_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.into(), value.to_string());
        self
    }

    pub fn identity(mut self, text: &str) -> Self {
        self.identity = Some(text.to_string());
        self
    }

    pub fn with_instances(mut self, instances: Vec<Instance>) -> Self {
        self.instances = instances;
        self.tally();
        self
    }

    pub fn tally(&mut self) {
        let passed = self.instances.iter().filter(|i| i.status == Status::Pass).count();
        self.summary = Summary {
            total: self.instances.len(),
            passed,
            failed: self.instances.len() - passed,
        };
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Human-readable rendering. Passing instances are listed one per line;
    /// failures carry both sides of the identity.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let title = match &self.theorem {
            Some(t) => format!("{} {}", self.command, t),
            None => self.command.clone(),
        };
        let _ = writeln!(out, "# {title} ({} {})", self.tool, self.version);
        if let Some(id) = &self.identity {
            let _ = writeln!(out, "identity: {id}");
        }
        for (k, v) in &self.parameters {
            let _ = writeln!(out, "{k}: {v}");
        }
        if let Some(table) = &self.table {
            out.push('\n');
            out.push_str(&render_table(table));
        }
        if !self.instances.is_empty() {
            out.push('\n');
            for inst in &self.instances {
                let _ = writeln!(out, "{:<4} {}", inst.status.as_str(), inst.id);
                if let Some(ce) = &inst.counterexample {
                    let _ = writeln!(out, "     expected: {}", ce.expected);
                    let _ = writeln!(out, "     actual:   {}", ce.actual);
                }
            }
        }
        let _ = writeln!(
            out,
            "\n{}: {}/{} passed",
            if self.all_pass() { "PASS" } else { "FAIL" },
            self.summary.passed,
            self.summary.total
        );
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed: {ms} ms");
        }
        out
    }
}

fn render_table(table: &Table) -> String {
    let mut widths: Vec<usize> = table.columns.iter().map(|c| c.chars().count()).collect();
    for row in &table.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(&table.columns);
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&line(&rule));
    for row in &table.rows {
        out.push_str(&line(row));
    }
    out
}

/// Several reports rendered as one document.
pub fn render_all(reports: &[Report], json: bool) -> String {
    if json {
        if reports.len() == 1 {
            return reports[0].to_json() + "\n";
        }
        return serde_json::to_string_pretty(reports).expect("reports serialize") + "\n";
    }
    reports.iter().map(Report::to_text).collect::<Vec<_>>().join("\n")
}
