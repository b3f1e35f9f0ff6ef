//! Check reports: the JSON schema and the human table renderer.
//!
//! The JSON shape is stable and versioned: a top-level `schemaVersion`
//! plus a list of checks `{name, paperRef, expected, computed, status}`.
//! Serialization is canonical (fixed field order, two-space indent), so
//! parsing an emitted report and re-serializing it is byte-identical.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "FLAGGED")]
    Flagged,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    #[serde(rename = "paperRef")]
    pub paper_ref: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

impl Check {
    pub fn compare(name: &str, paper_ref: &str, expected: String, computed: String) -> Self {
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        Self {
            name: name.to_string(),
            paper_ref: paper_ref.to_string(),
            expected,
            computed,
            status,
        }
    }

    pub fn flagged(name: &str, paper_ref: &str, expected: String, computed: String) -> Self {
        Self {
            name: name.to_string(),
            paper_ref: paper_ref.to_string(),
            expected,
            computed,
            status: Status::Flagged,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    #[serde(rename = "schemaVersion")]
    pub schema_version: u32,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(checks: Vec<Check>) -> Self {
        Self { schema_version: SCHEMA_VERSION, checks }
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned human table, one line per check.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let name_w = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(4);
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS   ",
                Status::Fail => "FAIL   ",
                Status::Flagged => "FLAGGED",
            };
            let value = if c.expected == c.computed {
                c.computed.clone()
            } else {
                format!("expected {} | computed {}", c.expected, c.computed)
            };
            out.push_str(&format!(
                "{status} {name:<name_w$}  {value}  [{paper_ref}]\n",
                name = c.name,
                paper_ref = c.paper_ref,
            ));
        }
        let pass = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        let fail = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        let flagged = self.checks.iter().filter(|c| c.status == Status::Flagged).count();
        out.push_str(&format!(
            "{} checks: {pass} passed, {fail} failed, {flagged} flagged\n",
            self.checks.len()
        ));
        out
    }
}
