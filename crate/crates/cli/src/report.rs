//! Machine-readable run report and its renderings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultEntry {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl ResultEntry {
    pub fn new(name: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>, pass: bool) -> Self {
        Self {
            name: name.into(),
            params: BTreeMap::new(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            pass,
            detail: None,
        }
    }

    /// Integer-looking values become JSON numbers, anything else a string.
    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        let s = value.to_string();
        let v = s.parse::<i64>().map(Value::from).unwrap_or(Value::String(s));
        self.params.insert(key.to_owned(), v);
        self
    }

    pub fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl From<&evenzeta::identities::IdentityCheckResult> for ResultEntry {
    fn from(r: &evenzeta::identities::IdentityCheckResult) -> Self {
        let mut entry = ResultEntry::new(
            r.name(),
            evenzeta::arith::format_rational(r.lhs()),
            evenzeta::arith::format_rational(r.rhs()),
            r.pass(),
        );
        for (k, v) in r.params() {
            entry = entry.param(k, v);
        }
        entry
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub command: String,
    pub results: Vec<ResultEntry>,
    pub summary: Summary,
    pub duration_ms: u64,
}

impl RunReport {
    pub fn new(command: String, results: Vec<ResultEntry>, duration_ms: u64) -> Self {
        let passed = results.iter().filter(|r| r.pass).count();
        Self {
            version: env!("CARGO_PKG_VERSION").to_owned(),
            command,
            summary: Summary {
                passed,
                failed: results.len() - passed,
            },
            results,
            duration_ms,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["name", "params", "lhs", "rhs", "pass", "detail"])
            .expect("in-memory write");
        for r in &self.results {
            let params = r.params_text().replace(", ", ";");
            let pass = if r.pass { "PASS" } else { "FAIL" };
            w.write_record([
                r.name.as_str(),
                params.as_str(),
                r.lhs.as_str(),
                r.rhs.as_str(),
                pass,
                r.detail.as_deref().unwrap_or(""),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}
