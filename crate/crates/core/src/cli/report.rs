use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use super::config::CaseConfig;

pub const SCHEMA: &str = "qch-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TaskReport {
    pub name: String,
    pub status: Status,
    pub verdict: bool,
    pub seconds: f64,
    /// One-line digest for the text summary.
    pub summary: String,
    pub details: Value,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Environment {
    pub context: String,
    pub monomial_order: &'static str,
    pub strand_order: &'static str,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub config: CaseConfig,
    pub environment: Environment,
    pub tasks: Vec<TaskReport>,
    /// Set when the run stopped on an input or configuration error.
    pub error: Option<String>,
    pub verdict: bool,
}

impl Report {
    pub fn new(config: CaseConfig, context: String) -> Self {
        Report {
            schema: SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            config,
            environment: Environment {
                context,
                monomial_order: "graded-lexicographic on generators m_ij ordered by (i, j)",
                strand_order: "reversed: sigma_i acts as R on strands k-i, k-i+1",
            },
            tasks: Vec::new(),
            error: None,
            verdict: false,
        }
    }

    pub fn finish(&mut self) {
        self.verdict = self.error.is_none() && !self.tasks.is_empty() && self.tasks.iter().all(|t| t.verdict);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    pub fn summary(&self) -> String {
        let c = &self.config;
        let mut s = String::new();
        let _ = writeln!(s, "qch {}  (m,n)=({},{})  pair={:?}  {}", self.tool_version, c.m, c.n, c.pair, self.environment.context);
        for t in &self.tasks {
            let status = match t.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = writeln!(s, "  {:<10} {status}  {:>8.2}s  {}", t.name, t.seconds, t.summary);
        }
        if let Some(e) = &self.error {
            let _ = writeln!(s, "  error: {e}");
        }
        let _ = writeln!(s, "verdict: {}", if self.verdict { "PASS" } else { "FAIL" });
        s
    }
}

/// Structural check of a serialized report; returns the first violation.
pub fn validate_report(v: &Value) -> Result<(), String> {
    let obj = v.as_object().ok_or("report is not an object")?;
    let want = |key: &str, ok: fn(&Value) -> bool| -> Result<(), String> {
        match obj.get(key) {
            Some(x) if ok(x) => Ok(()),
            Some(_) => Err(format!("field {key} has the wrong type")),
            None => Err(format!("missing field {key}")),
        }
    };
    if obj.get("schema").and_then(Value::as_str) != Some(SCHEMA) {
        return Err(format!("schema must be {SCHEMA:?}"));
    }
    want("toolVersion", Value::is_string)?;
    want("config", Value::is_object)?;
    want("environment", Value::is_object)?;
    want("tasks", Value::is_array)?;
    want("error", |x| x.is_null() || x.is_string())?;
    want("verdict", Value::is_boolean)?;
    for key in ["m", "n", "pair", "qMode", "tasks", "arityBound", "seed"] {
        if obj["config"].get(key).is_none() {
            return Err(format!("config lacks {key}"));
        }
    }
    for key in ["context", "monomialOrder", "strandOrder"] {
        if !obj["environment"].get(key).is_some_and(Value::is_string) {
            return Err(format!("environment lacks {key}"));
        }
    }
    let mut all = true;
    for t in obj["tasks"].as_array().unwrap() {
        let name = t.get("name").and_then(Value::as_str).ok_or("task without name")?;
        let status = t.get("status").and_then(Value::as_str).ok_or(format!("task {name} without status"))?;
        if !["pass", "fail", "skipped"].contains(&status) {
            return Err(format!("task {name} has status {status:?}"));
        }
        let verdict = t.get("verdict").and_then(Value::as_bool).ok_or(format!("task {name} without verdict"))?;
        if verdict != (status == "pass") {
            return Err(format!("task {name}: verdict disagrees with status"));
        }
        if !t.get("seconds").is_some_and(Value::is_number) || !t.get("summary").is_some_and(Value::is_string) || t.get("details").is_none() {
            return Err(format!("task {name} lacks seconds, summary or details"));
        }
        all &= verdict;
    }
    let expected = all && obj["error"].is_null() && !obj["tasks"].as_array().unwrap().is_empty();
    if obj["verdict"].as_bool() != Some(expected) {
        return Err("overall verdict is not the conjunction of task verdicts".into());
    }
    Ok(())
}
