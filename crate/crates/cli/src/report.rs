//! Versioned report envelope shared by every subcommand.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "monomial-lab/1";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub passed: bool,
    pub witness: Value,
}

impl Check {
    pub fn new(id: &str, description: &str, passed: bool, witness: Value) -> Self {
        Check {
            id: id.to_string(),
            description: description.to_string(),
            passed,
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub version: &'static str,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value, checks: Vec<Check>) -> Self {
        Report {
            version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            results,
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are always serializable")
    }

    /// `key: value` lines for the results followed by one line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Value::Object(map) = &self.results {
            for (k, v) in map {
                match v {
                    Value::Array(items) if items.iter().any(|i| i.is_array() || is_long(i)) => {
                        out.push_str(&format!("{k}:\n"));
                        for (idx, item) in items.iter().enumerate() {
                            match item {
                                Value::Array(_) => {
                                    out.push_str(&format!("  [{}] {}\n", idx + 1, inline(item)))
                                }
                                _ => out.push_str(&format!("  - {}\n", inline(item))),
                            }
                        }
                    }
                    Value::Array(items) if items.is_empty() => {
                        out.push_str(&format!("{k}: (none)\n"))
                    }
                    _ => out.push_str(&format!("{k}: {}\n", inline(v))),
                }
            }
        }
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{verdict} {}: {}\n", c.id, c.description));
        }
        out
    }
}

fn is_long(v: &Value) -> bool {
    matches!(v, Value::String(s) if s.len() > 40) || v.is_object()
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(inline).collect();
            if items.iter().all(Value::is_string) {
                format!("{{{}}}", inner.join(", "))
            } else {
                inner.join(", ")
            }
        }
        other => other.to_string(),
    }
}

/// Arbitrary-precision integer as a JSON number.
pub fn big(v: &num_bigint::BigInt) -> Value {
    serde_json::from_str(&v.to_string()).expect("an integer literal is valid JSON")
}

pub fn bigs(v: &[num_bigint::BigInt]) -> Value {
    Value::Array(v.iter().map(big).collect())
}
