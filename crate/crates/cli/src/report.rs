//! The report every command produces, rendered as text or JSON.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use hgl_core::linalg::{format_scalar, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Supporting data, or the counterexample when the check fails.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.into(), inputs: Map::new(), results: Map::new(), checks: Vec::new() }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.into(), value.into());
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.into(), value.into());
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, witness: Option<String>) {
        self.checks.push(Check { name: name.into(), pass, witness });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Pretty JSON with every object's keys sorted, so output is canonical.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("hgl {}\n", self.command);
        for (k, v) in &self.inputs {
            out += &format!("  {k}: {}\n", scalar_text(v));
        }
        out += "results:\n";
        for (k, v) in &self.results {
            render(&mut out, k, v, 1);
        }
        out += "checks:\n";
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            match &c.witness {
                Some(w) => out += &format!("  {status} {} ({w})\n", c.name),
                None => out += &format!("  {status} {}\n", c.name),
            }
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        out += &format!("summary: {passed}/{} checks passed\n", self.checks.len());
        out
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render(out: &mut String, key: &str, value: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(map) => {
            *out += &format!("{pad}{key}:\n");
            for (k, v) in map {
                render(out, k, v, depth + 1);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object() || v.is_array()) => {
            *out += &format!("{pad}{key}:\n");
            for (i, v) in items.iter().enumerate() {
                render(out, &format!("[{i}]"), v, depth + 1);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            let inline = format!("[{}]", parts.join(", "));
            if inline.len() <= 72 {
                *out += &format!("{pad}{key}: {inline}\n");
            } else {
                *out += &format!("{pad}{key}:\n");
                for part in parts {
                    *out += &format!("{pad}  - {part}\n");
                }
            }
        }
        other => *out += &format!("{pad}{key}: {}\n", scalar_text(other)),
    }
}

/// A rational as a lossless `"num/den"` string.
pub fn rational(q: &Scalar) -> Value {
    Value::String(format_scalar(q))
}
