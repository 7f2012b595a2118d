//! Canonical report documents.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Canonical text of a JSON value: keys sorted, two-space indent, trailing newline.
pub fn canonical(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

/// SHA-256 over the compact canonical form of the inputs, task and parameters.
pub fn input_hash(inputs: &Value, task: &str, parameters: &Value) -> String {
    let payload = json!({ "inputs": inputs, "task": task, "parameters": parameters });
    hex::encode(Sha256::digest(payload.to_string().as_bytes()))
}

#[derive(Clone, Debug)]
pub struct Report {
    pub task: String,
    pub inputs: Value,
    pub parameters: Value,
    pub results: Value,
    /// Tag naming the property the verdict instantiates.
    pub criterion: String,
    /// `PASS`, `FAIL`, `INCONCLUSIVE`, or absent for plain computations.
    pub verdict: Option<&'static str>,
    pub partial: bool,
}

impl Report {
    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("tool_version".into(), TOOL_VERSION.into());
        m.insert("input_hash".into(), input_hash(&self.inputs, &self.task, &self.parameters).into());
        m.insert("task".into(), self.task.clone().into());
        m.insert("parameters".into(), self.parameters.clone());
        m.insert("results".into(), self.results.clone());
        m.insert("criterion".into(), self.criterion.clone().into());
        m.insert("verdict".into(), self.verdict.map_or(Value::Null, Value::from));
        m.insert("partial".into(), self.partial.into());
        Value::Object(m)
    }

    pub fn render(&self) -> String {
        canonical(&self.to_value())
    }
}

pub fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
