use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

/// Result of one command: an echo of the invocation, a digest of its inputs, and ordered
/// key-value results. Text and JSON renderings carry the same keys in the same order.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: String,
    pub results: Vec<(String, Value)>,
}

impl Report {
    pub fn new(command: String, inputs: &Inputs) -> Self {
        Self {
            command,
            inputs: inputs.digest(),
            results: Vec::new(),
        }
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.push((key.to_string(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.results.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn keys(&self) -> Vec<&str> {
        let mut keys = vec!["command", "inputs"];
        keys.extend(self.results.iter().map(|(k, _)| k.as_str()));
        keys
    }

    pub fn to_json(&self) -> String {
        let mut map = Map::new();
        map.insert("command".into(), Value::String(self.command.clone()));
        map.insert("inputs".into(), Value::String(self.inputs.clone()));
        for (k, v) in &self.results {
            map.insert(k.clone(), v.clone());
        }
        let mut out = serde_json::to_string_pretty(&Value::Object(map)).expect("report serializes");
        out.push('\n');
        out
    }

    /// `key: value` lines; arrays become indented `- item` lines under their key.
    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\ninputs: {}\n", self.command, self.inputs);
        for (k, v) in &self.results {
            match v {
                Value::Array(items) => {
                    out.push_str(k);
                    out.push_str(":\n");
                    for item in items {
                        out.push_str("  - ");
                        out.push_str(&scalar(item));
                        out.push('\n');
                    }
                }
                other => {
                    out.push_str(k);
                    out.push_str(": ");
                    out.push_str(&scalar(other));
                    out.push('\n');
                }
            }
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Named input values, hashed in order into the report's `inputs` digest.
#[derive(Debug, Default)]
pub struct Inputs(Vec<(String, String)>);

impl Inputs {
    pub fn add(&mut self, name: &str, value: impl ToString) -> &mut Self {
        self.0.push((name.to_string(), value.to_string()));
        self
    }

    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        for (name, value) in &self.0 {
            h.update(name.as_bytes());
            h.update([0]);
            h.update(value.as_bytes());
            h.update([0]);
        }
        format!("sha256:{:x}", h.finalize())
    }
}
