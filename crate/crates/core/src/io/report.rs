//! JSON run reports: `{command, inputs, results[], failures[]}`.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Vec<Value>,
    pub failures: Vec<Value>,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            results: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn result<T: Serialize>(&mut self, value: &T) {
        self.results
            .push(serde_json::to_value(value).expect("reports serialize"));
    }

    pub fn failure<T: Serialize>(&mut self, value: &T) {
        self.failures
            .push(serde_json::to_value(value).expect("reports serialize"));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
