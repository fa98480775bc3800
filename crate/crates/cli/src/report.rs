use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Ok,
    Violated,
    NotApplicable,
}

impl Verdict {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Verdict::Ok
        } else {
            Verdict::Violated
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Verdict::Ok => "ok",
            Verdict::Violated => "violated",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

/// One self-describing document per invocation. Exact values are strings:
/// integers in decimal, rationals as `"p/q"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub verdicts: BTreeMap<String, Verdict>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: vec![command.to_string()],
            inputs: Map::new(),
            outputs: Map::new(),
            verdicts: BTreeMap::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.inputs
            .insert(key.into(), serde_json::to_value(value).expect("serializable"));
        self
    }

    pub fn output(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.outputs
            .insert(key.into(), serde_json::to_value(value).expect("serializable"));
        self
    }

    pub fn verdict(&mut self, key: &str, ok: bool) -> &mut Self {
        self.verdicts.insert(key.into(), Verdict::from_ok(ok));
        self
    }

    pub fn not_applicable(&mut self, key: &str) -> &mut Self {
        self.verdicts.insert(key.into(), Verdict::NotApplicable);
        self
    }

    pub fn all_ok(&self) -> bool {
        self.verdicts.values().all(|v| *v != Verdict::Violated)
    }

    pub fn to_structured(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_structured(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command.join(" ")).unwrap();
        for (title, map) in [("inputs", &self.inputs), ("outputs", &self.outputs)] {
            writeln!(out, "{title}:").unwrap();
            for (k, v) in map {
                writeln!(out, "  {k}: {}", render(v)).unwrap();
            }
        }
        writeln!(out, "verdicts:").unwrap();
        for (k, v) in &self.verdicts {
            writeln!(out, "  {k}: {}", v.as_str()).unwrap();
        }
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
