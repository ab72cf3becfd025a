//! The report every command produces, and its two renderings.

use serde_json::{Map, Value as Json};

/// A report value. Numbers are kept as exact decimal or fraction text so
/// that both renderings show the same digits.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(String),
    Text(String),
    Bool(bool),
    Null,
    List(Vec<Value>),
    Record(Vec<(String, Value)>),
}

impl Value {
    pub fn num(v: impl ToString) -> Self {
        Value::Num(v.to_string())
    }

    pub fn text(v: impl ToString) -> Self {
        Value::Text(v.to_string())
    }

    pub fn record<K: Into<String>>(fields: Vec<(K, Value)>) -> Self {
        Value::Record(fields.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }

    fn to_json(&self) -> Json {
        match self {
            Value::Num(s) | Value::Text(s) => Json::String(s.clone()),
            Value::Bool(b) => Json::Bool(*b),
            Value::Null => Json::Null,
            Value::List(items) => Json::Array(items.iter().map(Value::to_json).collect()),
            Value::Record(fields) => Json::Object(pairs_to_json(fields)),
        }
    }

    fn inline(&self) -> String {
        match self {
            Value::Num(s) | Value::Text(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
            Value::Null => "none".into(),
            Value::List(items) => format!("[{}]", items.iter().map(Value::inline).collect::<Vec<_>>().join(", ")),
            Value::Record(fields) => {
                format!("{{{}}}", fields.iter().map(|(k, v)| format!("{k}: {}", v.inline())).collect::<Vec<_>>().join(", "))
            }
        }
    }
}

fn pairs_to_json(fields: &[(String, Value)]) -> Map<String, Json> {
    let mut m = Map::new();
    for (k, v) in fields {
        m.insert(k.clone(), v.to_json());
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorInfo {
    pub code: String,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<(String, Value)>,
    pub results: Vec<(String, Value)>,
    pub assumptions: Vec<(String, bool)>,
    pub caveats: Vec<String>,
    pub error: Option<ErrorInfo>,
    /// Replaces the text rendering when set (CSV tables).
    pub raw_text: Option<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), ..Default::default() }
    }

    pub fn input(&mut self, key: &str, v: Value) -> &mut Self {
        self.inputs.push((key.to_string(), v));
        self
    }

    pub fn result(&mut self, key: &str, v: Value) -> &mut Self {
        self.results.push((key.to_string(), v));
        self
    }

    pub fn caveat(&mut self, c: impl ToString) -> &mut Self {
        self.caveats.push(c.to_string());
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => self.to_json_string(),
            Format::Text => self.raw_text.clone().unwrap_or_else(|| self.to_text()),
        }
    }

    /// Field order is fixed: command, inputs, results, assumptions,
    /// caveats, error.
    pub fn to_json_string(&self) -> String {
        let mut top = Map::new();
        top.insert("command".into(), Json::String(self.command.clone()));
        top.insert("inputs".into(), Json::Object(pairs_to_json(&self.inputs)));
        top.insert("results".into(), Json::Object(pairs_to_json(&self.results)));
        let mut flags = Map::new();
        for (k, v) in &self.assumptions {
            flags.insert(k.clone(), Json::Bool(*v));
        }
        top.insert("assumptions".into(), Json::Object(flags));
        top.insert("caveats".into(), Json::Array(self.caveats.iter().cloned().map(Json::String).collect()));
        let error = match &self.error {
            None => Json::Null,
            Some(e) => {
                let mut m = Map::new();
                m.insert("code".into(), Json::String(e.code.clone()));
                m.insert("message".into(), Json::String(e.message.clone()));
                Json::Object(m)
            }
        };
        top.insert("error".into(), error);
        let mut s = serde_json::to_string_pretty(&Json::Object(top)).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        section(&mut out, "inputs", &self.inputs);
        section(&mut out, "results", &self.results);
        if !self.assumptions.is_empty() {
            out.push_str("assumptions:\n");
            for (k, v) in &self.assumptions {
                out.push_str(&format!("  {k}: {}\n", if *v { "asserted" } else { "not asserted" }));
            }
        }
        if !self.caveats.is_empty() {
            out.push_str("caveats:\n");
            for c in &self.caveats {
                out.push_str(&format!("  - {c}\n"));
            }
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("error [{}]: {}\n", e.code, e.message));
        }
        out
    }
}

fn section(out: &mut String, name: &str, fields: &[(String, Value)]) {
    if fields.is_empty() {
        return;
    }
    out.push_str(&format!("{name}:\n"));
    for (k, v) in fields {
        write_value(out, k, v, 1);
    }
}

fn write_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::List(items) if items.iter().any(|i| matches!(i, Value::Record(_))) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for item in items {
                out.push_str(&format!("{pad}  - {}\n", item.inline()));
            }
        }
        Value::Record(fields) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, v) in fields {
                write_value(out, k, v, depth + 1);
            }
        }
        other => out.push_str(&format!("{pad}{key}: {}\n", other.inline())),
    }
}
