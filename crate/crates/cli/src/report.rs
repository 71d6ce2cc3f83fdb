use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use ncgrowth_core::Presentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Deterministic output document. Objects are `serde_json::Map`, which keeps
/// keys sorted.
pub struct Report {
    command: &'static str,
    metadata: Map<String, Value>,
    payload: Map<String, Value>,
    summary: Option<(usize, usize)>,
}

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        let mut metadata = Map::new();
        metadata.insert("version".into(), env!("CARGO_PKG_VERSION").into());
        Report {
            command,
            metadata,
            payload: Map::new(),
            summary: None,
        }
    }

    pub fn for_presentation(command: &'static str, p: &Presentation) -> Self {
        let mut r = Report::new(command);
        r.meta("field", p.field().to_string());
        r.meta("order", order_text(p));
        r.meta("presentation_sha256", sha256_hex(&p.canonical_text()));
        r
    }

    pub fn meta(&mut self, key: &str, value: impl Into<Value>) {
        self.metadata.insert(key.into(), value.into());
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) {
        self.payload.insert(key.into(), value.into());
    }

    pub fn summarize(&mut self, passed: usize, failed: usize) {
        self.summary = Some((passed, failed));
    }

    pub fn pass(&self) -> bool {
        self.summary.is_none_or(|(_, failed)| failed == 0)
    }

    fn to_value(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("command".into(), self.command.into());
        doc.insert("metadata".into(), Value::Object(self.metadata.clone()));
        doc.insert("payload".into(), Value::Object(self.payload.clone()));
        if let Some((passed, failed)) = self.summary {
            let mut s = Map::new();
            s.insert("failed".into(), failed.into());
            s.insert("pass".into(), (failed == 0).into());
            s.insert("passed".into(), passed.into());
            doc.insert("summary".into(), Value::Object(s));
        }
        Value::Object(doc)
    }

    pub fn render(&self, format: Format) -> String {
        let v = self.to_value();
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&v).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = String::new();
                flatten("", &v, &mut out);
                out
            }
        }
    }
}

pub fn order_text(p: &Presentation) -> String {
    format!("deglex {}", p.alphabet().letters().join(" > "))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::Array(xs) => {
            let items: Vec<String> = xs.iter().map(scalar).collect();
            out.push_str(&format!("{prefix}: [{}]\n", items.join(", ")));
        }
        other => out.push_str(&format!("{prefix}: {}\n", scalar(other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted_and_text_is_flat() {
        let mut r = Report::new("gb");
        r.put("zeta", 1);
        r.put("alpha", vec!["a", "b"]);
        let json = r.render(Format::Json);
        assert!(json.find("\"alpha\"").unwrap() < json.find("\"zeta\"").unwrap());
        let text = r.render(Format::Text);
        assert!(text.contains("payload.alpha: [a, b]\n"));
        assert!(text.starts_with("command: gb\n"));
    }

    #[test]
    fn summary_controls_pass() {
        let mut r = Report::new("paper");
        assert!(r.pass());
        r.summarize(3, 1);
        assert!(!r.pass());
        assert!(r.render(Format::Json).contains("\"failed\": 1"));
    }

    #[test]
    fn sha256_of_empty_string() {
        assert_eq!(
            sha256_hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
