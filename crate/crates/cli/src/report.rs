//! Report assembly and validation against the bundled JSON schema. Reports
//! serialize with sorted keys, so fixed inputs and seeds give byte-identical
//! files; timings are opt-in for exactly that reason.

use std::collections::BTreeMap;

use anyhow::{bail, Result};
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = include_str!("../schema/report.schema.json");

/// Write a report file atomically: temp file in the same directory, then
/// rename over the target.
pub fn write_atomic(path: &std::path::Path, contents: &str) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or_else(|| std::path::Path::new("."));
    let tmp = dir.join(format!(
        ".{}.tmp-{}",
        path.file_name().map(|n| n.to_string_lossy()).unwrap_or_default(),
        std::process::id()
    ));
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path)
}

#[derive(Clone, Debug)]
pub struct Report {
    pub instance: String,
    pub command: String,
    pub verdicts: Map<String, Value>,
    pub witnesses: Vec<Value>,
    pub proxies: Map<String, Value>,
    pub seeds: Vec<u64>,
    pub payload: Map<String, Value>,
    pub notes: Vec<String>,
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

impl Report {
    pub fn new(instance: &str, command: &str) -> Self {
        Report {
            instance: instance.to_string(),
            command: command.to_string(),
            verdicts: Map::new(),
            witnesses: Vec::new(),
            proxies: Map::new(),
            seeds: Vec::new(),
            payload: Map::new(),
            notes: Vec::new(),
            timings_ms: None,
        }
    }

    pub fn verdict(&mut self, key: &str, value: impl Into<Value>) {
        self.verdicts.insert(key.to_string(), value.into());
    }

    pub fn to_value(&self) -> Value {
        let mut map = Map::new();
        map.insert("instance".into(), json!(self.instance));
        map.insert("command".into(), json!(self.command));
        map.insert(
            "toolkit-version".into(),
            json!(env!("CARGO_PKG_VERSION")),
        );
        map.insert("verdicts".into(), Value::Object(self.verdicts.clone()));
        map.insert("witnesses".into(), Value::Array(self.witnesses.clone()));
        map.insert("proxies".into(), Value::Object(self.proxies.clone()));
        map.insert(
            "seeds".into(),
            Value::Array(self.seeds.iter().map(|s| json!(s)).collect()),
        );
        if !self.payload.is_empty() {
            map.insert("payload".into(), Value::Object(self.payload.clone()));
        }
        if !self.notes.is_empty() {
            map.insert(
                "notes".into(),
                Value::Array(self.notes.iter().map(|n| json!(n)).collect()),
            );
        }
        if let Some(t) = &self.timings_ms {
            let mut tm = Map::new();
            for (k, v) in t {
                tm.insert(k.clone(), json!(v));
            }
            map.insert("timings".into(), Value::Object(tm));
        }
        Value::Object(map)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("serializable");
        s.push('\n');
        s
    }
}

/// Structural validation against the bundled schema: required keys, types,
/// the command enum, and the closed property set.
pub fn validate(report: &Value) -> Result<()> {
    let schema: Value = serde_json::from_str(SCHEMA).expect("schema parses");
    let obj = match report.as_object() {
        Some(o) => o,
        None => bail!("report must be an object"),
    };
    let props = schema["properties"].as_object().expect("schema properties");
    for required in schema["required"].as_array().expect("required list") {
        let key = required.as_str().expect("string");
        if !obj.contains_key(key) {
            bail!("missing required report field '{key}'");
        }
    }
    for (key, value) in obj {
        let spec = match props.get(key) {
            Some(s) => s,
            None => bail!("unexpected report field '{key}'"),
        };
        let ty = spec["type"].as_str().expect("type");
        let ok = match ty {
            "string" => value.is_string(),
            "object" => value.is_object(),
            "array" => value.is_array(),
            _ => true,
        };
        if !ok {
            bail!("report field '{key}' must be a {ty}");
        }
        if let Some(options) = spec.get("enum").and_then(|e| e.as_array()) {
            if !options.contains(value) {
                bail!("report field '{key}' outside its enumeration: {value}");
            }
        }
        if key == "seeds" {
            for s in value.as_array().expect("array") {
                if !s.is_u64() {
                    bail!("seeds must be integers");
                }
            }
        }
    }
    Ok(())
}
