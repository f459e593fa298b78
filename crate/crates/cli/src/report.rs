use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use std::time::Duration;
use tauto_core::Error;

pub const EXIT_OK: i32 = 0;
/// A check ran to completion and failed (cycle residual, selftest failure).
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;
pub const EXIT_DEFECT: i32 = 5;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Dimension(_) | Error::Parse(_) | Error::Validation(_) | Error::Config(_) => {
            EXIT_VALIDATION
        }
        Error::Precondition(_) => EXIT_PRECONDITION,
        Error::Resource { .. } => EXIT_RESOURCE,
        Error::Defect(_) => EXIT_DEFECT,
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Dimension(_) => "dimension",
        Error::Parse(_) => "parse",
        Error::Validation(_) => "validation",
        Error::Config(_) => "config",
        Error::Precondition(_) => "precondition",
        Error::Resource { .. } => "resource",
        Error::Defect(_) => "defect",
    }
}

pub fn sha256_hex(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    hex::encode(h.finalize())
}

/// What a command produced before it is wrapped into a report.
#[derive(Debug, Default)]
pub struct Outcome {
    pub result: Value,
    pub text: String,
    pub caveats: Vec<String>,
    pub truncated: bool,
    pub exit_code: i32,
}

#[derive(Debug)]
pub struct RunReport {
    pub command: String,
    pub input_hash: String,
    pub flags: Value,
    pub outcome: Result<Outcome, Error>,
    pub elapsed: Duration,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        match &self.outcome {
            Ok(o) => o.exit_code,
            Err(e) => exit_code(e),
        }
    }

    /// Everything except the timing block; identical inputs give identical
    /// values.
    pub fn body(&self) -> Value {
        let mut m = Map::new();
        m.insert("tool".into(), json!("tauto"));
        m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        m.insert("command".into(), json!(self.command));
        m.insert("input_sha256".into(), json!(self.input_hash));
        m.insert("flags".into(), self.flags.clone());
        match &self.outcome {
            Ok(o) => {
                m.insert("status".into(), json!(if o.exit_code == 0 { "ok" } else { "failed" }));
                m.insert("result".into(), o.result.clone());
                m.insert("truncated".into(), json!(o.truncated));
                m.insert("caveats".into(), json!(o.caveats));
            }
            Err(e) => {
                m.insert("status".into(), json!("error"));
                m.insert(
                    "error".into(),
                    json!({ "kind": error_kind(e), "message": e.to_string() }),
                );
            }
        }
        m.insert("exit_code".into(), json!(self.exit_code()));
        Value::Object(m)
    }

    /// `{"report": body, "timings": {...}}`.
    pub fn to_json(&self) -> String {
        let out = json!({
            "report": self.body(),
            "timings": { "total_ms": self.elapsed.as_secs_f64() * 1000.0 },
        });
        serde_json::to_string_pretty(&out).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        match &self.outcome {
            Ok(o) => {
                let mut s = o.text.clone();
                if o.truncated {
                    s.push_str("TRUNCATED: dimensions are computed below a Bernstein-degree cap\n");
                }
                for c in &o.caveats {
                    s.push_str(&format!("note: {c}\n"));
                }
                s
            }
            Err(e) => format!("error: {e}\n"),
        }
    }
}
