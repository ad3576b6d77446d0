//! Serialized output: schema-versioned JSON, CSV tables, DOT graphs.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use hypercut::oracle::OracleResult;
use hypercut::{CutFamily, OracleValue, Vertex};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One comparison in a verification run.
#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub check: String,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    pub expected: String,
    pub observed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl Row {
    pub fn new(check: &str, n: u32, k: Option<u64>, mode: Option<&str>) -> Row {
        Row {
            check: check.to_string(),
            n,
            k,
            mode: mode.map(str::to_string),
            expected: String::new(),
            observed: String::new(),
            status: Status::Skipped,
            note: String::new(),
        }
    }

    pub fn compare(mut self, expected: impl ToString, observed: impl ToString, ok: bool) -> Row {
        self.expected = expected.to_string();
        self.observed = observed.to_string();
        self.status = if ok { Status::Pass } else { Status::Fail };
        self
    }

    pub fn skip(mut self, note: impl ToString) -> Row {
        self.status = Status::Skipped;
        self.note = note.to_string();
        self
    }

    pub fn note(mut self, note: impl ToString) -> Row {
        self.note = note.to_string();
        self
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// The outcome of a `verify` or `property-test` run.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub parameters: serde_json::Value,
    pub rows: Vec<Row>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(command: &str, parameters: serde_json::Value, rows: Vec<Row>) -> RunReport {
        let mut summary = Summary::default();
        for r in &rows {
            match r.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        RunReport { schema_version: SCHEMA_VERSION, command: command.into(), parameters, rows, summary }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,n,k,mode,expected,observed,status,note\n");
        for r in &self.rows {
            let fields = [
                r.check.clone(),
                r.n.to_string(),
                r.k.map(|k| k.to_string()).unwrap_or_default(),
                r.mode.clone().unwrap_or_default(),
                r.expected.clone(),
                r.observed.clone(),
                serde_json::to_value(r.status).unwrap().as_str().unwrap().to_string(),
                r.note.clone(),
            ];
            let line: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn bits(n: u32, verts: &[Vertex]) -> Vec<String> {
    verts.iter().map(|v| v.render(n)).collect()
}

#[derive(Debug, Serialize)]
pub struct FamilyJson {
    pub n: u32,
    pub kind: String,
    pub mode: String,
    pub size: usize,
    pub elements: Vec<Vec<String>>,
}

impl From<&CutFamily> for FamilyJson {
    fn from(f: &CutFamily) -> FamilyJson {
        FamilyJson {
            n: f.n,
            kind: f.kind.to_string(),
            mode: f.mode.to_string(),
            size: f.len(),
            elements: f.elements.iter().map(|e| bits(f.n, &e.vertices())).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ValueJson {
    pub status: &'static str,
    pub value: usize,
}

impl From<OracleValue> for ValueJson {
    fn from(v: OracleValue) -> ValueJson {
        match v {
            OracleValue::Exact(value) => ValueJson { status: "exact", value },
            OracleValue::AtMost(value) => ValueJson { status: "at-most", value },
            OracleValue::AtLeast(value) => ValueJson { status: "at-least", value },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OracleJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub n: u32,
    pub kind: String,
    pub mode: String,
    pub max_size: usize,
    pub value: ValueJson,
    pub message: String,
    pub exhaustive: bool,
    pub copies: usize,
    pub distinct_vertex_sets: usize,
    pub orbits: usize,
    pub witness: Option<FamilyJson>,
}

impl OracleJson {
    pub fn new(n: u32, max_size: usize, kind: String, mode: String, r: &OracleResult) -> OracleJson {
        let message = match r.value {
            OracleValue::Exact(v) => format!("minimum cut has {v} elements"),
            OracleValue::AtMost(v) => format!("cut of {v} elements found; smaller sizes not ruled out"),
            OracleValue::AtLeast(v) if r.exhaustive && v == max_size + 1 => {
                if max_size == 1 {
                    "no cut of size 1".to_string()
                } else {
                    format!("no cut of size at most {max_size}")
                }
            }
            OracleValue::AtLeast(v) => format!("at least {v} elements"),
        };
        OracleJson {
            schema_version: SCHEMA_VERSION,
            command: "oracle",
            n,
            kind,
            mode,
            max_size,
            value: r.value.into(),
            message,
            exhaustive: r.exhaustive,
            copies: r.stats.copies,
            distinct_vertex_sets: r.stats.distinct_vertex_sets,
            orbits: r.stats.orbits,
            witness: r.witness.as_ref().map(FamilyJson::from),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Writes to `out`, or stdout when absent.
pub fn emit(text: &str, out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
    }

    #[test]
    fn summary_counts() {
        let rows = vec![
            Row::new("a", 3, None, None).compare(1, 1, true),
            Row::new("b", 3, Some(4), None).compare(1, 2, false),
            Row::new("c", 3, None, Some("structure")).skip("budget"),
        ];
        let r = RunReport::new("verify", serde_json::json!({}), rows);
        assert_eq!((r.summary.passed, r.summary.failed, r.summary.skipped), (1, 1, 1));
        let csv = r.to_csv();
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.contains("c,3,,structure,,,skipped,budget"));
    }
}
