use std::io::Write;

use easygram::algebra::numbers::{fmt_rational, rational_to_f64};
use easygram::algebra::Rational;
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "easygram-output/1";

#[derive(Copy, Clone, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Rendering options shared by every command.
#[derive(Copy, Clone, Debug)]
pub struct Ctx {
    pub format: Format,
    pub float: bool,
}

impl Ctx {
    pub fn rat(&self, q: &Rational) -> Value {
        if self.float {
            float(rational_to_f64(q))
        } else {
            Value::String(fmt_rational(q))
        }
    }

    pub fn rats(&self, qs: &[Rational]) -> Value {
        Value::Array(qs.iter().map(|q| self.rat(q)).collect())
    }
}

/// `x` rounded to 12 significant digits.
pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::String(x.to_string());
    }
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    json!(rounded)
}

/// Command result: the JSON payload and the table used for CSV output.
pub struct Doc {
    pub command: String,
    pub payload: Value,
    pub table: Table,
}

#[derive(Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        self.rows.push(row.iter().map(cell).collect());
    }

    /// Two-column table of the fields of an object, nested keys joined by dots.
    pub fn fields(v: &Value) -> Self {
        fn walk(t: &mut Table, prefix: &str, v: &Value) {
            match v {
                Value::Object(m) => {
                    for (k, x) in m {
                        let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                        walk(t, &key, x);
                    }
                }
                Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
                    t.rows.push(vec![prefix.to_string(), xs.iter().map(cell).collect::<Vec<_>>().join(" ")]);
                }
                Value::Array(xs) => {
                    for (i, x) in xs.iter().enumerate() {
                        walk(t, &format!("{prefix}.{i}"), x);
                    }
                }
                other => t.rows.push(vec![prefix.to_string(), cell(other)]),
            }
        }
        let mut t = Table::new(&["key", "value"]);
        walk(&mut t, "", v);
        t
    }
}

pub fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

impl Doc {
    pub fn new(command: &str, payload: Value, table: Table) -> Self {
        Doc { command: command.to_string(), payload, table }
    }

    /// Payload whose CSV form lists its top-level fields.
    pub fn fields(command: &str, payload: Value) -> Self {
        let table = Table::fields(&payload);
        Doc::new(command, payload, table)
    }

    pub fn render(&self, format: Format) -> Result<Vec<u8>, String> {
        match format {
            Format::Json => {
                let mut m = Map::new();
                m.insert("schema".into(), json!(SCHEMA));
                m.insert("command".into(), json!(self.command));
                m.insert("result".into(), self.payload.clone());
                let mut out = serde_json::to_vec_pretty(&Value::Object(m)).map_err(|e| e.to_string())?;
                out.push(b'\n');
                Ok(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| e.to_string();
                w.write_record(&self.table.headers).map_err(io)?;
                for r in &self.table.rows {
                    w.write_record(r).map_err(io)?;
                }
                w.into_inner().map_err(|e| e.to_string())
            }
        }
    }
}

pub fn error_json(kind: &str, detail: &str) -> String {
    json!({"schema": SCHEMA, "error": kind, "detail": detail}).to_string()
}

pub fn emit(bytes: &[u8], out: Option<&std::path::Path>) -> std::io::Result<()> {
    match out {
        Some(p) => std::fs::write(p, bytes),
        None => {
            let mut s = std::io::stdout().lock();
            s.write_all(bytes)?;
            s.flush()
        }
    }
}
