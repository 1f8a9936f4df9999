//! The envelope every command returns, and its three renderings.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::args::Format;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub warnings: Vec<String>,
}

impl OutputRecord {
    pub fn new(command: &str, inputs: Value, results: Value) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            results,
            warnings: Vec::new(),
        }
    }
}

/// Row data for commands whose natural output is a table.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Rows {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Rows {
    pub fn new(header: &[&str]) -> Self {
        Rows {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

pub fn render(record: &OutputRecord, rows: Option<&Rows>, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(record).expect("records serialize");
            s.push('\n');
            s
        }
        Format::Csv => match rows {
            Some(r) => csv_rows(r),
            None => csv_rows(&key_values(&record.results)),
        },
        Format::Pretty => pretty(record, rows),
    }
}

fn csv_rows(r: &Rows) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&r.header).expect("in-memory write");
    for row in &r.rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// Flattens nested results into `key,value` pairs with dotted keys.
fn key_values(v: &Value) -> Rows {
    fn walk(prefix: &str, v: &Value, out: &mut Rows) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&key, x, out);
                }
            }
            Value::Array(a) => {
                for (i, x) in a.iter().enumerate() {
                    walk(&format!("{prefix}.{i}"), x, out);
                }
            }
            Value::String(s) => out.push(vec![prefix.to_string(), s.clone()]),
            Value::Null => out.push(vec![prefix.to_string(), String::new()]),
            x => out.push(vec![prefix.to_string(), x.to_string()]),
        }
    }
    let mut out = Rows::new(&["key", "value"]);
    walk("", v, &mut out);
    out
}

fn pretty(record: &OutputRecord, rows: Option<&Rows>) -> String {
    let mut out = String::new();
    match rows {
        Some(r) => {
            let mut widths: Vec<usize> = r.header.iter().map(|h| h.chars().count()).collect();
            for row in &r.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: &[String]| {
                let parts: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}", w = *w))
                    .collect();
                parts.join("  ").trim_end().to_string() + "\n"
            };
            out += &line(&r.header);
            for row in &r.rows {
                out += &line(row);
            }
        }
        None => {
            let kv = key_values(&record.results);
            let w = kv.rows.iter().map(|r| r[0].chars().count()).max().unwrap_or(0);
            for r in &kv.rows {
                out += &format!("{:<w$}  {}\n", r[0], r[1], w = w);
            }
        }
    }
    for warning in &record.warnings {
        out += &format!("warning: {warning}\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_flattens_nested_results() {
        let r = OutputRecord::new("x", json!({}), json!({"a": {"b": 1.5, "c": null}, "k": "Max"}));
        assert_eq!(render(&r, None, Format::Csv), "key,value\na.b,1.5\na.c,\nk,Max\n");
    }

    #[test]
    fn pretty_aligns_columns() {
        let r = OutputRecord::new("x", json!({}), json!({}));
        let mut rows = Rows::new(&["d", "value"]);
        rows.push(vec!["8".into(), "3.38859".into()]);
        assert_eq!(render(&r, Some(&rows), Format::Pretty), "d    value\n8  3.38859\n");
    }
}
