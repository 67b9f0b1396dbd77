//! Report objects and their three renderings.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::config::{Format, RunConfig};
use crate::error::{CliError, EXIT_OK, EXIT_VERIFY};

/// A rendered table: the CSV/text shape of scan output.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub body: Value,
    pub table: Option<Table>,
    /// False when a verification inside the report failed.
    pub ok: bool,
}

impl Report {
    /// `{"config": …, ..fields}` with the config first.
    pub fn new(config: &RunConfig, fields: impl Serialize, ok: bool) -> Self {
        let mut body = Map::new();
        body.insert("config".into(), serde_json::to_value(config).expect("config serializes"));
        match serde_json::to_value(fields).expect("report serializes") {
            Value::Object(m) => body.extend(m),
            other => {
                body.insert("result".into(), other);
            }
        }
        Self {
            body: Value::Object(body),
            table: None,
            ok,
        }
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            EXIT_OK
        } else {
            EXIT_VERIFY
        }
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => Ok(json_string(&self.body)),
            Format::Csv => {
                let table = self.table.clone().unwrap_or_else(|| flat_table(&self.body));
                csv_string(&table)
            }
            Format::Text => Ok(match &self.table {
                Some(t) => text_table(t),
                None => flatten(&self.body)
                    .into_iter()
                    .map(|(k, v)| format!("{k}: {v}\n"))
                    .collect(),
            }),
        }
    }
}

pub fn json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn flatten(v: &Value) -> Vec<(String, String)> {
    fn go(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        match v {
            Value::Object(m) => {
                for (k, v) in m {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    go(&key, v, out);
                }
            }
            Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
                let joined: Vec<String> = items.iter().map(scalar).collect();
                out.push((prefix.to_string(), joined.join(";")));
            }
            Value::Array(_) => out.push((prefix.to_string(), v.to_string())),
            other => out.push((prefix.to_string(), scalar(other))),
        }
    }
    let mut out = Vec::new();
    go("", v, &mut out);
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flat_table(v: &Value) -> Table {
    let (headers, row) = flatten(v).into_iter().unzip();
    Table {
        headers,
        rows: vec![row],
    }
}

fn csv_string(t: &Table) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::io(e.to_string());
    w.write_record(&t.headers).map_err(io)?;
    for row in &t.rows {
        w.write_record(row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::io(e.to_string()))
}

fn text_table(t: &Table) -> String {
    let mut width: Vec<usize> = t.headers.iter().map(|h| h.len()).collect();
    for row in &t.rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(&t.headers);
    for row in &t.rows {
        s += &line(row);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatten_nests_with_dots() {
        let v = serde_json::json!({"a": {"b": 1, "c": [1, 2]}, "d": "x", "e": null});
        let f = flatten(&v);
        assert_eq!(
            f,
            vec![
                ("a.b".into(), "1".into()),
                ("a.c".into(), "1;2".into()),
                ("d".into(), "x".into()),
                ("e".into(), String::new()),
            ]
        );
    }

    #[test]
    fn csv_quotes_commas() {
        let t = Table {
            headers: vec!["a".into(), "b".into()],
            rows: vec![vec!["1,2".into(), "say \"hi\"".into()]],
        };
        assert_eq!(csv_string(&t).unwrap(), "a,b\n\"1,2\",\"say \"\"hi\"\"\"\n");
    }

    #[test]
    fn header_only_table() {
        let t = Table {
            headers: vec!["n".into()],
            rows: vec![],
        };
        assert_eq!(csv_string(&t).unwrap(), "n\n");
        assert_eq!(text_table(&t), "n\n");
    }
}
