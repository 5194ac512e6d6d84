use std::fmt;
use std::io::Write;

use crate::error::{Error, Result};
use crate::experiments::config::ExperimentKind;

/// One cell of a summary row.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(x) => write!(f, "{x}"),
            Value::Float(x) => write!(f, "{x:.6}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

impl From<i64> for Value {
    fn from(x: i64) -> Value {
        Value::Int(x)
    }
}

impl From<usize> for Value {
    fn from(x: usize) -> Value {
        Value::Int(x as i64)
    }
}

impl From<u64> for Value {
    fn from(x: u64) -> Value {
        Value::Int(x as i64)
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Value {
        Value::Float(x)
    }
}

impl From<&str> for Value {
    fn from(x: &str) -> Value {
        Value::Text(x.to_string())
    }
}

impl From<bool> for Value {
    fn from(x: bool) -> Value {
        Value::Int(x as i64)
    }
}

impl Value {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Value::Int(x) => Some(*x as f64),
            Value::Float(x) => Some(*x),
            Value::Text(_) => None,
        }
    }
}

/// Keyed statistics for one line of an experiment's CSV output.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SummaryRow {
    pub fields: Vec<(&'static str, Value)>,
}

impl SummaryRow {
    pub fn new() -> SummaryRow {
        SummaryRow::default()
    }

    pub fn with(mut self, key: &'static str, v: impl Into<Value>) -> SummaryRow {
        self.fields.push((key, v.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn f64(&self, key: &str) -> Option<f64> {
        self.get(key).and_then(Value::as_f64)
    }
}

/// A tolerance check attached to an experiment.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub kind: ExperimentKind,
    pub rows: Vec<SummaryRow>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(kind: ExperimentKind) -> Report {
        Report { kind, rows: Vec::new(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Rows whose `row` column equals `kind`.
    pub fn rows_of<'a>(&'a self, kind: &'a str) -> impl Iterator<Item = &'a SummaryRow> + 'a {
        self.rows.iter().filter(move |r| r.get("row") == Some(&Value::Text(kind.to_string())))
    }

    /// CSV with one header row; the columns are the keys in order of first use.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut header: Vec<&'static str> = Vec::new();
        for r in &self.rows {
            for (k, _) in &r.fields {
                if !header.contains(k) {
                    header.push(k);
                }
            }
        }
        let mut out = csv::Writer::from_writer(w);
        let io = |e: csv::Error| Error::Output(e.to_string());
        out.write_record(&header).map_err(io)?;
        for r in &self.rows {
            let line: Vec<String> = header.iter().map(|k| r.get(k).map(|v| v.to_string()).unwrap_or_default()).collect();
            out.write_record(&line).map_err(io)?;
        }
        out.flush().map_err(|e| Error::Output(e.to_string()))
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        String::from_utf8(buf).map_err(|e| Error::Output(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_union_of_columns() {
        let mut r = Report::new(ExperimentKind::Loss);
        r.rows.push(SummaryRow::new().with("degree", 5usize).with("mean", 1.5));
        r.rows.push(SummaryRow::new().with("degree", 10usize).with("note", "x"));
        assert_eq!(r.to_csv_string().unwrap(), "degree,mean,note\n5,1.500000,\n10,,x\n");
        assert!(r.passed());
    }
}
