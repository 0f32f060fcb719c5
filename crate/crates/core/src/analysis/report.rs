use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::error::{invalid, Error, Result};
use crate::explicit::DeltaSample;
use crate::numeric::{format_sig15, round_sig15};

pub const DELTA_HEADER: [&str; 6] = [
    "x",
    "exact",
    "predicted",
    "delta",
    "delta_over_x14",
    "delta_over_x12",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => invalid(format!("unknown output format {other:?}")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i128),
    Real(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => format_sig15(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => match i64::try_from(*v) {
                Ok(i) => Value::from(i),
                Err(_) => Value::String(v.to_string()),
            },
            Cell::Real(v) => real_json(*v),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
        }
    }
}

impl From<i128> for Cell {
    fn from(v: i128) -> Self {
        Cell::Int(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i128)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i128)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

/// Non-finite reals have no JSON number form and are written as strings.
fn real_json(v: f64) -> Value {
    if v.is_finite() {
        serde_json::Number::from_f64(round_sig15(v)).map_or(Value::Null, Value::Number)
    } else {
        Value::String(v.to_string())
    }
}

/// Rounds every float inside `v` to 15 significant digits.
pub fn round_json(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => real_json(n.as_f64().unwrap_or(f64::NAN)),
        Value::Array(a) => Value::Array(a.into_iter().map(round_json).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_json(v))).collect()),
        other => other,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.columns).map_err(csv_error)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))
                .map_err(csv_error)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("CSV cells are UTF-8"))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    Value::Object(
                        self.columns
                            .iter()
                            .cloned()
                            .zip(row.iter().map(Cell::json))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Format {
            line: 0,
            message: format!("{other:?}"),
        },
    }
}

/// A command's output: always a table, optionally with a richer JSON body.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub table: Table,
    pub json: Option<Value>,
}

impl Report {
    pub fn from_table(table: Table) -> Self {
        Self { table, json: None }
    }

    pub fn with_json<T: Serialize>(table: Table, body: &T) -> Result<Self> {
        let v = serde_json::to_value(body)
            .map_err(|e| Error::InvalidArgument(format!("serialization: {e}")))?;
        Ok(Self {
            table,
            json: Some(round_json(v)),
        })
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        if self.table.rows.is_empty() && self.json.is_none() {
            return invalid("report has no rows");
        }
        match format {
            OutputFormat::Csv => self.table.to_csv(),
            OutputFormat::Json => {
                let v = self.json.clone().unwrap_or_else(|| self.table.to_json());
                let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
                s.push('\n');
                Ok(s)
            }
        }
    }
}

pub fn delta_table(rows: &[DeltaSample]) -> Table {
    let mut t = Table::new(&DELTA_HEADER);
    for r in rows {
        t.push(vec![
            r.x.into(),
            r.exact.into(),
            r.predicted.into(),
            r.delta.into(),
            r.delta_over_x14.into(),
            r.delta_over_x12.into(),
        ]);
    }
    t
}

/// Writes `rows` as a delta report to `path` (stdout when `None`) and
/// returns the number of bytes written.
pub fn emit_report(
    rows: &[DeltaSample],
    format: OutputFormat,
    path: Option<&Path>,
) -> Result<usize> {
    if rows.is_empty() {
        return invalid("report has no rows");
    }
    write_output(&Report::from_table(delta_table(rows)).render(format)?, path)
}

pub fn write_output(text: &str, path: Option<&Path>) -> Result<usize> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(text.len())
}

/// Parses a delta CSV produced by [`emit_report`].
pub fn parse_delta_csv(text: &str) -> Result<Vec<DeltaSample>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().map_err(csv_error)?.clone();
    if header.iter().ne(DELTA_HEADER.iter().copied()) {
        return Err(Error::Format {
            line: 1,
            message: format!("unexpected header {:?}", header.as_slice()),
        });
    }
    let mut out = Vec::new();
    for (i, rec) in r.deserialize::<DeltaSample>().enumerate() {
        out.push(rec.map_err(|e| Error::Format {
            line: i + 2,
            message: e.to_string(),
        })?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_csv_header_and_round_trip() {
        let rows = vec![
            DeltaSample::new(100.5, 482.0, 478.123_456_789_012_3),
            DeltaSample::new(1e7 + 0.5, 1.6e8, 1.59e8),
        ];
        let csv = Report::from_table(delta_table(&rows))
            .render(OutputFormat::Csv)
            .unwrap();
        assert!(csv.starts_with("x,exact,predicted,delta,delta_over_x14,delta_over_x12\n"));
        assert_eq!(csv.lines().count(), 3);
        let back = parse_delta_csv(&csv).unwrap();
        for (a, b) in rows.iter().zip(&back) {
            assert_eq!(round_sig15(a.predicted), b.predicted);
            assert_eq!(round_sig15(a.delta_over_x14), b.delta_over_x14);
        }
    }

    #[test]
    fn json_rounds_floats() {
        let mut t = Table::new(&["n", "v", "ok"]);
        t.push(vec![3u64.into(), (1.0f64 / 3.0).into(), true.into()]);
        let s = Report::from_table(t).render(OutputFormat::Json).unwrap();
        assert!(s.contains("0.333333333333333"), "{s}");
        assert!(!s.contains("0.3333333333333333"));
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v[0]["n"], 3);
    }

    #[test]
    fn empty_rows_are_rejected() {
        assert!(emit_report(&[], OutputFormat::Csv, None).is_err());
        let bad = "a,b\n1,2\n";
        assert!(parse_delta_csv(bad).is_err());
    }

    #[test]
    fn writes_file() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("d.csv");
        let n = emit_report(
            &[DeltaSample::new(2.5, 3.0, 2.0)],
            OutputFormat::Csv,
            Some(&p),
        )
        .unwrap();
        assert_eq!(std::fs::read(&p).unwrap().len(), n);
        assert!(emit_report(
            &[DeltaSample::new(2.5, 3.0, 2.0)],
            OutputFormat::Csv,
            Some(&dir.path().join("no/such"))
        )
        .is_err());
    }
}
