//! Flat tabular records read from and written to CSV or JSON.

use std::collections::HashMap;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;

use serde_json::{Map, Number, Value};

use super::{CliError, Format};
use crate::algebra::UnitValue;

/// One input record; `number` is 1-based and excludes the CSV header.
#[derive(Debug, Clone)]
pub struct Row {
    pub number: usize,
    fields: HashMap<String, String>,
}

impl Row {
    pub fn text(&self, column: &str) -> Option<&str> {
        self.fields.get(column).map(String::as_str)
    }

    pub fn has(&self, column: &str) -> bool {
        self.fields.contains_key(column)
    }

    pub fn number(&self, column: &str) -> Result<f64, CliError> {
        let raw = self
            .text(column)
            .ok_or_else(|| CliError::Data(format!("row {}: missing column '{column}'", self.number)))?;
        match raw.trim().parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(CliError::Data(format!(
                "row {}: {column} is not a finite number: '{raw}'",
                self.number
            ))),
        }
    }

    pub fn unit(&self, column: &str) -> Result<UnitValue, CliError> {
        let v = self.number(column)?;
        UnitValue::new(v).map_err(|_| CliError::Data(format!("row {}: {column} out of [0,1]", self.number)))
    }

    pub fn element(&self) -> Result<String, CliError> {
        match self.text("element").map(str::trim) {
            Some(id) if !id.is_empty() => Ok(id.to_string()),
            _ => Err(CliError::Data(format!(
                "row {}: missing element identifier",
                self.number
            ))),
        }
    }
}

pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
}

impl Table {
    pub fn require(&self, columns: &[&str]) -> Result<(), CliError> {
        for column in columns {
            if !self.columns.iter().any(|c| c == column) {
                return Err(CliError::Data(format!("missing column '{column}'")));
            }
        }
        Ok(())
    }

    pub fn has_column(&self, column: &str) -> bool {
        self.columns.iter().any(|c| c == column)
    }
}

pub fn read_table(path: &Path, format: Format) -> Result<Table, CliError> {
    let mut text = String::new();
    File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
    match format {
        Format::Csv => parse_csv(&text),
        Format::Json => parse_json(&text),
    }
}

fn parse_csv(text: &str) -> Result<Table, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let columns: Vec<String> = reader
        .headers()
        .map_err(|e| CliError::Data(format!("unreadable CSV header: {e}")))?
        .iter()
        .map(str::to_string)
        .collect();
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let number = i + 1;
        let record = record.map_err(|e| CliError::Data(format!("row {number}: {e}")))?;
        let fields = columns.iter().cloned().zip(record.iter().map(str::to_string)).collect();
        rows.push(Row { number, fields });
    }
    Ok(Table { columns, rows })
}

fn parse_json(text: &str) -> Result<Table, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Data(format!("invalid JSON: {e}")))?;
    let Value::Array(items) = value else {
        return Err(CliError::Data("JSON input must be an array of objects".into()));
    };
    let mut columns: Vec<String> = Vec::new();
    let mut rows = Vec::new();
    for (i, item) in items.into_iter().enumerate() {
        let number = i + 1;
        let Value::Object(object) = item else {
            return Err(CliError::Data(format!("row {number}: expected an object")));
        };
        let mut fields = HashMap::new();
        for (key, value) in object {
            let text = match value {
                Value::String(s) => s,
                Value::Number(n) => n.to_string(),
                other => {
                    return Err(CliError::Data(format!(
                        "row {number}: {key} must be a number or string, got {other}"
                    )))
                }
            };
            if !columns.contains(&key) {
                columns.push(key.clone());
            }
            fields.insert(key, text);
        }
        rows.push(Row { number, fields });
    }
    Ok(Table { columns, rows })
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Num(f64),
}

/// Rounds to `precision` decimals through the decimal representation.
pub fn round_to(value: f64, precision: usize) -> f64 {
    format_number(value, precision).parse().expect("formatted float")
}

pub fn format_number(value: f64, precision: usize) -> String {
    let text = format!("{value:.precision$}");
    // No negative zero in output.
    match text.strip_prefix('-') {
        Some(rest) if rest.chars().all(|c| c == '0' || c == '.') => rest.to_string(),
        _ => text,
    }
}

/// `[τ, φ, κ, π]` rounded, followed by `ι` taken as the residual of the
/// rounded four so every written row sums to one at file precision.
pub fn penta_cells(four: [f64; 4], precision: usize) -> Vec<Cell> {
    let rounded = four.map(|v| round_to(v, precision));
    let iota = round_to((1.0 - rounded.iter().sum::<f64>()).max(0.0), precision);
    rounded.into_iter().chain([iota]).map(Cell::Num).collect()
}

pub fn write_table(
    output: Option<&Path>,
    format: Format,
    precision: usize,
    columns: &[&str],
    rows: &[Vec<Cell>],
) -> Result<(), CliError> {
    let io_err = |source: io::Error| CliError::Io {
        path: output.map_or_else(|| "<stdout>".to_string(), |p| p.display().to_string()),
        source,
    };
    let mut sink: Box<dyn Write> = match output {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(io_err)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match format {
        Format::Csv => {
            let mut writer = csv::WriterBuilder::new().from_writer(&mut sink);
            writer.write_record(columns).map_err(|e| io_err(e.into()))?;
            for row in rows {
                let record = row.iter().map(|cell| match cell {
                    Cell::Text(s) => s.clone(),
                    Cell::Num(v) => format_number(*v, precision),
                });
                writer.write_record(record).map_err(|e| io_err(e.into()))?;
            }
            writer.flush().map_err(io_err)?;
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let object: Map<String, Value> = columns
                        .iter()
                        .zip(row)
                        .map(|(column, cell)| {
                            let value = match cell {
                                Cell::Text(s) => Value::String(s.clone()),
                                Cell::Num(v) => Number::from_f64(round_to(*v, precision))
                                    .map(Value::Number)
                                    .unwrap_or(Value::Null),
                            };
                            (column.to_string(), value)
                        })
                        .collect();
                    Value::Object(object)
                })
                .collect();
            serde_json::to_writer_pretty(&mut sink, &items).map_err(|e| io_err(e.into()))?;
            writeln!(sink).map_err(io_err)?;
        }
    }
    sink.flush().map_err(io_err)
}
