//! Table model and CSV/JSON emission.
//!
//! CSV dialect: comma-separated, header row, LF line endings, UTF-8.
//! Reals are printed to a configurable number of significant digits
//! (default 6); exact integers are printed in full, never in scientific
//! notation. JSON mirrors the rows as an array of flat objects under
//! `rows`, with a `meta` object recording the invocation; exact integers
//! become JSON strings so no precision is lost.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde_json::{json, Map, Value};

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    /// Exact integer, already rendered in full decimal.
    Int(String),
    Real(f64),
    Text(String),
}

impl Cell {
    pub fn int(value: impl ToString) -> Self {
        Cell::Int(value.to_string())
    }
}

#[derive(Clone, Debug)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Render `value` with `sig_digits` significant digits, plain decimal
/// notation when the exponent is moderate, scientific otherwise.
pub fn format_real(value: f64, sig_digits: usize) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let sig = sig_digits.max(1) as i32;
    let exponent = value.abs().log10().floor() as i32;
    if exponent < -4 || exponent >= sig {
        format!("{:.*e}", (sig - 1) as usize, value)
    } else {
        let decimals = (sig - 1 - exponent).max(0) as usize;
        let mut s = format!("{:.*}", decimals, value);
        if s.contains('.') {
            while s.ends_with('0') {
                s.pop();
            }
            if s.ends_with('.') {
                s.pop();
            }
        }
        s
    }
}

fn render_cell(cell: &Cell, sig_digits: usize) -> String {
    match cell {
        Cell::Int(s) => s.clone(),
        Cell::Real(v) => format_real(*v, sig_digits),
        Cell::Text(s) => s.clone(),
    }
}

pub fn to_csv(table: &Table, sig_digits: usize) -> String {
    let mut out = String::new();
    out.push_str(&table.columns.join(","));
    out.push('\n');
    for row in &table.rows {
        let fields: Vec<String> = row.iter().map(|c| render_cell(c, sig_digits)).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn to_json(table: &Table, meta: Map<String, Value>, sig_digits: usize) -> String {
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            let mut obj = Map::new();
            for (name, cell) in table.columns.iter().zip(row) {
                let value = match cell {
                    Cell::Int(s) => Value::String(s.clone()),
                    Cell::Real(v) => {
                        // round through the printed form so JSON and CSV agree
                        let rendered = format_real(*v, sig_digits);
                        let rounded: f64 = rendered.parse().unwrap_or(*v);
                        json!(rounded)
                    }
                    Cell::Text(s) => Value::String(s.clone()),
                };
                obj.insert((*name).to_string(), value);
            }
            Value::Object(obj)
        })
        .collect();
    let doc = json!({ "meta": Value::Object(meta), "rows": rows });
    let mut text = serde_json::to_string_pretty(&doc).expect("table serializes");
    text.push('\n');
    text
}

/// Write to the path when given, stdout otherwise.
pub fn write_output(path: Option<&Path>, content: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, content),
        None => io::stdout().write_all(content.as_bytes()),
    }
}
