//! Markdown, CSV and JSON renderings of result tables.
//!
//! Markdown is for reading: large integers may be scaled to thousands or
//! millions and reals are rounded. CSV and JSON keep every integer and ratio
//! exact.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use serde_json::{json, Value};
use symharm_core::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Markdown,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "md" | "markdown" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!(
                "unknown format {other:?} (expected md, csv or json)"
            )),
        }
    }
}

/// How integers are shown in markdown.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Magnitude {
    #[default]
    Units,
    /// Divided by 1000, printed exactly.
    Thousands,
    /// Divided by 10^6, rounded to one decimal.
    Millions,
}

impl Magnitude {
    fn suffix(self) -> &'static str {
        match self {
            Magnitude::Units => "",
            Magnitude::Thousands => " (thousands)",
            Magnitude::Millions => " (millions)",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(BigUint),
    /// A small count or rank; never scaled.
    Rank(u32),
    Ratio(Rational),
    /// A rational shown as a decimal in markdown.
    Mean(Rational),
    Real(f64),
    Missing,
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<u32> for Cell {
    fn from(n: u32) -> Self {
        Cell::Rank(n)
    }
}

impl From<Option<u32>> for Cell {
    fn from(n: Option<u32>) -> Self {
        n.map_or(Cell::Missing, Cell::from)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub magnitude: Magnitude,
    /// Free-form lines printed under the table.
    pub notes: Vec<String>,
}

impl Table {
    pub fn new(
        title: impl Into<String>,
        header: impl IntoIterator<Item = impl Into<String>>,
    ) -> Self {
        Self {
            title: title.into(),
            header: header.into_iter().map(Into::into).collect(),
            ..Self::default()
        }
    }

    pub fn with_magnitude(mut self, magnitude: Magnitude) -> Self {
        self.magnitude = magnitude;
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }
}

pub fn render(tables: &[Table], format: Format) -> String {
    match format {
        Format::Markdown => tables.iter().map(markdown).collect::<Vec<_>>().join("\n"),
        Format::Csv => tables.iter().map(csv).collect::<Vec<_>>().join("\n"),
        Format::Json => {
            let value = Value::Array(tables.iter().map(json_table).collect());
            let mut s = serde_json::to_string_pretty(&value).expect("json values serialize");
            s.push('\n');
            s
        }
    }
}

/// `n / 10^places` as an exact decimal, trailing zeros dropped.
fn exact_decimal(n: &BigUint, places: usize) -> String {
    let digits = format!("{:0>width$}", n.to_string(), width = places + 1);
    let (int, frac) = digits.split_at(digits.len() - places);
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        int.to_string()
    } else {
        format!("{int}.{frac}")
    }
}

/// `n / 10^6` rounded half up to one decimal.
fn millions(n: &BigUint) -> String {
    let tenths = (n + BigUint::from(50_000u32)) / BigUint::from(100_000u32);
    let s = format!("{:0>2}", tenths.to_string());
    let (int, frac) = s.split_at(s.len() - 1);
    format!("{int}.{frac}")
}

fn markdown_cell(cell: &Cell, magnitude: Magnitude) -> String {
    match cell {
        Cell::Text(s) => s.clone(),
        Cell::Int(n) => match magnitude {
            Magnitude::Units => n.to_string(),
            Magnitude::Thousands => exact_decimal(n, 3),
            Magnitude::Millions => millions(n),
        },
        Cell::Rank(n) => n.to_string(),
        Cell::Ratio(r) => r.to_string(),
        Cell::Mean(r) => format!("{:.2}", r.to_f64()),
        Cell::Real(x) => format!("{x:.2}"),
        Cell::Missing => "n/a".to_string(),
    }
}

fn markdown(table: &Table) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "### {}{}\n", table.title, table.magnitude.suffix());
    let _ = writeln!(out, "| {} |", table.header.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(table.header.len()));
    for row in &table.rows {
        let cells: Vec<String> = row
            .iter()
            .map(|c| markdown_cell(c, table.magnitude))
            .collect();
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    if !table.notes.is_empty() {
        out.push('\n');
        for line in &table.notes {
            let _ = writeln!(out, "{line}");
        }
    }
    out
}

fn plain_cell(cell: &Cell) -> String {
    match cell {
        Cell::Text(s) => s.clone(),
        Cell::Int(n) => n.to_string(),
        Cell::Rank(n) => n.to_string(),
        Cell::Ratio(r) | Cell::Mean(r) => r.to_string(),
        Cell::Real(x) => x.to_string(),
        Cell::Missing => String::new(),
    }
}

fn csv(table: &Table) -> String {
    let mut w = ::csv::Writer::from_writer(Vec::new());
    w.write_record(&table.header).expect("in-memory write");
    for row in &table.rows {
        w.write_record(row.iter().map(plain_cell))
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

fn json_cell(cell: &Cell) -> Value {
    match cell {
        Cell::Text(s) => Value::String(s.clone()),
        Cell::Int(n) => {
            serde_json::from_str(&n.to_string()).expect("decimal digits are a json number")
        }
        Cell::Rank(n) => json!(n),
        Cell::Ratio(r) | Cell::Mean(r) => Value::String(r.to_string()),
        Cell::Real(x) => json!(x),
        Cell::Missing => Value::Null,
    }
}

fn json_table(table: &Table) -> Value {
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|r| Value::Array(r.iter().map(json_cell).collect()))
        .collect();
    let mut obj = json!({
        "title": table.title,
        "columns": table.header,
        "rows": rows,
    });
    if !table.notes.is_empty() {
        obj["notes"] = json!(table.notes);
    }
    obj
}
