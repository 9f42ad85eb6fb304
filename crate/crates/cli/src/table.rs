//! Tabular output in CSV or JSON.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use quotatope::format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// Exact integer, kept as decimal text so big values survive.
    Int(String),
    Real(f64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    pub fn int(x: impl ToString) -> Cell {
        Cell::Int(x.to_string())
    }

    pub fn opt_int<T: ToString>(x: Option<T>) -> Cell {
        x.map_or(Cell::Empty, Cell::int)
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(s) => s.clone(),
            Cell::Real(x) => format::real(*x),
            Cell::Text(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Int(s) => s.clone(),
            Cell::Real(x) if x.is_finite() => format::real(*x),
            Cell::Real(_) | Cell::Empty => "null".into(),
            Cell::Text(s) => serde_json::to_string(s).expect("string serializes"),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Table { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self, fmt: Format) -> String {
        let mut out = String::new();
        match fmt {
            Format::Csv => {
                out.push_str(&self.header.join(","));
                out.push('\n');
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Cell::csv).collect();
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
            }
            Format::Json => {
                out.push('[');
                for (k, row) in self.rows.iter().enumerate() {
                    out.push_str(if k == 0 { "\n  {" } else { ",\n  {" });
                    for (j, (name, cell)) in self.header.iter().zip(row).enumerate() {
                        if j > 0 {
                            out.push_str(", ");
                        }
                        let key = serde_json::to_string(name).expect("string serializes");
                        let _ = write!(out, "{key}: {}", cell.json());
                    }
                    out.push('}');
                }
                out.push_str(if self.rows.is_empty() { "]\n" } else { "\n]\n" });
            }
        }
        out
    }

    /// Column `name` as reals, skipping cells that are not numbers.
    pub fn column(&self, name: &str) -> Vec<Option<f64>> {
        let Some(j) = self.header.iter().position(|h| h == name) else {
            return Vec::new();
        };
        self.rows
            .iter()
            .map(|r| match &r[j] {
                Cell::Int(s) => s.parse().ok(),
                Cell::Real(x) => Some(*x),
                _ => None,
            })
            .collect()
    }
}

/// Writes to `path`, or to stdout when there is none.
pub fn emit(text: &str, path: Option<&Path>) -> io::Result<()> {
    match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir)?;
            }
            fs::write(p, text)
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_json() {
        let mut t = Table::new(["n", "x", "label"]);
        t.push(vec![Cell::int("123456789012345678901234567890"), Cell::Real(1.0 / 3.0), Cell::Text("a,b".into())]);
        t.push(vec![Cell::int(2), Cell::Empty, Cell::Bool(true)]);
        assert_eq!(
            t.render(Format::Csv),
            "n,x,label\n123456789012345678901234567890,0.333333333333,\"a,b\"\n2,,true\n"
        );
        let json: serde_json::Value = serde_json::from_str(&t.render(Format::Json)).unwrap();
        assert_eq!(json[1]["x"], serde_json::Value::Null);
        assert_eq!(json[0]["label"], "a,b");
        assert_eq!(Table::new(["a"]).render(Format::Json), "[]\n");
    }
}
