use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

/// One table cell. Numbers keep full precision for CSV and are shortened for
/// the human-readable table.
#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
}

impl Cell {
    fn table(&self) -> String {
        match self {
            Cell::Num(v) => short(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => format!("{v:e}"),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) if s.contains([',', '"', '\n']) => {
                format!("\"{}\"", s.replace('"', "\"\""))
            }
            Cell::Text(s) => s.clone(),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
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

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(i64::from(v))
    }
}

/// Ten significant digits; plain notation where it stays readable.
pub fn short(v: f64) -> String {
    if v == 0.0 || (1e-3..1e6).contains(&v.abs()) {
        let s = format!("{v:.10}");
        let s = s.trim_end_matches('0').trim_end_matches('.');
        if s == "-0" {
            "0".into()
        } else {
            s.to_string()
        }
    } else {
        format!("{v:.9e}")
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// Summary lines printed under the table in table format only.
    pub notes: Vec<String>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            ..Default::default()
        }
    }

    pub fn row(&mut self, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }
}

/// Everything a subcommand produces.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub inputs_echo: Value,
    pub results: Value,
    pub warnings: Vec<String>,
    pub table: Table,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    inputs_echo: &'a Value,
    results: &'a Value,
    warnings: &'a [String],
}

impl Report {
    pub fn envelope_json(&self) -> String {
        let env = Envelope {
            command: self.command,
            inputs_echo: &self.inputs_echo,
            results: &self.results,
            warnings: &self.warnings,
        };
        serde_json::to_string_pretty(&env).expect("envelope serializes")
    }

    /// Writes the report to stdout in the chosen format. In CSV mode the
    /// warnings go to `err` so the table stays machine-readable.
    pub fn render(
        &self,
        format: Format,
        out: &mut dyn Write,
        err: &mut dyn Write,
    ) -> io::Result<()> {
        match format {
            Format::Json => writeln!(out, "{}", self.envelope_json()),
            Format::Csv => {
                let header: Vec<String> = self
                    .table
                    .columns
                    .iter()
                    .map(|c| Cell::Text(c.clone()).csv())
                    .collect();
                writeln!(out, "{}", header.join(","))?;
                for row in &self.table.rows {
                    let cells: Vec<String> = row.iter().map(Cell::csv).collect();
                    writeln!(out, "{}", cells.join(","))?;
                }
                for w in &self.warnings {
                    writeln!(err, "warning: {w}")?;
                }
                Ok(())
            }
            Format::Table => self.render_table(out),
        }
    }

    fn render_table(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "command: {}", self.command)?;
        if let Value::Object(map) = &self.inputs_echo {
            for (k, v) in map {
                writeln!(out, "  {k}: {v}")?;
            }
        }
        let t = &self.table;
        if !t.columns.is_empty() {
            writeln!(out)?;
            let cells: Vec<Vec<String>> = t
                .rows
                .iter()
                .map(|r| r.iter().map(Cell::table).collect())
                .collect();
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|i| {
                    cells
                        .iter()
                        .map(|r| r[i].chars().count())
                        .chain([t.columns[i].chars().count()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |fields: &[String]| {
                fields
                    .iter()
                    .zip(&widths)
                    .map(|(f, w)| format!("{f:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "{}", line(&t.columns))?;
            for r in &cells {
                writeln!(out, "{}", line(r))?;
            }
        }
        if !t.notes.is_empty() {
            writeln!(out)?;
            for n in &t.notes {
                writeln!(out, "{n}")?;
            }
        }
        for w in &self.warnings {
            writeln!(out, "warning: {w}")?;
        }
        Ok(())
    }
}
