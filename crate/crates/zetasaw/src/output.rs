use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};

use num_complex::Complex64;
use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::error::CliResult;

/// Error-column entry for values that involve no truncation.
pub const EXACT: &str = "exact";

/// Fixed 17-significant-digit rendering used for every emitted number.
pub fn num(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

pub fn complex(z: Complex64) -> (String, String) {
    (num(z.re), num(z.im))
}

/// A self-describing result table.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Table {
    pub meta: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            meta: BTreeMap::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn with_config(mut self, cfg: &RunConfig) -> Self {
        for (k, v) in cfg.echo() {
            self.meta.insert(k, v);
        }
        self
    }

    pub fn meta(&mut self, key: &str, value: impl Into<String>) {
        self.meta.insert(key.to_string(), value.into());
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            out.push_str(&format!("# {k}={v}\n"));
        }
        push_record(&mut out, &self.columns);
        for row in &self.rows {
            push_record(&mut out, row);
        }
        out
    }

    pub fn to_json(&self) -> CliResult<String> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        Ok(text)
    }

    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Csv => Ok(self.to_csv()),
            Format::Json => self.to_json(),
        }
    }

    /// Writes to `--out` when given, otherwise to stdout.
    pub fn emit(&self, cfg: &RunConfig) -> CliResult<()> {
        let text = self.render(cfg.format)?;
        match &cfg.out {
            Some(path) => fs::write(path, text)?,
            None => {
                let mut stdout = io::stdout().lock();
                stdout.write_all(text.as_bytes())?;
                stdout.flush()?;
            }
        }
        Ok(())
    }
}

fn push_record(out: &mut String, cells: &[String]) {
    for (i, cell) in cells.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        if cell.contains([',', '"', '\n']) {
            out.push('"');
            out.push_str(&cell.replace('"', "\"\""));
            out.push('"');
        } else {
            out.push_str(cell);
        }
    }
    out.push('\n');
}
