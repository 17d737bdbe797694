//! Tabular output as CSV, JSON or aligned text.

use serde::Serialize;
use serde_json::{Map, Value};
use std::io::{self, Write};

use crate::ramsey::SweepRow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

pub const SWEEP_COLUMNS: [&str; 11] = [
    "tree_g6",
    "n",
    "m",
    "t",
    "r_formula",
    "r_brute",
    "rstar_formula",
    "rstar_brute",
    "agree_r",
    "agree_rstar",
    "runtime_ms",
];

/// Rows with a fixed column order.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    columns: Vec<String>,
    rows: Vec<Map<String, Value>>,
}

impl Table {
    /// Each row must serialize to an object; missing columns print empty.
    pub fn from_rows<T: Serialize>(columns: &[&str], rows: &[T]) -> Table {
        let rows = rows
            .iter()
            .map(|r| match serde_json::to_value(r).expect("rows serialize") {
                Value::Object(map) => map,
                other => panic!("row is not an object: {other}"),
            })
            .collect();
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows,
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn write(&self, format: Format, w: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Csv => self.write_csv(w),
            Format::Json => self.write_json(w),
            Format::Text => self.write_text(w),
        }
    }

    pub fn render(&self, format: Format) -> String {
        let mut buf = Vec::new();
        self.write(format, &mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("utf-8 output")
    }

    fn cells(&self) -> impl Iterator<Item = Vec<String>> + '_ {
        self.rows
            .iter()
            .map(|row| self.columns.iter().map(|c| cell(row.get(c))).collect())
    }

    fn write_csv(&self, w: &mut dyn Write) -> io::Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(&self.columns)?;
        for row in self.cells() {
            out.write_record(&row)?;
        }
        out.flush()
    }

    fn write_json(&self, w: &mut dyn Write) -> io::Result<()> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let ordered: Map<String, Value> = self
                    .columns
                    .iter()
                    .map(|c| (c.clone(), row.get(c).cloned().unwrap_or(Value::Null)))
                    .collect();
                Value::Object(ordered)
            })
            .collect();
        serde_json::to_writer_pretty(&mut *w, &rows)?;
        writeln!(w)
    }

    fn write_text(&self, w: &mut dyn Write) -> io::Result<()> {
        let body: Vec<Vec<String>> = self.cells().collect();
        let mut width: Vec<usize> = self.columns.iter().map(String::len).collect();
        for row in &body {
            for (wd, c) in width.iter_mut().zip(row) {
                *wd = (*wd).max(c.len());
            }
        }
        let line = |w: &mut dyn Write, row: &[String]| -> io::Result<()> {
            let padded: Vec<String> = row
                .iter()
                .zip(&width)
                .map(|(c, &wd)| format!("{c:<wd$}"))
                .collect();
            writeln!(w, "{}", padded.join("  ").trim_end())
        };
        line(w, &self.columns)?;
        for row in &body {
            line(w, row)?;
        }
        Ok(())
    }
}

fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(other) => other.to_string(),
    }
}

/// Sweep rows under [`SWEEP_COLUMNS`]. Without `timing` the runtime column
/// is zeroed so repeated runs print identical bytes.
pub fn sweep_table(rows: &[SweepRow], timing: bool) -> Table {
    let rows: Vec<SweepRow> = rows
        .iter()
        .cloned()
        .map(|mut r| {
            if !timing {
                r.runtime_ms = 0;
            }
            r
        })
        .collect();
    Table::from_rows(&SWEEP_COLUMNS, &rows)
}
