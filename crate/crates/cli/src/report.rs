//! Tabular reports rendered as aligned text, one JSON document, or CSV.

use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
    Delimited,
}

/// One table plus free-form notes. `data` is what the structured format emits.
#[derive(Debug, Default)]
pub struct Report {
    pub title: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub notes: Vec<String>,
    pub data: Map<String, Value>,
}

impl Report {
    pub fn new(title: impl Into<String>, columns: Vec<&'static str>) -> Self {
        Self { title: title.into(), columns, ..Self::default() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.data.insert(key.to_owned(), value.into());
    }
}

pub fn render(reports: &[Report], format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                render_text(r, out)?;
            }
            Ok(())
        }
        Format::Structured => {
            let doc = if reports.len() == 1 {
                Value::Object(reports[0].data.clone())
            } else {
                Value::Array(reports.iter().map(|r| Value::Object(r.data.clone())).collect())
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)
        }
        Format::Delimited => {
            let mut w = csv::Writer::from_writer(out);
            for (i, r) in reports.iter().enumerate() {
                if i == 0 || r.columns != reports[0].columns {
                    w.write_record(&r.columns)?;
                }
                for row in &r.rows {
                    w.write_record(row)?;
                }
            }
            w.flush()
        }
    }
}

fn render_text(r: &Report, out: &mut dyn Write) -> io::Result<()> {
    if !r.title.is_empty() {
        writeln!(out, "{}", r.title)?;
    }
    if !r.columns.is_empty() {
        let mut widths: Vec<usize> = r.columns.iter().map(|c| c.chars().count()).collect();
        for row in &r.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &mut dyn Iterator<Item = &str>| -> String {
            let padded: Vec<String> =
                cells.zip(&widths).map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
            padded.join("  ").trim_end().to_owned()
        };
        writeln!(out, "{}", line(&mut r.columns.iter().copied()))?;
        for row in &r.rows {
            writeln!(out, "{}", line(&mut row.iter().map(String::as_str)))?;
        }
    }
    for note in &r.notes {
        writeln!(out, "{note}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("demo", vec!["name", "value"]);
        r.push(vec!["a".into(), "1.5".into()]);
        r.push(vec!["longer".into(), "2".into()]);
        r.set("count", 2);
        r
    }

    fn rendered(format: Format) -> String {
        let mut buf = Vec::new();
        render(&[sample()], format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn text_is_aligned() {
        assert_eq!(rendered(Format::Text), "demo\nname    value\na       1.5\nlonger  2\n");
    }

    #[test]
    fn delimited_uses_commas_and_dots() {
        assert_eq!(rendered(Format::Delimited), "name,value\na,1.5\nlonger,2\n");
    }

    #[test]
    fn structured_is_one_document() {
        let v: Value = serde_json::from_str(&rendered(Format::Structured)).unwrap();
        assert_eq!(v["count"], 2);
    }
}
