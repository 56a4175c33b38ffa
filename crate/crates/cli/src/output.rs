use std::io::Write;

use serde::Serialize;

use crate::config::OutputFormat;
use crate::CliError;

/// Tag carried by every machine-readable record.
pub const SCHEMA: &str = "knotform/1";

#[derive(Serialize)]
struct Record<'a, T: Serialize> {
    schema: &'static str,
    kind: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

/// One JSON record on one line.
pub fn json_line<T: Serialize>(kind: &str, body: &T) -> String {
    serde_json::to_string(&Record { schema: SCHEMA, kind, body }).expect("records serialize")
}

/// Rows with a header, rendered as CSV or as an aligned text table.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table { headers: headers.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        let io = |e: csv::Error| CliError::Io(std::io::Error::other(e));
        w.write_record(&self.headers).map_err(io)?;
        for r in &self.rows {
            w.write_record(r).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(std::io::Error::other(e.to_string())))?;
        Ok(String::from_utf8(bytes).expect("utf-8 fields"))
    }

    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&self.headers);
        for r in &self.rows {
            out.push_str(&line(r));
        }
        out
    }

    /// CSV or text table; JSON callers emit records instead.
    pub fn write(&self, format: OutputFormat, out: &mut dyn Write) -> Result<(), CliError> {
        let text = match format {
            OutputFormat::Csv => self.to_csv()?,
            _ => self.to_text(),
        };
        out.write_all(text.as_bytes())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_only_when_needed() {
        let mut t = Table::new(["name", "h1"]);
        t.push(vec!["a,b".into(), "Z/3 x Z/9".into()]);
        t.push(vec!["say \"hi\"".into(), "0".into()]);
        assert_eq!(t.to_csv().unwrap(), "name,h1\n\"a,b\",Z/3 x Z/9\n\"say \"\"hi\"\"\",0\n");
    }

    #[test]
    fn text_alignment() {
        let mut t = Table::new(["n", "value"]);
        t.push(vec!["long name".into(), "1".into()]);
        assert_eq!(t.to_text(), "n          value\nlong name  1\n");
    }

    #[test]
    fn records_carry_the_schema() {
        #[derive(Serialize)]
        struct X {
            a: u8,
        }
        assert_eq!(json_line("x", &X { a: 1 }), r#"{"schema":"knotform/1","kind":"x","a":1}"#);
    }
}
