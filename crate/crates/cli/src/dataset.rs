//! Figure datasets: rectangular numeric tables with named columns, emitted
//! as CSV (shortest round-trip float representation) or JSON.

use std::io::Write;

use crate::config::OutputFormat;

#[derive(Debug, Clone)]
pub struct FigureDataset {
    pub figure_id: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl FigureDataset {
    pub fn new(figure_id: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            figure_id: figure_id.into(),
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// Push one row; NaN entries are rejected and the column count must
    /// match the header.
    pub fn push(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len(), "column count mismatch");
        assert!(row.iter().all(|v| !v.is_nan()), "NaN in dataset row");
        self.rows.push(row);
    }

    pub fn emit<W: Write>(&self, format: OutputFormat, out: &mut W) -> std::io::Result<()> {
        match format {
            OutputFormat::Csv => self.emit_csv(out),
            OutputFormat::Json => self.emit_json(out),
        }
    }

    fn emit_csv<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "# figure: {}", self.figure_id)?;
        writeln!(out, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
            writeln!(out, "{}", line.join(","))?;
        }
        Ok(())
    }

    fn emit_json<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        let obj = serde_json::json!({
            "figure_id": self.figure_id,
            "columns": self.columns,
            "rows": self.rows,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&obj)?)
    }

    pub fn write_to_path(&self, format: OutputFormat, path: &std::path::Path) -> std::io::Result<()> {
        let mut f = std::fs::File::create(path)?;
        self.emit(format, &mut f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_emission_is_lossless() {
        let mut ds = FigureDataset::new("fig0", &["a", "b"]);
        ds.push(vec![1.0 / 3.0, 2.0_f64.sqrt()]);
        let mut buf = Vec::new();
        ds.emit(OutputFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let data_line = text.lines().nth(2).unwrap();
        let vals: Vec<f64> = data_line.split(',').map(|s| s.parse().unwrap()).collect();
        assert_eq!(vals[0], 1.0 / 3.0);
        assert_eq!(vals[1], 2.0_f64.sqrt());
    }

    #[test]
    #[should_panic(expected = "NaN")]
    fn nan_rejected() {
        let mut ds = FigureDataset::new("fig0", &["a"]);
        ds.push(vec![f64::NAN]);
    }
}
