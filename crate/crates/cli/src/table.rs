use anyhow::{Context, Result};
use isoclus_core::BoundReport;
use std::io::Write;
use std::path::Path;

/// Rows sharing one header; floats carry 12 significant digits.
#[derive(Debug, Default)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

pub const REPORT_HEADER: [&str; 9] =
    ["name", "N", "lhs", "rhs", "slack", "normalized_residual", "fitted_constant", "inputs", "wall_time_s"];

pub fn num(x: f64) -> String {
    format!("{x:.11e}")
}

pub fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn reports() -> Self {
        Table::new(&REPORT_HEADER)
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn push_report(&mut self, r: &BoundReport, n: usize, wall: f64) {
        self.push(vec![
            r.name.clone(),
            n.to_string(),
            num(r.lhs),
            num(r.rhs),
            num(r.slack),
            opt(r.normalized_residual),
            opt(r.fitted_constant),
            r.inputs.clone(),
            format!("{wall:.3}"),
        ]);
    }

    fn render(&self, with_header: bool) -> Result<Vec<u8>> {
        let mut w = csv::Writer::from_writer(Vec::new());
        if with_header {
            w.write_record(&self.header)?;
        }
        for r in &self.rows {
            w.write_record(r)?;
        }
        Ok(w.into_inner()?)
    }

    /// Prints to stdout, or appends to `path` with one write so that
    /// concurrent runs do not interleave inside a block.
    pub fn emit(&self, path: Option<&Path>) -> Result<()> {
        match path {
            None => {
                std::io::stdout().write_all(&self.render(true)?)?;
            }
            Some(p) => {
                let fresh = std::fs::metadata(p).map(|m| m.len() == 0).unwrap_or(true);
                let bytes = self.render(fresh)?;
                let mut f = std::fs::OpenOptions::new()
                    .create(true)
                    .append(true)
                    .open(p)
                    .with_context(|| format!("opening {}", p.display()))?;
                f.write_all(&bytes)?;
            }
        }
        Ok(())
    }
}
