//! Deterministic CSV/JSON emission of numeric tables.

use std::fmt::Write as _;
use std::path::Path;

use super::config::Format;
use crate::error::{Error, Result};

/// One row: ordered `(column, value)` pairs.
pub type Row = Vec<(&'static str, f64)>;

/// Shortest round-trip text; exponent form outside `[1e-5, 1e16)`.
/// Negative zero prints as `0`.
pub fn format_number(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 {
        "0".into()
    } else if x.is_finite() && !(1e-5..1e16).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

fn columns(rows: &[Row]) -> Result<Vec<&'static str>> {
    let first: Vec<&'static str> = rows.first().map(|r| r.iter().map(|c| c.0).collect()).unwrap_or_default();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != first.len() || row.iter().zip(&first).any(|(c, name)| c.0 != *name) {
            return Err(Error::TableContract(format!("row {i} has columns differing from the header")));
        }
    }
    Ok(first)
}

/// Render rows in the requested format.
pub fn render_table(rows: &[Row], format: Format) -> Result<String> {
    let header = columns(rows)?;
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str(&header.join(","));
            out.push('\n');
            for row in rows {
                let cells: Vec<String> = row.iter().map(|c| format_number(c.1)).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        Format::Json => {
            out.push('[');
            for (i, row) in rows.iter().enumerate() {
                out.push_str(if i == 0 { "\n  {" } else { ",\n  {" });
                for (j, (name, value)) in row.iter().enumerate() {
                    if j > 0 {
                        out.push_str(", ");
                    }
                    let text = if value.is_finite() { format_number(*value) } else { "null".into() };
                    let _ = write!(out, "\"{}\": {}", name.replace('\\', "\\\\").replace('"', "\\\""), text);
                }
                out.push('}');
            }
            out.push_str(if rows.is_empty() { "]\n" } else { "\n]\n" });
        }
    }
    Ok(out)
}

/// Write the table to `path`, or to stdout when `path` is `None`.
pub fn emit_table(rows: &[Row], format: Format, path: Option<&Path>) -> Result<()> {
    let text = render_table(rows, format)?;
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io {
            path: p.display().to_string(),
            msg: e.to_string(),
        }),
        None => {
            use std::io::Write;
            std::io::stdout().lock().write_all(text.as_bytes()).map_err(|e| Error::Io {
                path: "<stdout>".into(),
                msg: e.to_string(),
            })
        }
    }
}
