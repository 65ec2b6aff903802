use std::fmt::Write as _;

use clap::ValueEnum;
use lrs_core::ComplexHP;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Right-aligned columns separated by two spaces; `rule_after` puts a
/// `|` after that many columns.
pub fn aligned(rows: &[Vec<String>], rule_after: Option<usize>) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|j| rows.iter().filter_map(|r| r.get(j)).map(String::len).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (j, cell) in row.iter().enumerate() {
            if j > 0 {
                line.push_str(if rule_after == Some(j) { "  |  " } else { "  " });
            }
            let _ = write!(line, "{cell:>w$}", w = widths[j]);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn csv(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

pub fn words<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

pub fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(T::to_string).collect()
}

/// Real values drop the `+ 0i` tail.
pub fn complex(z: &ComplexHP, digits: usize) -> String {
    if z.im.is_zero() {
        z.re.to_decimal(digits)
    } else {
        z.to_decimal(digits)
    }
}

pub fn json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}
