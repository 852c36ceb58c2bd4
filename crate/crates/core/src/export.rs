//! Table output: CSV, JSON and OEIS b-files.
//!
//! * CSV: header `n,value`, LF line endings.
//! * b-file: `n value` per line, ascending `n`, integers only. Lines starting
//!   with `#` are comments.
//! * JSON: an array of `{"n": <int>, "value": "<p/q>"}`.

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::{render, Rational};
use crate::error::{domain, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Bfile,
}

#[derive(Serialize)]
struct Row {
    n: u64,
    value: String,
}

/// Renders `(n, value)` rows in the requested format.
///
/// A b-file refuses any non-integer value.
pub fn render_table(rows: &[(u64, Rational)], format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("n,value\n");
            for (n, v) in rows {
                out.push_str(&format!("{n},{}\n", render(v)));
            }
        }
        Format::Bfile => {
            for (n, v) in rows {
                if !v.is_integer() {
                    return Err(domain(format!(
                        "b-file values must be integers, got {} at n = {n}",
                        render(v)
                    )));
                }
                out.push_str(&format!("{n} {}\n", render(v)));
            }
        }
        Format::Json => {
            let rows: Vec<Row> = rows.iter().map(|(n, v)| Row { n: *n, value: render(v) }).collect();
            out.push_str(&serde_json::to_string(&rows).expect("rows serialize"));
            out.push('\n');
        }
    }
    Ok(out)
}

/// Parses b-file text back into `(n, value)` pairs, checking that indices
/// strictly increase.
pub fn parse_bfile(text: &str) -> Result<Vec<(u64, BigInt)>> {
    let mut rows: Vec<(u64, BigInt)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || domain(format!("malformed b-file line {}: {line:?}", lineno + 1));
        let mut parts = line.split_whitespace();
        let (Some(n), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad());
        };
        let n: u64 = n.parse().map_err(|_| bad())?;
        let v: BigInt = v.parse().map_err(|_| bad())?;
        if rows.last().is_some_and(|(prev, _)| *prev >= n) {
            return Err(domain(format!("b-file indices must increase (line {})", lineno + 1)));
        }
        rows.push((n, v));
    }
    Ok(rows)
}
