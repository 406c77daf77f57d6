//! Plain-text character files.
//!
//! One entry per line: `l1 l2 l3 dim`, four whitespace-separated decimal
//! integers with `dim > 0`. Lines starting with `#` and blank lines are
//! skipped. Entry order is irrelevant; a repeated weight is an error.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::types::{Character, Count, Weight};

pub fn parse_character(text: &str) -> Result<Character> {
    let mut c = Character::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(Error::Parse {
                line,
                message: format!("expected 4 fields `l1 l2 l3 dim`, found {}", fields.len()),
            });
        }
        let int = |s: &str, what: &str| {
            s.parse::<i64>().map_err(|e| Error::Parse {
                line,
                message: format!("bad {what} `{s}`: {e}"),
            })
        };
        let weight = Weight::new(
            int(fields[0], "l1")?,
            int(fields[1], "l2")?,
            int(fields[2], "l3")?,
        );
        let dim: Count = fields[3].parse().map_err(|e| Error::Parse {
            line,
            message: format!("bad dim `{}`: {e}", fields[3]),
        })?;
        if dim <= 0 {
            return Err(Error::Parse {
                line,
                message: format!("dim must be positive, got {dim}"),
            });
        }
        if c.get(weight) != 0 {
            return Err(Error::DuplicateWeight { line, weight });
        }
        c.add_count(weight, dim)?;
    }
    Ok(c)
}

/// Renders `c` in descending lexicographic weight order, no comments.
pub fn write_character(c: &Character) -> String {
    let mut out = String::new();
    for (w, d) in c.iter_desc() {
        writeln!(out, "{} {} {} {}", w.l1, w.l2, w.l3, d).unwrap();
    }
    out
}
