//! The matroid text format.
//!
//! ```text
//! # comments and blank lines are ignored
//! rank 4
//! 1000
//! 0100
//! ```
//!
//! After the `rank <r>` header every line is one point written as `r` binary
//! digits, coordinate 1 leftmost. Zero and repeated points are rejected.

use std::fmt;

use binmat::{BinaryMatroid, Gf2Vector, PointSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse_matroid(text: &str) -> Result<BinaryMatroid, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| err(0, "missing `rank <r>` header"))?;
    let rank = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["rank", r] => r
            .parse::<usize>()
            .map_err(|_| err(header_line, format!("invalid rank `{r}`")))?,
        _ => return Err(err(header_line, "expected `rank <r>` header")),
    };
    let mut points =
        PointSet::empty(rank).map_err(|e| err(header_line, e.to_string()))?;

    for (line, text) in lines {
        if text.len() != rank {
            return Err(err(
                line,
                format!("point `{text}` has {} coordinates, expected {rank}", text.len()),
            ));
        }
        let v = Gf2Vector::parse_bit_string(text)
            .ok_or_else(|| err(line, format!("point `{text}` is not a binary string")))?;
        if v.is_zero() {
            return Err(err(line, "the zero vector is not a point"));
        }
        let fresh = points.insert(v).map_err(|e| err(line, e.to_string()))?;
        if !fresh {
            return Err(err(line, format!("duplicate point `{text}`")));
        }
    }
    Ok(BinaryMatroid::new(points))
}

/// Header plus points in increasing encoding.
pub fn write_matroid(m: &BinaryMatroid) -> String {
    let mut out = format!("rank {}\n", m.ambient_rank());
    for s in m.to_bit_strings() {
        out.push_str(&s);
        out.push('\n');
    }
    out
}
