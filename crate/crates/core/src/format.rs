//! Line-based text formats for po-semiring tables (`psr 1`) and finite
//! rings (`ring 1`).
//!
//! ```text
//! psr 1
//! order 3
//! names 0 a 1
//! add
//! 0 1 2
//! 1 1 2
//! 2 2 2
//! mul
//! 0 0 0
//! 0 0 1
//! 0 1 2
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. Anything after the
//! last `mul` row is rejected.

use std::fmt::Write as _;

use crate::elemset::Elem;
use crate::error::ParseError;
use crate::table::{PoSemiringTable, RawTables};

/// Tables parsed from either format, before any validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedTables {
    pub raw: RawTables,
    /// Present only for `ring 1` files.
    pub one: Option<Elem>,
    /// Source line of the `add` keyword, for diagnostics.
    pub add_line: usize,
}

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)> + 'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty() && !l.starts_with('#')),
        );
        Lines {
            inner: it.peekable(),
            last: 0,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        match self.inner.next() {
            Some((n, l)) => {
                self.last = n;
                Ok((n, l))
            }
            None => Err(ParseError::new(
                self.last + 1,
                format!("unexpected end of input, expected {what}"),
            )),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(usize, Vec<&'a str>), ParseError> {
        let (n, line) = self.next(kw)?;
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some(k) if k == kw => Ok((n, parts.collect())),
            Some(k) => Err(ParseError::new(n, format!("expected `{kw}`, found `{k}`"))),
            None => unreachable!(),
        }
    }

    fn single_number(&mut self, kw: &str) -> Result<(usize, usize), ParseError> {
        let (n, args) = self.keyword(kw)?;
        match args.as_slice() {
            [v] => v
                .parse()
                .map(|v| (n, v))
                .map_err(|_| ParseError::new(n, format!("`{kw}` expects a non-negative integer"))),
            _ => Err(ParseError::new(
                n,
                format!("`{kw}` expects exactly one value"),
            )),
        }
    }

    fn rows(&mut self, order: usize, table: &str) -> Result<Vec<Vec<Elem>>, ParseError> {
        let mut rows = Vec::with_capacity(order);
        for r in 0..order {
            let (n, line) = self.next(&format!("{table} row {r}"))?;
            let row: Vec<Elem> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<Elem>()
                        .map_err(|_| ParseError::new(n, format!("`{t}` is not an element index")))
                })
                .collect::<Result<_, _>>()?;
            if row.len() != order {
                return Err(ParseError::new(
                    n,
                    format!(
                        "{table} row {r} has {} entries, expected {order}",
                        row.len()
                    ),
                ));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= order) {
                return Err(ParseError::new(
                    n,
                    format!("entry {bad} is out of range for order {order}"),
                ));
            }
            rows.push(row);
        }
        Ok(rows)
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.inner.next() {
            None => Ok(()),
            Some((n, l)) => Err(ParseError::new(n, format!("trailing content `{l}`"))),
        }
    }
}

fn parse_body(lines: &mut Lines<'_>, with_one: bool) -> Result<ParsedTables, ParseError> {
    let (order_line, order) = lines.single_number("order")?;
    if order < 2 {
        return Err(ParseError::new(order_line, "order must be at least 2"));
    }
    let one = if with_one {
        let (n, one) = lines.single_number("one")?;
        if one >= order {
            return Err(ParseError::new(n, "identity index out of range"));
        }
        Some(one)
    } else {
        None
    };
    let (names_line, names) = lines.keyword("names")?;
    if names.len() != order {
        return Err(ParseError::new(
            names_line,
            format!("expected {order} names, found {}", names.len()),
        ));
    }
    let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let (add_line, args) = lines.keyword("add")?;
    if !args.is_empty() {
        return Err(ParseError::new(add_line, "`add` takes no arguments"));
    }
    let add = lines.rows(order, "add")?;
    let (mul_line, args) = lines.keyword("mul")?;
    if !args.is_empty() {
        return Err(ParseError::new(mul_line, "`mul` takes no arguments"));
    }
    let mul = lines.rows(order, "mul")?;
    lines.finish()?;
    Ok(ParsedTables {
        raw: RawTables { names, add, mul },
        one,
        add_line,
    })
}

fn parse_magic(lines: &mut Lines<'_>, magic: &str) -> Result<(), ParseError> {
    let (n, args) = lines.keyword(magic)?;
    match args.as_slice() {
        ["1"] => Ok(()),
        _ => Err(ParseError::new(n, format!("unsupported `{magic}` version"))),
    }
}

/// Parses a `psr 1` document into unvalidated tables.
pub fn parse_psr(text: &str) -> Result<RawTables, ParseError> {
    let mut lines = Lines::new(text);
    parse_magic(&mut lines, "psr")?;
    parse_body(&mut lines, false).map(|p| p.raw)
}

/// Parses a `ring 1` document into unvalidated tables plus the identity index.
pub fn parse_ring_text(text: &str) -> Result<(RawTables, Elem), ParseError> {
    let mut lines = Lines::new(text);
    parse_magic(&mut lines, "ring")?;
    let p = parse_body(&mut lines, true)?;
    Ok((p.raw, p.one.expect("ring body has identity")))
}

fn write_rows(out: &mut String, rows: &[Vec<Elem>]) {
    for row in rows {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
}

fn write_body(out: &mut String, raw: &RawTables) {
    out.push_str("names ");
    out.push_str(&raw.names.join(" "));
    out.push('\n');
    out.push_str("add\n");
    write_rows(out, &raw.add);
    out.push_str("mul\n");
    write_rows(out, &raw.mul);
}

pub fn write_psr(a: &PoSemiringTable) -> String {
    let raw = a.to_raw();
    let mut out = String::new();
    let _ = writeln!(out, "psr 1\norder {}", a.order());
    write_body(&mut out, &raw);
    out
}

pub fn write_ring_text(raw: &RawTables, one: Elem) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ring 1\norder {}\none {one}", raw.names.len());
    write_body(&mut out, raw);
    out
}
