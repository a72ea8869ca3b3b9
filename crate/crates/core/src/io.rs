//! Plain-text halfplane files.
//!
//! One inequality `a b c` per line, meaning `a*x + b*y <= c`. Each field is
//! an integer or a fraction `n/d`. Anything after `#` is a comment and blank
//! lines are skipped. An empty file is the whole plane.

use std::fmt::Write as _;

use thiserror::Error;

use crate::geometry::{Ineq, Rational};
use crate::poly::HPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

fn parse_rational(s: &str) -> Option<Rational> {
    let r: Rational = s.parse().ok()?;
    Some(r)
}

pub fn parse_hpoly(text: &str) -> Result<HPoly, ParseError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(ParseError { line, msg: format!("expected 3 fields, found {}", fields.len()) });
        }
        let mut vals = Vec::with_capacity(3);
        for f in &fields {
            match parse_rational(f) {
                Some(v) => vals.push(v),
                None => return Err(ParseError { line, msg: format!("malformed rational `{}`", f) }),
            }
        }
        let c = vals.pop().unwrap();
        let b = vals.pop().unwrap();
        let a = vals.pop().unwrap();
        let e = Ineq::new(a, b, c)
            .map_err(|_| ParseError { line, msg: format!("zero normal vector `{} {}`", fields[0], fields[1]) })?;
        out.push(e);
    }
    Ok(HPoly::new(out))
}

pub fn emit_hpoly(e: &HPoly) -> String {
    let mut s = String::new();
    for f in e.ineqs() {
        writeln!(s, "{} {} {}", f.a(), f.b(), f.c()).unwrap();
    }
    s
}
