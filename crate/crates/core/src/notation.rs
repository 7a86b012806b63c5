//! Cycle notation.
//!
//! ```text
//! perm  := "()" | cycle+
//! cycle := "(" point (sep point)+ ")"
//! sep   := "," | whitespace
//! point := decimal >= 1
//! ```
//!
//! A comma may carry whitespace on either side, so `(1, 2, 3)` parses.
//! Whitespace is also tolerated around and between cycles. Formatting is
//! canonical: space-separated points, cycles ordered by least point, no
//! surrounding whitespace, `()` for the identity.

use std::fmt;

use crate::perm::{PermError, Permutation};

/// Parses cycle notation into a permutation of degree `n`.
pub fn parse_cycles(text: &str, n: usize) -> Result<Permutation, PermError> {
    let cycles = parse_cycle_list(text)?;
    Permutation::from_cycles(n, &cycles)
}

/// Parses cycle notation without a degree; returns the raw cycles.
pub fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.rest().starts_with(b"()") {
        p.pos += 2;
        p.skip_ws();
        return if p.at_end() {
            Ok(Vec::new())
        } else {
            Err(p.err("trailing input after ()"))
        };
    }
    let mut cycles = Vec::new();
    while !p.at_end() {
        cycles.push(p.cycle()?);
        p.skip_ws();
    }
    if cycles.is_empty() {
        return Err(p.err("empty input"));
    }
    Ok(cycles)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &[u8] {
        &self.bytes[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, msg: &'static str) -> PermError {
        PermError::Syntax { pos: self.pos, msg }
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
        self.pos > start
    }

    fn cycle(&mut self) -> Result<Vec<usize>, PermError> {
        if self.peek() != Some(b'(') {
            return Err(self.err("expected '('"));
        }
        self.pos += 1;
        self.skip_ws();
        let mut points = vec![self.point()?];
        loop {
            let had_ws = self.skip_ws();
            match self.peek() {
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                Some(b',') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(b) if b.is_ascii_digit() && had_ws => {}
                None => return Err(self.err("unterminated cycle")),
                _ => return Err(self.err("expected separator or ')'")),
            }
            points.push(self.point()?);
        }
        if points.len() < 2 {
            return Err(PermError::ShortCycle);
        }
        for (i, pt) in points.iter().enumerate() {
            if points[..i].contains(pt) {
                return Err(PermError::RepeatedPoint(*pt));
            }
        }
        Ok(points)
    }

    fn point(&mut self) -> Result<usize, PermError> {
        let start = self.pos;
        let mut value: usize = 0;
        while let Some(b) = self.peek().filter(u8::is_ascii_digit) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as usize))
                .ok_or_else(|| self.err("point overflows"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a point"));
        }
        if value == 0 {
            return Err(PermError::Syntax {
                pos: start,
                msg: "points start at 1",
            });
        }
        Ok(value)
    }
}

/// Canonical cycle notation.
pub fn format_cycles(x: &Permutation) -> String {
    x.to_string()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.decompose();
        if d.cycles().is_empty() {
            return f.write_str("()");
        }
        for cycle in d.cycles() {
            f.write_str("(")?;
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{pt}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}
