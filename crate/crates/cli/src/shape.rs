//! The shape notation accepted on the command line.
//!
//! ```text
//! 4,3,3/2,2      skew diagram outer/inner (inner optional)
//! r:2,1,3        ribbon with row lengths 2,1,3 from top to bottom
//! [3,5]@15,6     rectangle label [a,b] in M(15,6)
//! ```
//!
//! Whitespace is ignored everywhere.

use std::fmt;

use schurpos::{ribbon_of, Composition, Partition, RectLabel, SkewDiagram};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeSpec {
    Skew { outer: Vec<usize>, inner: Vec<usize> },
    Ribbon(Vec<usize>),
    Label { a: usize, b: usize, n: usize, rows: usize },
}

/// Malformed shape text. `position` is a 0-based character offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse shape {text:?} at position {position}: {message}")]
pub struct ParseError {
    pub text: String,
    pub position: usize,
    pub message: String,
}

struct Parser<'a> {
    text: &'a str,
    chars: Vec<(usize, char)>,
    at: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let chars = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Parser { text, chars, at: 0 }
    }

    fn position(&self) -> usize {
        self.chars
            .get(self.at)
            .map_or(self.text.chars().count(), |&(p, _)| p)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            text: self.text.to_string(),
            position: self.position(),
            message: message.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.at += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        let start = self.at;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.at += 1;
        }
        if digits.is_empty() {
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected a number, found '{c}'")),
                None => self.error("expected a number, found end of input"),
            });
        }
        digits.parse().map_err(|_| {
            self.at = start;
            self.error("number too large")
        })
    }

    fn list(&mut self) -> Result<Vec<usize>, ParseError> {
        let mut out = vec![self.number()?];
        while self.peek() == Some(',') {
            self.at += 1;
            out.push(self.number()?);
        }
        Ok(out)
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
        }
    }

    fn label_body(&mut self) -> Result<(usize, usize), ParseError> {
        self.expect('[')?;
        let a = self.number()?;
        self.expect(',')?;
        let b = self.number()?;
        self.expect(']')?;
        Ok((a, b))
    }
}

pub fn parse_shape(text: &str) -> Result<ShapeSpec, ParseError> {
    let mut p = Parser::new(text);
    let spec = match p.peek() {
        None => return Err(p.error("empty shape")),
        Some('r') => {
            p.at += 1;
            p.expect(':')?;
            ShapeSpec::Ribbon(p.list()?)
        }
        Some('[') => {
            let (a, b) = p.label_body()?;
            p.expect('@')?;
            let n = p.number()?;
            p.expect(',')?;
            let rows = p.number()?;
            ShapeSpec::Label { a, b, n, rows }
        }
        Some(_) => {
            let outer = p.list()?;
            let inner = if p.peek() == Some('/') {
                p.at += 1;
                p.list()?
            } else {
                Vec::new()
            };
            ShapeSpec::Skew { outer, inner }
        }
    };
    p.finish()?;
    Ok(spec)
}

/// A rectangle label, either `[a,b]@N,L` or a bare `[a,b]` read in a given context.
pub fn parse_label_in(text: &str, n: usize, rows: usize) -> Result<ShapeSpec, ParseError> {
    let mut p = Parser::new(text);
    if p.peek() == Some('[') {
        let (a, b) = p.label_body()?;
        if p.peek().is_none() {
            return Ok(ShapeSpec::Label { a, b, n, rows });
        }
    }
    parse_shape(text)
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for ShapeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeSpec::Skew { outer, inner } if inner.is_empty() => write!(f, "{}", join(outer)),
            ShapeSpec::Skew { outer, inner } => write!(f, "{}/{}", join(outer), join(inner)),
            ShapeSpec::Ribbon(alpha) => write!(f, "r:{}", join(alpha)),
            ShapeSpec::Label { a, b, n, rows } => write!(f, "[{a},{b}]@{n},{rows}"),
        }
    }
}

impl ShapeSpec {
    pub fn to_diagram(&self) -> schurpos::Result<SkewDiagram> {
        match self {
            ShapeSpec::Skew { outer, inner } => SkewDiagram::new(
                Partition::new(outer.clone())?,
                Partition::new(inner.clone())?,
            ),
            ShapeSpec::Ribbon(alpha) => ribbon_of(&Composition::new(alpha.clone())?),
            ShapeSpec::Label { .. } => ribbon_of(&self.to_label()?.ribbon()),
        }
    }

    /// The rectangle label this shape denotes: directly for labels, through
    /// the multiplicity-free classification for ribbons.
    pub fn to_label(&self) -> schurpos::Result<RectLabel> {
        match self {
            ShapeSpec::Label { a, b, n, rows } => RectLabel::new(*a, *b, *n, *rows),
            _ => schurpos::label_of_ribbon(&self.to_diagram()?.composition()?),
        }
    }

    /// Canonical text for a diagram: ribbon notation for ribbons, skew otherwise.
    pub fn of_diagram(d: &SkewDiagram) -> ShapeSpec {
        match d.composition() {
            Ok(alpha) => ShapeSpec::Ribbon(alpha.parts().to_vec()),
            Err(_) => ShapeSpec::Skew {
                outer: d.outer().parts().to_vec(),
                inner: d.inner().parts().to_vec(),
            },
        }
    }
}
