use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::diagrams::{torus2, DiagramError, LinkDiagram};

/// Expressions in `torus2(m)`, `frame(expr, k)` and `connsum(expr, expr)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyLink {
    Torus2(i64),
    Frame(Box<FamilyLink>, i64),
    ConnSum(Box<FamilyLink>, Box<FamilyLink>),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("family parse error at {pos}: {msg}")]
pub struct FamilyParseError {
    pub pos: usize,
    pub msg: String,
}

impl FamilyLink {
    pub fn frame(self, k: i64) -> FamilyLink {
        FamilyLink::Frame(Box::new(self), k)
    }

    pub fn connsum(self, other: FamilyLink) -> FamilyLink {
        FamilyLink::ConnSum(Box::new(self), Box::new(other))
    }

    /// Sum of all framing shifts in the tree.
    pub fn framing_shift(&self) -> i64 {
        match self {
            FamilyLink::Torus2(_) => 0,
            FamilyLink::Frame(c, k) => c.framing_shift() + k,
            FamilyLink::ConnSum(a, b) => a.framing_shift() + b.framing_shift(),
        }
    }

    /// A blackboard diagram realizing the framed link. Framing shifts are
    /// kinks on the first component, sums join the first components.
    pub fn to_diagram(&self) -> Result<LinkDiagram, DiagramError> {
        match self {
            FamilyLink::Torus2(m) => Ok(torus2(*m)),
            FamilyLink::Frame(c, k) => c.to_diagram()?.add_kinks(0, *k),
            FamilyLink::ConnSum(a, b) => a.to_diagram()?.connected_sum(0, &b.to_diagram()?, 0),
        }
    }
}

impl fmt::Display for FamilyLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyLink::Torus2(m) => write!(f, "torus2({m})"),
            FamilyLink::Frame(c, k) => write!(f, "frame({c},{k})"),
            FamilyLink::ConnSum(a, b) => write!(f, "connsum({a},{b})"),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, FamilyParseError> {
        Err(FamilyParseError { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), FamilyParseError> {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap()
    }

    fn int(&mut self) -> Result<i64, FamilyParseError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.s.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn expr(&mut self) -> Result<FamilyLink, FamilyParseError> {
        let at = self.pos;
        let name = self.ident().to_string();
        self.expect(b'(')?;
        let out = match name.as_str() {
            "torus2" => FamilyLink::Torus2(self.int()?),
            "frame" => {
                let c = self.expr()?;
                self.expect(b',')?;
                c.frame(self.int()?)
            }
            "connsum" => {
                let a = self.expr()?;
                self.expect(b',')?;
                a.connsum(self.expr()?)
            }
            other => {
                self.pos = at;
                return self.err(format!("unknown constructor `{other}`"));
            }
        };
        self.expect(b')')?;
        Ok(out)
    }
}

impl FromStr for FamilyLink {
    type Err = FamilyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != s.len() {
            return p.err("trailing input");
        }
        Ok(out)
    }
}
