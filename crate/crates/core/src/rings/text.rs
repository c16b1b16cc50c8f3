//! Canonical text and JSON forms for Laurent polynomials.
//!
//! Text: terms in graded order (total degree, then exponent vector), e.g.
//! `3 - 2*sp^1*sm^1 + 1/2*z^-2`. Coefficients print as `n` or `a/b`; a unit
//! coefficient is omitted in front of a nonconstant monomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{LaurentPoly, Rational, RingError, Var};

fn fmt_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let vars = self.vars();
        for (i, (e, c)) in self.graded_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono: Vec<String> = vars
                .iter()
                .zip(e)
                .filter(|(_, &k)| k != 0)
                .map(|(v, k)| format!("{v}^{k}"))
                .collect();
            if mono.is_empty() {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Parses the canonical text form (and the looser forms a human would type:
/// omitted `^1`, arbitrary spacing, parenthesis-free products).
pub fn parse_poly(text: &str) -> Result<LaurentPoly, RingError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(RingError::Parse { pos: 0, msg: "empty polynomial".into() });
    }
    let bytes = s.as_bytes();
    let mut acc = LaurentPoly::zero();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = Rational::one();
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        } else if pos != 0 {
            return Err(RingError::Parse { pos, msg: "expected `+` or `-`".into() });
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos] != b'+' && !(bytes[pos] == b'-' && bytes[pos - 1] != b'^') {
            pos += 1;
        }
        let term = parse_term(&s[start..pos], start)?;
        acc += &term.scale(&sign);
    }
    Ok(acc)
}

fn parse_term(t: &str, offset: usize) -> Result<LaurentPoly, RingError> {
    if t.is_empty() {
        return Err(RingError::Parse { pos: offset, msg: "empty term".into() });
    }
    let mut out = LaurentPoly::one();
    let mut pos = offset;
    for factor in t.split('*') {
        if factor.is_empty() {
            return Err(RingError::Parse { pos, msg: "empty factor".into() });
        }
        if factor.chars().next().unwrap().is_ascii_digit() {
            let c = parse_rational(factor).ok_or_else(|| RingError::Parse { pos, msg: format!("bad coefficient `{factor}`") })?;
            out = out.scale(&c);
        } else {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: i32 = e.parse().map_err(|_| RingError::Parse { pos, msg: format!("bad exponent in `{factor}`") })?;
                    (n, e)
                }
                None => (factor, 1),
            };
            let v: Var = name.parse().map_err(|msg| RingError::Parse { pos, msg })?;
            out = out.shift(&[(v, exp)]);
        }
        pos += factor.len() + 1;
    }
    Ok(out)
}

fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub exp: Vec<i32>,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonPoly {
    pub vars: Vec<String>,
    pub terms: Vec<JsonTerm>,
}

impl From<&LaurentPoly> for JsonPoly {
    fn from(p: &LaurentPoly) -> Self {
        JsonPoly {
            vars: p.vars().iter().map(|v| v.name().to_string()).collect(),
            terms: p
                .graded_terms()
                .into_iter()
                .map(|(e, c)| JsonTerm { exp: e.clone(), num: c.numer().to_string(), den: c.denom().to_string() })
                .collect(),
        }
    }
}

impl TryFrom<&JsonPoly> for LaurentPoly {
    type Error = RingError;

    fn try_from(j: &JsonPoly) -> Result<Self, RingError> {
        let vars: Vec<Var> = j
            .vars
            .iter()
            .map(|s| s.parse::<Var>().map_err(|msg| RingError::Parse { pos: 0, msg }))
            .collect::<Result<_, _>>()?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.exp.len() != vars.len() {
                return Err(RingError::Parse { pos: 0, msg: "exponent arity mismatch".into() });
            }
            let c = parse_rational(&format!("{}/{}", t.num, t.den))
                .ok_or_else(|| RingError::Parse { pos: 0, msg: format!("bad coefficient {}/{}", t.num, t.den) })?;
            terms.push((t.exp.clone(), c));
        }
        Ok(LaurentPoly::from_terms(vars, terms))
    }
}

pub fn to_json(p: &LaurentPoly) -> String {
    serde_json::to_string(&JsonPoly::from(p)).expect("serializable")
}

pub fn from_json(s: &str) -> Result<LaurentPoly, RingError> {
    let j: JsonPoly = serde_json::from_str(s).map_err(|e| RingError::Parse { pos: e.column(), msg: e.to_string() })?;
    LaurentPoly::try_from(&j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::rat;

    #[test]
    fn canonical_text() {
        let p = parse_poly("3 - 2*sp*sm + 1/2*z^-2").unwrap();
        assert_eq!(p.to_string(), "1/2*z^-2 + 3 - 2*sp^1*sm^1");
        assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(parse_poly("-v^-1").unwrap().to_string(), "-v^-1");
    }

    #[test]
    fn json_round_trip() {
        let p = parse_poly("2*v^2 + v^2*z^2 - v^4").unwrap();
        let j = to_json(&p);
        assert_eq!(j, r#"{"vars":["v","z"],"terms":[{"exp":[2,0],"num":"2","den":"1"},{"exp":[2,2],"num":"1","den":"1"},{"exp":[4,0],"num":"-1","den":"1"}]}"#);
        assert_eq!(from_json(&j).unwrap(), p);
        assert_eq!(parse_poly("7/3").unwrap().constant_value(), Some(rat(7, 3)));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("").is_err());
        assert!(parse_poly("3*qq").is_err());
        assert!(parse_poly("1/0").is_err());
    }
}
