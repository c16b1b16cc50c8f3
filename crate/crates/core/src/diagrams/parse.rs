//! Text and JSON input.
//!
//! Text grammar (whitespace ignored):
//!
//! ```text
//! input   := braid | pd
//! braid   := "braid:" n ":[" [int ("," int)*] "]"
//! pd      := item (";" item)*
//! item    := "X[" e "," e "," e "," e "]" | "O:" k | "orient:[" [sign ("," sign)*] "]"
//! sign    := "+" | "-"
//! ```
//!
//! With an `orient` block (one sign per crossing, in order) the diagram is
//! oriented and slot 0 of every crossing must be its incoming under end.
//! Without one it is unoriented. JSON mirrors the same data:
//! `{"crossings":[[a,b,c,d],...],"signs":["+",...]|null,"free_loops":k}` or
//! `{"strands":n,"word":[...]}` for a braid.

use serde::{Deserialize, Serialize};

use super::braid::BraidWord;
use super::pd::{Edge, LinkDiagram, Sign};
use super::DiagramError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParsedInput {
    Braid(BraidWord),
    Diagram(LinkDiagram),
}

impl ParsedInput {
    pub fn into_diagram(self) -> LinkDiagram {
        match self {
            ParsedInput::Braid(b) => b.closure(),
            ParsedInput::Diagram(d) => d,
        }
    }
}

fn perr(pos: usize, msg: impl Into<String>) -> DiagramError {
    DiagramError::Parse { pos, msg: msg.into() }
}

/// Parses a braid word or PD code.
pub fn parse_diagram(text: &str) -> Result<ParsedInput, DiagramError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(rest) = s.strip_prefix("braid:") {
        let (n, list) = rest.split_once(':').ok_or_else(|| perr(6, "expected `braid:n:[...]`"))?;
        let strands: usize = n.parse().map_err(|_| perr(6, format!("bad strand count `{n}`")))?;
        let off = 7 + n.len();
        let word = parse_list(list, off, |t, p| t.parse::<i32>().map_err(|_| perr(p, format!("bad generator `{t}`"))))?;
        return Ok(ParsedInput::Braid(BraidWord::new(strands, word)?));
    }
    if s.is_empty() {
        return Err(perr(0, "empty input"));
    }
    let mut crossings: Vec<[Edge; 4]> = Vec::new();
    let mut signs: Option<Vec<Sign>> = None;
    let mut free = 0usize;
    let mut pos = 0;
    for item in s.split(';') {
        if let Some(body) = item.strip_prefix('X') {
            let v = parse_list(body, pos + 1, |t, p| t.parse::<Edge>().map_err(|_| perr(p, format!("bad edge label `{t}`"))))?;
            let c: [Edge; 4] = v.try_into().map_err(|_| perr(pos, "a crossing needs exactly 4 edge ends"))?;
            crossings.push(c);
        } else if let Some(k) = item.strip_prefix("O:") {
            free += k.parse::<usize>().map_err(|_| perr(pos + 2, format!("bad loop count `{k}`")))?;
        } else if let Some(body) = item.strip_prefix("orient:") {
            if signs.is_some() {
                return Err(perr(pos, "duplicate orient block"));
            }
            let v = parse_list(body, pos + 7, |t, p| match t {
                "+" => Ok(Sign::Pos),
                "-" => Ok(Sign::Neg),
                _ => Err(perr(p, format!("bad sign `{t}`"))),
            })?;
            signs = Some(v);
        } else {
            return Err(perr(pos, format!("unexpected item `{item}`")));
        }
        pos += item.len() + 1;
    }
    Ok(ParsedInput::Diagram(LinkDiagram::new(crossings, signs, free)?))
}

fn parse_list<T>(
    body: &str,
    offset: usize,
    item: impl Fn(&str, usize) -> Result<T, DiagramError>,
) -> Result<Vec<T>, DiagramError> {
    let inner = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| perr(offset, "expected a bracketed list"))?;
    if inner.is_empty() {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let mut p = offset + 1;
    for t in inner.split(',') {
        out.push(item(t, p)?);
        p += t.len() + 1;
    }
    Ok(out)
}

pub fn diagram_to_json(d: &LinkDiagram) -> String {
    serde_json::to_string(d).expect("serializable")
}

pub fn diagram_from_json(s: &str) -> Result<ParsedInput, DiagramError> {
    serde_json::from_str::<ParsedInput>(s).map_err(|e| perr(e.column(), e.to_string()))
}
