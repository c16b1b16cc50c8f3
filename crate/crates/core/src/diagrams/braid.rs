use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::pd::{Edge, LinkDiagram, Sign};
use super::DiagramError;

/// A braid word on `strands` strands; letter `i` is σ_i, `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBraid")]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

#[derive(Deserialize)]
struct RawBraid {
    strands: usize,
    word: Vec<i32>,
}

impl TryFrom<RawBraid> for BraidWord {
    type Error = DiagramError;
    fn try_from(r: RawBraid) -> Result<Self, DiagramError> {
        BraidWord::new(r.strands, r.word)
    }
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<BraidWord, DiagramError> {
        if strands == 0 {
            return Err(DiagramError::Validation("a braid needs at least one strand".into()));
        }
        for &g in &word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(DiagramError::Validation(format!("generator {g} out of range for {strands} strands")));
            }
        }
        Ok(BraidWord { strands, word })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    /// Trace closure with all strands running downward.
    pub fn closure(&self) -> LinkDiagram {
        braid_closure(self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.word.iter().map(|g| g.to_string()).collect();
        write!(f, "braid:{}:[{}]", self.strands, w.join(","))
    }
}

pub fn braid_closure(b: &BraidWord) -> LinkDiagram {
    let n = b.strands;
    let mut cur: Vec<Edge> = (1..=n as Edge).collect();
    let mut next = n as Edge + 1;
    let mut crossings = Vec::with_capacity(b.word.len());
    let mut signs = Vec::with_capacity(b.word.len());
    for &g in &b.word {
        let i = g.unsigned_abs() as usize;
        let (a, bb) = (cur[i - 1], cur[i]);
        let (c, d) = (next, next + 1);
        next += 2;
        if g > 0 {
            crossings.push([a, c, d, bb]);
            signs.push(Sign::Pos);
        } else {
            crossings.push([bb, a, c, d]);
            signs.push(Sign::Neg);
        }
        cur[i - 1] = c;
        cur[i] = d;
    }
    let mut close: HashMap<Edge, Edge> = HashMap::new();
    let mut free = 0;
    for (i, &e) in cur.iter().enumerate() {
        let top = i as Edge + 1;
        if e == top {
            free += 1;
        } else {
            close.insert(e, top);
        }
    }
    for c in crossings.iter_mut() {
        for e in c.iter_mut() {
            if let Some(&t) = close.get(e) {
                *e = t;
            }
        }
    }
    LinkDiagram::new_unchecked(crossings, Some(signs), free).compact_labels()
}
