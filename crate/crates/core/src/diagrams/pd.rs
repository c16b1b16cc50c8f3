use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::DiagramError;

pub type Edge = u32;

/// A crossing slot: (crossing index, slot 0..4).
pub type Port = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Pos,
    #[serde(rename = "-")]
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn of(k: i64) -> Sign {
        if k >= 0 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

/// Planar diagram code.
///
/// Each crossing lists its four edge ends counterclockwise. Slots 0 and 2
/// belong to the under-strand, 1 and 3 to the over-strand. In an oriented
/// diagram slot 0 is the incoming under end and the sign says which way the
/// over-strand runs: `Pos` when it enters at slot 3 and leaves at slot 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinkDiagram {
    crossings: Vec<[Edge; 4]>,
    signs: Option<Vec<Sign>>,
    free_loops: usize,
}

#[derive(Deserialize)]
struct RawDiagram {
    crossings: Vec<[Edge; 4]>,
    #[serde(default)]
    signs: Option<Vec<Sign>>,
    #[serde(default)]
    free_loops: usize,
}

impl<'de> Deserialize<'de> for LinkDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let raw = RawDiagram::deserialize(de)?;
        LinkDiagram::new(raw.crossings, raw.signs, raw.free_loops).map_err(serde::de::Error::custom)
    }
}

/// A closed walk through the diagram: `edges[i]` leaves crossing slot `exits[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub exits: Vec<Port>,
    pub edges: Vec<Edge>,
}

/// Writhe and linking data of an oriented diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WritheData {
    pub total: i64,
    pub linking: Vec<Vec<i64>>,
    pub diagonal: i64,
}

pub(crate) fn is_out_slot(slot: usize, sign: Sign) -> bool {
    match slot {
        0 => false,
        2 => true,
        1 => sign == Sign::Pos,
        _ => sign == Sign::Neg,
    }
}

impl LinkDiagram {
    pub fn new(crossings: Vec<[Edge; 4]>, signs: Option<Vec<Sign>>, free_loops: usize) -> Result<LinkDiagram, DiagramError> {
        let d = LinkDiagram { crossings, signs, free_loops };
        d.validate()?;
        Ok(d)
    }

    pub(crate) fn new_unchecked(crossings: Vec<[Edge; 4]>, signs: Option<Vec<Sign>>, free_loops: usize) -> LinkDiagram {
        let d = LinkDiagram { crossings, signs, free_loops };
        debug_assert!(d.validate().is_ok(), "{:?}", d.validate());
        d
    }

    pub fn empty() -> LinkDiagram {
        LinkDiagram { crossings: vec![], signs: Some(vec![]), free_loops: 0 }
    }

    /// `n` crossingless circles, oriented.
    pub fn unlink(n: usize) -> LinkDiagram {
        LinkDiagram { crossings: vec![], signs: Some(vec![]), free_loops: n }
    }

    pub fn unknot() -> LinkDiagram {
        Self::unlink(1)
    }

    fn validate(&self) -> Result<(), DiagramError> {
        if let Some(s) = &self.signs {
            if s.len() != self.crossings.len() {
                return Err(DiagramError::Validation(format!(
                    "{} signs for {} crossings",
                    s.len(),
                    self.crossings.len()
                )));
            }
        }
        let mut count: BTreeMap<Edge, usize> = BTreeMap::new();
        for c in &self.crossings {
            for &e in c {
                *count.entry(e).or_default() += 1;
            }
        }
        for (e, n) in &count {
            if *n != 2 {
                return Err(DiagramError::Validation(format!("edge {e} has {n} ends (dangling or overused edge end)")));
            }
        }
        if let Some(signs) = &self.signs {
            let ends = self.ends();
            for (e, [a, b]) in &ends {
                let oa = is_out_slot(a.1, signs[a.0]);
                let ob = is_out_slot(b.1, signs[b.0]);
                if oa == ob {
                    return Err(DiagramError::Validation(format!(
                        "edge {e} has two {} ends",
                        if oa { "outgoing" } else { "incoming" }
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn crossings(&self) -> &[[Edge; 4]] {
        &self.crossings
    }

    pub fn signs(&self) -> Option<&[Sign]> {
        self.signs.as_deref()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn is_oriented(&self) -> bool {
        self.signs.is_some()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty() && self.free_loops == 0
    }

    pub fn edges(&self) -> Vec<Edge> {
        let set: BTreeSet<Edge> = self.crossings.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    pub(crate) fn max_label(&self) -> Edge {
        self.crossings.iter().flatten().copied().max().unwrap_or(0)
    }

    /// The same diagram without orientation data.
    pub fn unoriented(&self) -> LinkDiagram {
        LinkDiagram { crossings: self.crossings.clone(), signs: None, free_loops: self.free_loops }
    }

    /// Both ends of every edge, each sorted by (crossing, slot).
    pub(crate) fn ends(&self) -> BTreeMap<Edge, [Port; 2]> {
        let mut tmp: BTreeMap<Edge, Vec<Port>> = BTreeMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            for (s, &e) in c.iter().enumerate() {
                tmp.entry(e).or_default().push((i, s));
            }
        }
        tmp.into_iter().map(|(e, v)| (e, [v[0], v[1]])).collect()
    }

    /// The port an edge leaves from: the out end if oriented, otherwise the
    /// smaller of its two ends.
    pub(crate) fn tail(&self, ends: &[Port; 2]) -> Port {
        match &self.signs {
            Some(s) => {
                if is_out_slot(ends[0].1, s[ends[0].0]) {
                    ends[0]
                } else {
                    ends[1]
                }
            }
            None => ends[0],
        }
    }

    /// Closed walks of all components with crossings, ordered by smallest edge,
    /// each starting on that edge.
    pub fn walks(&self) -> Vec<Walk> {
        let ends = self.ends();
        let mut seen: BTreeSet<Edge> = BTreeSet::new();
        let mut out = Vec::new();
        for (&e0, en) in &ends {
            if seen.contains(&e0) {
                continue;
            }
            let start = self.tail(en);
            let mut walk = Walk { exits: vec![], edges: vec![] };
            let mut exit = start;
            loop {
                let e = self.crossings[exit.0][exit.1];
                seen.insert(e);
                walk.exits.push(exit);
                walk.edges.push(e);
                let [a, b] = ends[&e];
                let arrive = if a == exit { b } else { a };
                exit = (arrive.0, (arrive.1 + 2) % 4);
                if exit == start {
                    break;
                }
            }
            out.push(walk);
        }
        out
    }

    /// Components as edge lists in walk order; free loops come last as empty lists.
    pub fn components(&self) -> Vec<Vec<Edge>> {
        let mut out: Vec<Vec<Edge>> = self.walks().into_iter().map(|w| w.edges).collect();
        out.extend(std::iter::repeat_n(Vec::new(), self.free_loops));
        out
    }

    pub fn component_count(&self) -> usize {
        self.walks().len() + self.free_loops
    }

    pub(crate) fn edge_components(&self) -> HashMap<Edge, usize> {
        let mut m = HashMap::new();
        for (i, w) in self.walks().iter().enumerate() {
            for &e in &w.edges {
                m.insert(e, i);
            }
        }
        m
    }

    /// Component of the under- and over-strand at every crossing.
    pub fn crossing_components(&self) -> Vec<(usize, usize)> {
        let comp = self.edge_components();
        self.crossings.iter().map(|c| (comp[&c[0]], comp[&c[1]])).collect()
    }

    pub fn writhe_data(&self) -> Result<WritheData, DiagramError> {
        let signs = self.signs.as_ref().ok_or(DiagramError::Unoriented)?;
        let n = self.component_count();
        let mut twice = vec![vec![0i64; n]; n];
        for ((u, o), s) in self.crossing_components().into_iter().zip(signs) {
            if u == o {
                twice[u][u] += 2 * s.value();
            } else {
                twice[u][o] += s.value();
                twice[o][u] += s.value();
            }
        }
        let mut linking = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                if twice[i][j] % 2 != 0 {
                    return Err(DiagramError::Validation(format!("odd crossing count between components {i} and {j}")));
                }
                linking[i][j] = twice[i][j] / 2;
            }
        }
        let total = signs.iter().map(|s| s.value()).sum();
        let diagonal = (0..n).map(|i| linking[i][i]).sum();
        Ok(WritheData { total, linking, diagonal })
    }

    pub fn writhe(&self) -> Result<i64, DiagramError> {
        Ok(self.signs.as_ref().ok_or(DiagramError::Unoriented)?.iter().map(|s| s.value()).sum())
    }

    /// Renumbers edges 1..=E keeping their relative order.
    pub fn compact_labels(&self) -> LinkDiagram {
        let map: HashMap<Edge, Edge> = self.edges().into_iter().zip(1..).collect();
        let crossings = self.crossings.iter().map(|c| c.map(|e| map[&e])).collect();
        LinkDiagram { crossings, signs: self.signs.clone(), free_loops: self.free_loops }
    }

    pub(crate) fn map_labels(&self, f: impl Fn(Edge) -> Edge) -> LinkDiagram {
        let crossings = self.crossings.iter().map(|c| c.map(&f)).collect();
        LinkDiagram { crossings, signs: self.signs.clone(), free_loops: self.free_loops }
    }

    pub(crate) fn parts_mut(&mut self) -> (&mut Vec<[Edge; 4]>, &mut Option<Vec<Sign>>, &mut usize) {
        (&mut self.crossings, &mut self.signs, &mut self.free_loops)
    }
}

/// Orients an unoriented crossing list so that each hinted edge leaves from
/// the hinted port. Components without hints follow their default walk.
pub(crate) fn orient_with_hints(
    crossings: Vec<[Edge; 4]>,
    free_loops: usize,
    hints: &[(Edge, Port)],
) -> Result<LinkDiagram, DiagramError> {
    let base = LinkDiagram::new_unchecked(crossings, None, free_loops);
    let ends = base.ends();
    let mut tail_of: HashMap<Edge, Port> = HashMap::new();
    let walk_from = |start: Port, tail_of: &mut HashMap<Edge, Port>| {
        let mut exit = start;
        loop {
            let e = base.crossings[exit.0][exit.1];
            if tail_of.insert(e, exit).is_some() {
                return;
            }
            let [a, b] = ends[&e];
            let arrive = if a == exit { b } else { a };
            exit = (arrive.0, (arrive.1 + 2) % 4);
            if exit == start {
                return;
            }
        }
    };
    for &(e, p) in hints {
        match tail_of.get(&e) {
            Some(&t) if t != p => {
                return Err(DiagramError::PatternOrientation(format!("edge {e} would need both directions")));
            }
            Some(_) => {}
            None => walk_from(p, &mut tail_of),
        }
    }
    for (e, en) in &ends {
        if !tail_of.contains_key(e) {
            walk_from(en[0], &mut tail_of);
        }
    }
    let mut crossings = base.crossings.clone();
    let mut signs = Vec::with_capacity(crossings.len());
    for (i, c) in crossings.iter_mut().enumerate() {
        let incoming = |s: usize| tail_of[&c[s]] != (i, s);
        let (in0, in1, in2, in3) = (incoming(0), incoming(1), incoming(2), incoming(3));
        if in0 == in2 || in1 == in3 {
            return Err(DiagramError::PatternOrientation(format!("crossing {i} has inconsistent strand directions")));
        }
        let (over_in3, rotate) = if in0 { (in3, false) } else { (in1, true) };
        if rotate {
            *c = [c[2], c[3], c[0], c[1]];
        }
        signs.push(if over_in3 { Sign::Pos } else { Sign::Neg });
    }
    LinkDiagram::new(crossings, Some(signs), free_loops)
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> =
            self.crossings.iter().map(|c| format!("X[{},{},{},{}]", c[0], c[1], c[2], c[3])).collect();
        if self.free_loops > 0 || self.crossings.is_empty() {
            parts.push(format!("O:{}", self.free_loops));
        }
        if let Some(s) = &self.signs {
            let body: Vec<&str> = s.iter().map(|s| if *s == Sign::Pos { "+" } else { "-" }).collect();
            parts.push(format!("orient:[{}]", body.join(",")));
        }
        f.write_str(&parts.join(";"))
    }
}
