use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::pd::{orient_with_hints, Edge, LinkDiagram, Port};
use super::DiagramError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CablePattern {
    Parallel2,
    Twist(i64),
    Turnback,
    Delete,
}

/// Relative direction of the two strands of an oriented cable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CableMode {
    Parallel,
    Antiparallel,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Copy {
    First,
    Second,
}

/// Ports of the four crossings replacing one parent crossing, laid out as
/// SW, SE, NE, NW with the parent's slots 0..4 at S, E, N, W.
fn grid_port(x: usize, slot: usize, copy: Copy) -> Port {
    let (corner, s) = match (slot, copy) {
        (0, Copy::First) => (0, 0),
        (0, Copy::Second) => (1, 0),
        (1, Copy::First) => (1, 1),
        (1, Copy::Second) => (2, 1),
        (2, Copy::First) => (2, 2),
        (2, Copy::Second) => (3, 2),
        (3, Copy::First) => (3, 3),
        (3, Copy::Second) => (0, 3),
        _ => unreachable!(),
    };
    (4 * x + corner, s)
}

#[derive(Default)]
struct Builder {
    ports: Vec<[Edge; 4]>,
    next: Edge,
    hints: Vec<(Edge, Port)>,
}

impl Builder {
    fn crossing(&mut self) -> usize {
        self.ports.push([0; 4]);
        self.ports.len() - 1
    }

    fn connect(&mut self, a: Port, b: Port) -> Edge {
        self.next += 1;
        let e = self.next;
        self.ports[a.0][a.1] = e;
        self.ports[b.0][b.1] = e;
        e
    }

    fn connect_from(&mut self, tail: Port, head: Port) {
        let e = self.connect(tail, head);
        self.hints.push((e, tail));
    }

    /// `k` twist crossings on a band entering at `(r, l)`; returns the exit
    /// ports `(r, l)` and the first edges of both strands.
    fn twists(&mut self, r: Option<Port>, l: Option<Port>, k: i64) -> ([Port; 2], [Port; 2]) {
        let mut first_in = None;
        let (mut r, mut l) = (r, l);
        for _ in 0..k.unsigned_abs() {
            let t = self.crossing();
            // slots of bottom-right, top-right, top-left, bottom-left
            let [br, tr, tl, bl] = if k > 0 { [0, 1, 2, 3] } else { [3, 0, 1, 2] };
            match (r, l) {
                (Some(rp), Some(lp)) => {
                    self.connect(rp, (t, br));
                    self.connect(lp, (t, bl));
                }
                _ => first_in = Some([(t, br), (t, bl)]),
            }
            r = Some((t, tr));
            l = Some((t, tl));
        }
        (
            [r.expect("at least one twist"), l.expect("at least one twist")],
            first_in.unwrap_or([(usize::MAX, 0); 2]),
        )
    }
}

impl LinkDiagram {
    /// Blackboard 2-cable with a pattern per component, inserted on each
    /// component's first (smallest) edge.
    pub fn cable2(&self, patterns: &BTreeMap<usize, CablePattern>, mode: CableMode) -> Result<LinkDiagram, DiagramError> {
        self.cable2_at(patterns, mode, &BTreeMap::new())
    }

    /// As [`LinkDiagram::cable2`], with the insertion edge of some components
    /// overridden.
    pub fn cable2_at(
        &self,
        patterns: &BTreeMap<usize, CablePattern>,
        mode: CableMode,
        insertion: &BTreeMap<usize, Edge>,
    ) -> Result<LinkDiagram, DiagramError> {
        let n = self.component_count();
        for c in 0..n {
            if !patterns.contains_key(&c) {
                return Err(DiagramError::PatternMissing(c));
            }
        }
        if let Some(c) = patterns.keys().find(|&&c| c >= n) {
            return Err(DiagramError::UnknownComponent(*c));
        }
        if self.is_oriented() {
            for (c, p) in patterns {
                match (mode, p) {
                    (CableMode::Parallel, CablePattern::Turnback) => {
                        return Err(DiagramError::PatternOrientation(format!(
                            "turnback on component {c} cannot carry parallel strands"
                        )))
                    }
                    (CableMode::Antiparallel, CablePattern::Twist(k)) if k % 2 != 0 => {
                        return Err(DiagramError::PatternOrientation(format!(
                            "odd twist on component {c} cannot carry antiparallel strands"
                        )))
                    }
                    _ => {}
                }
            }
        }
        let deleted: Vec<usize> = patterns.iter().filter(|(_, p)| **p == CablePattern::Delete).map(|(c, _)| *c).collect();
        let del = self.delete_components_mapped(&deleted)?;
        let d = &del.diagram;
        let mut pat: HashMap<usize, CablePattern> = HashMap::new();
        let mut site: HashMap<usize, Edge> = HashMap::new();
        for (old, new) in del.comp_map.iter().enumerate() {
            if let Some(new) = new {
                pat.insert(*new, patterns[&old]);
                if let Some(e) = insertion.get(&old) {
                    let mapped = del.edge_map.get(e).ok_or_else(|| {
                        DiagramError::Validation(format!("edge {e} does not lie on component {old}"))
                    })?;
                    site.insert(*new, *mapped);
                }
            }
        }

        let mut b = Builder::default();
        for _ in 0..4 * d.crossing_count() {
            b.crossing();
        }
        for x in 0..d.crossing_count() {
            let (sw, se, ne, nw) = (4 * x, 4 * x + 1, 4 * x + 2, 4 * x + 3);
            b.connect((sw, 1), (se, 3));
            b.connect((sw, 2), (nw, 0));
            b.connect((se, 2), (ne, 0));
            b.connect((nw, 1), (ne, 3));
        }
        let anti = mode == CableMode::Antiparallel;
        let ends = d.ends();
        let walks = d.walks();
        for (ci, w) in walks.iter().enumerate() {
            let pattern = pat[&ci];
            let host = match site.get(&ci) {
                Some(e) => {
                    if !w.edges.contains(e) {
                        return Err(DiagramError::Validation(format!("edge {e} does not lie on component {ci}")));
                    }
                    *e
                }
                None => w.edges[0],
            };
            for (&e, &tail) in w.edges.iter().zip(&w.exits) {
                let [a, bb] = ends[&e];
                let head = if a == tail { bb } else { a };
                let r_out = grid_port(tail.0, tail.1, Copy::First);
                let l_out = grid_port(tail.0, tail.1, Copy::Second);
                let r_in = grid_port(head.0, head.1, Copy::Second);
                let l_in = grid_port(head.0, head.1, Copy::First);
                if e != host {
                    b.connect_from(r_out, r_in);
                    if anti {
                        b.connect_from(l_in, l_out);
                    } else {
                        b.connect_from(l_out, l_in);
                    }
                    continue;
                }
                match pattern {
                    CablePattern::Parallel2 | CablePattern::Twist(0) => {
                        b.connect(r_out, r_in);
                        b.connect(l_out, l_in);
                    }
                    CablePattern::Twist(k) => {
                        let ([r, l], _) = b.twists(Some(r_out), Some(l_out), k);
                        b.connect(r, r_in);
                        b.connect(l, l_in);
                    }
                    CablePattern::Turnback => {
                        b.connect(r_out, l_out);
                        b.connect(l_in, r_in);
                    }
                    CablePattern::Delete => unreachable!("deleted before cabling"),
                }
            }
        }
        let mut free = 0;
        for ci in walks.len()..d.component_count() {
            match pat[&ci] {
                CablePattern::Parallel2 | CablePattern::Twist(0) => free += 2,
                CablePattern::Turnback => free += 1,
                CablePattern::Twist(k) => {
                    let ([r, l], [r0, l0]) = b.twists(None, None, k);
                    b.connect_from(r, r0);
                    if anti {
                        b.connect_from(l0, l);
                    } else {
                        b.connect_from(l, l0);
                    }
                }
                CablePattern::Delete => unreachable!("deleted before cabling"),
            }
        }
        let Builder { ports, hints, .. } = b;
        if self.is_oriented() {
            orient_with_hints(ports, free, &hints)
        } else {
            LinkDiagram::new(ports, None, free)
        }
    }
}
