use std::collections::{BTreeSet, HashMap};

use super::pd::{Edge, LinkDiagram, Port, Sign};
use super::DiagramError;

/// Whether two diagrams can be combined, and the orientedness of the result.
fn combined_orientation(d1: &LinkDiagram, d2: &LinkDiagram) -> Result<bool, DiagramError> {
    match (d1.crossing_count() == 0, d2.crossing_count() == 0) {
        (true, true) => Ok(d1.is_oriented() || d2.is_oriented()),
        (true, false) => Ok(d2.is_oriented()),
        (false, true) => Ok(d1.is_oriented()),
        (false, false) => {
            if d1.is_oriented() == d2.is_oriented() {
                Ok(d1.is_oriented())
            } else {
                Err(DiagramError::OrientationMismatch("cannot combine an oriented and an unoriented diagram".into()))
            }
        }
    }
}

fn other_end(ends: &[Port; 2], p: Port) -> Port {
    if ends[0] == p {
        ends[1]
    } else {
        ends[0]
    }
}

impl LinkDiagram {
    /// Reflects the diagram; every crossing changes sign.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self.crossings().iter().map(|&[a, b, c, d]| [a, d, c, b]).collect();
        let signs = self.signs().map(|s| s.iter().map(|x| x.flip()).collect());
        LinkDiagram::new_unchecked(crossings, signs, self.free_loops())
    }

    pub fn disjoint_union(&self, other: &LinkDiagram) -> Result<LinkDiagram, DiagramError> {
        let oriented = combined_orientation(self, other)?;
        let off = self.max_label();
        let shifted = other.map_labels(|e| e + off);
        let mut crossings = self.crossings().to_vec();
        crossings.extend_from_slice(shifted.crossings());
        let signs = oriented.then(|| {
            let mut s = self.signs().map(|s| s.to_vec()).unwrap_or_default();
            s.extend_from_slice(other.signs().unwrap_or(&[]));
            s
        });
        Ok(LinkDiagram::new_unchecked(crossings, signs, self.free_loops() + other.free_loops()))
    }

    fn without_one_loop(&self) -> LinkDiagram {
        let mut d = self.clone();
        *d.parts_mut().2 -= 1;
        d
    }

    /// Splices component `c1` of `self` with component `c2` of `other` by
    /// cutting the first edge of each and reconnecting head to head.
    pub fn connected_sum(&self, c1: usize, other: &LinkDiagram, c2: usize) -> Result<LinkDiagram, DiagramError> {
        let w1 = self.walks();
        let w2 = other.walks();
        if c1 >= w1.len() + self.free_loops() {
            return Err(DiagramError::UnknownComponent(c1));
        }
        if c2 >= w2.len() + other.free_loops() {
            return Err(DiagramError::UnknownComponent(c2));
        }
        combined_orientation(self, other)?;
        if c1 >= w1.len() {
            return self.without_one_loop().disjoint_union(other);
        }
        if c2 >= w2.len() {
            return self.disjoint_union(&other.without_one_loop());
        }
        let n1 = self.crossing_count();
        let mut sum = self.disjoint_union(other)?;
        let off = self.max_label();
        let ends1 = self.ends();
        let ends2 = other.ends();
        let (e1, t1) = (w1[c1].edges[0], w1[c1].exits[0]);
        let (e2, t2) = (w2[c2].edges[0], w2[c2].exits[0]);
        let h1 = other_end(&ends1[&e1], t1);
        let h2 = other_end(&ends2[&e2], t2);
        let crossings = sum.parts_mut().0;
        crossings[h1.0][h1.1] = e2 + off;
        crossings[n1 + h2.0][h2.1] = e1;
        debug_assert!(LinkDiagram::new(sum.crossings().to_vec(), sum.signs().map(|s| s.to_vec()), sum.free_loops()).is_ok());
        Ok(sum)
    }

    /// Inserts `|k|` curls of sign `k` on the first edge of `component`.
    pub fn add_kinks(&self, component: usize, k: i64) -> Result<LinkDiagram, DiagramError> {
        let walks = self.walks();
        if component >= walks.len() + self.free_loops() {
            return Err(DiagramError::UnknownComponent(component));
        }
        if k == 0 {
            return Ok(self.clone());
        }
        let sign = Sign::of(k);
        let mut d = self.clone();
        let mut remaining = k.unsigned_abs();
        let (edge, tail) = if component >= walks.len() {
            let e = d.max_label() + 1;
            let f = e + 1;
            let (crossings, signs, free) = d.parts_mut();
            *free -= 1;
            crossings.push(match sign {
                Sign::Pos => [e, e, f, f],
                Sign::Neg => [e, f, f, e],
            });
            if let Some(s) = signs.as_mut() {
                s.push(sign);
            }
            remaining -= 1;
            // e leaves the new crossing along the over-strand
            let slot = if sign == Sign::Pos { 1 } else { 3 };
            (e, (d.crossing_count() - 1, slot))
        } else {
            (walks[component].edges[0], walks[component].exits[0])
        };
        if remaining == 0 {
            return Ok(d);
        }
        let head = other_end(&d.ends()[&edge], tail);
        let mut next = d.max_label() + 1;
        let (crossings, signs, _) = d.parts_mut();
        let mut incoming = edge;
        for _ in 0..remaining {
            let (f, g) = (next, next + 1);
            next += 2;
            crossings.push(match sign {
                Sign::Pos => [incoming, g, f, f],
                Sign::Neg => [incoming, f, f, g],
            });
            if let Some(s) = signs.as_mut() {
                s.push(sign);
            }
            incoming = g;
        }
        crossings[head.0][head.1] = incoming;
        Ok(d)
    }

    /// Removes the listed components.
    pub fn delete_components(&self, components: &[usize]) -> Result<LinkDiagram, DiagramError> {
        Ok(self.delete_components_mapped(components)?.diagram)
    }

    pub(crate) fn delete_components_mapped(&self, components: &[usize]) -> Result<Deletion, DiagramError> {
        let walks = self.walks();
        let ncomp = walks.len() + self.free_loops();
        let deleted: BTreeSet<usize> = components.iter().copied().collect();
        if let Some(&c) = deleted.iter().find(|&&c| c >= ncomp) {
            return Err(DiagramError::UnknownComponent(c));
        }
        let mut parent: HashMap<Edge, Edge> = HashMap::new();
        fn find(parent: &mut HashMap<Edge, Edge>, e: Edge) -> Edge {
            let p = *parent.get(&e).unwrap_or(&e);
            if p == e {
                return e;
            }
            let r = find(parent, p);
            parent.insert(e, r);
            r
        }
        let mut kept = Vec::new();
        let mut kept_signs = Vec::new();
        for (i, (u, o)) in self.crossing_components().into_iter().enumerate() {
            let c = self.crossings()[i];
            let (du, dov) = (deleted.contains(&u), deleted.contains(&o));
            if !du && !dov {
                kept.push(c);
                if let Some(s) = self.signs() {
                    kept_signs.push(s[i]);
                }
                continue;
            }
            let strand = match (du, dov) {
                (false, true) => Some((c[0], c[2])),
                (true, false) => Some((c[1], c[3])),
                _ => None,
            };
            if let Some((x, y)) = strand {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
                    parent.insert(hi, lo);
                }
            }
        }
        let crossings: Vec<[Edge; 4]> = kept.iter().map(|c| c.map(|e| find(&mut parent, e))).collect();
        let present: BTreeSet<Edge> = crossings.iter().flatten().copied().collect();
        let mut edge_map = HashMap::new();
        let mut became_loops = Vec::new();
        for (i, w) in walks.iter().enumerate() {
            if deleted.contains(&i) {
                continue;
            }
            let rep = find(&mut parent, w.edges[0]);
            if present.contains(&rep) {
                for &e in &w.edges {
                    edge_map.insert(e, find(&mut parent, e));
                }
            } else {
                became_loops.push(i);
            }
        }
        let kept_free = (walks.len()..ncomp).filter(|c| !deleted.contains(c)).count();
        let signs = self.signs().map(|_| kept_signs);
        let diagram = LinkDiagram::new_unchecked(crossings, signs, kept_free + became_loops.len());
        let new_walks = diagram.walks();
        let first_edge: HashMap<Edge, usize> = new_walks.iter().enumerate().map(|(i, w)| (w.edges[0], i)).collect();
        let mut comp_map = vec![None; ncomp];
        let mut next_loop = new_walks.len();
        for (i, w) in walks.iter().enumerate() {
            if deleted.contains(&i) || became_loops.contains(&i) {
                continue;
            }
            comp_map[i] = Some(first_edge[&edge_map[&w.edges[0]]]);
        }
        for &i in &became_loops {
            comp_map[i] = Some(next_loop);
            next_loop += 1;
        }
        for (i, slot) in comp_map.iter_mut().enumerate().skip(walks.len()) {
            if !deleted.contains(&i) {
                *slot = Some(next_loop);
                next_loop += 1;
            }
        }
        Ok(Deletion { diagram, comp_map, edge_map })
    }
}

pub(crate) struct Deletion {
    pub diagram: LinkDiagram,
    /// Old component index to new component index.
    pub comp_map: Vec<Option<usize>>,
    /// Old edge label to new label, for surviving components with crossings.
    pub edge_map: HashMap<Edge, Edge>,
}
