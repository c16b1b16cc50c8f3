//! Slot-linked diagrams for the recursions.
//!
//! Slot `4c + k` is slot `k` of crossing `c`; `link[s]` is the slot at the
//! other end of the edge leaving `s`. Slots 0 and 2 carry the under-strand.
//! Oriented diagrams keep slot 0 as the incoming under end and a sign per
//! crossing; unoriented ones store sign 0.

use crate::diagrams::{LinkDiagram, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Pd {
    pub link: Vec<u32>,
    pub sign: Vec<i8>,
    pub loops: u32,
}

/// A Reidemeister simplification found in a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Move {
    /// Curl at crossing `c` whose loop joins slots `k` and `k+1`; positive
    /// when `k` is even.
    R1 { c: usize, k: usize },
    /// Bigon between two crossings with the same strand on top.
    R2 { c1: usize, c2: usize },
}

impl Pd {
    pub fn from_diagram(d: &LinkDiagram, oriented: bool) -> Pd {
        let n = d.crossing_count();
        let mut link = vec![u32::MAX; 4 * n];
        let mut first: std::collections::HashMap<u32, u32> = std::collections::HashMap::new();
        for (c, x) in d.crossings().iter().enumerate() {
            for (k, &e) in x.iter().enumerate() {
                let s = (4 * c + k) as u32;
                if let Some(t) = first.remove(&e) {
                    link[s as usize] = t;
                    link[t as usize] = s;
                } else {
                    first.insert(e, s);
                }
            }
        }
        let sign = match (oriented, d.signs()) {
            (true, Some(s)) => s.iter().map(|x| if *x == Sign::Pos { 1 } else { -1 }).collect(),
            (true, None) => panic!("oriented evaluation of an unoriented diagram"),
            (false, _) => vec![0; n],
        };
        Pd { link, sign, loops: d.free_loops() as u32 }
    }

    pub fn n(&self) -> usize {
        self.sign.len()
    }

    pub fn oriented(&self) -> bool {
        self.sign.first().is_some_and(|&s| s != 0)
    }

    #[inline]
    fn connect(&mut self, a: u32, b: u32) {
        self.link[a as usize] = b;
        self.link[b as usize] = a;
    }

    /// Relabels crossing `c` so that new slot `k` is old slot `k + r`.
    fn rotate(&mut self, c: usize, r: usize) {
        let base = 4 * c;
        let pos = |j: usize| (j + 4 - r) % 4;
        let old: [u32; 4] = [0, 1, 2, 3].map(|j| self.link[base + j]);
        let mut new = [0u32; 4];
        for j in 0..4 {
            let p = old[j] as usize;
            if p / 4 == c {
                new[pos(j)] = (base + pos(p % 4)) as u32;
            } else {
                new[pos(j)] = p as u32;
                self.link[p] = (base + pos(j)) as u32;
            }
        }
        self.link[base..base + 4].copy_from_slice(&new);
    }

    /// Exchanges over and under at crossing `c`.
    pub fn switch(&mut self, c: usize) {
        match self.sign[c] {
            1 => {
                self.rotate(c, 3);
                self.sign[c] = -1;
            }
            -1 => {
                self.rotate(c, 1);
                self.sign[c] = 1;
            }
            _ => self.rotate(c, 1),
        }
    }

    /// Deletes the given crossings, joining their slots by the given pairings
    /// (`pair[k]` is the slot joined to slot `k`). Closed loops that form are
    /// returned rather than added.
    pub fn resolve(&mut self, cs: &[(usize, [usize; 4])]) -> u32 {
        let which = |s: u32| cs.iter().position(|&(c, _)| c == s as usize / 4);
        let pair_of = |s: u32| {
            let i = which(s).expect("removed slot");
            (4 * cs[i].0 + cs[i].1[s as usize % 4]) as u32
        };
        let mut visited = vec![false; 4 * cs.len()];
        let vidx = |s: u32| 4 * which(s).unwrap() + s as usize % 4;
        for &(c, _) in cs {
            for k in 0..4 {
                let i = (4 * c + k) as u32;
                if visited[vidx(i)] {
                    continue;
                }
                let x = self.link[i as usize];
                if which(x).is_some() {
                    continue;
                }
                visited[vidx(i)] = true;
                let mut j = pair_of(i);
                visited[vidx(j)] = true;
                let y = loop {
                    let y = self.link[j as usize];
                    if which(y).is_none() {
                        break y;
                    }
                    visited[vidx(y)] = true;
                    j = pair_of(y);
                    visited[vidx(j)] = true;
                };
                self.connect(x, y);
            }
        }
        let mut loops = 0;
        for &(c, _) in cs {
            for k in 0..4 {
                let i = (4 * c + k) as u32;
                if visited[vidx(i)] {
                    continue;
                }
                loops += 1;
                let mut j = i;
                loop {
                    visited[vidx(j)] = true;
                    let p = pair_of(j);
                    visited[vidx(p)] = true;
                    j = self.link[p as usize];
                    if j == i {
                        break;
                    }
                }
            }
        }
        let mut order: Vec<usize> = cs.iter().map(|t| t.0).collect();
        order.sort_unstable_by(|a, b| b.cmp(a));
        for c in order {
            self.delete(c);
        }
        loops
    }

    /// Removes crossing `c` (already disconnected) by moving the last crossing into its place.
    fn delete(&mut self, c: usize) {
        let last = self.n() - 1;
        if c != last {
            for k in 0..4 {
                let p = self.link[4 * last + k] as usize;
                let np = if p / 4 == last { 4 * c + p % 4 } else { p };
                self.link[4 * c + k] = np as u32;
                if p / 4 != last {
                    self.link[p] = (4 * c + k) as u32;
                }
            }
            self.sign[c] = self.sign[last];
        }
        self.link.truncate(4 * last);
        self.sign.truncate(last);
    }

    /// Smoothing of crossing `c` joining slots (0,1),(2,3) when `a` is true,
    /// (0,3),(1,2) otherwise.
    pub fn smooth(&self, c: usize, a: bool) -> Pd {
        let mut p = self.clone();
        let pairs = if a { [1, 0, 3, 2] } else { [3, 2, 1, 0] };
        p.loops += p.resolve(&[(c, pairs)]);
        p
    }

    /// The orientation-preserving smoothing.
    pub fn smooth_oriented(&self, c: usize) -> Pd {
        self.smooth(c, self.sign[c] > 0)
    }

    fn r1_at(&self, c: usize) -> Option<usize> {
        (0..4).find(|&k| self.link[4 * c + k] as usize == 4 * c + (k + 1) % 4)
    }

    fn r2_at(&self, c1: usize) -> Option<usize> {
        for k in 0..4 {
            let p = self.link[4 * c1 + k] as usize;
            let (c2, m1) = (p / 4, p % 4);
            if c2 == c1 || (k % 2) != (m1 % 2) {
                continue;
            }
            if self.link[4 * c1 + (k + 1) % 4] as usize == 4 * c2 + (m1 + 3) % 4 {
                return Some(c2);
            }
        }
        None
    }

    pub fn find_move(&self) -> Option<Move> {
        for c in 0..self.n() {
            if let Some(k) = self.r1_at(c) {
                return Some(Move::R1 { c, k });
            }
        }
        self.find_r2()
    }

    pub fn find_r2(&self) -> Option<Move> {
        (0..self.n()).find_map(|c1| self.r2_at(c1).map(|c2| Move::R2 { c1, c2 }))
    }

    /// An R2 move involving crossing `c` or one of its neighbours.
    pub fn r2_near(&self, c: usize) -> bool {
        if self.r2_at(c).is_some() {
            return true;
        }
        (0..4).any(|k| self.r2_at(self.link[4 * c + k] as usize / 4).is_some())
    }

    /// Applies a move; returns the curl sign for R1 (+1/-1) and 0 for R2.
    pub fn apply(&mut self, m: Move) -> i32 {
        match m {
            Move::R1 { c, k } => {
                let mut pairs = [0; 4];
                for (a, b) in [(k, (k + 1) % 4), ((k + 2) % 4, (k + 3) % 4)] {
                    pairs[a] = b;
                    pairs[b] = a;
                }
                let made = self.resolve(&[(c, pairs)]);
                self.loops += made - 1;
                if k % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
            Move::R2 { c1, c2 } => {
                let through = [2, 3, 0, 1];
                self.loops += self.resolve(&[(c1, through), (c2, through)]);
                0
            }
        }
    }

    /// Splits off the connected pieces, each with no free loops.
    pub fn pieces(&self) -> Vec<Pd> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let c = members[i];
                i += 1;
                for k in 0..4 {
                    let d = self.link[4 * c + k] as usize / 4;
                    if comp[d] == usize::MAX {
                        comp[d] = id;
                        members.push(d);
                    }
                }
            }
            out.push(members);
        }
        if out.len() == 1 {
            let mut p = self.clone();
            p.loops = 0;
            return vec![p];
        }
        out.into_iter()
            .map(|members| {
                let mut idx = vec![usize::MAX; n];
                for (i, &c) in members.iter().enumerate() {
                    idx[c] = i;
                }
                let mut link = Vec::with_capacity(4 * members.len());
                for &c in &members {
                    for k in 0..4 {
                        let p = self.link[4 * c + k] as usize;
                        link.push((4 * idx[p / 4] + p % 4) as u32);
                    }
                }
                Pd { link, sign: members.iter().map(|&c| self.sign[c]).collect(), loops: 0 }
            })
            .collect()
    }

    /// Canonical code of a connected diagram: the lexicographically least
    /// breadth-first relabelling over all roots.
    pub fn canonical_key(&self) -> Vec<u32> {
        let n = self.n();
        let oriented = self.oriented();
        let offsets: &[usize] = if oriented { &[0] } else { &[0, 2] };
        let mut best: Option<Vec<u32>> = None;
        let mut idx = vec![usize::MAX; n];
        let mut off = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        let mut code = Vec::with_capacity(5 * n + 1);
        for root in 0..n {
            for &o in offsets {
                idx.iter_mut().for_each(|x| *x = usize::MAX);
                order.clear();
                code.clear();
                code.push(n as u32);
                idx[root] = 0;
                off[root] = o;
                order.push(root);
                let mut i = 0;
                let mut worse = false;
                while i < order.len() {
                    let c = order[i];
                    i += 1;
                    if oriented {
                        code.push(if self.sign[c] > 0 { 1 } else { 2 });
                    }
                    for k in 0..4 {
                        let s = (k + off[c]) % 4;
                        let p = self.link[4 * c + s] as usize;
                        let (pc, ps) = (p / 4, p % 4);
                        if idx[pc] == usize::MAX {
                            idx[pc] = order.len();
                            off[pc] = if oriented { 0 } else { ps & 2 };
                            order.push(pc);
                        }
                        code.push((4 * idx[pc] + (ps + 4 - off[pc]) % 4) as u32);
                    }
                    if let Some(b) = &best {
                        let len = code.len();
                        if code[..] > b[..len] {
                            worse = true;
                            break;
                        }
                    }
                }
                if !worse && best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code.clone());
                }
            }
        }
        best.unwrap_or_else(|| vec![0])
    }
}

/// One pass of a strand through a crossing.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Visit {
    pub c: usize,
    pub over: bool,
    pub in_slot: usize,
}

impl Pd {
    /// Components as cyclic visit sequences. Oriented diagrams follow their
    /// orientation; unoriented ones an arbitrary direction.
    pub fn components(&self) -> Vec<Vec<Visit>> {
        let n = self.n();
        let mut used = vec![false; 4 * n];
        let mut out = Vec::new();
        for s0 in 0..4 * n {
            if used[s0] {
                continue;
            }
            let (c0, k0) = (s0 / 4, s0 % 4);
            let start = if self.oriented() {
                let is_in = match k0 {
                    0 => true,
                    2 => false,
                    1 => self.sign[c0] < 0,
                    _ => self.sign[c0] > 0,
                };
                if is_in {
                    s0
                } else {
                    4 * c0 + (k0 + 2) % 4
                }
            } else {
                s0
            };
            let mut comp = Vec::new();
            let mut cur = start;
            loop {
                let (c, k) = (cur / 4, cur % 4);
                used[cur] = true;
                used[4 * c + (k + 2) % 4] = true;
                comp.push(Visit { c, over: k % 2 == 1, in_slot: k });
                cur = self.link[4 * c + (k + 2) % 4] as usize;
                if cur == start {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }
}

/// Sign of a crossing given the in-slots of its two strands.
pub(crate) fn sign_from_slots(under_in: usize, over_in: usize) -> i8 {
    let o = if under_in == 2 { (over_in + 2) % 4 } else { over_in };
    if o == 3 {
        1
    } else {
        -1
    }
}
