//! Choice of base points and component order for the descending recursion.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::pd::{sign_from_slots, Pd, Visit};

/// Crossings met first from below, in traversal order, plus what the
/// descending diagram left after switching all of them looks like.
#[derive(Clone, Debug)]
pub(crate) struct Plan {
    pub bad: Vec<usize>,
    pub components: u32,
    /// Sum of self-crossing signs once every bad crossing is switched.
    pub final_self_writhe: i64,
}

fn reversed(comp: &[Visit]) -> Vec<Visit> {
    comp.iter().rev().map(|v| Visit { c: v.c, over: v.over, in_slot: (v.in_slot + 2) % 4 }).collect()
}

/// Number of self-crossings first met from below when starting at `base`.
fn self_bad(comp: &[Visit], base: usize, owner: &[usize], me: usize) -> usize {
    let len = comp.len();
    let mut seen = std::collections::HashSet::new();
    let mut bad = 0;
    for i in 0..len {
        let v = comp[(base + i) % len];
        if owner[v.c] != usize::MAX - 1 - me {
            continue;
        }
        if seen.insert(v.c) && !v.over {
            bad += 1;
        }
    }
    bad
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub(crate) fn plan(pd: &Pd, rng: Option<&mut ChaCha8Rng>) -> Plan {
    let n = pd.n();
    let mut comps = pd.components();
    let oriented = pd.oriented();
    // owner[c]: the component of a self-crossing encoded as MAX-1-k, or
    // MAX for a crossing between two components.
    let mut first_comp = vec![usize::MAX; n];
    let mut owner = vec![usize::MAX; n];
    for (k, comp) in comps.iter().enumerate() {
        for v in comp {
            if first_comp[v.c] == usize::MAX {
                first_comp[v.c] = k;
            } else if first_comp[v.c] == k {
                owner[v.c] = usize::MAX - 1 - k;
            }
        }
    }
    let mut rng = rng;
    // base point (and direction, if free) per component
    let mut bases = Vec::with_capacity(comps.len());
    for (k, comp) in comps.iter_mut().enumerate() {
        let mut candidates: Vec<(usize, bool)> = (0..comp.len()).map(|b| (b, false)).collect();
        if !oriented {
            candidates.extend((0..comp.len()).map(|b| (b, true)));
        }
        let chosen = match rng.as_deref_mut() {
            Some(r) => candidates[r.gen_range(0..candidates.len())],
            None => {
                let rev = reversed(comp);
                *candidates
                    .iter()
                    .min_by_key(|&&(b, flip)| self_bad(if flip { &rev } else { comp }, b, &owner, k))
                    .expect("nonempty component")
            }
        };
        if chosen.1 {
            *comp = reversed(comp);
        }
        bases.push(chosen.0);
    }
    // component order: earlier components should pass over later ones
    let m = comps.len();
    let mut under_of = vec![vec![0usize; m]; m];
    {
        let mut comp_of_under = vec![usize::MAX; n];
        let mut comp_of_over = vec![usize::MAX; n];
        for (k, comp) in comps.iter().enumerate() {
            for v in comp {
                if v.over {
                    comp_of_over[v.c] = k;
                } else {
                    comp_of_under[v.c] = k;
                }
            }
        }
        for c in 0..n {
            let (u, o) = (comp_of_under[c], comp_of_over[c]);
            if u != o {
                under_of[u][o] += 1;
            }
        }
    }
    let order: Vec<usize> = match rng.as_deref_mut() {
        Some(r) => {
            let mut o: Vec<usize> = (0..m).collect();
            o.shuffle(r);
            o
        }
        None if m <= 6 => permutations(m)
            .into_iter()
            .min_by_key(|p| {
                let mut cost = 0;
                for i in 0..m {
                    for j in i + 1..m {
                        cost += under_of[p[i]][p[j]];
                    }
                }
                (cost, p.clone())
            })
            .expect("at least one order"),
        None => (0..m).collect(),
    };
    let mut seen = vec![false; n];
    let mut bad = Vec::new();
    let mut under_in = vec![0usize; n];
    let mut over_in = vec![0usize; n];
    for &k in &order {
        let comp = &comps[k];
        for i in 0..comp.len() {
            let v = comp[(bases[k] + i) % comp.len()];
            if v.over {
                over_in[v.c] = v.in_slot;
            } else {
                under_in[v.c] = v.in_slot;
            }
            if !seen[v.c] {
                seen[v.c] = true;
                if !v.over {
                    bad.push(v.c);
                }
            }
        }
    }
    let mut is_bad = vec![false; n];
    for &c in &bad {
        is_bad[c] = true;
    }
    let mut w = 0i64;
    for c in 0..n {
        if owner[c] != usize::MAX {
            let s = sign_from_slots(under_in[c], over_in[c]) as i64;
            w += if is_bad[c] { -s } else { s };
        }
    }
    Plan { bad, components: m as u32, final_self_writhe: w }
}
