//! Memoized skein recursion shared by the HOMFLY-PT and Kauffman engines.
//!
//! A diagram is first simplified by Reidemeister I/II moves and split into
//! connected pieces. Each piece is looked up by its canonical code; on a miss
//! the base points are chosen to make as many crossings as possible
//! descending, and the remaining ("bad") crossings are switched one after the
//! other. Every switch spawns smoothing children, evaluated recursively and in
//! parallel when enabled; the fully switched diagram is a stacked unlink whose
//! value is known in closed form.

mod pd;
mod plan;
mod poly;

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering};

use dashmap::DashMap;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::diagrams::LinkDiagram;
use crate::rings::{LaurentPoly, RatFunc, Var};

pub(crate) use pd::Pd;
pub(crate) use poly::Poly;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Diagrams smaller than this are evaluated sequentially even when parallel.
const PARALLEL_MIN_CROSSINGS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkeinConfig {
    pub memo: bool,
    pub parallel: bool,
    pub budget: u64,
    /// When set, base points and component order are drawn at random (seeded
    /// per diagram) instead of optimized.
    pub shuffle_seed: Option<u64>,
}

impl Default for SkeinConfig {
    fn default() -> Self {
        SkeinConfig { memo: true, parallel: cfg!(feature = "parallel"), budget: DEFAULT_NODE_BUDGET, shuffle_seed: None }
    }
}

impl SkeinConfig {
    pub fn sequential() -> Self {
        SkeinConfig { parallel: false, ..Default::default() }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EngineStats {
    pub nodes: u64,
    pub memo_hits: u64,
    pub memo_entries: u64,
}

impl fmt::Display for EngineStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} nodes, {} memo entries, {} memo hits", self.nodes, self.memo_entries, self.memo_hits)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SkeinError {
    #[error("node budget of {budget} exceeded after {stats}")]
    ResourceLimit { budget: u64, stats: EngineStats },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    /// Oriented, ambient isotopy: variables v, z.
    Homfly,
    /// Unoriented, regular isotopy: variables alpha, s and a formal circle d.
    Kauffman,
}

pub struct SkeinEngine {
    theory: Theory,
    config: SkeinConfig,
    memo: DashMap<Vec<u32>, Poly>,
    nodes: AtomicU64,
    hits: AtomicU64,
}

fn mu() -> Poly {
    Poly::mono([-1, -1, 0], 1).sub(&Poly::mono([1, -1, 0], 1))
}

fn kz() -> Poly {
    Poly::mono([0, 1, 0], 1).sub(&Poly::mono([0, -1, 0], 1))
}

impl SkeinEngine {
    pub fn new(theory: Theory, config: SkeinConfig) -> SkeinEngine {
        SkeinEngine { theory, config, memo: DashMap::new(), nodes: AtomicU64::new(0), hits: AtomicU64::new(0) }
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn config(&self) -> &SkeinConfig {
        &self.config
    }

    pub fn stats(&self) -> EngineStats {
        EngineStats {
            nodes: self.nodes.load(Ordering::Relaxed),
            memo_hits: self.hits.load(Ordering::Relaxed),
            memo_entries: self.memo.len() as u64,
        }
    }

    /// HOMFLY-PT polynomial of a nonempty oriented diagram, in v and z.
    pub(crate) fn homfly(&self, d: &LinkDiagram) -> Result<LaurentPoly, SkeinError> {
        assert_eq!(self.theory, Theory::Homfly);
        let p = self.eval(Pd::from_diagram(d, true))?;
        Ok(p.to_laurent(&[Var::V, Var::Z]))
    }

    /// Kauffman value with the circle left formal: a polynomial in alpha, s, d.
    pub(crate) fn kauffman_formal(&self, d: &LinkDiagram) -> Result<LaurentPoly, SkeinError> {
        assert_eq!(self.theory, Theory::Kauffman);
        let p = self.eval(Pd::from_diagram(d, false))?;
        Ok(p.to_laurent(&[Var::Alpha, Var::S, Var::Delta]))
    }

    pub(crate) fn kauffman(&self, d: &LinkDiagram) -> Result<RatFunc, SkeinError> {
        Ok(substitute_circle(&self.kauffman_formal(d)?))
    }

    fn eval(&self, mut pd: Pd) -> Result<Poly, SkeinError> {
        let mut factor_alpha = 0i32;
        while let Some(m) = pd.find_move() {
            let s = pd.apply(m);
            factor_alpha += s;
        }
        let pieces = if pd.n() == 0 { vec![] } else { pd.pieces() };
        let mut value = match self.theory {
            Theory::Homfly => {
                let k = pieces.len() as u32 + pd.loops;
                debug_assert!(k > 0, "HOMFLY of the empty diagram");
                mu().pow(k.saturating_sub(1))
            }
            Theory::Kauffman => Poly::mono([factor_alpha, 0, pd.loops as i32], 1),
        };
        for piece in pieces {
            if value.is_zero() {
                break;
            }
            value = value.mul(&self.eval_piece(piece)?);
        }
        Ok(value)
    }

    fn eval_piece(&self, pd: Pd) -> Result<Poly, SkeinError> {
        if !self.config.memo {
            return self.chain(pd);
        }
        let key = pd.canonical_key();
        if let Some(v) = self.memo.get(&key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(v.clone());
        }
        let v = self.chain(pd)?;
        self.memo.insert(key, v.clone());
        Ok(v)
    }

    fn rng_for(&self, pd: &Pd) -> Option<ChaCha8Rng> {
        self.config.shuffle_seed.map(|seed| {
            let mut h = DefaultHasher::new();
            pd.link.hash(&mut h);
            pd.sign.hash(&mut h);
            ChaCha8Rng::seed_from_u64(seed ^ h.finish())
        })
    }

    fn tick(&self) -> Result<(), SkeinError> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.config.budget {
            return Err(SkeinError::ResourceLimit { budget: self.config.budget, stats: self.stats() });
        }
        Ok(())
    }

    fn chain(&self, pd: Pd) -> Result<Poly, SkeinError> {
        self.tick()?;
        let mut rng = self.rng_for(&pd);
        let plan = plan::plan(&pd, rng.as_mut());
        let leaf = |plan: &plan::Plan| match self.theory {
            Theory::Homfly => mu().pow(plan.components - 1),
            Theory::Kauffman => Poly::mono([plan.final_self_writhe as i32, 0, plan.components as i32], 1),
        };
        if plan.bad.is_empty() {
            return Ok(leaf(&plan));
        }
        let mut children: Vec<(Poly, Pd)> = Vec::new();
        let mut cur = pd.clone();
        let mut prefix = Poly::one();
        let mut rest: Option<Pd> = None;
        for (i, &c) in plan.bad.iter().enumerate() {
            if i > 0 && cur.r2_near(plan.bad[i - 1]) {
                rest = Some(cur.clone());
                break;
            }
            match self.theory {
                Theory::Homfly => {
                    let e = cur.sign[c] as i32;
                    children.push((prefix.scale([e, 1, 0], e as i128), cur.smooth_oriented(c)));
                    prefix = prefix.scale([2 * e, 0, 0], 1);
                }
                Theory::Kauffman => {
                    let zp = prefix.mul(&kz());
                    children.push((zp.clone(), cur.smooth(c, true)));
                    children.push((zp.scale([0, 0, 0], -1), cur.smooth(c, false)));
                }
            }
            cur.switch(c);
        }
        let tail = match rest {
            Some(d) => prefix.mul(&self.eval(d)?),
            None => prefix.mul(&leaf(&plan)),
        };
        let parts = self.eval_all(children, pd.n())?;
        Ok(parts.into_iter().fold(tail, |acc, p| acc.add(&p)))
    }

    fn eval_all(&self, children: Vec<(Poly, Pd)>, size: usize) -> Result<Vec<Poly>, SkeinError> {
        #[cfg(feature = "parallel")]
        if self.config.parallel && size >= PARALLEL_MIN_CROSSINGS {
            use rayon::prelude::*;
            return children.into_par_iter().map(|(k, p)| self.eval(p).map(|v| k.mul(&v))).collect();
        }
        let _ = size;
        children.into_iter().map(|(k, p)| self.eval(p).map(|v| k.mul(&v))).collect()
    }
}

/// The circle value `1 + (alpha - 1/alpha)/(s - 1/s)` as a rational function.
pub fn circle_value() -> RatFunc {
    let (n, d) = circle_parts();
    RatFunc::new(n, d).expect("nonzero denominator")
}

fn circle_parts() -> (LaurentPoly, LaurentPoly) {
    let a = LaurentPoly::var(Var::Alpha);
    let s = LaurentPoly::var(Var::S);
    let one = LaurentPoly::one();
    let s2m1 = &(&s * &s) - &one;
    let num = &(&s2m1 * &a) + &(&s * &(&(&a * &a) - &one));
    let den = &a * &s2m1;
    (num, den)
}

/// Replaces the formal circle `d` by its value.
pub(crate) fn substitute_circle(p: &LaurentPoly) -> RatFunc {
    let by_d = p.coefficients_in(Var::Delta);
    let Some(&top) = by_d.keys().next_back() else {
        return RatFunc::zero();
    };
    let low = *by_d.keys().next().unwrap();
    assert!(low >= 0, "negative power of the circle");
    let (n, d) = circle_parts();
    let mut num = LaurentPoly::zero();
    for (&k, c) in &by_d {
        let t = &(c * &n.pow(k).unwrap()) * &d.pow(top - k).unwrap();
        num += &t;
    }
    RatFunc::new(num, d.pow(top).unwrap()).expect("nonzero denominator")
}
