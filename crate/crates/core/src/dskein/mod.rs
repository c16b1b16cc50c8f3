//! The sigma-valued invariant `Q~` on two-strand torus families.
//!
//! Values of the closed trivalent graphs `I_n` follow a six-term linear
//! recursion read off from the action of the cube of the half twist. Torus
//! closures are then obtained by resolving one crossing at a time, framing
//! shifts add the framing change and connected sums add values.

mod family;

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::rings::{Rational, SigmaPoly, Var};

pub use family::{FamilyLink, FamilyParseError};

fn sp() -> SigmaPoly {
    SigmaPoly::plus()
}

fn sm() -> SigmaPoly {
    SigmaPoly::minus()
}

fn int(c: i64) -> SigmaPoly {
    SigmaPoly::int(c)
}

/// The two 6-vectors in the basis `(U, T^-2, T^-1, Id, T, T^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinVectors {
    /// Cube of the half twist.
    pub t3: [SigmaPoly; 6],
    /// The rotated square of the half twist.
    pub rot2: [SigmaPoly; 6],
}

pub fn skein_vectors() -> SkeinVectors {
    let d = SigmaPoly::diff();
    let t3 = [
        d.scale(&Rational::from_integer(4.into())),
        int(1),
        &int(2) - &sp(),
        &(&int(1) - &sp().scale(&Rational::from_integer(2.into()))) + &sm(),
        &(&int(-1) - &sp()) + &sm().scale(&Rational::from_integer(2.into())),
        &int(-2) + &sm(),
    ];
    let rot2 = [
        &int(1) - &d.scale(&Rational::from_integer(2.into())),
        SigmaPoly::zero(),
        &int(-2) + &sm(),
        &int(-1) + &d.scale(&Rational::from_integer(2.into())),
        &int(2) - &sm(),
        int(1),
    ];
    SkeinVectors { t3, rot2 }
}

fn i_bases() -> BTreeMap<i64, SigmaPoly> {
    let d = SigmaPoly::diff();
    let two_d = d.scale(&Rational::from_integer(2.into()));
    BTreeMap::from([(-2, -&two_d), (-1, int(-1)), (0, SigmaPoly::zero()), (1, int(-1)), (2, two_d)])
}

fn i_cache() -> &'static Mutex<BTreeMap<i64, SigmaPoly>> {
    static CACHE: OnceLock<Mutex<BTreeMap<i64, SigmaPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(i_bases()))
}

/// `Q~(I_n)` for any integer `n`.
pub fn i_value(n: i64) -> SigmaPoly {
    let mut cache = i_cache().lock().expect("poisoned cache");
    if let Some(v) = cache.get(&n) {
        return v.clone();
    }
    let t3 = skein_vectors().t3;
    if n > 0 {
        let mut k = *cache.keys().next_back().unwrap() + 1;
        while k <= n {
            // k = j + 3 with the window I_{j-2} .. I_{j+2}
            let mut acc = t3[0].clone();
            for (i, c) in t3[1..].iter().enumerate() {
                acc = &acc + &(c * &cache[&(k - 5 + i as i64)]);
            }
            cache.insert(k, acc);
            k += 1;
        }
    } else {
        let mut k = *cache.keys().next().unwrap() - 1;
        while k >= n {
            // k = j - 2: solve the relation at j for its I_{j-2} term
            let mut acc = &cache[&(k + 5)] - &t3[0];
            for (i, c) in t3[2..].iter().enumerate() {
                acc = &acc - &(c * &cache[&(k + 1 + i as i64)]);
            }
            cache.insert(k, acc);
            k -= 1;
        }
    }
    cache[&n].clone()
}

fn torus_cache() -> &'static Mutex<BTreeMap<i64, SigmaPoly>> {
    static CACHE: OnceLock<Mutex<BTreeMap<i64, SigmaPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::from([(0, SigmaPoly::zero()), (1, int(1))])))
}

/// `(-1)^(m-1) - I_{m-1} - (I_{m-2} + I_m)/2`, the change from `m - 2` to `m`.
fn torus_step(m: i64) -> SigmaPoly {
    let sign = if (m - 1).rem_euclid(2) == 0 { 1 } else { -1 };
    let half = (&i_value(m - 2) + &i_value(m)).half();
    &(&int(sign) - &i_value(m - 1)) - &half
}

/// `Q~` of the blackboard-framed closure of the `m`-th power of the half twist.
pub fn torus_value(m: i64) -> SigmaPoly {
    let mut cache = torus_cache().lock().expect("poisoned cache");
    let (lo, hi) = (*cache.keys().next().unwrap(), *cache.keys().next_back().unwrap());
    for k in hi + 1..=m {
        let v = &cache[&(k - 2)] + &torus_step(k);
        cache.insert(k, v);
    }
    for k in (m..lo).rev() {
        let v = &cache[&(k + 2)] - &torus_step(k + 2);
        cache.insert(k, v);
    }
    cache[&m].clone()
}

pub fn qtilde(l: &FamilyLink) -> SigmaPoly {
    match l {
        FamilyLink::Torus2(m) => torus_value(*m),
        FamilyLink::Frame(child, k) => &qtilde(child) + &int(*k),
        FamilyLink::ConnSum(a, b) => &qtilde(a) + &qtilde(b),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Integrality {
    pub ok: bool,
    /// Offending terms in canonical text.
    pub witness: Vec<String>,
}

/// Whether `p` lies in `Z[sigma_+, sigma_-]`.
pub fn conj_integrality_check(p: &SigmaPoly) -> Integrality {
    let vars = p.poly().vars().to_vec();
    let mut witness = Vec::new();
    for (e, c) in p.poly().terms() {
        if !c.is_integer() || e.iter().any(|&x| x < 0) {
            let mono: Vec<(Var, i32)> = vars.iter().copied().zip(e.iter().copied()).collect();
            witness.push(crate::rings::LaurentPoly::monomial(&mono, c.clone()).to_string());
        }
    }
    Integrality { ok: witness.is_empty(), witness }
}

#[cfg(test)]
mod tests;
