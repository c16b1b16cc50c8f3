use std::collections::BTreeMap;

use crate::rings::{RatFunc, Var};

use super::cable::{CableMode, CablePattern};
use super::pd::{Edge, LinkDiagram};
use super::DiagramError;

/// Terms of the doubled-minus-empty substitution on every component: for each
/// subset S of components (as a bitmask, ascending) the antiparallel cable of
/// S with the rest deleted, signed `(-1)^(n-|S|)`.
pub fn homfly_adjoint_expansion(d: &LinkDiagram) -> Result<Vec<(i64, LinkDiagram)>, DiagramError> {
    homfly_adjoint_expansion_at(d, &BTreeMap::new())
}

/// As [`homfly_adjoint_expansion`], with chosen insertion edges.
pub fn homfly_adjoint_expansion_at(
    d: &LinkDiagram,
    insertion: &BTreeMap<usize, Edge>,
) -> Result<Vec<(i64, LinkDiagram)>, DiagramError> {
    if !d.is_oriented() {
        return Err(DiagramError::Unoriented);
    }
    let n = d.component_count();
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u64..(1u64 << n) {
        let patterns: BTreeMap<usize, CablePattern> = (0..n)
            .map(|c| (c, if mask >> c & 1 == 1 { CablePattern::Parallel2 } else { CablePattern::Delete }))
            .collect();
        let size = mask.count_ones() as usize;
        let sign = if (n - size) % 2 == 0 { 1 } else { -1 };
        out.push((sign, d.cable2_at(&patterns, CableMode::Antiparallel, insertion)?));
    }
    Ok(out)
}

/// The three projector terms with their coefficients, in the order
/// Parallel2, Twist(1), Turnback.
pub fn projector_terms() -> [(CablePattern, RatFunc); 3] {
    let s = RatFunc::var(Var::S);
    let a = RatFunc::var(Var::Alpha);
    let sinv = s.pow(-1).expect("s is a unit");
    let norm = (&s + &sinv).recip().expect("s + 1/s is nonzero");
    let turn = (&(&s - &sinv) / &(&(&a * &sinv) + &RatFunc::one())).expect("nonzero");
    [
        (CablePattern::Parallel2, &s * &norm),
        (CablePattern::Twist(1), -&norm),
        (CablePattern::Turnback, -(&turn * &norm)),
    ]
}

/// The multilinear projector expansion: one of the three patterns per
/// component, with coefficients multiplied. Terms are ordered by the base-3
/// digits of the pattern choice, component 0 least significant.
pub fn kauffman_adjoint_expansion(d: &LinkDiagram) -> Result<Vec<(RatFunc, LinkDiagram)>, DiagramError> {
    kauffman_adjoint_expansion_at(d, &BTreeMap::new())
}

/// As [`kauffman_adjoint_expansion`], with chosen insertion edges.
pub fn kauffman_adjoint_expansion_at(
    d: &LinkDiagram,
    insertion: &BTreeMap<usize, Edge>,
) -> Result<Vec<(RatFunc, LinkDiagram)>, DiagramError> {
    let d = d.unoriented();
    let n = d.component_count();
    let terms = projector_terms();
    let total = 3usize.pow(n as u32);
    let mut out = Vec::with_capacity(total);
    for idx in 0..total {
        let mut coeff = RatFunc::one();
        let mut patterns = BTreeMap::new();
        let mut rest = idx;
        for c in 0..n {
            let (p, k) = &terms[rest % 3];
            rest /= 3;
            coeff = &coeff * k;
            patterns.insert(c, *p);
        }
        out.push((coeff, d.cable2_at(&patterns, CableMode::Parallel, insertion)?));
    }
    Ok(out)
}
