//! Dubrovnik-form Kauffman polynomial, the projector cabling `K_ad` and its
//! behaviour along `alpha = s`.
//!
//! The skein relation is `D(X) - D(X') = (s - 1/s)(D(A) - D(B))` where `X'`
//! is the switched crossing, `A` joins slots (0,1),(2,3) and `B` joins
//! (0,3),(1,2). A curl whose loop joins slots `(k, k+1)` with `k` even is
//! worth `alpha`, with `k` odd `1/alpha`. Crossingless diagrams with `n`
//! circles are worth `delta^n`, `delta = 1 + (alpha - 1/alpha)/(s - 1/s)`.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::diagrams::{kauffman_adjoint_expansion_at, DiagramError, Edge, LinkDiagram};
use crate::rings::{exact_div_linear, specialize, specialize_poly, LaurentPoly, RatFunc, Rational, RingError, SigmaPoly, Var};
use crate::skein::{substitute_circle, EngineStats, SkeinConfig, SkeinEngine, SkeinError, Theory};

pub use crate::skein::circle_value;

/// Kauffman values are rational functions in `alpha` and `s`.
pub type KauffmanValue = RatFunc;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum KauffmanError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Skein(#[from] SkeinError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("K_ad at alpha = s is {0}, not 1")]
    NotOneAtDiagonal(String),
}

pub struct KauffmanEngine {
    engine: SkeinEngine,
}

impl Default for KauffmanEngine {
    fn default() -> Self {
        Self::new(SkeinConfig::default())
    }
}

impl KauffmanEngine {
    pub fn new(config: SkeinConfig) -> KauffmanEngine {
        KauffmanEngine { engine: SkeinEngine::new(Theory::Kauffman, config) }
    }

    pub fn stats(&self) -> EngineStats {
        self.engine.stats()
    }

    /// The value with the circle kept as the formal variable `d`.
    pub fn formal(&self, d: &LinkDiagram) -> Result<LaurentPoly, KauffmanError> {
        Ok(self.engine.kauffman_formal(d)?)
    }

    pub fn lambda(&self, d: &LinkDiagram) -> Result<KauffmanValue, KauffmanError> {
        Ok(self.engine.kauffman(d)?)
    }

    pub fn k_adjoint(&self, d: &LinkDiagram) -> Result<KauffmanValue, KauffmanError> {
        self.k_adjoint_at(d, &BTreeMap::new())
    }

    /// `k_adjoint` with the projector inserted on chosen edges.
    pub fn k_adjoint_at(&self, d: &LinkDiagram, insertion: &BTreeMap<usize, Edge>) -> Result<KauffmanValue, KauffmanError> {
        // Every projector coefficient has denominator (s^2 + 1)(alpha + s),
        // so the sum is accumulated over that power and reduced once.
        let one_comp = &(&LaurentPoly::var(Var::S).pow(2).unwrap() + &LaurentPoly::one())
            * &(&LaurentPoly::var(Var::Alpha) + &LaurentPoly::var(Var::S));
        let common = one_comp.pow(d.component_count() as i32).unwrap();
        let common_rf = RatFunc::from_poly(common.clone());
        let mut acc = LaurentPoly::zero();
        for (coeff, term) in kauffman_adjoint_expansion_at(d, insertion)? {
            let c = (&coeff * &common_rf).as_laurent().expect("projector denominators divide the common one");
            acc += &(&c * &self.formal(&term)?);
        }
        Ok((&substitute_circle(&acc) / &common_rf)?)
    }

    pub fn alpha_eq_s(&self, d: &LinkDiagram) -> Result<RatFunc, KauffmanError> {
        Ok(at_alpha_eq_s(&self.k_adjoint(d)?)?)
    }

    /// `(K_ad - 1)/(alpha - s)` at `alpha = s`.
    pub fn derivative_at_s(&self, d: &LinkDiagram) -> Result<RatFunc, KauffmanError> {
        let k = self.k_adjoint(d)?;
        let at = at_alpha_eq_s(&k)?;
        if at != RatFunc::one() {
            return Err(KauffmanError::NotOneAtDiagonal(at.to_string()));
        }
        let div = exact_div_linear(&(&k - &RatFunc::one()), (Var::Alpha, Var::S));
        if !div.ok {
            return Err(RingError::InexactDivision { remainder: div.remainder.to_string() }.into());
        }
        Ok(at_alpha_eq_s(&div.quotient)?)
    }
}

fn at_alpha_eq_s(p: &RatFunc) -> Result<RatFunc, RingError> {
    let mut a = HashMap::new();
    a.insert(Var::Alpha, RatFunc::var(Var::S));
    specialize(p, &a)
}

/// `sigma_+ -> 2 s^-2 + s^4`, `sigma_- -> 2 s^2 + s^-4`.
pub fn phi_sigma(p: &SigmaPoly) -> RatFunc {
    let s = LaurentPoly::var(Var::S);
    let sp = &s.pow(-2).unwrap().scale(&Rational::from_integer(2.into())) + &s.pow(4).unwrap();
    let sm = &s.pow(2).unwrap().scale(&Rational::from_integer(2.into())) + &s.pow(-4).unwrap();
    let mut a = HashMap::new();
    a.insert(Var::SigmaPlus, RatFunc::from_poly(sp));
    a.insert(Var::SigmaMinus, RatFunc::from_poly(sm));
    specialize_poly(p.poly(), &a).expect("polynomial images")
}

pub fn kauffman_lambda(d: &LinkDiagram) -> Result<KauffmanValue, KauffmanError> {
    KauffmanEngine::default().lambda(d)
}

pub fn k_adjoint(d: &LinkDiagram) -> Result<KauffmanValue, KauffmanError> {
    KauffmanEngine::default().k_adjoint(d)
}

pub fn kauf_alpha_eq_s_check(d: &LinkDiagram) -> Result<RatFunc, KauffmanError> {
    KauffmanEngine::default().alpha_eq_s(d)
}

pub fn kauf_derivative_at_s(d: &LinkDiagram) -> Result<RatFunc, KauffmanError> {
    KauffmanEngine::default().derivative_at_s(d)
}

#[cfg(test)]
mod tests;
