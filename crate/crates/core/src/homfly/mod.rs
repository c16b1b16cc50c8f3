//! HOMFLY-PT polynomial, its framed extension and the adjoint cabling.
//!
//! Conventions: `v^-1 P(L+) - v P(L-) = z P(L0)` and `P(unknot) = 1`.

use thiserror::Error;

use std::collections::BTreeMap;

use crate::diagrams::{homfly_adjoint_expansion_at, DiagramError, Edge, LinkDiagram};
use crate::rings::{limit_order2_at_v1, LaurentPoly, RatFunc, Rational, RingError, SigmaPoly, Var};
use crate::skein::{EngineStats, SkeinConfig, SkeinEngine, SkeinError, Theory};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum HomflyError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Skein(#[from] SkeinError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("expected a knot, found {0} components")]
    NotAKnot(usize),
    #[error("expected a 0-framed diagram, writhe is {0}")]
    FramingNotZero(i64),
    #[error("the empty diagram has no HOMFLY-PT polynomial")]
    EmptyDiagram,
}

/// `(v^-1 - v)/z`, the value of a split unknot.
pub fn unknot_factor() -> LaurentPoly {
    let v = LaurentPoly::var(Var::V);
    let zi = LaurentPoly::var(Var::Z).pow(-1).unwrap();
    &(&v.pow(-1).unwrap() - &v) * &zi
}

/// An engine with its own memo table; reuse it across related diagrams.
pub struct HomflyEngine {
    engine: SkeinEngine,
}

impl Default for HomflyEngine {
    fn default() -> Self {
        Self::new(SkeinConfig::default())
    }
}

impl HomflyEngine {
    pub fn new(config: SkeinConfig) -> HomflyEngine {
        HomflyEngine { engine: SkeinEngine::new(Theory::Homfly, config) }
    }

    pub fn stats(&self) -> EngineStats {
        self.engine.stats()
    }

    pub fn p(&self, d: &LinkDiagram) -> Result<LaurentPoly, HomflyError> {
        if !d.is_oriented() {
            return Err(DiagramError::Unoriented.into());
        }
        if d.is_empty() {
            return Err(HomflyError::EmptyDiagram);
        }
        Ok(self.engine.homfly(d)?)
    }

    /// `lambda^W P (v^-1 - v)/z`, and 1 on the empty diagram.
    pub fn framed_h(&self, d: &LinkDiagram) -> Result<LaurentPoly, HomflyError> {
        if d.is_empty() {
            return Ok(LaurentPoly::one());
        }
        let w = d.writhe()?;
        let p = self.p(d)?;
        let lam = LaurentPoly::monomial(&[(Var::Lambda, w as i32)], Rational::from_integer(1.into()));
        Ok(&(&p * &unknot_factor()) * &lam)
    }

    pub fn h_adjoint(&self, d: &LinkDiagram) -> Result<LaurentPoly, HomflyError> {
        self.h_adjoint_at(d, &BTreeMap::new())
    }

    /// `h_adjoint` with the cable pattern inserted on chosen edges.
    pub fn h_adjoint_at(&self, d: &LinkDiagram, insertion: &BTreeMap<usize, Edge>) -> Result<LaurentPoly, HomflyError> {
        let mut acc = LaurentPoly::zero();
        for (sign, term) in homfly_adjoint_expansion_at(d, insertion)? {
            let h = self.framed_h(&term)?;
            acc += &h.scale(&Rational::from_integer(sign.into()));
        }
        debug_assert!(!acc.contains_var(Var::Lambda));
        Ok(acc)
    }

    /// Coefficient of `z^2` in `P(1, z)`.
    pub fn v2(&self, d: &LinkDiagram) -> Result<Rational, HomflyError> {
        let n = d.component_count();
        if n != 1 {
            return Err(HomflyError::NotAKnot(n));
        }
        let p = self.p(d)?;
        let at1 = p.eval_var(Var::V, &Rational::from_integer(1.into())).expect("v = 1 is a unit");
        Ok(at1.coefficient(&[(Var::Z, 2)]))
    }

    /// Left side: the second-order coefficient of the normalized adjoint
    /// invariant at `v = 1`. Right side: `-2 V2 - z^-2 f(z^2+3)` with
    /// `f = qtilde / (sp - sm)`.
    pub fn conjecture_sides(&self, d: &LinkDiagram, qtilde: &SigmaPoly) -> Result<(RatFunc, RatFunc), HomflyError> {
        let n = d.component_count();
        if n != 1 {
            return Err(HomflyError::NotAKnot(n));
        }
        let w = d.writhe()?;
        if w != 0 {
            return Err(HomflyError::FramingNotZero(w));
        }
        let v2 = self.v2(d)?;
        let f = sigma_quotient_at_diagonal(qtilde)?;
        let ratio = self.adjoint_ratio(d)?;
        let lhs = limit_order2_at_v1(&ratio)?;
        let z2 = RatFunc::from_poly(LaurentPoly::monomial(&[(Var::Z, 2)], Rational::from_integer(1.into())));
        let rhs = &RatFunc::from_poly(LaurentPoly::constant(-v2 * Rational::from_integer(2.into()))) - &(&f / &z2)?;
        Ok((lhs, rhs))
    }

    /// `h_adjoint(d) / h_adjoint(U0)`.
    pub fn adjoint_ratio(&self, d: &LinkDiagram) -> Result<RatFunc, HomflyError> {
        let num = self.h_adjoint(d)?;
        let den = self.h_adjoint(&LinkDiagram::unknot())?;
        Ok((&RatFunc::from_poly(num) / &RatFunc::from_poly(den))?)
    }
}

/// `(qtilde / (sp - sm))` evaluated at `sp = sm = z^2 + 3`.
pub fn sigma_quotient_at_diagonal(qtilde: &SigmaPoly) -> Result<RatFunc, RingError> {
    let f = qtilde.div_by_diff()?;
    let z2p3 = &LaurentPoly::monomial(&[(Var::Z, 2)], Rational::from_integer(1.into())) + &LaurentPoly::int(3);
    let at = f
        .poly()
        .substitute(Var::SigmaPlus, &z2p3)
        .and_then(|p| p.substitute(Var::SigmaMinus, &z2p3))
        .expect("polynomial substitution");
    Ok(RatFunc::from_poly(at))
}

pub fn homfly_p(d: &LinkDiagram) -> Result<LaurentPoly, HomflyError> {
    HomflyEngine::default().p(d)
}

pub fn framed_h(d: &LinkDiagram) -> Result<LaurentPoly, HomflyError> {
    HomflyEngine::default().framed_h(d)
}

pub fn h_adjoint(d: &LinkDiagram) -> Result<LaurentPoly, HomflyError> {
    HomflyEngine::default().h_adjoint(d)
}

pub fn v2(d: &LinkDiagram) -> Result<Rational, HomflyError> {
    HomflyEngine::default().v2(d)
}

pub fn conjecture_sides(d: &LinkDiagram, qtilde: &SigmaPoly) -> Result<(RatFunc, RatFunc), HomflyError> {
    HomflyEngine::default().conjecture_sides(d, qtilde)
}
