//! Exact coefficient rings: rationals, Laurent polynomials, rational
//! functions, the q-quotient ring, sigma polynomials and truncated series,
//! together with the specialization maps between them.

mod laurent;
mod mpoly;
mod ratfunc;
mod series;
mod sigma;
mod special;
mod text;
mod var;

pub use laurent::{rat, LaurentPoly};
pub use ratfunc::{RatFunc, DEFAULT_GCD_DEGREE_BOUND};
pub use series::{psi_series, series_exp_v, DeltaSeries, DEFAULT_SERIES_ORDER};
pub use sigma::{express_in_sigma, normalize_qring, sigma_swap, QRingElem, SigmaPoly};
pub use special::{div_rem_linear, exact_div_linear, limit_order2_at_v1, specialize, specialize_poly, LinearDivision};
pub use text::{from_json, parse_poly, to_json, JsonPoly, JsonTerm};
pub use var::Var;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not symmetric in q1, q2, q3")]
    NotSymmetric,
    #[error("element is not in the sigma subring: {0}")]
    NotInSubring(String),
    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: String },
    #[error("expression vanishes only to order {order} at v = 1 (surviving term {term})")]
    OrderTooLow { order: u32, term: String },
    #[error("denominator vanishes at v = 1")]
    PoleAtOne,
    #[error("series denominator has non-monomial constant term {0}")]
    NonUnitLeadingTerm(String),
    #[error("variable {0} has no assigned value")]
    UnassignedVariable(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
