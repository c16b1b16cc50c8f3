use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LaurentPoly, RatFunc, Rational, RingError, SigmaPoly, Var};

pub const DEFAULT_SERIES_ORDER: usize = 3;

/// Power series in `delta` truncated below `delta^order`, with Laurent
/// polynomial coefficients in `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSeries {
    order: usize,
    coeffs: Vec<LaurentPoly>,
}

impl DeltaSeries {
    pub fn new(order: usize, coeffs: Vec<LaurentPoly>) -> DeltaSeries {
        let mut coeffs = coeffs;
        coeffs.resize(order, LaurentPoly::zero());
        coeffs.truncate(order);
        DeltaSeries { order, coeffs }
    }

    pub fn constant(order: usize, c: LaurentPoly) -> DeltaSeries {
        DeltaSeries::new(order, vec![c])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &LaurentPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Re-truncates to a lower order.
    pub fn truncate(&self, order: usize) -> DeltaSeries {
        assert!(order <= self.order, "cannot raise truncation order");
        DeltaSeries::new(order, self.coeffs[..order].to_vec())
    }

    /// Multiplies by `delta^k`.
    pub fn shift(&self, k: usize) -> DeltaSeries {
        let mut c = vec![LaurentPoly::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        DeltaSeries::new(self.order, c)
    }

    fn check(&self, other: &DeltaSeries) -> usize {
        self.order.min(other.order)
    }

    pub fn add(&self, other: &DeltaSeries) -> DeltaSeries {
        let n = self.check(other);
        DeltaSeries::new(n, (0..n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect())
    }

    pub fn sub(&self, other: &DeltaSeries) -> DeltaSeries {
        let n = self.check(other);
        DeltaSeries::new(n, (0..n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect())
    }

    pub fn mul(&self, other: &DeltaSeries) -> DeltaSeries {
        let n = self.check(other);
        let mut c = vec![LaurentPoly::zero(); n];
        for i in 0..n {
            for j in 0..n - i {
                c[i + j] += &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        DeltaSeries::new(n, c)
    }

    /// Series quotient; the constant term of `other` must be a monomial in z.
    pub fn div(&self, other: &DeltaSeries) -> Result<DeltaSeries, RingError> {
        let n = self.check(other);
        let lead = &other.coeffs[0];
        if lead.is_zero() {
            return Err(RingError::PoleAtOne);
        }
        let inv = lead.inverse_monomial().ok_or_else(|| RingError::NonUnitLeadingTerm(lead.to_string()))?;
        let mut q: Vec<LaurentPoly> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                acc -= &(&other.coeffs[j] * &q[k - j]);
            }
            q.push(&acc * &inv);
        }
        Ok(DeltaSeries::new(n, q))
    }
}

impl fmt::Display for DeltaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*d")?,
                _ => write!(f, "({c})*d^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(d^{})", self.order)
    }
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Expansion of `v^e = exp(-e delta / 2)` to the given order.
fn exp_series(e: i32, order: usize) -> Vec<Rational> {
    let x = Rational::new(BigInt::from(-e), BigInt::from(2));
    (0..order)
        .map(|k| num_traits::pow(x.clone(), k) / Rational::from_integer(factorial(k)))
        .collect()
}

fn laurent_in_v_to_series(p: &LaurentPoly, order: usize) -> Result<DeltaSeries, RingError> {
    if let Some(v) = p.vars().iter().find(|v| !matches!(v, Var::V | Var::Z)) {
        return Err(RingError::Invariant(format!("series expansion expects v, z only; found {v}")));
    }
    let mut out = vec![LaurentPoly::zero(); order];
    for (e, rest) in p.coefficients_in(Var::V) {
        for (k, c) in exp_series(e, order).into_iter().enumerate() {
            if !c.is_zero() {
                out[k] += &rest.scale(&c);
            }
        }
    }
    Ok(DeltaSeries::new(order, out))
}

/// Substitutes `v = exp(-delta/2)` (with `h = 1`) and expands exactly.
pub fn series_exp_v(a: &RatFunc, order: usize) -> Result<DeltaSeries, RingError> {
    let num = laurent_in_v_to_series(a.numer(), order)?;
    let den = laurent_in_v_to_series(a.denom(), order)?;
    num.div(&den)
}

/// The truncated image `sigma_± -> (z^2 + 3) ∓ (delta/2) z^2` modulo `delta^2`.
pub fn psi_series(p: &SigmaPoly) -> DeltaSeries {
    let order = 2;
    let z2 = LaurentPoly::monomial(&[(Var::Z, 2)], Rational::one());
    let base = &z2 + &LaurentPoly::int(3);
    let half_z2 = z2.scale(&Rational::new(1.into(), 2.into()));
    let sp = DeltaSeries::new(order, vec![base.clone(), -&half_z2]);
    let sm = DeltaSeries::new(order, vec![base, half_z2]);
    let mut acc = DeltaSeries::new(order, vec![]);
    for (e, c) in p.poly().terms() {
        let mut t = DeltaSeries::constant(order, LaurentPoly::constant(c.clone()));
        let vars = p.poly().vars();
        for (i, &k) in e.iter().enumerate() {
            let factor = if vars[i] == Var::SigmaPlus { &sp } else { &sm };
            for _ in 0..k {
                t = t.mul(factor);
            }
        }
        acc = acc.add(&t);
    }
    acc
}
