use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::union_vars;
use super::mpoly;
use super::{LaurentPoly, Rational, RingError, Var};

/// Above this total degree (numerator plus denominator) the gcd step is
/// skipped and equality falls back to cross-multiplication.
pub const DEFAULT_GCD_DEGREE_BOUND: u32 = 160;

/// Quotient of Laurent polynomials.
///
/// Normal form: the denominator is a polynomial without monomial factor,
/// primitive over Z with positive lex-leading coefficient; when the degrees are
/// within [`DEFAULT_GCD_DEGREE_BOUND`] the common gcd is cancelled as well.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<RatFunc, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::normalized(num, den, DEFAULT_GCD_DEGREE_BOUND))
    }

    pub fn from_poly(p: LaurentPoly) -> RatFunc {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> RatFunc {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> RatFunc {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn int(c: i64) -> RatFunc {
        Self::from_poly(LaurentPoly::int(c))
    }

    pub fn var(v: Var) -> RatFunc {
        Self::from_poly(LaurentPoly::var(v))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent polynomial, if the denominator is a unit.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        let inv = self.den.inverse_monomial()?;
        Some(&self.num * &inv)
    }

    pub fn vars(&self) -> Vec<Var> {
        union_vars(self.num.vars(), self.den.vars())
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly, bound: u32) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if let Some(inv) = den.inverse_monomial() {
            return RatFunc { num: &num * &inv, den: LaurentPoly::one() };
        }
        let vars = union_vars(num.vars(), den.vars());
        let (ns, np) = mpoly::from_laurent(&num, &vars);
        let (ds, dp) = mpoly::from_laurent(&den, &vars);
        let (np, dp) = if np.total_degree() + dp.total_degree() <= bound {
            let g = mpoly::gcd(&np, &dp);
            if g.is_constant() {
                (np, dp)
            } else {
                (np.exact_div(&g).expect("gcd divides"), dp.exact_div(&g).expect("gcd divides"))
            }
        } else {
            (np, dp)
        };
        let (factor, dp) = dp.make_primitive_integral();
        let np = np.scale(&factor.recip());
        let shift: Vec<i32> = ns.iter().zip(&ds).map(|(a, b)| a - b).collect();
        let zero = vec![0; vars.len()];
        let num = mpoly::to_laurent(&np, &shift, &vars);
        let den = mpoly::to_laurent(&dp, &zero, &vars);
        RatFunc { num, den }
    }

    pub fn recip(&self) -> Result<RatFunc, RingError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, n: i32) -> Result<RatFunc, RingError> {
        if n < 0 {
            return self.recip()?.pow(-n);
        }
        let num = self.num.pow(n).expect("nonnegative power");
        let den = self.den.pow(n).expect("nonnegative power");
        Ok(RatFunc { num, den })
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        RatFunc { num: self.num.scale(c), den: self.den.clone() }.renormalize_sign()
    }

    fn renormalize_sign(self) -> RatFunc {
        if self.num.is_zero() {
            RatFunc::zero()
        } else {
            self
        }
    }

    /// Evaluates one variable at a rational point.
    pub fn eval_var(&self, v: Var, value: &Rational) -> Result<RatFunc, RingError> {
        let num = self.num.eval_var(v, value).ok_or(RingError::DivisionByZero)?;
        let den = self.den.eval_var(v, value).ok_or(RingError::DivisionByZero)?;
        RatFunc::new(num, den)
    }

    /// Evaluates at a full rational point; errors on a vanishing denominator.
    pub fn eval_all(&self, point: &[(Var, Rational)]) -> Result<Rational, RingError> {
        let mut r = self.clone();
        for (v, x) in point {
            let num = r.num.eval_var(*v, x).ok_or(RingError::DivisionByZero)?;
            let den = r.den.eval_var(*v, x).ok_or(RingError::DivisionByZero)?;
            if den.is_zero() {
                return Err(RingError::DivisionByZero);
            }
            r = RatFunc { num, den };
        }
        match (r.num.constant_value(), r.den.constant_value()) {
            (Some(n), Some(d)) => Ok(n / d),
            _ => Err(RingError::UnassignedVariable(format!("{:?}", r.vars()))),
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &RatFunc) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::int(c)
    }
}

impl From<Var> for RatFunc {
    fn from(v: Var) -> Self {
        RatFunc::var(v)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone(), DEFAULT_GCD_DEGREE_BOUND);
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::normalized(num, &self.den * &rhs.den, DEFAULT_GCD_DEGREE_BOUND)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den, DEFAULT_GCD_DEGREE_BOUND)
    }
}

impl Div for &RatFunc {
    type Output = Result<RatFunc, RingError>;
    fn div(self, rhs: &RatFunc) -> Result<RatFunc, RingError> {
        if rhs.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(RatFunc::normalized(&self.num * &rhs.den, &self.den * &rhs.num, DEFAULT_GCD_DEGREE_BOUND))
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::rat;

    fn v(x: Var) -> RatFunc {
        RatFunc::var(x)
    }

    #[test]
    fn cancels_common_factor() {
        // (a^2 - s^2) / (a - s) = a + s
        let a = v(Var::Alpha);
        let s = v(Var::S);
        let num = &(&a * &a) - &(&s * &s);
        let den = &a - &s;
        let q = (&num / &den).unwrap();
        assert!(q.denom().is_one());
        assert_eq!(q, &a + &s);
    }

    #[test]
    fn normal_form_is_unique() {
        let s = v(Var::S);
        let one = RatFunc::one();
        let x = (&one / &(&s + &one)).unwrap();
        let y = (&RatFunc::int(-2) / &(&RatFunc::int(-2) * &(&s + &one))).unwrap();
        assert_eq!(x.numer(), y.numer());
        assert_eq!(x.denom(), y.denom());
    }

    #[test]
    fn evaluation_at_point() {
        let s = v(Var::S);
        let f = (&(&s * &s) / &(&s - &RatFunc::one())).unwrap();
        assert_eq!(f.eval_all(&[(Var::S, rat(3, 1))]).unwrap(), rat(9, 2));
        assert!(f.eval_all(&[(Var::S, rat(1, 1))]).is_err());
    }
}
