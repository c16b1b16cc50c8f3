use std::collections::HashMap;

use num_traits::One;

use super::{LaurentPoly, RatFunc, Rational, RingError, Var};

/// Divides `p` by `(var - root)` where `root` is free of `var`; returns the
/// quotient and the remainder, so that `p = quotient * (var - root) + remainder`.
/// The remainder is `p|_{var=root}` and free of `var` whenever `p` has no
/// negative powers of `var` or `root` is a unit. Otherwise negative powers are
/// cleared by `var^shift` and the remainder carries that unit.
pub fn div_rem_linear(p: &LaurentPoly, var: Var, root: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    assert!(!root.contains_var(var), "root must not contain the division variable");
    let coeffs = p.coefficients_in(var);
    let Some((&lo, _)) = coeffs.iter().next() else {
        return (LaurentPoly::zero(), LaurentPoly::zero());
    };
    let shift = lo.min(0);
    let x = LaurentPoly::var(var);
    if shift < 0 && root.inverse_monomial().is_some() {
        let r = p.substitute(var, root).expect("root is a unit");
        let (q, rest) = div_rem_linear(&(&(p - &r) * &x.pow(-shift).unwrap()), var, root);
        debug_assert!(rest.is_zero());
        return (&q * &x.pow(shift).unwrap(), r);
    }
    let top = *coeffs.keys().next_back().unwrap() - shift;
    // c[k] is the coefficient of var^k after multiplying by var^-shift
    let mut c: Vec<LaurentPoly> = vec![LaurentPoly::zero(); top as usize + 1];
    for (k, v) in coeffs {
        c[(k - shift) as usize] = v;
    }
    if top == 0 {
        let r = c[0].clone();
        return (LaurentPoly::zero(), &r * &x.pow(shift).unwrap());
    }
    let mut q: Vec<LaurentPoly> = vec![LaurentPoly::zero(); top as usize];
    let mut carry = LaurentPoly::zero();
    for k in (1..=top as usize).rev() {
        carry = &c[k] + &(&carry * root);
        q[k - 1] = carry.clone();
    }
    let rem = &c[0] + &(&carry * root);
    let mut quotient = LaurentPoly::zero();
    for (k, qk) in q.into_iter().enumerate() {
        quotient += &(&qk * &x.pow(k as i32 + shift).unwrap());
    }
    (quotient, &rem * &x.pow(shift).unwrap())
}

/// Result of [`exact_div_linear`].
#[derive(Clone, Debug)]
pub struct LinearDivision {
    pub quotient: RatFunc,
    pub ok: bool,
    /// Numerator remainder; zero iff `ok`.
    pub remainder: LaurentPoly,
}

/// Divides a rational function by `(a - b)` for variables `a`, `b`.
pub fn exact_div_linear(p: &RatFunc, pair: (Var, Var)) -> LinearDivision {
    let (a, b) = pair;
    let root = LaurentPoly::var(b);
    let (q, r) = div_rem_linear(p.numer(), a, &root);
    let quotient = RatFunc::new(q, p.denom().clone()).expect("denominator nonzero");
    LinearDivision { quotient, ok: r.is_zero(), remainder: r }
}

/// Ring homomorphism sending each variable to a rational function. Variables
/// of `p` without an assignment are an error.
pub fn specialize_poly(
    p: &LaurentPoly,
    assignment: &HashMap<Var, RatFunc>,
) -> Result<RatFunc, RingError> {
    let vars = p.vars().to_vec();
    for v in &vars {
        if !assignment.contains_key(v) {
            return Err(RingError::UnassignedVariable(v.to_string()));
        }
    }
    // Per variable: value n/d; monomial n are units and need no clearing.
    struct Slot {
        num: LaurentPoly,
        den: LaurentPoly,
        num_unit: bool,
        pos: i32,
        neg: i32,
    }
    let mut slots: Vec<Slot> = vars
        .iter()
        .map(|v| {
            let val = &assignment[v];
            Slot {
                num: val.numer().clone(),
                den: val.denom().clone(),
                num_unit: val.numer().is_monomial(),
                pos: 0,
                neg: 0,
            }
        })
        .collect();
    for (e, _) in p.terms() {
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                slots[i].pos = slots[i].pos.max(k);
            } else {
                slots[i].neg = slots[i].neg.max(-k);
            }
        }
    }
    for s in &slots {
        if s.neg > 0 && s.num.is_zero() {
            return Err(RingError::DivisionByZero);
        }
    }
    let mut cache: HashMap<(usize, bool, i32), LaurentPoly> = HashMap::new();
    let mut power = |i: usize, of_num: bool, k: i32, slots: &[Slot]| -> LaurentPoly {
        cache
            .entry((i, of_num, k))
            .or_insert_with(|| {
                let base = if of_num { &slots[i].num } else { &slots[i].den };
                base.pow(k).expect("power of unit or nonnegative")
            })
            .clone()
    };
    // common denominator: prod den_i^pos_i * num_i^neg_i (num_i only if not a unit)
    let mut den = LaurentPoly::one();
    for i in 0..slots.len() {
        den = &den * &power(i, false, slots[i].pos, &slots);
        if !slots[i].num_unit {
            den = &den * &power(i, true, slots[i].neg, &slots);
        }
    }
    let mut num = LaurentPoly::zero();
    for (e, c) in p.terms() {
        let mut t = LaurentPoly::constant(c.clone());
        for (i, &k) in e.iter().enumerate() {
            let s = &slots[i];
            if s.num_unit {
                t = &t * &power(i, true, k, &slots);
            } else {
                t = &t * &power(i, true, k + s.neg, &slots);
            }
            t = &t * &power(i, false, s.pos - k, &slots);
        }
        num += &t;
    }
    RatFunc::new(num, den)
}

/// Applies [`specialize_poly`] to numerator and denominator.
pub fn specialize(p: &RatFunc, assignment: &HashMap<Var, RatFunc>) -> Result<RatFunc, RingError> {
    let mut full = assignment.clone();
    for v in p.vars() {
        full.entry(v).or_insert_with(|| RatFunc::var(v));
    }
    let n = specialize_poly(p.numer(), &full)?;
    let d = specialize_poly(p.denom(), &full)?;
    (&n / &d).map_err(|_| RingError::DivisionByZero)
}

/// The value of `(A - 1)/(v - v^-1)^2` at `v = 1`, for `A` in `v`, `z`.
pub fn limit_order2_at_v1(a: &RatFunc) -> Result<RatFunc, RingError> {
    let one = Rational::one();
    let den_at_1 = a.denom().eval_var(Var::V, &one).expect("v = 1 is a unit");
    if den_at_1.is_zero() {
        return Err(RingError::PoleAtOne);
    }
    let m = a.numer() - a.denom();
    let root = LaurentPoly::one();
    let (m1, r0) = div_rem_linear(&m, Var::V, &root);
    if !r0.is_zero() {
        return Err(RingError::OrderTooLow { order: 0, term: r0.eval_var(Var::V, &one).unwrap().to_string() });
    }
    let (m2, r1) = div_rem_linear(&m1, Var::V, &root);
    if !r1.is_zero() {
        return Err(RingError::OrderTooLow { order: 1, term: r1.eval_var(Var::V, &one).unwrap().to_string() });
    }
    // A - 1 = (v-1)^2 m2 / den and (v - 1/v)^2 = (v-1)^2 (v+1)^2 / v^2
    let top = m2.eval_var(Var::V, &one).expect("unit");
    let bottom = den_at_1.scale(&Rational::from_integer(4.into()));
    RatFunc::new(top, bottom)
}
