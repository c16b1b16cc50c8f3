use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Rational, Var};

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// The representation is canonical: `vars` lists exactly the variables that
/// occur with a nonzero exponent in some term (in alphabet order) and no zero
/// coefficient is stored, so structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    vars: Vec<Var>,
    terms: BTreeMap<Vec<i32>, Rational>,
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { vars: vec![], terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![], c);
        }
        LaurentPoly { vars: vec![], terms }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(&[(v, 1)], Rational::one())
    }

    /// `coeff * prod v^e`; repeated variables multiply.
    pub fn monomial(factors: &[(Var, i32)], coeff: Rational) -> Self {
        let mut exps: BTreeMap<Var, i32> = BTreeMap::new();
        for &(v, e) in factors {
            *exps.entry(v).or_insert(0) += e;
        }
        Self::from_terms(exps.keys().copied().collect(), [(exps.values().copied().collect(), coeff)])
    }

    /// Builds a polynomial from terms over `vars` (any order, duplicates summed).
    pub fn from_terms<I>(vars: Vec<Var>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i32>, Rational)>,
    {
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by_key(|&i| vars[i]);
        for w in order.windows(2) {
            assert!(vars[w[0]] != vars[w[1]], "duplicate variable {}", vars[w[0]]);
        }
        let sorted_vars: Vec<Var> = order.iter().map(|&i| vars[i]).collect();
        let mut map: BTreeMap<Vec<i32>, Rational> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector arity mismatch");
            let key: Vec<i32> = order.iter().map(|&i| e[i]).collect();
            accumulate(&mut map, key, c);
        }
        LaurentPoly { vars: sorted_vars, terms: map }.trimmed()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Rational)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty() && self.terms.get(&vec![]).is_some_and(|c| c.is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.vars.is_empty() {
            Some(self.terms.get(&vec![]).cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.vars.contains(&v)
    }

    fn index_of(&self, v: Var) -> Option<usize> {
        self.vars.iter().position(|&w| w == v)
    }

    /// Exponent of `v` in a term, by the term's exponent vector.
    pub fn exponent_in(&self, exps: &[i32], v: Var) -> i32 {
        self.index_of(v).map_or(0, |i| exps[i])
    }

    /// Largest exponent of `v` (0 for the zero polynomial).
    pub fn degree_in(&self, v: Var) -> i32 {
        match self.index_of(v) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
        }
    }

    pub fn min_degree_in(&self, v: Var) -> i32 {
        match self.index_of(v) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).min().unwrap_or(0),
        }
    }

    /// Sum of absolute exponents of the largest term; used as a size measure.
    pub fn total_degree_span(&self) -> i64 {
        self.vars
            .iter()
            .map(|&v| (self.degree_in(v) - self.min_degree_in(v)) as i64)
            .sum()
    }

    pub fn coefficient(&self, exps: &[(Var, i32)]) -> Rational {
        let mut key = vec![0; self.vars.len()];
        for &(v, e) in exps {
            match self.index_of(v) {
                Some(i) => key[i] = e,
                None if e == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Splits into `sum_k c_k v^k` with each `c_k` free of `v`.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, Vec<(Vec<i32>, Rational)>> = BTreeMap::new();
        let idx = self.index_of(v);
        for (e, c) in &self.terms {
            let k = idx.map_or(0, |i| e[i]);
            let mut e2 = e.clone();
            if let Some(i) = idx {
                e2[i] = 0;
            }
            out.entry(k).or_default().push((e2, c.clone()));
        }
        out.into_iter()
            .map(|(k, ts)| (k, LaurentPoly::from_terms(self.vars.clone(), ts)))
            .collect()
    }

    pub fn from_coefficients_in(v: Var, coeffs: &BTreeMap<i32, LaurentPoly>) -> LaurentPoly {
        let x = LaurentPoly::var(v);
        let mut acc = LaurentPoly::zero();
        for (&k, c) in coeffs {
            acc += &(c * &x.pow(k).expect("variable powers are units"));
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Integer power; negative exponents only for monomials (units).
    pub fn pow(&self, n: i32) -> Option<LaurentPoly> {
        if n >= 0 {
            let mut acc = LaurentPoly::one();
            let mut base = self.clone();
            let mut k = n as u32;
            while k > 0 {
                if k & 1 == 1 {
                    acc = &acc * &base;
                }
                k >>= 1;
                if k > 0 {
                    base = &base * &base;
                }
            }
            Some(acc)
        } else {
            self.inverse_monomial().and_then(|inv| inv.pow(-n))
        }
    }

    pub fn inverse_monomial(&self) -> Option<LaurentPoly> {
        if !self.is_monomial() {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let mut terms = BTreeMap::new();
        terms.insert(e.iter().map(|x| -x).collect(), c.recip());
        Some(LaurentPoly { vars: self.vars.clone(), terms })
    }

    /// Replaces each variable by another (must stay injective).
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> LaurentPoly {
        let vars: Vec<Var> = self.vars.iter().map(|&v| f(v)).collect();
        LaurentPoly::from_terms(vars, self.terms.iter().map(|(e, c)| (e.clone(), c.clone())))
    }

    /// Maps every exponent vector through `f` (same variable list).
    pub fn map_exponents(&self, f: impl Fn(&[Var], &[i32]) -> Vec<i32>) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.vars.clone(),
            self.terms.iter().map(|(e, c)| (f(&self.vars, e), c.clone())),
        )
    }

    /// Evaluates `v` at a rational value (nonzero if negative powers occur).
    pub fn eval_var(&self, v: Var, value: &Rational) -> Option<LaurentPoly> {
        let Some(i) = self.index_of(v) else {
            return Some(self.clone());
        };
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let k = e[i];
            if k < 0 && value.is_zero() {
                return None;
            }
            let f = rational_pow(value, k);
            let mut e2 = e.clone();
            e2[i] = 0;
            terms.push((e2, c * f));
        }
        Some(LaurentPoly::from_terms(self.vars.clone(), terms))
    }

    /// Substitutes `v -> value` where `value` is a Laurent polynomial; negative
    /// powers of `v` require `value` to be a monomial.
    pub fn substitute(&self, v: Var, value: &LaurentPoly) -> Option<LaurentPoly> {
        let coeffs = self.coefficients_in(v);
        let mut acc = LaurentPoly::zero();
        for (k, c) in coeffs {
            acc += &(&c * &value.pow(k)?);
        }
        Some(acc)
    }

    /// Multiplies by the monomial `prod v^e`.
    pub fn shift(&self, factors: &[(Var, i32)]) -> LaurentPoly {
        self * &LaurentPoly::monomial(factors, Rational::one())
    }

    /// The lexicographically largest term, as (exponents over `vars()`, coeff).
    pub fn leading_term(&self) -> Option<(&Vec<i32>, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Terms in graded order: by total degree, then exponent vector.
    pub fn graded_terms(&self) -> Vec<(&Vec<i32>, &Rational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| {
            let da: i64 = a.0.iter().map(|&x| x as i64).sum();
            let db: i64 = b.0.iter().map(|&x| x as i64).sum();
            da.cmp(&db).then_with(|| a.0.cmp(b.0))
        });
        ts
    }

    pub fn has_only_nonnegative_exponents(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Re-expresses the polynomial over a superset of its variables.
    pub(crate) fn exponents_over(&self, vars: &[Var]) -> Vec<(Vec<i32>, Rational)> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("variable not in target list"))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut out = vec![0; vars.len()];
                for (i, &x) in e.iter().enumerate() {
                    out[map[i]] = x;
                }
                (out, c.clone())
            })
            .collect()
    }

    fn trimmed(mut self) -> LaurentPoly {
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|e| e[i] != 0))
            .collect();
        if used.iter().all(|&u| u) {
            return self;
        }
        let vars = self.vars.iter().zip(&used).filter(|(_, &u)| u).map(|(&v, _)| v).collect();
        let terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(e, c)| (e.iter().zip(&used).filter(|(_, &u)| u).map(|(&x, _)| x).collect(), c))
            .collect();
        LaurentPoly { vars, terms }
    }
}

pub(crate) fn union_vars(a: &[Var], b: &[Var]) -> Vec<Var> {
    let mut out: Vec<Var> = a.iter().chain(b).copied().collect();
    out.sort();
    out.dedup();
    out
}

fn accumulate(map: &mut BTreeMap<Vec<i32>, Rational>, key: Vec<i32>, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(c);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

pub(crate) fn rational_pow(x: &Rational, k: i32) -> Rational {
    if k >= 0 {
        num_traits::pow(x.clone(), k as usize)
    } else {
        num_traits::pow(x.recip(), (-k) as usize)
    }
}

fn combine(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if a.vars == b.vars {
        let mut terms = a.terms.clone();
        for (e, c) in &b.terms {
            accumulate(&mut terms, e.clone(), if negate_b { -c.clone() } else { c.clone() });
        }
        return LaurentPoly { vars: a.vars.clone(), terms }.trimmed();
    }
    let vars = union_vars(&a.vars, &b.vars);
    let mut terms = BTreeMap::new();
    for (e, c) in a.exponents_over(&vars) {
        accumulate(&mut terms, e, c);
    }
    for (e, c) in b.exponents_over(&vars) {
        accumulate(&mut terms, e, if negate_b { -c } else { c });
    }
    LaurentPoly { vars, terms }.trimmed()
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        combine(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        combine(self, rhs, true)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if self.vars == rhs.vars {
            for (e, c) in &rhs.terms {
                accumulate(&mut self.terms, e.clone(), c.clone());
            }
            let t = std::mem::take(self);
            *self = t.trimmed();
        } else {
            *self = combine(self, rhs, false);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = combine(self, rhs, true);
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let vars = union_vars(&self.vars, &rhs.vars);
        let a = self.exponents_over(&vars);
        let b = rhs.exponents_over(&vars);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                accumulate(&mut terms, e, ca * cb);
            }
        }
        LaurentPoly { vars, terms }.trimmed()
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::int(c)
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<Var> for LaurentPoly {
    fn from(v: Var) -> Self {
        LaurentPoly::var(v)
    }
}

/// Integer rational shorthand.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn is_dyadic(c: &Rational) -> bool {
    let mut d = c.denom().abs();
    let two = BigInt::from(2);
    while (&d % &two).is_zero() {
        d /= &two;
    }
    d.is_one()
}
