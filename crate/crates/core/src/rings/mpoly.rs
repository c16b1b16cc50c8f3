//! Dense-variable, sparse-term polynomials with nonnegative exponents over Q.
//! Only what rational-function normalization needs: exact division, pseudo
//! remainders and a recursive primitive-PRS gcd.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LaurentPoly, Rational, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct MPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn degree(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum::<u32>()).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    fn mul_term(&self, e: &[u32], c: &Rational) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (k.iter().zip(e).map(|(a, b)| a + b).collect(), x * c))
                .collect(),
        }
    }

    /// Coefficients with respect to `var`, each with that exponent zeroed.
    pub fn coeffs_in(&self, var: usize) -> BTreeMap<u32, MPoly> {
        let mut out: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[var];
            e2[var] = 0;
            out.entry(k).or_insert_with(|| MPoly::zero(self.nvars)).terms.insert(e2, c.clone());
        }
        out
    }

    fn leading_coeff_in(&self, var: usize) -> (u32, MPoly) {
        let d = self.degree(var);
        let mut lc = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == d {
                let mut e2 = e.clone();
                e2[var] = 0;
                lc.terms.insert(e2, c.clone());
            }
        }
        (d, lc)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &MPoly) -> Option<MPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let (le, lc) = divisor.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut q = MPoly::zero(self.nvars);
        while let Some((re, rc)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&le).any(|(a, b)| a < b) {
                return None;
            }
            let te: Vec<u32> = re.iter().zip(&le).map(|(a, b)| a - b).collect();
            let tc = rc / &lc;
            rem = rem.sub(&divisor.mul_term(&te, &tc));
            q.add_term(te, tc);
        }
        Some(q)
    }

    /// Sparse pseudo-remainder of `self` by `b` in `var`.
    fn prem(&self, b: &MPoly, var: usize) -> MPoly {
        let (db, lcb) = b.leading_coeff_in(var);
        let mut r = self.clone();
        while !r.is_zero() && r.degree(var) >= db {
            let (dr, lcr) = r.leading_coeff_in(var);
            let mut shift = vec![0; self.nvars];
            shift[var] = dr - db;
            let t = lcr.mul_term(&shift, &Rational::one()).mul(b);
            r = r.mul(&lcb).sub(&t);
        }
        r
    }

    /// Rescales so that coefficients are coprime integers with a positive
    /// leading (lex-largest) coefficient. Returns the factor divided out.
    pub fn make_primitive_integral(&self) -> (Rational, MPoly) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut factor = Rational::new(num_gcd, den_lcm);
        if self.terms.values().next_back().unwrap().is_negative() {
            factor = -factor;
        }
        (factor.clone(), self.scale(&factor.recip()))
    }

    fn first_active_var(a: &MPoly, b: &MPoly) -> Option<usize> {
        (0..a.nvars).find(|&i| a.degree(i) > 0 || b.degree(i) > 0)
    }

    fn content_in(&self, var: usize) -> MPoly {
        let mut g = MPoly::zero(self.nvars);
        for c in self.coeffs_in(var).values() {
            g = gcd(&g, c);
            if g.is_constant() {
                return MPoly::constant(self.nvars, Rational::one());
            }
        }
        g
    }
}

/// Greatest common divisor, normalized to be primitive integral with positive
/// leading coefficient. `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.make_primitive_integral().1;
    }
    if b.is_zero() {
        return a.make_primitive_integral().1;
    }
    let n = a.nvars;
    let Some(var) = MPoly::first_active_var(a, b) else {
        return MPoly::constant(n, Rational::one());
    };
    let ca = a.content_in(var);
    let cb = b.content_in(var);
    let gc = gcd(&ca, &cb);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let (mut r0, mut r1) = if pa.degree(var) >= pb.degree(var) { (pa, pb) } else { (pb, pa) };
    let g = loop {
        if r1.degree(var) == 0 {
            break MPoly::constant(n, Rational::one());
        }
        let r = r0.prem(&r1, var);
        if r.is_zero() {
            let c = r1.content_in(var);
            break r1.exact_div(&c).expect("content divides");
        }
        let c = r.content_in(var);
        let r = r.exact_div(&c).expect("content divides").make_primitive_integral().1;
        r0 = r1;
        r1 = r;
    };
    gc.mul(&g).make_primitive_integral().1
}

/// Splits a Laurent polynomial into `x^shift * P` with `P` having no monomial
/// factor, over the given variable list.
pub(crate) fn from_laurent(p: &LaurentPoly, vars: &[Var]) -> (Vec<i32>, MPoly) {
    let terms = p.exponents_over(vars);
    let n = vars.len();
    if terms.is_empty() {
        return (vec![0; n], MPoly::zero(n));
    }
    let shift: Vec<i32> = (0..n).map(|i| terms.iter().map(|(e, _)| e[i]).min().unwrap()).collect();
    let mut out = MPoly::zero(n);
    for (e, c) in terms {
        out.terms.insert(e.iter().zip(&shift).map(|(x, s)| (x - s) as u32).collect(), c);
    }
    (shift, out)
}

pub(crate) fn to_laurent(p: &MPoly, shift: &[i32], vars: &[Var]) -> LaurentPoly {
    LaurentPoly::from_terms(
        vars.to_vec(),
        p.terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(&x, s)| x as i32 + s).collect(), c.clone())),
    )
}
