//! Small dense-key Laurent polynomials used inside the skein recursions.
//!
//! Up to three variables, exponents packed into 21-bit fields of a `u64`
//! (offset by 2^20), integer coefficients. Multiplying monomials is adding
//! keys, which keeps the hot loop free of allocation.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::rings::{LaurentPoly, Rational, Var};

const BITS: u32 = 21;
const OFF: i64 = 1 << 20;
const MASK: u64 = (1 << BITS) - 1;
const ZERO_KEY: u64 = (OFF as u64) | ((OFF as u64) << BITS) | ((OFF as u64) << (2 * BITS));

pub(crate) fn pack(e: [i32; 3]) -> u64 {
    e.iter().enumerate().fold(0u64, |acc, (i, &x)| {
        let f = x as i64 + OFF;
        debug_assert!((0..(1 << BITS)).contains(&f), "exponent out of range");
        acc | ((f as u64) << (BITS * i as u32))
    })
}

pub(crate) fn unpack(k: u64) -> [i32; 3] {
    [0, 1, 2].map(|i| (((k >> (BITS * i)) & MASK) as i64 - OFF) as i32)
}

#[inline]
fn key_mul(a: u64, b: u64) -> u64 {
    a + b - ZERO_KEY
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub(crate) struct Poly(Vec<(u64, i128)>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly::mono([0, 0, 0], 1)
    }

    pub fn mono(e: [i32; 3], c: i128) -> Poly {
        if c == 0 {
            Poly::zero()
        } else {
            Poly(vec![(pack(e), c)])
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ([i32; 3], i128)> + '_ {
        self.0.iter().map(|&(k, c)| (unpack(k), c))
    }

    fn merge(&self, other: &Poly, sign: i128) -> Poly {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, sign * b[j].1));
                j += 1;
            } else {
                let c = a[i].1.checked_add(sign * b[j].1).expect("coefficient overflow");
                if c != 0 {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Poly(out)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, 1)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, -1)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.0.len() == 1 {
            return self.mul_term(other.0[0].0, other.0[0].1);
        }
        if self.0.len() == 1 {
            return other.mul_term(self.0[0].0, self.0[0].1);
        }
        let mut acc: HashMap<u64, i128> = HashMap::with_capacity(self.0.len() * other.0.len());
        for &(ka, ca) in &self.0 {
            for &(kb, cb) in &other.0 {
                let e = acc.entry(key_mul(ka, kb)).or_insert(0);
                *e = e.checked_add(ca.checked_mul(cb).expect("coefficient overflow")).expect("coefficient overflow");
            }
        }
        let mut v: Vec<(u64, i128)> = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        v.sort_unstable_by_key(|t| t.0);
        Poly(v)
    }

    fn mul_term(&self, k: u64, c: i128) -> Poly {
        Poly(self.0.iter().map(|&(ka, ca)| (key_mul(ka, k), ca.checked_mul(c).expect("coefficient overflow"))).collect())
    }

    /// Multiplies by `c * x^e`.
    pub fn scale(&self, e: [i32; 3], c: i128) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        self.mul_term(pack(e), c)
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn to_laurent(&self, vars: &[Var]) -> LaurentPoly {
        LaurentPoly::from_terms(
            vars.to_vec(),
            self.terms().map(|(e, c)| (e[..vars.len()].to_vec(), Rational::from_integer(BigInt::from(c)))),
        )
    }
}
