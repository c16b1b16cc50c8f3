use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::laurent::is_dyadic;
use super::{LaurentPoly, Rational, RingError, Var};

/// Element of `Z[1/2][q1^±, q2^±, q3^±] / (q1 q2 q3 = 1)`, stored with `q3`
/// eliminated. Equality is equality of the stored normal forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRingElem(LaurentPoly);

impl QRingElem {
    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.0
    }
}

impl fmt::Display for QRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Rewrites `q3 -> (q1 q2)^-1`. Idempotent; other variables pass through.
pub fn normalize_qring(p: &LaurentPoly) -> QRingElem {
    QRingElem(eliminate_q3(p))
}

fn eliminate_q3(p: &LaurentPoly) -> LaurentPoly {
    if !p.contains_var(Var::Q3) {
        return p.clone();
    }
    let mut vars: Vec<Var> = p.vars().to_vec();
    for v in [Var::Q1, Var::Q2] {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars.sort();
    let terms = p.exponents_over(&vars);
    let i1 = vars.iter().position(|&v| v == Var::Q1).unwrap();
    let i2 = vars.iter().position(|&v| v == Var::Q2).unwrap();
    let i3 = vars.iter().position(|&v| v == Var::Q3).unwrap();
    LaurentPoly::from_terms(
        vars,
        terms.into_iter().map(|(mut e, c)| {
            let k = e[i3];
            e[i3] = 0;
            e[i1] -= k;
            e[i2] -= k;
            (e, c)
        }),
    )
}

/// Polynomial in `sigma_+`, `sigma_-` with dyadic coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SigmaPoly(LaurentPoly);

impl SigmaPoly {
    pub fn new(p: LaurentPoly) -> Result<SigmaPoly, RingError> {
        if p.vars().iter().any(|v| !matches!(v, Var::SigmaPlus | Var::SigmaMinus)) {
            return Err(RingError::Invariant(format!(
                "sigma polynomial over foreign variables {:?}",
                p.vars()
            )));
        }
        if !p.has_only_nonnegative_exponents() {
            return Err(RingError::Invariant("negative exponent in sigma polynomial".into()));
        }
        if let Some((_, c)) = p.terms().find(|(_, c)| !is_dyadic(c)) {
            return Err(RingError::Invariant(format!("non-dyadic coefficient {c}")));
        }
        Ok(SigmaPoly(p))
    }

    pub fn zero() -> Self {
        SigmaPoly(LaurentPoly::zero())
    }

    pub fn int(c: i64) -> Self {
        SigmaPoly(LaurentPoly::int(c))
    }

    pub fn plus() -> Self {
        SigmaPoly(LaurentPoly::var(Var::SigmaPlus))
    }

    pub fn minus() -> Self {
        SigmaPoly(LaurentPoly::var(Var::SigmaMinus))
    }

    /// `sigma_+ - sigma_-`.
    pub fn diff() -> Self {
        &Self::plus() - &Self::minus()
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> SigmaPoly {
        SigmaPoly::new(self.0.scale(c)).expect("dyadic scaling only")
    }

    pub fn half(&self) -> SigmaPoly {
        SigmaPoly(self.0.scale(&Rational::new(1.into(), 2.into())))
    }

    /// `sigma_+ -> q1^2+q2^2+q3^2`, `sigma_- -> q1^-2+q2^-2+q3^-2`, normalized.
    pub fn embed(&self) -> QRingElem {
        let q = |a: i32, b: i32| LaurentPoly::monomial(&[(Var::Q1, a), (Var::Q2, b)], Rational::one());
        let sp = &(&q(2, 0) + &q(0, 2)) + &q(-2, -2);
        let sm = &(&q(-2, 0) + &q(0, -2)) + &q(2, 2);
        let out = self
            .0
            .substitute(Var::SigmaPlus, &sp)
            .and_then(|p| p.substitute(Var::SigmaMinus, &sm))
            .expect("nonnegative exponents");
        normalize_qring(&out)
    }

    /// Exact division by `sigma_+ - sigma_-`.
    pub fn div_by_diff(&self) -> Result<SigmaPoly, RingError> {
        let root = LaurentPoly::var(Var::SigmaMinus);
        let (q, r) = super::special::div_rem_linear(&self.0, Var::SigmaPlus, &root);
        if !r.is_zero() {
            return Err(RingError::InexactDivision { remainder: r.to_string() });
        }
        SigmaPoly::new(q)
    }
}

impl fmt::Display for SigmaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl std::ops::Add for &SigmaPoly {
    type Output = SigmaPoly;
    fn add(self, rhs: &SigmaPoly) -> SigmaPoly {
        SigmaPoly(&self.0 + &rhs.0)
    }
}

impl std::ops::Sub for &SigmaPoly {
    type Output = SigmaPoly;
    fn sub(self, rhs: &SigmaPoly) -> SigmaPoly {
        SigmaPoly(&self.0 - &rhs.0)
    }
}

impl std::ops::Mul for &SigmaPoly {
    type Output = SigmaPoly;
    fn mul(self, rhs: &SigmaPoly) -> SigmaPoly {
        SigmaPoly(&self.0 * &rhs.0)
    }
}

impl std::ops::Neg for &SigmaPoly {
    type Output = SigmaPoly;
    fn neg(self) -> SigmaPoly {
        SigmaPoly(-&self.0)
    }
}

impl std::ops::Add for SigmaPoly {
    type Output = SigmaPoly;
    fn add(self, rhs: SigmaPoly) -> SigmaPoly {
        &self + &rhs
    }
}

impl std::ops::Sub for SigmaPoly {
    type Output = SigmaPoly;
    fn sub(self, rhs: SigmaPoly) -> SigmaPoly {
        &self - &rhs
    }
}

impl std::ops::Mul for SigmaPoly {
    type Output = SigmaPoly;
    fn mul(self, rhs: SigmaPoly) -> SigmaPoly {
        &self * &rhs
    }
}

/// Exchanges `sigma_+` and `sigma_-` in every term.
pub fn sigma_swap(p: &SigmaPoly) -> SigmaPoly {
    SigmaPoly(p.0.rename(|v| match v {
        Var::SigmaPlus => Var::SigmaMinus,
        Var::SigmaMinus => Var::SigmaPlus,
        other => other,
    }))
}

/// Inverse of [`SigmaPoly::embed`] on symmetric elements.
pub fn express_in_sigma(p: &QRingElem) -> Result<SigmaPoly, RingError> {
    let poly = p.poly();
    if poly.vars().iter().any(|v| !matches!(v, Var::Q1 | Var::Q2)) {
        return Err(RingError::Invariant(format!("q-ring element over {:?}", poly.vars())));
    }
    let lifted = lift_min_zero(poly);
    if !is_symmetric(&lifted) {
        return Err(RingError::NotSymmetric);
    }
    if lifted.keys().any(|e| e.iter().any(|x| x % 2 != 0)) {
        return Err(RingError::NotInSubring("odd exponent in q".into()));
    }
    // x_i = q_i^2, symmetric polynomial in x1,x2,x3 with e3 = x1 x2 x3 = 1.
    let mut rest: BTreeMap<[u32; 3], Rational> = lifted
        .into_iter()
        .map(|(e, c)| ([e[0] as u32 / 2, e[1] as u32 / 2, e[2] as u32 / 2], c))
        .collect();
    let mut out = LaurentPoly::zero();
    while let Some((e, c)) = rest.iter().next_back().map(|(e, c)| (*e, c.clone())) {
        // lex-leading monomial of a symmetric polynomial has e0 >= e1 >= e2
        debug_assert!(e[0] >= e[1] && e[1] >= e[2]);
        let (i, j, k) = (e[0] - e[1], e[1] - e[2], e[2]);
        let term = elementary_product(i, j, k);
        for (te, tc) in term {
            let entry = rest.entry(te).or_insert_with(Rational::zero);
            *entry -= &c * tc;
            if entry.is_zero() {
                rest.remove(&te);
            }
        }
        out += &LaurentPoly::monomial(&[(Var::SigmaPlus, i as i32), (Var::SigmaMinus, j as i32)], c);
    }
    SigmaPoly::new(out).map_err(|e| RingError::NotInSubring(e.to_string()))
}

/// Canonical lift of a Laurent polynomial in q1,q2 (q3 eliminated) to a
/// polynomial in q1,q2,q3 whose every monomial has minimum exponent zero.
fn lift_min_zero(p: &LaurentPoly) -> BTreeMap<[i32; 3], Rational> {
    let vars = [Var::Q1, Var::Q2];
    let present: Vec<Var> = p.vars().to_vec();
    let mut out = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut a = [0i32; 2];
        for (i, v) in vars.iter().enumerate() {
            if let Some(j) = present.iter().position(|w| w == v) {
                a[i] = e[j];
            }
        }
        let k = 0.max(-a[0]).max(-a[1]);
        let m = [a[0] + k, a[1] + k, k];
        let lo = *m.iter().min().unwrap();
        out.insert([m[0] - lo, m[1] - lo, m[2] - lo], c.clone());
    }
    out
}

fn is_symmetric(p: &BTreeMap<[i32; 3], Rational>) -> bool {
    let perms: [[usize; 3]; 2] = [[1, 0, 2], [2, 1, 0]];
    perms.iter().all(|perm| {
        p.iter().all(|(e, c)| {
            let pe = [e[perm[0]], e[perm[1]], e[perm[2]]];
            p.get(&pe) == Some(c)
        })
    })
}

/// Expansion of `e1^i e2^j e3^k` in three variables.
fn elementary_product(i: u32, j: u32, k: u32) -> BTreeMap<[u32; 3], Rational> {
    let e1: Vec<[u32; 3]> = vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let e2: Vec<[u32; 3]> = vec![[1, 1, 0], [1, 0, 1], [0, 1, 1]];
    let mut acc: BTreeMap<[u32; 3], Rational> = BTreeMap::new();
    acc.insert([k, k, k], Rational::one());
    let mul = |acc: &BTreeMap<[u32; 3], Rational>, f: &[[u32; 3]]| {
        let mut out: BTreeMap<[u32; 3], Rational> = BTreeMap::new();
        for (e, c) in acc {
            for m in f {
                let key = [e[0] + m[0], e[1] + m[1], e[2] + m[2]];
                *out.entry(key).or_insert_with(Rational::zero) += c;
            }
        }
        out
    };
    for _ in 0..i {
        acc = mul(&acc, &e1);
    }
    for _ in 0..j {
        acc = mul(&acc, &e2);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::rat;

    fn q(a: i32, b: i32, c: i32) -> LaurentPoly {
        LaurentPoly::monomial(&[(Var::Q1, a), (Var::Q2, b), (Var::Q3, c)], Rational::one())
    }

    #[test]
    fn quotient_relation() {
        assert!(normalize_qring(&q(1, 1, 1)).poly().is_one());
        assert_eq!(normalize_qring(&q(0, 0, 2)).into_poly(), q(-2, -2, 0));
    }

    #[test]
    fn sigma_plus_embedding() {
        let p = &(&q(2, 0, 0) + &q(0, 2, 0)) + &q(0, 0, 2);
        assert_eq!(normalize_qring(&p), SigmaPoly::plus().embed());
    }

    #[test]
    fn sigma_minus_round_trip() {
        let e = SigmaPoly::minus().embed();
        assert_eq!(express_in_sigma(&e).unwrap(), SigmaPoly::minus());
    }

    #[test]
    fn constant_and_asymmetric() {
        let seven = normalize_qring(&LaurentPoly::int(7));
        assert_eq!(express_in_sigma(&seven).unwrap(), SigmaPoly::int(7));
        let bad = normalize_qring(&q(2, 0, 0));
        assert!(matches!(express_in_sigma(&bad), Err(RingError::NotSymmetric)));
    }

    #[test]
    fn odd_symmetric_is_not_in_subring() {
        // q1 + q2 + q3 is symmetric but not a polynomial in the squares
        let p = normalize_qring(&(&(&q(1, 0, 0) + &q(0, 1, 0)) + &q(0, 0, 1)));
        assert!(matches!(express_in_sigma(&p), Err(RingError::NotInSubring(_))));
    }

    #[test]
    fn swap_is_involution_and_negates_diff() {
        let d = SigmaPoly::diff().scale(&rat(2, 1));
        assert_eq!(sigma_swap(&d), -&d);
        assert_eq!(sigma_swap(&sigma_swap(&d)), d);
        assert_eq!(sigma_swap(&SigmaPoly::int(5)), SigmaPoly::int(5));
    }

    #[test]
    fn exact_division_by_diff() {
        let p = &SigmaPoly::diff() * &(&SigmaPoly::int(2) + &SigmaPoly::minus());
        assert_eq!(p.div_by_diff().unwrap(), &SigmaPoly::int(2) + &SigmaPoly::minus());
        assert!(SigmaPoly::plus().div_by_diff().is_err());
    }
}
