#![allow(dead_code)]

use linkinv::diagrams::{BraidWord, LinkDiagram};
use linkinv::dskein::FamilyLink;
use linkinv::rings::{parse_poly, LaurentPoly, RatFunc, Rational, SigmaPoly, Var};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn lp(s: &str) -> LaurentPoly {
    parse_poly(s).unwrap()
}

pub fn rf(s: &str) -> RatFunc {
    RatFunc::from_poly(lp(s))
}

pub fn sig(s: &str) -> SigmaPoly {
    SigmaPoly::new(lp(s)).unwrap()
}

pub fn ratio(a: &RatFunc, b: &RatFunc) -> RatFunc {
    (a / b).unwrap()
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn braid(n: usize, w: &[i32]) -> LinkDiagram {
    BraidWord::new(n, w.to_vec()).unwrap().closure()
}

pub fn random_braid(rng: &mut ChaCha8Rng, max_strands: usize, max_len: usize) -> LinkDiagram {
    let n = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(1..=max_len);
    let word: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    braid(n, &word)
}

/// A random Laurent polynomial in the given variables with small exponents
/// and coefficients, denominators drawn from `dens`.
pub fn random_poly(rng: &mut ChaCha8Rng, vars: &[Var], terms: usize, nonneg: bool, dens: &[i64]) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for _ in 0..terms {
        let mono: Vec<(Var, i32)> =
            vars.iter().map(|&v| (v, if nonneg { rng.gen_range(0..=3) } else { rng.gen_range(-3..=3) })).collect();
        let den = dens[rng.gen_range(0..dens.len())];
        let c = Rational::new(rng.gen_range(-5i64..=5).into(), den.into());
        acc += &LaurentPoly::monomial(&mono, c);
    }
    acc
}

pub fn random_sigma(rng: &mut ChaCha8Rng) -> SigmaPoly {
    SigmaPoly::new(random_poly(rng, &[Var::SigmaPlus, Var::SigmaMinus], 4, true, &[1, 2])).unwrap()
}

pub fn random_family(rng: &mut ChaCha8Rng, depth: u32) -> FamilyLink {
    match if depth == 0 { 0 } else { rng.gen_range(0..3) } {
        0 => FamilyLink::Torus2(rng.gen_range(-7..=7)),
        1 => random_family(rng, depth - 1).frame(rng.gen_range(-4..=4)),
        _ => random_family(rng, depth - 1).connsum(random_family(rng, depth - 1)),
    }
}
