use super::*;
use crate::diagrams::{torus2, BraidWord};
use crate::rings::{parse_poly, rat};

fn braid(n: usize, w: &[i32]) -> LinkDiagram {
    BraidWord::new(n, w.to_vec()).unwrap().closure()
}

fn at(p: &RatFunc, s: i64, a: i64) -> Rational {
    p.eval_all(&[(Var::S, rat(s, 1)), (Var::Alpha, rat(a, 1))]).unwrap()
}

fn rf(s: &str) -> RatFunc {
    RatFunc::from_poly(parse_poly(s).unwrap())
}

/// `(alpha, s) -> (1/alpha, 1/s)`.
fn invert(p: &RatFunc) -> RatFunc {
    let mut m = HashMap::new();
    m.insert(Var::Alpha, RatFunc::var(Var::Alpha).recip().unwrap());
    m.insert(Var::S, RatFunc::var(Var::S).recip().unwrap());
    specialize(p, &m).unwrap()
}

#[test]
fn circles_and_curls() {
    let delta = circle_value();
    assert_eq!(at(&delta, 2, 3), rat(25, 9));
    assert_eq!(kauffman_lambda(&LinkDiagram::empty()).unwrap(), RatFunc::one());
    assert_eq!(kauffman_lambda(&LinkDiagram::unknot()).unwrap(), delta);
    assert_eq!(kauffman_lambda(&LinkDiagram::unlink(2)).unwrap(), &delta * &delta);
    let a = RatFunc::var(Var::Alpha);
    let mut curls = [kauffman_lambda(&torus2(1)).unwrap(), kauffman_lambda(&torus2(-1)).unwrap()];
    curls.sort_by_key(|c| c.to_string());
    let mut expect = [&a * &delta, &a.recip().unwrap() * &delta];
    expect.sort_by_key(|c| c.to_string());
    assert_eq!(curls, expect);
    assert_eq!(at_alpha_eq_s(&delta).unwrap(), RatFunc::int(2));
}

#[test]
fn regular_isotopy() {
    let t = kauffman_lambda(&braid(2, &[1, 1, 1])).unwrap();
    assert_eq!(kauffman_lambda(&braid(2, &[1, 1, -1, 1, 1])).unwrap(), t);
    let r3a = kauffman_lambda(&braid(3, &[1, 2, 1, -2, 2, -1])).unwrap();
    let r3b = kauffman_lambda(&braid(3, &[2, 1, 2, -2, 2, -1])).unwrap();
    assert_eq!(r3a, r3b);
}

#[test]
fn mirror_inverts_variables() {
    for d in [torus2(3), torus2(2), braid(3, &[1, 1, 2, -1, 2])] {
        let k = kauffman_lambda(&d).unwrap();
        assert_eq!(kauffman_lambda(&d.mirror()).unwrap(), invert(&k));
    }
}

#[test]
fn difference_skein_on_twists() {
    // Switching one crossing of the (2, m+1) closure gives the (2, m-1)
    // closure; the two smoothings are the (2, m) closure and a curly unknot.
    let z = rf("s - s^-1");
    let delta = circle_value();
    let a = RatFunc::var(Var::Alpha);
    for m in 1..=4i64 {
        let lhs = &kauffman_lambda(&torus2(m + 1)).unwrap() - &kauffman_lambda(&torus2(m - 1)).unwrap();
        let twist = kauffman_lambda(&torus2(m)).unwrap();
        let curly = &a.pow(-(m as i32)).unwrap() * &delta;
        assert_eq!(lhs, &z * &(&twist - &curly), "m = {m}");
    }
}

#[test]
fn engine_configurations_agree() {
    let d = braid(3, &[1, -2, 1, 1, -2, -2, 1]);
    let base = kauffman_lambda(&d).unwrap();
    for config in [
        SkeinConfig { memo: false, ..SkeinConfig::default() },
        SkeinConfig::sequential(),
        SkeinConfig { shuffle_seed: Some(3), ..SkeinConfig::default() },
    ] {
        assert_eq!(KauffmanEngine::new(config).lambda(&d).unwrap(), base, "{config:?}");
    }
}

#[test]
fn adjoint_of_unknot() {
    let k = k_adjoint(&LinkDiagram::unknot()).unwrap();
    assert_eq!(at(&k, 2, 3), rat(176, 81));
    assert_eq!(kauf_alpha_eq_s_check(&LinkDiagram::unknot()).unwrap(), RatFunc::one());
    let d = kauf_derivative_at_s(&LinkDiagram::unknot()).unwrap();
    let expect = (&rf("s^4 + 4*s^2 + 1") / &rf("s^5 - s")).unwrap();
    assert_eq!(d, expect);
}

#[test]
fn phi_on_generators() {
    assert_eq!(phi_sigma(&SigmaPoly::plus()), rf("2*s^-2 + s^4"));
    assert_eq!(phi_sigma(&SigmaPoly::minus()), rf("2*s^2 + s^-4"));
}
