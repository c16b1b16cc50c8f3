use super::*;
use crate::rings::{parse_poly, sigma_swap};

fn sig(s: &str) -> SigmaPoly {
    SigmaPoly::new(parse_poly(s).unwrap()).unwrap()
}

#[test]
fn i_bases_and_first_steps() {
    assert!(i_value(0).is_zero());
    assert_eq!(i_value(1), int(-1));
    assert_eq!(i_value(-1), int(-1));
    assert_eq!(i_value(2), sig("2*sp - 2*sm"));
    assert_eq!(i_value(3), sig("-1 + 2*sp*sm - 2*sm^2"));
    assert_eq!(i_value(-3), sig("-1 - 2*sp^2 + 2*sp*sm"));
}

#[test]
fn torus_values() {
    assert!(torus_value(0).is_zero());
    assert_eq!(torus_value(1), int(1));
    assert_eq!(torus_value(-1), int(-1));
    assert_eq!(torus_value(2), sig("sm - sp"));
    let k3 = &int(3) - &(&SigmaPoly::diff() * &sig("2 + sm"));
    assert_eq!(torus_value(3), k3);
    let k5 = &int(5) + &(&SigmaPoly::diff() * &sig("-6 + 2*sp - 4*sm + 2*sp*sm - 2*sm^2 - sm^3"));
    assert_eq!(torus_value(5), k5);
}

#[test]
fn recursion_matches_t3_vector() {
    let t3 = skein_vectors().t3;
    for n in -8..=8 {
        let mut acc = t3[0].clone();
        for (i, c) in t3[1..].iter().enumerate() {
            acc = &acc + &(c * &i_value(n - 2 + i as i64));
        }
        assert_eq!(i_value(n + 3), acc, "n = {n}");
    }
    assert!(skein_vectors().rot2[1].is_zero());
}

#[test]
fn mirror_pattern() {
    for n in -10..=10 {
        assert_eq!(i_value(-n), sigma_swap(&i_value(n)), "n = {n}");
        assert_eq!(torus_value(-n), -&sigma_swap(&torus_value(n)), "m = {n}");
    }
}

#[test]
fn integrality() {
    for m in -15..=15 {
        assert!(conj_integrality_check(&torus_value(m)).ok, "m = {m}");
    }
    let bad = conj_integrality_check(&SigmaPoly::plus().half());
    assert!(!bad.ok);
    assert_eq!(bad.witness.len(), 1);
    assert!(conj_integrality_check(&SigmaPoly::zero()).ok);
}

#[test]
fn family_grammar() {
    let l: FamilyLink = " connsum( frame(torus2(3), -3) ,torus2(-1))".parse().unwrap();
    assert_eq!(l.to_string(), "connsum(frame(torus2(3),-3),torus2(-1))");
    assert_eq!(l.framing_shift(), -3);
    assert_eq!(qtilde(&l), &(&torus_value(3) + &int(-3)) + &int(-1));
    assert!(qtilde(&FamilyLink::Torus2(1).frame(-1)).is_zero());
    for bad in ["torus(3)", "torus2(3", "frame(torus2(1))", "torus2(1) x", "torus2(a)"] {
        assert!(bad.parse::<FamilyLink>().is_err(), "{bad}");
    }
    let d = l.to_diagram().unwrap();
    assert_eq!(d.writhe().unwrap(), 3 - 3 - 1);
}
