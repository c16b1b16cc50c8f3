//! Acceptance criteria 1-9. Every criterion prints one PASS/FAIL line. The
//! target runs without the libtest harness so the lines are never captured.
//!
//! All comparisons are exact equality of canonical forms. A few printed
//! closed forms cannot hold for any engine (see the per-check notes); those
//! are still evaluated and reported as FAIL, and the test then requires the
//! minimally corrected form to hold exactly instead.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use common::*;
use linkinv::diagrams::{homfly_adjoint_expansion, torus2, LinkDiagram};
use linkinv::dskein::{conj_integrality_check, i_value, qtilde, skein_vectors, torus_value, FamilyLink};
use linkinv::homfly::{sigma_quotient_at_diagonal, HomflyEngine};
use linkinv::kauffman::{phi_sigma, KauffmanEngine};
use linkinv::rings::{
    express_in_sigma, from_json, parse_poly, psi_series, series_exp_v, sigma_swap, specialize_poly, to_json, DeltaSeries,
    LaurentPoly, RatFunc, SigmaPoly, Var,
};
use linkinv::skein::SkeinConfig;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A printed identity that is checked literally, paired with the corrected
/// identity that the test enforces.
struct Deviation {
    label: &'static str,
    printed_holds: bool,
    corrected_holds: bool,
}

#[derive(Default)]
struct Outcome {
    checks: Vec<(String, bool)>,
    deviations: Vec<Deviation>,
}

impl Outcome {
    fn check(&mut self, label: impl Into<String>, ok: bool) {
        self.checks.push((label.into(), ok));
    }

    fn eq<T: PartialEq + std::fmt::Display>(&mut self, label: impl Into<String>, expected: &T, computed: &T) {
        let label = label.into();
        if expected != computed {
            println!("    {label}: expected {expected}, computed {computed}");
        }
        self.check(label, expected == computed);
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.1) && self.deviations.iter().all(|d| d.printed_holds)
    }

    fn sound(&self) -> bool {
        self.checks.iter().all(|c| c.1) && self.deviations.iter().all(|d| d.corrected_holds)
    }
}

fn sp() -> SigmaPoly {
    SigmaPoly::plus()
}

fn sm() -> SigmaPoly {
    SigmaPoly::minus()
}

fn diff() -> SigmaPoly {
    &sp() - &sm()
}

fn k3_q() -> SigmaPoly {
    &SigmaPoly::int(3) - &(&diff() * &sig("2 + sm"))
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::default();
    o.eq("torus 0", &SigmaPoly::zero(), &torus_value(0));
    o.eq("torus 1", &SigmaPoly::int(1), &torus_value(1));
    o.eq("torus -1", &SigmaPoly::int(-1), &torus_value(-1));
    o.eq("hopf", &(&sm() - &sp()), &torus_value(2));
    o.eq("K3", &k3_q(), &torus_value(3));
    let k5 = &SigmaPoly::int(5) + &(&diff() * &sig("-6 + 2*sp - 4*sm + 2*sp*sm - 2*sm^2 - sm^3"));
    o.eq("K5", &k5, &torus_value(5));
    o.eq("I0", &SigmaPoly::zero(), &i_value(0));
    o.eq("I1", &SigmaPoly::int(-1), &i_value(1));
    o.eq("I-1", &SigmaPoly::int(-1), &i_value(-1));
    o.eq("I2", &sig("2*sp - 2*sm"), &i_value(2));
    o.eq("I-2", &sig("-2*sp + 2*sm"), &i_value(-2));
    o.eq("I3", &sig("-1 + 2*sp*sm - 2*sm^2"), &i_value(3));
    o.eq("I-3", &sig("-1 - 2*sp^2 + 2*sp*sm"), &i_value(-3));
    o
}

fn t3_literal() -> [SigmaPoly; 6] {
    [sig("4*sp - 4*sm"), sig("1"), sig("2 - sp"), sig("1 - 2*sp + sm"), sig("-1 - sp + 2*sm"), sig("-2 + sm")]
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::default();
    let t3 = t3_literal();
    o.check("t3 vector as printed", skein_vectors().t3 == t3);
    let rot2 = [sig("1 - 2*sp + 2*sm"), sig("0"), sig("-2 + sm"), sig("-1 + 2*sp - 2*sm"), sig("2 - sm"), sig("1")];
    o.check("rot2 vector as printed", skein_vectors().rot2 == rot2);
    for n in -8..=8i64 {
        let mut acc = t3[0].clone();
        for (i, c) in t3[1..].iter().enumerate() {
            acc = &acc + &(c * &i_value(n - 2 + i as i64));
        }
        o.eq(format!("T3 pairing at n = {n}"), &i_value(n + 3), &acc);
    }
    for n in -12..=12i64 {
        let mut below = t3[0].clone();
        for (i, c) in t3[1..].iter().enumerate() {
            below = &below + &(c * &i_value(n - 5 + i as i64));
        }
        let mut above = &i_value(n + 5) - &t3[0];
        for (i, c) in t3[2..].iter().enumerate() {
            above = &above - &(c * &i_value(n + 1 + i as i64));
        }
        o.eq(format!("from below at {n}"), &i_value(n), &below);
        o.eq(format!("from above at {n}"), &i_value(n), &above);
    }
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::default();
    for m in -15..=15 {
        let r = conj_integrality_check(&torus_value(m));
        o.check(format!("m = {m} {:?}", r.witness), r.ok);
    }
    o
}

fn h_ad_u0_form() -> RatFunc {
    ratio(&(&rf("v^2 + z*v - 1") * &rf("v^2 - z*v - 1")), &rf("z^2*v^2"))
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::default();
    let e = HomflyEngine::default();
    for (k1, k2) in [(0, 0), (1, 0), (-1, 0), (2, -3), (-4, 1)] {
        let d = LinkDiagram::unknot().add_kinks(0, k1).unwrap().add_kinks(0, k2).unwrap();
        o.eq(format!("kinked unknot {k1},{k2}"), &LaurentPoly::one(), &e.p(&d).unwrap());
    }
    o.eq("trefoil", &lp("2*v^2 + v^2*z^2 - v^4"), &e.p(&torus2(3)).unwrap());
    let h = RatFunc::from_poly(e.h_adjoint(&LinkDiagram::unknot()).unwrap());
    o.eq("H_ad(U0)", &h_ad_u0_form(), &h);
    o
}

fn h_ad_k3_ratio() -> RatFunc {
    let e = HomflyEngine::default();
    let num = RatFunc::from_poly(e.h_adjoint(&torus2(3)).unwrap());
    let den = RatFunc::from_poly(e.h_adjoint(&LinkDiagram::unknot()).unwrap());
    ratio(&num, &den)
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::default();
    let r = h_ad_k3_ratio();
    let x = rf("v - v^-1");
    let inner = &(&ratio(&rf("v + 4"), &rf("v + 1")) + &rf("v^2*z^2 + 4*z^2")) + &rf("z^4");
    let form = &(&rf("1") - &(&rf("3") * &x)) + &(&(&x * &x) * &inner);
    o.eq("ratio closed form", &form, &r);
    let s = series_exp_v(&r, 3).unwrap();
    let printed = DeltaSeries::new(3, vec![lp("1"), lp("3"), lp("5/2 + 5*z^2 + z^4")]);
    o.eq("delta expansion", &printed, &s);
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::default();
    let s = series_exp_v(&h_ad_k3_ratio(), 3).unwrap();
    let literal = DeltaSeries::new(3, vec![lp("1"), lp("3"), &lp("9/2 - 2") + &(&lp("z^2") * &lp("z^2 + 5"))]);
    o.eq("1 + 3d + d^2(9/2 - 2) + d^2 z^2(z^2 + 5)", &literal, &s);
    let k3 = torus2(3);
    let w = k3.writhe_data().unwrap().diagonal;
    o.eq("w(K3)", &3, &w);
    let v2 = HomflyEngine::default().v2(&k3).unwrap();
    o.eq("V2(K3)", &int(1), &v2);
    let psi = psi_series(&torus_value(3));
    o.eq("psi(Q(K3))", &DeltaSeries::new(2, vec![lp("3"), lp("z^4 + 5*z^2")]), &psi);
    let c2 = int(w * w) / int(2) - int(2) * v2;
    let split = DeltaSeries::new(3, vec![lp("1"), LaurentPoly::zero(), LaurentPoly::constant(c2)])
        .add(&DeltaSeries::new(3, psi.coeffs().to_vec()).shift(1));
    o.eq("split from w, V2 and psi", &split, &s);
    o
}

fn at_alpha_s(p: &RatFunc) -> RatFunc {
    let mut m = std::collections::HashMap::new();
    m.insert(Var::Alpha, RatFunc::var(Var::S));
    m.insert(Var::S, RatFunc::var(Var::S));
    let n = specialize_poly(p.numer(), &m).unwrap();
    let d = specialize_poly(p.denom(), &m).unwrap();
    ratio(&n, &d)
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::default();
    let e = KauffmanEngine::default();
    let u = e.k_adjoint(&LinkDiagram::unknot()).unwrap();
    let num = &(&(&rf("a^2 - 1") * &rf("s^3 + a")) * &rf("s*a - 1")) * &rf("s");
    let den = &(&rf("a^2") * &rf("s^4 - 1")) * &rf("s^2 - 1");
    o.eq("K_ad(U0)", &ratio(&num, &den), &u);
    let probe = u.eval_all(&[(Var::S, int(2)), (Var::Alpha, int(3))]).unwrap();
    o.eq("K_ad(U0) at (2,3)", &(int(176) / int(81)), &probe);

    let k3 = e.k_adjoint(&torus2(3)).unwrap();
    let r = ratio(&k3, &u);
    let a = RatFunc::var(Var::Alpha);
    let ap = |k: i32| a.pow(k).unwrap();
    let bracket = &(&(&(&ratio(&rf("s^12 + s^8 + s^6 + 1"), &rf("s^10"))
        + &ratio(&(&rf("s^4 - 1") * &rf("s^6 + 1")), &(&rf("s^7") * &ap(1))))
        - &ratio(&rf("s^12 - s^10 - s^8 + 2*s^6 - s^2 + 1"), &(&rf("s^6") * &ap(2))))
        - &ratio(&(&rf("s^4 - 1") * &rf("s^6 - s^2 + 1")), &(&rf("s^3") * &ap(3))))
        - &ratio(&(&rf("s^4 - 1") * &rf("s^2 - 1")), &ap(4));
    let printed = &rf("a^2 - s^2") * &bracket;
    // The printed right side vanishes at alpha = s while the left side is 1
    // there, so only `ratio - 1` can equal it.
    o.deviations.push(Deviation {
        label: "K_ad(K3)/K_ad(U0) = (a^2 - s^2)(...); holds for K_ad(K3)/K_ad(U0) - 1",
        printed_holds: printed == r,
        corrected_holds: printed == &r - &RatFunc::one(),
    });

    let hopf = torus2(2);
    let sum = torus2(3).connected_sum(0, &torus2(-3), 0).unwrap();
    for (name, d) in [("U0", LinkDiagram::unknot()), ("Hopf", hopf), ("K3", torus2(3)), ("K3 # mirror K3", sum)] {
        let v = e.k_adjoint(&d).unwrap();
        o.eq(format!("K_ad({name}) at a = s"), &RatFunc::one(), &at_alpha_s(&v));
    }

    let unk = ratio(&rf("s^4 + 4*s^2 + 1"), &(&rf("s") * &rf("s^4 - 1")));
    o.eq("derivative U0", &unk, &e.derivative_at_s(&LinkDiagram::unknot()).unwrap());
    let q3 = qtilde(&FamilyLink::Torus2(3));
    o.eq("Q(K3) from dskein", &k3_q(), &q3);
    let phi = phi_sigma(&q3);
    let independent_phi = {
        // sp -> 2/s^2 + s^4, sm -> 2 s^2 + 1/s^4
        let psp = rf("2*s^-2 + s^4");
        let psm = rf("2*s^2 + s^-4");
        &rf("3") - &(&(&psp - &psm) * &(&rf("2") + &psm))
    };
    o.eq("phi(Q(K3))", &independent_phi, &phi);
    let d3 = e.derivative_at_s(&torus2(3)).unwrap();
    let printed = &rf("2*s^-1") * &(&phi + &unk);
    let corrected = &(&rf("2*s^-1") * &phi) + &unk;
    // Each derivative is odd in s; the printed form has an even part
    // (2/s)(s^4 + 4s^2 + 1)/(s(s^4 - 1)).
    o.deviations.push(Deviation {
        label: "K3 derivative = (2/s)(phi(Q) + u); holds as (2/s)phi(Q) + u",
        printed_holds: printed == d3,
        corrected_holds: corrected == d3,
    });
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::default();
    let e = HomflyEngine::default();
    let k = torus2(3).add_kinks(0, -3).unwrap();
    o.eq("writhe 0", &0, &k.writhe().unwrap());
    let q0 = qtilde(&FamilyLink::Torus2(3).frame(-3));
    o.eq("Q of the 0-framed K3", &(&SigmaPoly::int(0) - &(&diff() * &sig("2 + sm"))), &q0);
    let (lhs, rhs) = e.conjecture_sides(&k, &q0).unwrap();
    let printed_rhs = &rf("-2") + &ratio(&rf("z^2 + 5"), &rf("z^2"));
    o.eq("rhs = -2 + (z^2+5)/z^2", &printed_rhs, &rhs);
    println!("    lhs = {lhs}, rhs = {rhs}");
    let f = sigma_quotient_at_diagonal(&q0).unwrap();
    let v2 = e.v2(&k).unwrap();
    let corrected = &RatFunc::from_poly(LaurentPoly::constant(-int(2) * v2)) - &(&f * &rf("z^2"));
    o.deviations.push(Deviation {
        label: "lhs = -2 V2 - z^-2 f; holds as -2 V2 - z^2 f",
        printed_holds: lhs == rhs,
        corrected_holds: lhs == corrected,
    });
    o
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let vars = [Var::V, Var::Z];
    for i in 0..20 {
        let a = random_poly(&mut rng, &vars, 4, false, &[1, 2, 3]);
        let b = random_poly(&mut rng, &vars, 4, false, &[1, 2, 3]);
        let c = random_poly(&mut rng, &vars, 3, false, &[1, 2, 3]);
        o.check(format!("ring axioms {i}"), &a * &b == &b * &a && &(&a + &b) * &c == &(&a * &c) + &(&b * &c) && &(&a * &b) * &c == &a * &(&b * &c));
        o.check(format!("text round trip {i}"), parse_poly(&a.to_string()).unwrap() == a);
        o.check(format!("json round trip {i}"), from_json(&to_json(&b)).unwrap() == b);
        let p = random_sigma(&mut rng);
        let q = random_sigma(&mut rng);
        o.check(format!("embed round trip {i}"), express_in_sigma(&p.embed()).unwrap() == p);
        o.check(format!("phi homomorphism {i}"), phi_sigma(&(&p * &q)) == &phi_sigma(&p) * &phi_sigma(&q));
    }
    for i in 0..15 {
        let d = random_braid(&mut rng, 3, 6);
        let w = d.writhe_data().unwrap();
        let n = w.linking.len();
        let mut total = 0;
        for a in 0..n {
            for b in 0..n {
                total += w.linking[a][b];
            }
        }
        o.check(format!("writhe = sum of linking matrix {i}"), total == w.total && (0..n).map(|a| w.linking[a][a]).sum::<i64>() == w.diagonal);
        let zero = homfly_adjoint_expansion(&d).unwrap().iter().all(|(_, t)| t.writhe().unwrap() == 0);
        o.check(format!("antiparallel cable writhe 0 {i}"), zero);
    }
    let memo_off = SkeinConfig { memo: false, ..SkeinConfig::default() };
    let shuffled = SkeinConfig { shuffle_seed: Some(rng.gen::<u64>()), ..SkeinConfig::default() };
    for i in 0..8 {
        let d = random_braid(&mut rng, 3, 7);
        let p = HomflyEngine::default().p(&d).unwrap();
        o.check(format!("homfly memo off {i}"), HomflyEngine::new(memo_off).p(&d).unwrap() == p);
        o.check(format!("homfly base points {i}"), HomflyEngine::new(shuffled).p(&d).unwrap() == p);
        let k = KauffmanEngine::default().lambda(&d).unwrap();
        o.check(format!("kauffman memo off {i}"), KauffmanEngine::new(memo_off).lambda(&d).unwrap() == k);
        o.check(format!("kauffman base points {i}"), KauffmanEngine::new(shuffled).lambda(&d).unwrap() == k);
    }
    let t = torus2(3);
    let he = HomflyEngine::default();
    let ke = KauffmanEngine::default();
    let h0 = he.h_adjoint(&t).unwrap();
    let k0 = ke.k_adjoint(&t).unwrap();
    for &edge in &t.components()[0] {
        let at = BTreeMap::from([(0usize, edge)]);
        o.check(format!("h_adjoint insertion at {edge}"), he.h_adjoint_at(&t, &at).unwrap() == h0);
        o.check(format!("k_adjoint insertion at {edge}"), ke.k_adjoint_at(&t, &at).unwrap() == k0);
    }
    for i in 0..20 {
        let l = random_family(&mut rng, 3);
        let k = rng.gen_range(-5..=5);
        o.check(format!("framing slope {i}"), &qtilde(&l.clone().frame(k)) - &qtilde(&l) == SigmaPoly::int(k));
    }
    for n in -10..=10 {
        o.check(format!("mirror pattern {n}"), i_value(-n) == sigma_swap(&i_value(n)) && torus_value(-n) == -&sigma_swap(&torus_value(n)));
    }
    o
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 9] = [
        (1, "Q~ values", criterion_1),
        (2, "recursion and T3 coherence", criterion_2),
        (3, "integrality", criterion_3),
        (4, "HOMFLY engine", criterion_4),
        (5, "H_ad ratio and expansion", criterion_5),
        (6, "series identity", criterion_6),
        (7, "Kauffman engine", criterion_7),
        (8, "conjecture on the 0-framed K3", criterion_8),
        (9, "property suites", criterion_9),
    ];
    let mut sound = true;
    for (id, title, run) in criteria {
        let start = Instant::now();
        let o = run();
        let verdict = if o.passed() { "PASS" } else { "FAIL" };
        println!("criterion {id} ({title}): {verdict} [{:.2?}]", start.elapsed());
        for (label, ok) in &o.checks {
            if !ok {
                println!("    failed: {label}");
            }
        }
        for d in &o.deviations {
            println!(
                "    printed identity {}: {} (corrected identity {})",
                if d.printed_holds { "holds" } else { "fails" },
                d.label,
                if d.corrected_holds { "holds" } else { "FAILS" }
            );
        }
        sound &= o.sound();
    }
    assert!(sound, "a check failed beyond the documented printed-form deviations");
}
