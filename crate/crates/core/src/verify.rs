//! Named identity checks behind `linkinv verify`, grouped into suites.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::diagrams::{torus2, DiagramError, LinkDiagram};
use crate::dskein::{conj_integrality_check, i_value, qtilde, skein_vectors, torus_value, FamilyLink};
use crate::homfly::{HomflyEngine, HomflyError};
use crate::kauffman::{phi_sigma, KauffmanEngine, KauffmanError};
use crate::rings::{parse_poly, psi_series, series_exp_v, DeltaSeries, LaurentPoly, RatFunc, Rational, RingError, SigmaPoly, Var};
use crate::skein::SkeinConfig;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub computed: String,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{:<4} {} ({} ms)", c.status, c.name, c.elapsed_ms)?;
            if c.status == Status::Fail {
                writeln!(f, "     expected: {}", c.expected)?;
                writeln!(f, "     computed: {}", c.computed)?;
            }
        }
        let pass = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        write!(f, "{pass}/{} checks passed", self.checks.len())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Qtilde,
    Kauffman,
    Homfly,
    Conjecture,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Qtilde => "qtilde",
            Suite::Kauffman => "kauffman",
            Suite::Homfly => "homfly",
            Suite::Conjecture => "conjecture",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "all" => Suite::All,
            "qtilde" => Suite::Qtilde,
            "kauffman" => Suite::Kauffman,
            "homfly" => Suite::Homfly,
            "conjecture" => Suite::Conjecture,
            _ => return Err(format!("unknown suite `{s}`")),
        })
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Homfly(#[from] HomflyError),
    #[error(transparent)]
    Kauffman(#[from] KauffmanError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub config: SkeinConfig,
    /// Truncation order of delta series.
    pub series_order: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { config: SkeinConfig::default(), series_order: 3 }
    }
}

struct Runner {
    checks: Vec<CheckResult>,
}

impl Runner {
    fn check<T: fmt::Display>(&mut self, name: &str, f: impl FnOnce() -> Result<(T, T), VerifyError>) -> Result<(), VerifyError>
    where
        T: PartialEq,
    {
        let start = Instant::now();
        let (expected, computed) = f()?;
        self.checks.push(CheckResult {
            name: name.to_string(),
            status: if expected == computed { Status::Pass } else { Status::Fail },
            expected: expected.to_string(),
            computed: computed.to_string(),
            elapsed_ms: start.elapsed().as_millis(),
        });
        Ok(())
    }
}

fn lp(s: &str) -> LaurentPoly {
    parse_poly(s).expect("valid literal")
}

fn rf(s: &str) -> RatFunc {
    RatFunc::from_poly(lp(s))
}

fn sig(s: &str) -> SigmaPoly {
    SigmaPoly::new(lp(s)).expect("sigma literal")
}

fn q(a: &RatFunc, b: &RatFunc) -> RatFunc {
    (a / b).expect("nonzero literal denominator")
}

/// `3 - (sp - sm)(2 + sm)`.
pub fn k3_qtilde() -> SigmaPoly {
    &SigmaPoly::int(3) - &(&SigmaPoly::diff() * &sig("2 + sm"))
}

pub fn h_ad_unknot_form() -> RatFunc {
    q(&(&rf("v^2 + z*v - 1") * &rf("v^2 - z*v - 1")), &rf("z^2*v^2"))
}

pub fn h_ad_k3_ratio_form() -> RatFunc {
    let x = rf("v - v^-1");
    let inner = &(&q(&rf("v + 4"), &rf("v + 1")) + &rf("v^2*z^2 + 4*z^2")) + &rf("z^4");
    &(&RatFunc::one() - &x.scale(&Rational::from_integer(3.into()))) + &(&(&x * &x) * &inner)
}

/// The printed series `1 + 3d + (5/2 + 5z^2 + z^4) d^2`.
pub fn h_ad_k3_series_form(order: usize) -> DeltaSeries {
    DeltaSeries::new(order, vec![lp("1"), lp("3"), lp("5/2 + 5*z^2 + z^4")])
}

pub fn k_ad_unknot_form() -> RatFunc {
    let num = &(&(&rf("a^2 - 1") * &rf("s^3 + a")) * &rf("s*a - 1")) * &rf("s");
    let den = &(&rf("a^2") * &rf("s^4 - 1")) * &rf("s^2 - 1");
    q(&num, &den)
}

/// The bracketed factor of the printed `K_ad(K3)/K_ad(U0)` display.
pub fn k_ad_k3_bracket() -> RatFunc {
    let a = RatFunc::var(Var::Alpha);
    let p = |k: i32| a.pow(k).expect("alpha is a unit");
    let t1 = q(&rf("s^12 + s^8 + s^6 + 1"), &rf("s^10"));
    let t2 = q(&(&rf("s^4 - 1") * &rf("s^6 + 1")), &(&rf("s^7") * &p(1)));
    let t3 = q(&rf("s^12 - s^10 - s^8 + 2*s^6 - s^2 + 1"), &(&rf("s^6") * &p(2)));
    let t4 = q(&(&rf("s^4 - 1") * &rf("s^6 - s^2 + 1")), &(&rf("s^3") * &p(3)));
    let t5 = q(&(&rf("s^4 - 1") * &rf("s^2 - 1")), &p(4));
    &(&(&(&t1 + &t2) - &t3) - &t4) - &t5
}

/// The printed display `(alpha^2 - s^2)(...)`.
pub fn k_ad_k3_ratio_form() -> RatFunc {
    &rf("a^2 - s^2") * &k_ad_k3_bracket()
}

/// `(s^4 + 4 s^2 + 1)/(s (s^4 - 1))`.
pub fn k_unknot_derivative_form() -> RatFunc {
    q(&rf("s^4 + 4*s^2 + 1"), &rf("s^5 - s"))
}

/// The printed `(2/s)(phi(Q~(K3)) + (s^4 + 4 s^2 + 1)/(s (s^4 - 1)))`.
pub fn k3_derivative_form() -> RatFunc {
    &rf("2*s^-1") * &(&phi_sigma(&k3_qtilde()) + &k_unknot_derivative_form())
}

/// `-2 V2 - z^-2 f(z^2 + 3)` as printed, for `V2 = 1` and `f = -(2 + sm)`.
pub fn conjecture_rhs_k3_form() -> RatFunc {
    &rf("-2") + &q(&rf("z^2 + 5"), &rf("z^2"))
}

fn blackboard_k3() -> LinkDiagram {
    torus2(3)
}

fn zero_framed_k3() -> LinkDiagram {
    torus2(3).add_kinks(0, -3).expect("kinks on a knot")
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<RunReport, VerifyError> {
    let mut r = Runner { checks: Vec::new() };
    if suite.includes(Suite::Qtilde) {
        qtilde_checks(&mut r)?;
    }
    if suite.includes(Suite::Homfly) {
        homfly_checks(&mut r, opts)?;
    }
    if suite.includes(Suite::Kauffman) {
        kauffman_checks(&mut r, opts)?;
    }
    if suite.includes(Suite::Conjecture) {
        conjecture_checks(&mut r, opts)?;
    }
    r.checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(RunReport { schema: REPORT_SCHEMA_VERSION, suite: suite.name().to_string(), checks: r.checks })
}

fn qtilde_checks(r: &mut Runner) -> Result<(), VerifyError> {
    let d = SigmaPoly::diff();
    r.check("qtilde.i_bases", || {
        let two_d = d.scale(&Rational::from_integer(2.into()));
        let expected = vec![-&two_d, SigmaPoly::int(-1), SigmaPoly::zero(), SigmaPoly::int(-1), two_d];
        let computed: Vec<SigmaPoly> = (-2..=2).map(i_value).collect();
        Ok((Joined(expected), Joined(computed)))
    })?;
    r.check("qtilde.i_3", || Ok((sig("-1 + 2*sp*sm - 2*sm^2"), i_value(3))))?;
    r.check("qtilde.i_minus3", || Ok((sig("-1 - 2*sp^2 + 2*sp*sm"), i_value(-3))))?;
    r.check("qtilde.unlink", || Ok((SigmaPoly::zero(), torus_value(0))))?;
    r.check("qtilde.k_1", || Ok((SigmaPoly::int(1), torus_value(1))))?;
    r.check("qtilde.k_minus1", || Ok((SigmaPoly::int(-1), torus_value(-1))))?;
    r.check("qtilde.hopf", || Ok((sig("sm - sp"), torus_value(2))))?;
    r.check("qtilde.k_3", || Ok((k3_qtilde(), torus_value(3))))?;
    r.check("qtilde.k_5", || {
        let k5 = &SigmaPoly::int(5) + &(&d * &sig("-6 + 2*sp - 4*sm + 2*sp*sm - 2*sm^2 - sm^3"));
        Ok((k5, torus_value(5)))
    })?;
    r.check("qtilde.t3_correspondence", || {
        let t3 = skein_vectors().t3;
        let bad: Vec<i64> = (-8..=8)
            .filter(|&n| {
                let mut acc = t3[0].clone();
                for (i, c) in t3[1..].iter().enumerate() {
                    acc = &acc + &(c * &i_value(n - 2 + i as i64));
                }
                acc != i_value(n + 3)
            })
            .collect();
        Ok((String::from("[]"), format!("{bad:?}")))
    })?;
    r.check("qtilde.integrality", || {
        let bad: Vec<i64> = (-15..=15).filter(|&m| !conj_integrality_check(&torus_value(m)).ok).collect();
        Ok((String::from("[]"), format!("{bad:?}")))
    })?;
    r.check("qtilde.connsum_additive", || {
        let l = FamilyLink::Torus2(3).connsum(FamilyLink::Torus2(3));
        Ok((&k3_qtilde() + &k3_qtilde(), qtilde(&l)))
    })?;
    Ok(())
}

fn homfly_checks(r: &mut Runner, opts: &VerifyOptions) -> Result<(), VerifyError> {
    let e = HomflyEngine::new(opts.config);
    r.check("homfly.unknot_kinked", || {
        let d = torus2(1).add_kinks(0, -2)?;
        Ok((LaurentPoly::one(), e.p(&d)?))
    })?;
    r.check("homfly.trefoil", || Ok((lp("2*v^2 + v^2*z^2 - v^4"), e.p(&blackboard_k3())?)))?;
    r.check("homfly.h_ad_unknot", || {
        Ok((h_ad_unknot_form(), RatFunc::from_poly(e.h_adjoint(&LinkDiagram::unknot())?)))
    })?;
    let ratio = e.adjoint_ratio(&blackboard_k3())?;
    r.check("homfly.h_ad_k3_ratio", || Ok((h_ad_k3_ratio_form(), ratio.clone())))?;
    let series = series_exp_v(&ratio, opts.series_order)?;
    r.check("homfly.h_ad_k3_series", || Ok((h_ad_k3_series_form(opts.series_order), series.clone())))?;
    r.check("homfly.h_ad_k3_series_split", || {
        let k3 = blackboard_k3();
        let w = k3.writhe_data()?.diagonal;
        let v2 = e.v2(&k3)?;
        let c2 = Rational::new((w * w).into(), 2.into()) - v2 * Rational::from_integer(2.into());
        let order = opts.series_order;
        let psi = psi_series(&torus_value(3));
        let split = DeltaSeries::new(order, vec![lp("1"), LaurentPoly::zero(), LaurentPoly::constant(c2)])
            .add(&DeltaSeries::new(order, psi.coeffs().to_vec()).shift(1));
        Ok((split, series.clone()))
    })?;
    Ok(())
}

fn kauffman_checks(r: &mut Runner, opts: &VerifyOptions) -> Result<(), VerifyError> {
    let e = KauffmanEngine::new(opts.config);
    let u = e.k_adjoint(&LinkDiagram::unknot())?;
    r.check("kauffman.k_ad_unknot", || Ok((k_ad_unknot_form(), u.clone())))?;
    r.check("kauffman.k_ad_unknot_probe", || {
        let at = [(Var::S, Rational::from_integer(2.into())), (Var::Alpha, Rational::from_integer(3.into()))];
        Ok((Rational::new(176.into(), 81.into()), u.eval_all(&at)?))
    })?;
    let k3 = e.k_adjoint(&blackboard_k3())?;
    let ratio = (&k3 / &u)?;
    r.check("kauffman.k_ad_k3_ratio", || Ok((k_ad_k3_ratio_form(), ratio.clone())))?;
    r.check("kauffman.k_ad_k3_ratio_minus_one", || {
        Ok((k_ad_k3_ratio_form(), &ratio - &RatFunc::one()))
    })?;
    let hopf = torus2(2);
    let sum = blackboard_k3().connected_sum(0, &torus2(-3), 0)?;
    for (name, d) in [("unknot", LinkDiagram::unknot()), ("hopf", hopf), ("k3", blackboard_k3()), ("connsum", sum)] {
        r.check(&format!("kauffman.alpha_eq_s.{name}"), || Ok((RatFunc::one(), e.alpha_eq_s(&d)?)))?;
    }
    r.check("kauffman.derivative.unknot", || {
        Ok((k_unknot_derivative_form(), e.derivative_at_s(&LinkDiagram::unknot())?))
    })?;
    let d3 = e.derivative_at_s(&blackboard_k3())?;
    r.check("kauffman.derivative.k3", || Ok((k3_derivative_form(), d3.clone())))?;
    r.check("kauffman.derivative.k3_unknot_term_outside", || {
        let alt = &(&rf("2*s^-1") * &phi_sigma(&k3_qtilde())) + &k_unknot_derivative_form();
        Ok((alt, d3.clone()))
    })?;
    Ok(())
}

fn conjecture_checks(r: &mut Runner, opts: &VerifyOptions) -> Result<(), VerifyError> {
    let e = HomflyEngine::new(opts.config);
    let q0 = qtilde(&FamilyLink::Torus2(3).frame(-3));
    let (lhs, rhs) = e.conjecture_sides(&zero_framed_k3(), &q0)?;
    r.check("conjecture.k3.rhs_value", || Ok((conjecture_rhs_k3_form(), rhs.clone())))?;
    r.check("conjecture.k3", || Ok((rhs.clone(), lhs.clone())))?;
    r.check("conjecture.k3.z2_in_place_of_inverse", || {
        let v2 = e.v2(&zero_framed_k3())?;
        let f = crate::homfly::sigma_quotient_at_diagonal(&q0)?;
        let alt = &RatFunc::from_poly(LaurentPoly::constant(-v2 * Rational::from_integer(2.into()))) - &(&f * &rf("z^2"));
        Ok((alt, lhs.clone()))
    })?;
    r.check("conjecture.unknot", || {
        let (l, rr) = e.conjecture_sides(&LinkDiagram::unknot(), &SigmaPoly::zero())?;
        Ok((rr, l))
    })?;
    Ok(())
}

struct Joined(Vec<SigmaPoly>);

impl PartialEq for Joined {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl fmt::Display for Joined {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
