use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use linkinv::diagrams::{diagram_from_json, parse_diagram, DiagramError, LinkDiagram};
use linkinv::dskein::{i_value, qtilde, torus_value, FamilyLink};
use linkinv::homfly::{HomflyEngine, HomflyError};
use linkinv::kauffman::{KauffmanEngine, KauffmanError};
use linkinv::rings::{series_exp_v, JsonPoly, LaurentPoly, RatFunc, SigmaPoly};
use linkinv::skein::{SkeinConfig, SkeinError, DEFAULT_NODE_BUDGET};
use linkinv::verify::{run_suite, Suite, VerifyError, VerifyOptions};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "linkinv", version, about = "Exact polynomial invariants of framed links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone)]
struct Common {
    /// Emit JSON instead of canonical text.
    #[arg(long, global = true)]
    json: bool,
    /// Recursion node budget (integer or scientific, e.g. 2e8).
    #[arg(long, global = true, value_parser = parse_budget, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Order of delta-expansions.
    #[arg(long, global = true)]
    truncate: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Switch::On)]
    memo: Switch,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Homfly,
    HomflyAd,
    Kauffman,
    KauffmanAd,
    Qtilde,
    V2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Qtilde,
    Kauffman,
    Homfly,
    Conjecture,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    QtildeTorus,
    IValues,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one invariant. INPUT is a braid (`braid:2:[1,1,1]`), a PD
    /// code, JSON, a family expression (`frame(torus2(3),-3)`) or `@file`.
    Invariant {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run a suite of identity checks.
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[command(flatten)]
        common: Common,
    },
    /// Tabulate values over an inclusive range `a..b`.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(allow_hyphen_values = true)]
        range: String,
        /// Largest allowed |index|.
        #[arg(long, default_value_t = 200)]
        max: i64,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_budget(s: &str) -> Result<u64, String> {
    if let Ok(n) = s.parse::<u64>() {
        return Ok(n);
    }
    let x: f64 = s.parse().map_err(|_| format!("invalid budget `{s}`"))?;
    if x.is_finite() && x >= 1.0 && x.fract() == 0.0 && x <= u64::MAX as f64 {
        Ok(x as u64)
    } else {
        Err(format!("invalid budget `{s}`"))
    }
}

fn parse_range(s: &str, max: i64) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a range `a..b`, got `{s}`"))?;
    let a: i64 = a.trim().parse().map_err(|_| format!("invalid range start `{a}`"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("invalid range end `{b}`"))?;
    if a.abs() > max || b.abs() > max {
        return Err(format!("range {a}..{b} exceeds --max {max}"));
    }
    Ok((a, b))
}

enum Failure {
    Input(String),
    Resource(String),
}

impl From<DiagramError> for Failure {
    fn from(e: DiagramError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<SkeinError> for Failure {
    fn from(e: SkeinError) -> Self {
        Failure::Resource(e.to_string())
    }
}

impl From<HomflyError> for Failure {
    fn from(e: HomflyError) -> Self {
        match e {
            HomflyError::Skein(s) => s.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<KauffmanError> for Failure {
    fn from(e: KauffmanError) -> Self {
        match e {
            KauffmanError::Skein(s) => s.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Homfly(h) => h.into(),
            VerifyError::Kauffman(k) => k.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl Common {
    fn config(&self) -> SkeinConfig {
        SkeinConfig { memo: self.memo == Switch::On, budget: self.budget, ..SkeinConfig::default() }
    }
}

enum Input {
    Family(FamilyLink),
    Diagram(LinkDiagram),
}

fn read_input(raw: &str) -> Result<Input, Failure> {
    let text = match raw.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?,
        None => raw.to_string(),
    };
    let t = text.trim();
    if t.starts_with('{') {
        return Ok(Input::Diagram(diagram_from_json(t)?.into_diagram()));
    }
    if ["torus2", "frame", "connsum"].iter().any(|k| t.starts_with(k)) {
        return t.parse().map(Input::Family).map_err(|e| Failure::Input(e.to_string()));
    }
    Ok(Input::Diagram(parse_diagram(t)?.into_diagram()))
}

fn diagram_of(input: Input) -> Result<LinkDiagram, Failure> {
    match input {
        Input::Diagram(d) => Ok(d),
        Input::Family(f) => Ok(f.to_diagram()?),
    }
}

fn poly_json(p: &LaurentPoly) -> Value {
    serde_json::to_value(JsonPoly::from(p)).expect("serializable")
}

fn ratfunc_out(r: &RatFunc, as_json: bool) -> String {
    if as_json {
        json!({"num": poly_json(r.numer()), "den": poly_json(r.denom())}).to_string()
    } else {
        r.to_string()
    }
}

fn poly_out(p: &LaurentPoly, as_json: bool) -> String {
    if as_json {
        poly_json(p).to_string()
    } else {
        p.to_string()
    }
}

fn sigma_out(p: &SigmaPoly, as_json: bool) -> String {
    poly_out(p.poly(), as_json)
}

fn invariant(kind: Kind, raw: &str, common: &Common) -> Result<String, Failure> {
    let input = read_input(raw)?;
    let json = common.json;
    match kind {
        Kind::Qtilde => match input {
            Input::Family(f) => Ok(sigma_out(&qtilde(&f), json)),
            Input::Diagram(_) => Err(Failure::Input(
                "qtilde needs a family expression: torus2(m), frame(expr,k), connsum(expr,expr)".into(),
            )),
        },
        Kind::Homfly => Ok(poly_out(&HomflyEngine::new(common.config()).p(&diagram_of(input)?)?, json)),
        Kind::HomflyAd => {
            let e = HomflyEngine::new(common.config());
            let d = diagram_of(input)?;
            match common.truncate {
                None => Ok(poly_out(&e.h_adjoint(&d)?, json)),
                Some(order) => {
                    let ratio = e.adjoint_ratio(&d)?;
                    let s = series_exp_v(&ratio, order).map_err(|e| Failure::Input(e.to_string()))?;
                    if json {
                        Ok(Value::Array(s.coeffs().iter().map(poly_json).collect()).to_string())
                    } else {
                        Ok(s.to_string())
                    }
                }
            }
        }
        Kind::Kauffman => Ok(ratfunc_out(&KauffmanEngine::new(common.config()).lambda(&diagram_of(input)?)?, json)),
        Kind::KauffmanAd => {
            Ok(ratfunc_out(&KauffmanEngine::new(common.config()).k_adjoint(&diagram_of(input)?)?, json))
        }
        Kind::V2 => {
            let v = HomflyEngine::new(common.config()).v2(&diagram_of(input)?)?;
            Ok(if json { json!({ "value": v.to_string() }).to_string() } else { v.to_string() })
        }
    }
}

fn verify(suite: SuiteArg, common: &Common) -> Result<(String, bool), Failure> {
    let suite = match suite {
        SuiteArg::All => Suite::All,
        SuiteArg::Qtilde => Suite::Qtilde,
        SuiteArg::Kauffman => Suite::Kauffman,
        SuiteArg::Homfly => Suite::Homfly,
        SuiteArg::Conjecture => Suite::Conjecture,
    };
    let mut opts = VerifyOptions { config: common.config(), ..VerifyOptions::default() };
    if let Some(k) = common.truncate {
        opts.series_order = k;
    }
    let report = run_suite(suite, &opts)?;
    let text = if common.json {
        serde_json::to_string_pretty(&report).expect("serializable")
    } else {
        report.to_string()
    };
    Ok((text, report.passed()))
}

fn table(kind: TableKind, range: &str, max: i64, common: &Common) -> Result<String, Failure> {
    let (a, b) = parse_range(range, max).map_err(Failure::Input)?;
    let rows: Vec<(i64, SigmaPoly)> = (a..=b)
        .map(|n| {
            let v = match kind {
                TableKind::QtildeTorus => torus_value(n),
                TableKind::IValues => i_value(n),
            };
            (n, v)
        })
        .collect();
    if common.json {
        let arr: Vec<Value> = rows.iter().map(|(n, v)| json!({"index": n, "value": poly_json(v.poly())})).collect();
        return Ok(Value::Array(arr).to_string());
    }
    let mut out = String::new();
    for (n, v) in rows {
        out.push_str(&format!("{n}\t{v}\n"));
    }
    Ok(out.trim_end().to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Invariant { kind, input, common } => invariant(*kind, input, common).map(|s| (s, true)),
        Command::Verify { suite, common } => verify(*suite, common),
        Command::Table { kind, range, max, common } => table(*kind, range, *max, common).map(|s| (s, true)),
    };
    match result {
        Ok((text, ok)) => {
            if !text.is_empty() {
                println!("{text}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_CHECK_FAILED)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_RESOURCE)
        }
    }
}
