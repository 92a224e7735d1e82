//! Command-line front end. [`run`] is the whole program minus process I/O.
//!
//! Exit codes: 0 computed or all checks passed, 1 a verification failed,
//! 2 usage or parse error, 3 resource cap.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::actions::{Actions, Side};
use crate::cg::{Cg, Mode, OracleConfig, Verdict};
use crate::error::{Error, Result};
use crate::expr::{parse, Expr, SideKind, Value};
use crate::grading::Gl;
use crate::scalar::{format_scalar, Coeff, Scalar};
use crate::spherical::{
    laplacian_apply, laplacian_power_formula, r, theta, theta_corrected, theta_eigenvalue, LeviProfile,
};
use crate::suites::{criterion, run_suite, supergroup_cases, Case, SuiteReport};
use crate::superpoly::Poly;
use crate::tensorinv::{sergeev_invariant, verify_fft, Perm, DEFAULT_TENSOR_CAP};

#[derive(Debug, Parser)]
#[command(name = "superfn", version, about = "Exact computations with functions on GL(m|n)")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Args)]
struct Global {
    /// Even dimension.
    #[arg(long, global = true, default_value_t = 1)]
    m: usize,
    /// Odd dimension.
    #[arg(long, global = true, default_value_t = 1)]
    n: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Generic-point trials per zero test.
    #[arg(long, global = true, default_value_t = 3)]
    trials: u32,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Generic)]
    mode: ModeArg,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Levi profile such as `2|1,1`; defaults to `m|n-1,1`.
    #[arg(long, global = true)]
    profile: Option<String>,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum ModeArg {
    Generic,
    Pairing,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Normal form of an expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Action of an enveloping-algebra element on a function.
    Act {
        #[arg(long, default_value = "dR")]
        side: String,
        /// Enveloping-algebra expression, e.g. `E[1,2]`.
        #[arg(long, alias = "by", allow_hyphen_values = true)]
        elem: String,
        /// Function expression acted on.
        #[arg(long = "on", allow_hyphen_values = true)]
        expr: String,
    },
    /// Zero test modulo the relations.
    Iszero {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Invariance under the Levi subalgebra of `--profile`.
    Invariant {
        #[arg(long, default_value = "dL")]
        side: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Laplacian of an expression, or the power-formula check at `--k`.
    Laplacian {
        #[arg(long)]
        k: Option<u32>,
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Eigenfunction θ_k and its eigen-relation check.
    Theta {
        #[arg(long)]
        k: u32,
        /// Use the coefficients derived from the radial recurrence.
        #[arg(long)]
        corrected: bool,
    },
    /// Sergeev invariants and first-fundamental-theorem checks at degree `d`.
    Sergeev {
        #[arg(long)]
        d: usize,
        /// Print the tensor of one permutation, images 1-based, e.g. `2,1`.
        #[arg(long)]
        perm: Option<String>,
    },
    /// Supergroup point checks on random supermatrices.
    Group {
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        real: usize,
    },
    /// Run a verification suite or an acceptance criterion.
    Verify {
        #[arg(long, required_unless_present = "criterion")]
        suite: Option<String>,
        #[arg(long, conflicts_with = "suite")]
        criterion: Option<usize>,
    },
}

/// Runs one command line (`args[0]` is the program name).
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let json = cli.global.json;
    match execute(&cli) {
        Ok(out) => (out.code, out.text),
        Err(e) => {
            let text = if json {
                serde_json::to_string_pretty(&ErrorReport { error: e.to_string(), exit_code: e.exit_code() })
                    .expect("serializable")
            } else {
                format!("error: {e}")
            };
            (e.exit_code(), text)
        }
    }
}

#[derive(Serialize)]
struct ErrorReport {
    error: String,
    exit_code: i32,
}

struct Output {
    code: i32,
    text: String,
}

impl Output {
    fn new<T: Serialize>(json: bool, code: i32, value: &T, text: String) -> Self {
        let text = if json { serde_json::to_string_pretty(value).expect("serializable") } else { text };
        Output { code, text }
    }
}

#[derive(Serialize)]
struct EvalReport {
    expr: String,
    algebra: &'static str,
    value: String,
}

#[derive(Serialize)]
struct ZeroReport {
    expr: String,
    #[serde(flatten)]
    verdict: Verdict,
}

#[derive(Serialize)]
struct InvariantReport {
    expr: String,
    side: Side,
    profile: String,
    invariant: bool,
}

#[derive(Serialize)]
struct LaplacianReport {
    k: u32,
    value: String,
    closed_form: String,
    #[serde(flatten)]
    verdict: Verdict,
}

#[derive(Serialize)]
struct ThetaReport {
    k: u32,
    corrected: bool,
    theta: String,
    eigenvalue: i64,
    #[serde(flatten)]
    verdict: Verdict,
}

#[derive(Serialize)]
struct TensorReport {
    perm: String,
    components: Vec<(Vec<u8>, String)>,
}

fn execute(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    let gl = Gl::new(g.m, g.n)?;
    let cfg = OracleConfig {
        mode: match g.mode {
            ModeArg::Generic => Mode::Generic,
            ModeArg::Pairing => Mode::Pairing,
        },
        trials: g.trials,
        seed: g.seed,
        ..OracleConfig::default()
    };
    let profile = |gl: Gl| match &g.profile {
        Some(p) => LeviProfile::parse(gl, p),
        None => LeviProfile::projective(gl),
    };
    let eval = |text: &str| -> Result<(Expr, Value)> {
        let e = parse(text, &gl)?;
        let p = match (&e, &g.profile) {
            (_, Some(_)) => Some(profile(gl)?),
            _ => LeviProfile::projective(gl).ok(),
        };
        let v = e.eval(&gl, p.as_ref())?;
        Ok((e, v))
    };
    let function = |text: &str| -> Result<Poly> {
        match eval(text)?.1 {
            Value::Poly(p) => Ok(p),
            Value::U(_) => Err(Error::Usage(format!("`{text}` is not a function expression"))),
        }
    };
    let cg = Cg::new(gl);
    let json = g.json;
    Ok(match &cli.verb {
        Verb::Eval { expr } => {
            let (e, v) = eval(expr)?;
            let algebra = if e.side() == SideKind::Enveloping { "enveloping" } else { "functions" };
            let rep = EvalReport { expr: e.to_string(), algebra, value: v.to_string() };
            Output::new(json, 0, &rep, rep.value.clone())
        }
        Verb::Act { side, elem, expr } => {
            let side: Side = side.parse()?;
            let u = match parse(elem, &gl)? {
                e if e.side() == SideKind::Enveloping || e.side() == SideKind::Scalar => match e.eval(&gl, None)? {
                    Value::U(u) => u,
                    Value::Poly(p) => crate::ugl::UElement::scalar(p.constant_term()),
                },
                _ => return Err(Error::Usage("--elem takes an enveloping-algebra expression".into())),
            };
            let f = function(expr)?;
            let v = Actions::new(gl).act(side, &u, &f);
            let rep = EvalReport { expr: format!("{side}({u}) {expr}"), algebra: "functions", value: v.to_string() };
            Output::new(json, 0, &rep, rep.value.clone())
        }
        Verb::Iszero { expr } => {
            let (e, v) = eval(expr)?;
            let verdict = match v {
                Value::Poly(p) => cg.is_zero_mod_j(&p, &cfg)?,
                Value::U(u) => exact_verdict(&cfg, u.is_zero(), || u.to_string()),
            };
            let text = verdict_text(&verdict);
            Output::new(json, 0, &ZeroReport { expr: e.to_string(), verdict }, text)
        }
        Verb::Invariant { side, expr } => {
            let side: Side = side.parse()?;
            let p = profile(gl)?;
            let f = function(expr)?;
            let inv = Actions::new(gl).is_invariant(side, &f, &p, &cfg)?;
            let rep = InvariantReport { expr: expr.clone(), side, profile: p.to_string(), invariant: inv };
            let text = format!("{} under {side} for profile {p}", if inv { "invariant" } else { "not invariant" });
            Output::new(json, 0, &rep, text)
        }
        Verb::Laplacian { k, expr } => match (k, expr) {
            (Some(k), None) => {
                let acts = Actions::new(gl);
                let value = laplacian_apply(&acts, &r(&gl).pow(*k));
                let closed = laplacian_power_formula(&gl, *k);
                let verdict = cg.is_zero_mod_j(&(&value - &closed), &cfg)?;
                let code = if verdict.is_zero() { 0 } else { 1 };
                let text = format!(
                    "dR(lap) r^{k} = {value}\nclosed form: {closed}\ndifference: {}",
                    verdict_text(&verdict)
                );
                let rep = LaplacianReport { k: *k, value: value.to_string(), closed_form: closed.to_string(), verdict };
                Output::new(json, code, &rep, text)
            }
            (None, Some(expr)) => {
                let f = function(expr)?;
                let v = laplacian_apply(&Actions::new(gl), &f);
                let rep = EvalReport { expr: expr.clone(), algebra: "functions", value: v.to_string() };
                Output::new(json, 0, &rep, rep.value.clone())
            }
            _ => return Err(Error::Usage("laplacian takes exactly one of --k or an expression".into())),
        },
        Verb::Theta { k, corrected } => {
            let th = if *corrected { theta_corrected(&gl, *k)? } else { theta(&gl, *k) };
            let lam = theta_eigenvalue(&gl, *k);
            let lhs = laplacian_apply(&Actions::new(gl), &th);
            let verdict = cg.is_zero_mod_j(&(&lhs - &th.scale(&Scalar::from_int(lam))), &cfg)?;
            let code = if verdict.is_zero() { 0 } else { 1 };
            let text = format!("theta[{k}] = {th}\neigenvalue {lam}\neigen-relation: {}", verdict_text(&verdict));
            let rep = ThetaReport { k: *k, corrected: *corrected, theta: th.to_string(), eigenvalue: lam, verdict };
            Output::new(json, code, &rep, text)
        }
        Verb::Sergeev { d, perm } => match perm {
            Some(p) => {
                let images = p
                    .split(',')
                    .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Usage(format!("bad permutation `{p}`"))))
                    .collect::<Result<Vec<_>>>()?;
                let sigma = Perm::new(&images)?;
                if sigma.degree() != *d {
                    return Err(Error::Usage(format!("permutation has degree {}, expected {d}", sigma.degree())));
                }
                let t = sergeev_invariant(&gl, &sigma, DEFAULT_TENSOR_CAP)?;
                let components: Vec<_> = t.comps().map(|(i, c)| (i.clone(), format_scalar(c))).collect();
                let text = components
                    .iter()
                    .map(|(i, c)| format!("{c} {i:?}"))
                    .collect::<Vec<_>>()
                    .join("\n");
                Output::new(json, 0, &TensorReport { perm: sigma.to_string(), components }, text)
            }
            None => {
                let rep = verify_fft(&gl, *d, DEFAULT_TENSOR_CAP)?;
                let text = format!(
                    "invariant dim {}\nsergeev rank {}\nspan equal {}\ncommutant dim {} (odd {})\ngroup algebra dim {}\ncentralizer equal {}",
                    rep.invariant_dim,
                    rep.sergeev_rank,
                    rep.span_equal,
                    rep.commutant_dim,
                    rep.commutant_odd_dim,
                    rep.group_algebra_dim,
                    rep.centralizer_equal
                );
                Output::new(json, if rep.passed() { 0 } else { 1 }, &rep, text)
            }
        },
        Verb::Group { count, real } => {
            suite_output(json, SuiteReport::new("group", supergroup_cases(&gl, &cfg, *count, *real)?))
        }
        Verb::Verify { suite, criterion: crit } => {
            let rep = match (suite, crit) {
                (_, Some(i)) => criterion(*i, &cfg)?,
                (Some(s), None) => run_suite(s, &gl, &cfg)?,
                (None, None) => return Err(Error::Usage("verify needs --suite or --criterion".into())),
            };
            suite_output(json, rep)
        }
    })
}

fn exact_verdict(cfg: &OracleConfig, zero: bool, witness: impl FnOnce() -> String) -> Verdict {
    Verdict {
        verdict: if zero { crate::cg::Outcome::Zero } else { crate::cg::Outcome::Nonzero },
        mode: cfg.mode,
        trials: 0,
        seed: cfg.seed,
        failure_bound: None,
        witness: (!zero).then(witness),
    }
}

fn verdict_text(v: &Verdict) -> String {
    match (&v.witness, v.failure_bound) {
        _ if v.is_zero() => match v.failure_bound {
            Some(b) => format!("zero (failure bound {b:e})"),
            None => "zero".into(),
        },
        (Some(w), _) => format!("nonzero ({w})"),
        (None, _) => "nonzero".into(),
    }
}

fn suite_output(json: bool, rep: SuiteReport) -> Output {
    let code = if rep.passed { 0 } else { 1 };
    let mut text = String::new();
    for c in &rep.cases {
        text.push_str(&case_line(c));
        text.push('\n');
    }
    let failed = rep.failures().count();
    text.push_str(&format!("{}: {} cases, {failed} failed", rep.suite, rep.cases.len()));
    Output::new(json, code, &rep, text)
}

fn case_line(c: &Case) -> String {
    match &c.witness {
        Some(w) if !c.passed() => format!("FAIL {}: {w}", c.name),
        _ => format!("{} {}", if c.passed() { "PASS" } else { "FAIL" }, c.name),
    }
}
