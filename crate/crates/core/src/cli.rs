//! Command-line front end. [`run`] does all the work and hands back the
//! text and exit code, so the binary is a thin wrapper and the commands can
//! be tested in-process.
//!
//! Exit codes: 0 success or pass, 1 verification failure, 2 usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::bernoulli::{
    bernoulli_at_half, bernoulli_number, bernoulli_polynomial, verify_odd_zero,
};
use crate::error::{Error, Result};
use crate::faulhaber::{
    expand_to_monomial, faulhaber_form, faulhaber_form_inductive, faulhaber_forms_inductive,
    verify_constant_term_bernoulli, verify_lemma,
};
use crate::poly::Rational;
use crate::powersum::{
    check_partial_sum_identity, oracle_sum, powersum_monomial, powersum_via_bernoulli_poly,
};
use crate::recurrence::verify_recurrence_consistency;
use crate::render;
use crate::report::VerificationReport;
use crate::shifted::{shifted_closed_form, shifted_form, shifted_to_monomial};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `n` for which `eval --check` will run the literal summation.
pub const ORACLE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Monomial,
    Triangular,
    Shifted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    /// Partial-sums induction (triangular basis only).
    Inductive,
    /// Bernoulli closed forms (shifted basis only).
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Latex,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    OddBernoulli,
    Roundtrip,
    Lemma,
    Recurrence,
    ConstantTerm,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::OddBernoulli => "odd-bernoulli",
            Suite::Roundtrip => "roundtrip",
            Suite::Lemma => "lemma",
            Suite::Recurrence => "recurrence",
            Suite::ConstantTerm => "constant-term",
            Suite::All => "all",
        }
    }
}

/// A validated `powersum` request.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderRequest {
    exponent: usize,
    basis: Basis,
    method: Method,
    format: Format,
}

impl RenderRequest {
    pub fn new(exponent: usize, basis: Basis, method: Method, format: Format) -> Result<Self> {
        if exponent == 0 {
            return Err(Error::InvalidArgument("exponent must be at least 1".into()));
        }
        match (method, basis) {
            (Method::Inductive, b) if b != Basis::Triangular => Err(Error::InvalidArgument(
                "--method inductive needs --basis triangular".into(),
            )),
            (Method::Closed, b) if b != Basis::Shifted => Err(Error::InvalidArgument(
                "--method closed needs --basis shifted".into(),
            )),
            _ => Ok(Self {
                exponent,
                basis,
                method,
                format,
            }),
        }
    }
}

pub fn cmd_powersum(req: &RenderRequest) -> Result<String> {
    let power = req.exponent;
    let text = match req.basis {
        Basis::Monomial => {
            let p = powersum_monomial(power)?;
            match req.format {
                Format::Plain => render::plain_polynomial(&p, "n"),
                Format::Latex => render::latex_polynomial(&p, "n"),
                Format::Json => render::monomial_json(power, &p),
            }
        }
        Basis::Triangular if power == 1 => match req.format {
            Format::Plain => "S1".to_string(),
            Format::Latex => "S_1".to_string(),
            Format::Json => render::triangular_power_one_json(),
        },
        Basis::Triangular => {
            let form = match req.method {
                Method::Inductive => faulhaber_form_inductive(power)?,
                _ => faulhaber_form(power)?,
            };
            match req.format {
                Format::Plain => render::faulhaber_plain(&form),
                Format::Latex => render::faulhaber_latex(&form),
                Format::Json => render::faulhaber_json(&form),
            }
        }
        Basis::Shifted => {
            let form = match req.method {
                Method::Closed => shifted_closed_form(power)?,
                _ => shifted_form(power)?,
            };
            match req.format {
                Format::Plain => render::shifted_plain(&form),
                Format::Latex => render::shifted_latex(&form),
                Format::Json => render::shifted_json(&form),
            }
        }
    };
    Ok(text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BernoulliMode {
    Number,
    Polynomial,
    AtHalf,
}

pub fn cmd_bernoulli(m: usize, mode: BernoulliMode) -> String {
    match mode {
        BernoulliMode::Number => bernoulli_number(m).to_string(),
        BernoulliMode::Polynomial => render::plain_polynomial(&bernoulli_polynomial(m), "x"),
        BernoulliMode::AtHalf => bernoulli_at_half(m).to_string(),
    }
}

/// Exact `1^m + ... + n^m` via the polynomial; `check` adds the literal sum.
/// Returns the text and whether the oracle (if run) agreed.
pub fn cmd_eval(m: usize, n: &BigUint, check: bool) -> Result<(String, bool)> {
    if n.is_zero() {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let n_small = if check {
        match u64::try_from(n) {
            Ok(v) if v <= ORACLE_LIMIT => Some(v),
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "--check runs a literal sum and is limited to n <= {ORACLE_LIMIT}"
                )))
            }
        }
    } else {
        None
    };
    let n_rat = Rational::from_integer(BigInt::from(n.clone()));
    let value = if m == 0 {
        n_rat
    } else {
        powersum_monomial(m)?.eval(&n_rat)
    };
    if !value.is_integer() {
        return Err(Error::Consistency(format!(
            "non-integral power sum {value}"
        )));
    }
    let value = value.to_integer();
    match n_small {
        None => Ok((value.to_string(), true)),
        Some(n) => {
            let oracle = BigInt::from(oracle_sum(m, n));
            let ok = oracle == value;
            let verdict = if ok { "OK" } else { "MISMATCH" };
            Ok((format!("{value} (oracle: {oracle}, {verdict})"), ok))
        }
    }
}

/// Triangular and shifted forms expand back to the monomial polynomial,
/// both monomial routes agree, the inductive forms match the direct ones,
/// and the closed-form shifted coefficients match the converted ones.
fn roundtrip_report(max: usize) -> VerificationReport {
    fn detail<T: std::fmt::Debug>(pass: bool, what: T) -> String {
        if pass {
            String::new()
        } else {
            format!("{what:?}")
        }
    }

    let mut report = VerificationReport::new("roundtrip");
    for power in 1..=max {
        let monomial = powersum_monomial(power).expect("power >= 1");
        let via_bp = powersum_via_bernoulli_poly(power);
        let pass = via_bp.as_ref() == Ok(&monomial);
        report.record(
            format!("Bernoulli-polynomial route, power {power}"),
            pass,
            detail(pass, &via_bp),
        );
        if power >= 2 {
            let back = faulhaber_form(power).map(|f| expand_to_monomial(&f));
            let pass = back.as_ref() == Ok(&monomial);
            report.record(
                format!("triangular round trip, power {power}"),
                pass,
                detail(pass, &back),
            );
        }
        let shifted = shifted_form(power);
        let back = shifted.as_ref().map(shifted_to_monomial);
        let pass = back.as_ref() == Ok(&monomial);
        report.record(
            format!("shifted round trip, power {power}"),
            pass,
            detail(pass, &back),
        );
        let closed = shifted_closed_form(power);
        let pass = closed.is_ok() && closed == shifted;
        report.record(
            format!("shifted closed form, power {power}"),
            pass,
            detail(pass, (&closed, &shifted)),
        );
    }
    if max >= 2 {
        match faulhaber_forms_inductive(max) {
            Ok(derivation) => {
                for (form, power) in derivation.forms.iter().zip(2..) {
                    let direct = faulhaber_form(power);
                    let pass = direct.as_ref() == Ok(form);
                    report.record(
                        format!("inductive = direct, power {power}"),
                        pass,
                        detail(pass, (form.coefficients(), &direct)),
                    );
                }
            }
            Err(e) => report.record("inductive derivation", false, e.to_string()),
        }
    }
    report
}

/// The two `(n + 1/2)` identities plus the partial-sums identity
/// `S_{m+1}(n) + sum_k S_m(k) = (n+1) S_m(n)` for `m <= 10`, `n <= max`.
fn lemma_report(max: usize) -> VerificationReport {
    let mut report = verify_lemma(max as u64);
    for m in 0..=10 {
        let mut first_bad = None;
        for n in 1..=max as u64 {
            match check_partial_sum_identity(m, n) {
                Ok(r) if r.pass => {}
                Ok(r) => {
                    first_bad = Some(format!("n = {n}: {} != {}", r.left, r.right));
                    break;
                }
                Err(e) => {
                    first_bad = Some(e.to_string());
                    break;
                }
            }
        }
        report.record(
            format!("partial-sums identity, m = {m}"),
            first_bad.is_none(),
            first_bad.unwrap_or_else(|| format!("holds for 1 <= n <= {max}")),
        );
    }
    report
}

fn recurrence_report(max: usize) -> Result<VerificationReport> {
    let rec = verify_recurrence_consistency(max)?;
    let mut report = VerificationReport::new("recurrence");
    for (m, ok_b, ok_s) in rec.per_index {
        report.record(
            format!("Bernoulli polynomial recurrence, m = {m}"),
            ok_b,
            "",
        );
        report.record(format!("power-sum recurrence, m = {m}"), ok_s, "");
    }
    Ok(report)
}

fn run_suite(suite: Suite, max: usize) -> Result<Vec<VerificationReport>> {
    if max == 0 {
        return Err(Error::InvalidArgument("--max must be at least 1".into()));
    }
    Ok(match suite {
        Suite::OddBernoulli => vec![verify_odd_zero(max)?],
        Suite::Roundtrip => vec![roundtrip_report(max)],
        Suite::Lemma => vec![lemma_report(max)],
        Suite::Recurrence => vec![recurrence_report(max)?],
        Suite::ConstantTerm => vec![verify_constant_term_bernoulli(max)?],
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::OddBernoulli,
                Suite::Roundtrip,
                Suite::Lemma,
                Suite::Recurrence,
                Suite::ConstantTerm,
            ] {
                all.extend(run_suite(s, max)?);
            }
            all
        }
    })
}

/// Runs a suite; the text has one summary line per sub-suite.
pub fn cmd_verify(suite: Suite, max: usize) -> Result<(String, bool)> {
    let reports = run_suite(suite, max)?;
    let passed = reports.iter().all(VerificationReport::passed);
    let mut lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
    if suite == Suite::All {
        lines.push(format!(
            "{}: {}",
            suite.name(),
            if passed { "PASS" } else { "FAIL" }
        ));
    }
    Ok((lines.join("\n"), passed))
}

#[derive(Debug, Parser)]
#[command(
    name = "faulhaber",
    version,
    about = "Exact sums of powers and Bernoulli numbers"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Render the formula for 1^m + ... + n^m
    Powersum {
        exponent: usize,
        #[arg(long, value_enum, default_value = "monomial")]
        basis: Basis,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Print B_m, the polynomial B_m(x) or the value B_m(1/2)
    Bernoulli(BernoulliArgs),
    /// Evaluate 1^m + ... + n^m exactly
    Eval {
        m: usize,
        n: BigUint,
        /// Also run the literal summation (n <= 1000000)
        #[arg(long)]
        check: bool,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 40)]
        max: usize,
    },
}

#[derive(Debug, Args)]
struct BernoulliArgs {
    m: usize,
    #[arg(long, conflicts_with = "at_half")]
    poly: bool,
    #[arg(long)]
    at_half: bool,
}

/// What a command run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, pass: bool) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: if pass { EXIT_OK } else { EXIT_FAIL },
        }
    }

    fn error(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_) => EXIT_USAGE,
            Error::NotTriangular(_) | Error::Consistency(_) => EXIT_FAIL,
        };
        Self {
            stdout: String::new(),
            stderr: format!("error: {e}"),
            code,
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_USAGE,
                }
            } else {
                Outcome::ok(text, true)
            };
        }
    };
    let result = match cli.command {
        Command::Powersum {
            exponent,
            basis,
            method,
            format,
        } => RenderRequest::new(exponent, basis, method, format)
            .and_then(|req| cmd_powersum(&req))
            .map(|s| (s, true)),
        Command::Bernoulli(args) => {
            let mode = if args.poly {
                BernoulliMode::Polynomial
            } else if args.at_half {
                BernoulliMode::AtHalf
            } else {
                BernoulliMode::Number
            };
            Ok((cmd_bernoulli(args.m, mode), true))
        }
        Command::Eval { m, n, check } => cmd_eval(m, &n, check),
        Command::Verify { suite, max } => cmd_verify(suite, max),
    };
    match result {
        Ok((text, pass)) => Outcome::ok(text, pass),
        Err(e) => Outcome::error(e),
    }
}
