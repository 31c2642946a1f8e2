//! The `qbinom` command line.
//!
//! Exit codes: 0 success, 1 identity failures, 2 usage errors (bad arguments,
//! unknown identity, malformed range), 3 exponent overflow, 4 evaluation of a
//! negative power at `q = 0`.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::identities::{
    xprod_pos, BinomialSource, Checker, GridSpec, Identity, IdentityReport, ParamRange,
};
use crate::laurent::{LaurentPoly, Rational};
use crate::qbinom::qbinom;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;
pub const EXIT_EVAL_AT_ZERO: i32 = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExpandMode {
    /// prod (1 + x q^k), k < n
    Pos,
    /// 1 / prod (1 - x q^k), k < n, truncated
    Neg,
}

#[derive(Parser, Debug)]
#[command(
    name = "qbinom",
    version,
    about = "Exact q-binomial coefficients for all integer arguments"
)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct BinomArgs {
    /// upper argument
    #[arg(
        value_name = "N",
        required_unless_present = "n_flag",
        conflicts_with = "n_flag"
    )]
    n: Option<i64>,
    /// lower argument
    #[arg(
        value_name = "K",
        required_unless_present = "k_flag",
        conflicts_with = "k_flag"
    )]
    k: Option<i64>,
    #[arg(long = "n", value_name = "N", allow_hyphen_values = true)]
    n_flag: Option<i64>,
    #[arg(long = "k", value_name = "K", allow_hyphen_values = true)]
    k_flag: Option<i64>,
}

impl BinomArgs {
    fn pair(&self) -> (i64, i64) {
        // clap enforces exactly one of each
        (
            self.n.or(self.n_flag).unwrap_or_default(),
            self.k.or(self.k_flag).unwrap_or_default(),
        )
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print [n choose k] as a Laurent polynomial in q
    #[command(allow_negative_numbers = true)]
    Binom(BinomArgs),
    /// Evaluate [n choose k] at a rational q
    #[command(allow_negative_numbers = true)]
    Eval {
        #[command(flatten)]
        args: BinomArgs,
        /// integer or p/r
        #[arg(long, allow_hyphen_values = true)]
        q: Rational,
    },
    /// Expand the q-binomial theorem products as series in x
    Expand {
        #[arg(value_enum)]
        mode: ExpandMode,
        n: usize,
        /// truncation order; defaults to n for pos and max(12, n+4) for neg
        #[arg(long)]
        order: Option<usize>,
    },
    /// Check an identity (or `all`) over a parameter grid
    Check {
        identity: String,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<ParamRange>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<ParamRange>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<ParamRange>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<ParamRange>,
    },
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Overflow => EXIT_OVERFLOW,
        Error::EvalAtZero => EXIT_EVAL_AT_ZERO,
        _ => EXIT_USAGE,
    }
}

/// Runs the CLI with the standard coefficient dispatcher.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let dispatcher = |n: i64, k: i64| qbinom(n, k);
    run_with_source(args, &dispatcher, out, err)
}

/// Runs the CLI with `check` drawing coefficients from `source`.
pub fn run_with_source<I, T>(
    args: I,
    source: &dyn BinomialSource,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli, source, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

#[derive(Serialize)]
struct RationalOut {
    value: String,
    numerator: String,
    denominator: String,
}

impl From<&Rational> for RationalOut {
    fn from(r: &Rational) -> Self {
        RationalOut {
            value: r.to_string(),
            numerator: r.numer().to_string(),
            denominator: r.denom().to_string(),
        }
    }
}

#[derive(Serialize)]
struct ExpandOut<'a> {
    order: usize,
    coeffs: &'a [LaurentPoly],
}

#[derive(Serialize)]
struct AllOut<'a> {
    passed: bool,
    reports: &'a [IdentityReport],
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("output types serialize infallibly")
}

fn emit(out: &mut dyn Write, text: impl std::fmt::Display) -> crate::Result<()> {
    writeln!(out, "{text}").map_err(|e| Error::Parse(format!("write failed: {e}")))
}

fn execute(cli: &Cli, source: &dyn BinomialSource, out: &mut dyn Write) -> crate::Result<i32> {
    let json = cli.format == OutputFormat::Json;
    match &cli.command {
        Command::Binom(args) => {
            let (n, k) = args.pair();
            let p = qbinom(n, k)?;
            if json {
                emit(out, to_json(&p))?;
            } else {
                emit(out, &p)?;
            }
            Ok(EXIT_OK)
        }
        Command::Eval { args, q } => {
            let (n, k) = args.pair();
            let value = qbinom(n, k)?.eval(q)?;
            if json {
                emit(out, to_json(&RationalOut::from(&value)))?;
            } else {
                emit(out, &value)?;
            }
            Ok(EXIT_OK)
        }
        Command::Expand { mode, n, order } => {
            let series = match mode {
                ExpandMode::Pos => {
                    let s = xprod_pos(*n, 0)?;
                    match order {
                        Some(o) => s.with_order(*o),
                        None => s,
                    }
                }
                ExpandMode::Neg => {
                    let o = order.unwrap_or_else(|| (n + 4).max(12));
                    xprod_pos(*n, 0)?.negate_x().with_order(o).inverse()?
                }
            };
            if json {
                let body = ExpandOut {
                    order: series.order(),
                    coeffs: series.coeffs(),
                };
                emit(out, to_json(&body))?;
            } else {
                emit(out, &series)?;
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            identity,
            a,
            b,
            n,
            k,
        } => {
            let overrides = GridSpec {
                a: *a,
                b: *b,
                n: *n,
                k: *k,
            };
            let checker = Checker::new(source);
            let reports = if identity == "all" {
                checker.run_all(&overrides)
            } else {
                vec![checker.run(Identity::from_name(identity)?, &overrides)]
            };
            let passed = reports.iter().all(|r| r.passed());
            if json {
                if identity == "all" {
                    emit(
                        out,
                        to_json(&AllOut {
                            passed,
                            reports: &reports,
                        }),
                    )?;
                } else {
                    emit(out, to_json(&reports[0]))?;
                }
            } else {
                for r in &reports {
                    emit(out, r)?;
                }
                if identity == "all" {
                    let checked: usize = reports.iter().map(|r| r.checked).sum();
                    let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
                    let verdict = if passed { "PASS" } else { "FAIL" };
                    emit(
                        out,
                        format!("all: {verdict}: checked {checked}, failures {failures}"),
                    )?;
                }
            }
            Ok(if passed { EXIT_OK } else { EXIT_FAILURES })
        }
    }
}
