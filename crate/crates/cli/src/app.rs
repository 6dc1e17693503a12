//! Subcommands and their exit codes: 0 on success, 1 when a check fails,
//! 2 on usage or parse errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use malcev_core::alternative::{associator_a, commutator_a, mul_a, project};
use malcev_core::checks::{self, CheckParams, CheckReport, Suite};
use malcev_core::diffops::{lmul, rho};
use malcev_core::envelope::{associator_u, bracket_u, mul_u};
use malcev_core::{Letter, UElement};

use crate::expr::parse;
use crate::output::{render_a, render_u, Format};

pub const MEMO_LIMIT_VAR: &str = "MALCEV_MEMO_LIMIT";

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "malcev",
    version,
    about = "Exact products in the universal enveloping algebra U(M) of the 5-dimensional nilpotent Malcev algebra and in its alternative quotient A(M)"
)]
pub struct Cli {
    /// Output format for computed elements.
    #[arg(long, value_enum, default_value_t, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Algebra {
    /// The universal enveloping algebra U(M).
    #[default]
    U,
    /// The alternative quotient A(M); inputs are projected first.
    A,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    /// x -> [x, f]
    Rho,
    /// x -> f x
    L,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    All,
    One(Suite),
}

fn parse_suite(s: &str) -> Result<SuiteArg, String> {
    if s == "all" {
        return Ok(SuiteArg::All);
    }
    s.parse().map(SuiteArg::One).map_err(|_| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("expected one of {}, all", names.join(", "))
    })
}

fn parse_letter(s: &str) -> Result<Letter, String> {
    let mut chars = s.chars();
    match (chars.next().and_then(Letter::from_char), chars.next()) {
        (Some(l), None) => Ok(l),
        _ => Err("expected one of a, b, c, d, e".into()),
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Product x y.
    Mul {
        #[arg(long, value_enum, default_value_t)]
        algebra: Algebra,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Commutator [x, y] = x y - y x.
    Bracket {
        #[arg(long, value_enum, default_value_t)]
        algebra: Algebra,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Associator (x, y, z) = (x y) z - x (y z).
    Assoc {
        #[arg(long, value_enum, default_value_t)]
        algebra: Algebra,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Image of x in A(M).
    Project {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Applies rho(f) or L(f) to x.
    ApplyOp {
        #[arg(value_enum)]
        op: OpKind,
        #[arg(value_parser = parse_letter)]
        letter: Letter,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Runs a verification suite: oracle, operators, nucleus, malcev,
    /// alternative, homomorphism, special or all.
    Check {
        #[arg(value_parser = parse_suite)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        max_degree: u32,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Usage(String);

fn elements<const N: usize>(texts: [&String; N]) -> Result<[UElement; N], Usage> {
    let mut out: [UElement; N] = std::array::from_fn(|_| UElement::zero());
    for (slot, text) in out.iter_mut().zip(texts) {
        *slot = parse(text).map_err(|e| Usage(format!("{e}\n  in `{text}`")))?;
    }
    Ok(out)
}

fn memo_limit() -> Result<Option<usize>, Usage> {
    match std::env::var(MEMO_LIMIT_VAR) {
        Err(_) => Ok(None),
        Ok(v) => v.trim().parse().map(Some).map_err(|_| {
            Usage(format!(
                "{MEMO_LIMIT_VAR} must be a nonnegative integer, got `{v}`"
            ))
        }),
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run(cli: &Cli, out: &mut impl Write, err: &mut impl Write) -> u8 {
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, out: &mut impl Write, err: &mut impl Write) -> Result<u8, Usage> {
    let format = cli.format;
    let line = match &cli.command {
        Command::Mul { algebra, x, y } => {
            let [x, y] = elements([x, y])?;
            match algebra {
                Algebra::U => render_u(&mul_u(&x, &y), format),
                Algebra::A => render_a(&mul_a(&project(&x), &project(&y)), format),
            }
        }
        Command::Bracket { algebra, x, y } => {
            let [x, y] = elements([x, y])?;
            match algebra {
                Algebra::U => render_u(&bracket_u(&x, &y), format),
                Algebra::A => render_a(&commutator_a(&project(&x), &project(&y)), format),
            }
        }
        Command::Assoc { algebra, x, y, z } => {
            let [x, y, z] = elements([x, y, z])?;
            match algebra {
                Algebra::U => render_u(&associator_u(&x, &y, &z), format),
                Algebra::A => render_a(
                    &associator_a(&project(&x), &project(&y), &project(&z)),
                    format,
                ),
            }
        }
        Command::Project { x } => {
            let [x] = elements([x])?;
            render_a(&project(&x), format)
        }
        Command::ApplyOp { op, letter, x } => {
            let [x] = elements([x])?;
            let f = match op {
                OpKind::Rho => rho(*letter),
                OpKind::L => lmul(*letter),
            };
            render_u(&f.apply(&x), format)
        }
        Command::Check {
            suite,
            max_degree,
            samples,
            seed,
        } => {
            let params = CheckParams {
                max_degree: *max_degree,
                samples: *samples,
                seed: *seed,
                memo_limit: memo_limit()?,
            };
            return Ok(check(*suite, &params, out, err));
        }
    };
    let _ = writeln!(out, "{line}");
    Ok(EXIT_OK)
}

fn check(suite: SuiteArg, params: &CheckParams, out: &mut impl Write, err: &mut impl Write) -> u8 {
    let suites = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::One(s) => vec![s],
    };
    let _ = writeln!(
        out,
        "max-degree {}, samples {}, seed {}",
        params.max_degree, params.samples, params.seed
    );
    let mut failed = false;
    for s in suites {
        let report = checks::run(s, params);
        print_report(&report, out);
        let _ = writeln!(err, "{s}: {:.2} s", report.duration.as_secs_f64());
        failed |= !report.passed();
    }
    if failed {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    }
}

fn print_report(report: &CheckReport, out: &mut impl Write) {
    let _ = writeln!(out, "{}", report.suite);
    let failing = report
        .counterexample
        .is_some()
        .then(|| report.properties.len() - 1);
    for (ix, p) in report.properties.iter().enumerate() {
        let status = if Some(ix) == failing { "FAIL" } else { "ok" };
        let _ = writeln!(out, "  {status:<4} {} ({} cases)", p.name, p.cases);
    }
    match &report.counterexample {
        Some(c) => {
            for l in c.to_string().lines() {
                let _ = writeln!(out, "       {l}");
            }
            let _ = writeln!(out, "{}: FAIL", report.suite);
        }
        None => {
            let _ = writeln!(out, "{}: pass ({} cases)", report.suite, report.cases());
        }
    }
}
