//! The `mzv` command line.
//!
//! Exit codes: `0` success, `1` usage or validation error, `2` a failed
//! verification check.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::coaction::{coaction_brute, decompose};
use crate::galois::{dimension, group_presentation};
use crate::numerics::period::{matrix_text, numeric_instantiate, period_matrix};
use crate::suite::{verify_suite, SuiteConfig};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mzv",
    version,
    about = "Motivic double zeta values: coaction, f-alphabet, Galois group, periods"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose ζ^m(a,b) in the f-alphabet
    Decompose {
        a: u32,
        b: u32,
        #[arg(long, conflicts_with = "latex")]
        json: bool,
        #[arg(long)]
        latex: bool,
    },
    /// The coefficient of D_r ζ^m(a,b)
    Coaction {
        a: u32,
        b: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        json: bool,
    },
    /// Presentation of the Galois group G(a,b)
    Galois {
        a: u32,
        b: u32,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dimension of G(a,b): closed formula and Jacobian rank
    Dim {
        a: u32,
        b: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Period matrix of the minimal motive M(a,b)
    Period {
        a: u32,
        b: u32,
        #[arg(long, default_value_t = 30)]
        digits: u32,
        #[arg(long)]
        numeric: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification registry
    Verify {
        #[arg(long)]
        max_weight: u32,
        #[arg(long, default_value_t = 40)]
        digits: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Runs with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    run_with(argv, &mut out, &mut err)
}

/// Runs with explicit output streams; returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Decompose { a, b, json, latex } => {
            let d = decompose(a, b)?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&d)?)?;
            } else if latex {
                writeln!(out, "{}", d.to_latex())?;
            } else {
                let rel = if d.modulo_f2_power.is_some() {
                    "≡"
                } else {
                    "="
                };
                let text = if d.value.is_zero() {
                    "0".to_string()
                } else {
                    d.value.to_text()
                };
                match d.modulo_f2_power {
                    Some(k) => writeln!(out, "φ(ζ^m({a},{b})) {rel} {text} mod f_2^{k}")?,
                    None => writeln!(out, "φ(ζ^m({a},{b})) {rel} {text}")?,
                }
            }
        }
        Command::Coaction { a, b, r, json } => {
            let c = coaction_brute(a, b, r)?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&c)?)?;
            } else {
                writeln!(
                    out,
                    "D_{r} ζ^m({a},{b}) = {} ζ^L({r}) ⊗ ζ^m({})",
                    crate::scalars::format_rational(&c.q),
                    a + b - r
                )?;
            }
        }
        Command::Galois { a, b, json, seed } => {
            let g = group_presentation(a, b)?;
            let d = dimension(a, b, seed)?;
            if json {
                let v = json!({
                    "a": a,
                    "b": b,
                    "weights": g.basis_weights,
                    "entries": g.entries,
                    "ties": g.ties,
                    "dim_formula": d.formula,
                    "dim_rank": d.rank,
                });
                writeln!(out, "{v}")?;
            } else {
                write!(out, "{}", g.to_text())?;
                writeln!(out, "dim formula={} rank={}", d.formula, d.rank)?;
            }
        }
        Command::Dim { a, b, seed } => {
            let d = dimension(a, b, seed)?;
            writeln!(out, "formula={} rank={}", d.formula, d.rank)?;
        }
        Command::Period {
            a,
            b,
            digits,
            numeric,
            json,
        } => {
            if digits == 0 {
                return Err(Error::Usage("digits must be positive".into()));
            }
            let m = period_matrix(a, b)?;
            let values = if numeric {
                Some(numeric_instantiate(&m, digits)?)
            } else {
                None
            };
            if json {
                let num = values.as_ref().map(|rows| {
                    rows.iter()
                        .map(|r| {
                            r.iter()
                                .map(|z| json!({"re": z.re.to_decimal(digits), "im": z.im.to_decimal(digits)}))
                                .collect::<Vec<_>>()
                        })
                        .collect::<Vec<_>>()
                });
                writeln!(
                    out,
                    "{}",
                    json!({"a": a, "b": b, "matrix": m, "numeric": num})
                )?;
            } else {
                writeln!(out, "{}", matrix_text(&m))?;
                if let Some(rows) = values {
                    writeln!(out)?;
                    for r in rows {
                        let cells: Vec<String> = r
                            .iter()
                            .map(|z| {
                                format!(
                                    "({}, {})",
                                    z.re.to_decimal(digits),
                                    z.im.to_decimal(digits)
                                )
                            })
                            .collect();
                        writeln!(out, "{}", cells.join(" | "))?;
                    }
                }
            }
        }
        Command::Verify {
            max_weight,
            digits,
            seed,
        } => {
            let reports = verify_suite(SuiteConfig {
                max_weight,
                digits,
                seed,
            })?;
            for r in &reports {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
            if reports.iter().any(|r| !r.passed) {
                return Ok(EXIT_VERIFY);
            }
        }
    }
    Ok(EXIT_OK)
}
