//! `symcube`: exact tables for `S^m(C^2 ⊗ C^2 ⊗ C^2)`.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation error, 3 verification
//! mismatch.

mod render;
mod verify;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use symcube::{
    character_symmetric_power, decompose_symmetric_power, dim_weight, greedy_decompose,
    multiplicity_sym, parse_character, symmetric_power_dimension, IrrepLabel, Weight,
};

use render::OutputFormat;
use verify::Mode;

#[derive(Debug, Parser)]
#[command(
    name = "symcube",
    version,
    about = "Weight dimensions, multiplicities and decompositions of S^m(C^2 ⊗ C^2 ⊗ C^2)"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension of the weight space of S^m at (w1, w2, w3).
    #[command(allow_negative_numbers = true)]
    Dim { m: u32, w1: i64, w2: i64, w3: i64 },

    /// Multiplicity of V(n1) ⊗ V(n2) ⊗ V(n3) in S^m.
    Mult { m: u32, n1: u32, n2: u32, n3: u32 },

    /// Full decomposition of S^m, descending by label.
    Decompose {
        m: u32,
        /// Only rows with positive multiplicity (the default).
        #[arg(long, conflicts_with = "include_zero")]
        nonzero_only: bool,
        /// Also list candidate labels of multiplicity zero.
        #[arg(long)]
        include_zero: bool,
    },

    /// Character of S^m in the `l1 l2 l3 dim` line format.
    Character { m: u32 },

    /// Greedy decomposition of a character file (`-` reads standard input).
    Greedy { file: PathBuf },

    /// Compare every closed form with brute-force enumeration.
    Verify {
        /// Largest degree to check (default 12 in ci mode, 20 in extended).
        #[arg(long)]
        max_m: Option<u32>,
        #[arg(long, value_enum, default_value_t = Mode::Ci)]
        mode: Mode,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
    Mismatch(String),
}

impl From<symcube::Error> for Failure {
    fn from(e: symcube::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    checks: Vec<VerifyCheckJson<'a>>,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyCheckJson<'a> {
    name: &'a str,
    scope: &'a str,
    passed: bool,
    divergence: Option<String>,
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Dim { m, w1, w2, w3 } => {
            let w = Weight::new(w1, w2, w3);
            Ok(render::dim(format, m, w, dim_weight(m, w)?))
        }
        Command::Mult { m, n1, n2, n3 } => {
            let label = IrrepLabel::new(n1, n2, n3);
            Ok(render::mult(format, m, label, multiplicity_sym(m, label)?))
        }
        Command::Decompose {
            m, include_zero, ..
        } => {
            let d = decompose_symmetric_power(m)?;
            let rows = if include_zero {
                let step = || (m % 2..=m).rev().step_by(2);
                step()
                    .flat_map(|a| {
                        step().flat_map(move |b| step().map(move |c| IrrepLabel::new(a, b, c)))
                    })
                    .map(|l| (l, d.get(l)))
                    .collect()
            } else {
                render::decomposition_rows(&d)
            };
            let total = d.total_dim()?;
            Ok(render::decomposition(format, Some(m), &rows, total))
        }
        Command::Character { m } => {
            let c = character_symmetric_power(m)?;
            Ok(render::character(
                format,
                m,
                &c,
                symmetric_power_dimension(m)?,
            ))
        }
        Command::Greedy { file } => {
            let text = read_input(&file)?;
            let c = parse_character(&text)?;
            let d = greedy_decompose(&c)?;
            Ok(render::decomposition(
                format,
                None,
                &render::decomposition_rows(&d),
                d.total_dim()?,
            ))
        }
        Command::Verify { max_m, mode } => {
            let max_m = max_m.unwrap_or(mode.enumeration_cap());
            let outcomes = verify::run(max_m, mode)?;
            let all = outcomes.iter().all(verify::CheckOutcome::passed);
            let out = match format {
                OutputFormat::Json => {
                    let checks = outcomes
                        .iter()
                        .map(|o| VerifyCheckJson {
                            name: o.name,
                            scope: &o.scope,
                            passed: o.passed(),
                            divergence: o.divergence.as_ref().map(ToString::to_string),
                        })
                        .collect();
                    let mut s = serde_json::to_string(&VerifyJson {
                        checks,
                        passed: all,
                    })
                    .expect("plain data serializes");
                    s.push('\n');
                    s
                }
                OutputFormat::Text | OutputFormat::Csv => {
                    let mut s = String::new();
                    for o in &outcomes {
                        match &o.divergence {
                            None => s.push_str(&format!("PASS {} ({})\n", o.name, o.scope)),
                            Some(d) => s.push_str(&format!("FAIL {} ({}): {d}\n", o.name, o.scope)),
                        }
                    }
                    if all {
                        s.push_str("all checks passed\n");
                    }
                    s
                }
            };
            if all {
                Ok(out)
            } else {
                print!("{out}");
                let first = outcomes
                    .iter()
                    .find_map(|o| o.divergence.as_ref())
                    .expect("a failed check has a divergence");
                Err(Failure::Mismatch(format!("verification failed: {first}")))
            }
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
