//! `pyquad` command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification sweep finds a
//! counterexample, 2 on usage or input errors.

mod output;
mod plot;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use pyquad::claims::{run_all_claims, run_claims, ClaimId, SweepConfig};
use pyquad::families::{family_row, Fault, Flavor};
use pyquad::fibonacci::{fib, fib_mod, fib_window};
use pyquad::quadratic::{analyze, build_quadratic, Orientation, QuadPoly};
use pyquad::triples::{scale, triple_from_window};

use crate::output::{emit_fib, emit_family, emit_quad, emit_reports, emit_triples, TripleRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "pyquad", version, about = "Integer-root quadratics from Pythagorean triples and Fibonacci windows")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the n-th Fibonacci number, optionally reduced mod m.
    Fib {
        #[arg(long)]
        n: u64,
        #[arg(long = "mod")]
        modulus: Option<BigInt>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Triples generated by Fibonacci windows `from..=to`.
    Triples {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// Multiply every side by k.
        #[arg(long)]
        scale: Option<BigInt>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Build or analyze a single quadratic.
    Quad {
        #[command(subcommand)]
        action: QuadAction,
    },
    /// Table of the scaled (3, 4, 5) family for n in 0..=n_max.
    Family {
        #[arg(long)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = FlavorArg::Both)]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run claim sweeps. CLAIM is one of theorem1, theorem2, formula2,
    /// family, mod3, theorem3 or all.
    Verify {
        claim: String,
        /// Upper bound of the sweep (every bound when CLAIM is `all`).
        #[arg(long)]
        max: Option<u64>,
        /// Corrupt one family coefficient: FLAVOR:INDEX:COEFF:DELTA, e.g. f:3:b:1.
        #[arg(long)]
        fault: Option<Fault>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Write an SVG of the quadratic with the root-to-root area shaded.
    Plot {
        #[arg(long)]
        leg: BigInt,
        #[arg(long)]
        hyp: BigInt,
        /// Use the mirrored orientation -q(-x).
        #[arg(long)]
        neg: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum QuadAction {
    /// Quadratic from a triple leg and its hypotenuse.
    Build {
        #[arg(long)]
        leg: BigInt,
        #[arg(long)]
        hyp: BigInt,
        #[arg(long)]
        neg: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Any integer quadratic ax² + bx + c.
    Analyze {
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        c: BigInt,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    F,
    G,
    Both,
}

impl FlavorArg {
    fn flavors(self) -> &'static [Flavor] {
        match self {
            FlavorArg::F => &[Flavor::F],
            FlavorArg::G => &[Flavor::G],
            FlavorArg::Both => &Flavor::BOTH,
        }
    }
}

fn orientation(neg: bool) -> Orientation {
    if neg {
        Orientation::Negative
    } else {
        Orientation::Positive
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Fib { n, modulus, format } => {
            let value = match &modulus {
                Some(m) => fib_mod(n, m)?,
                None => fib(n),
            };
            emit_fib(n, modulus.as_ref(), &value, format)?;
        }
        Command::Triples { from, to, scale: k, format } => {
            if from == 0 {
                bail!("--from must be at least 1 (window 0 has a zero leg)");
            }
            if from > to {
                bail!("--from {from} is greater than --to {to}");
            }
            let rows = (from..=to)
                .map(|i| {
                    let t = triple_from_window(&fib_window(i))?;
                    let t = match &k {
                        Some(k) => scale(&t, k)?,
                        None => t,
                    };
                    Ok(TripleRow { i, triple: t })
                })
                .collect::<Result<Vec<_>>>()?;
            emit_triples(&rows, format)?;
        }
        Command::Quad { action } => {
            let (q, format) = match action {
                QuadAction::Build { leg, hyp, neg, format } => {
                    (build_quadratic(&leg, &hyp, orientation(neg))?, format)
                }
                QuadAction::Analyze { a, b, c, format } => (QuadPoly::new(a, b, c)?, format),
            };
            emit_quad(&analyze(&q), format)?;
        }
        Command::Family { n_max, flavor, format } => {
            let rows: Vec<_> = (0..=n_max)
                .flat_map(|n| flavor.flavors().iter().map(move |fl| family_row(n, *fl)))
                .collect();
            emit_family(&rows, format)?;
        }
        Command::Verify { claim, max, fault, format } => {
            let mut config = SweepConfig::default();
            let reports = if claim == "all" {
                if let Some(m) = max {
                    config = SweepConfig::uniform(m);
                }
                config.fault = fault;
                run_all_claims(&config)
            } else {
                let id: ClaimId = claim.parse().map_err(anyhow::Error::msg)?;
                if let Some(m) = max {
                    config.set_bound(id, m);
                }
                config.fault = fault;
                run_claims(&[id], &config)
            };
            emit_reports(&reports, format)?;
            if reports.iter().any(|r| !r.passed()) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Plot { leg, hyp, neg, out } => {
            let q = build_quadratic(&leg, &hyp, orientation(neg))?;
            let title = format!("y = {q}");
            let svg = plot::render_svg(&q, &title)?;
            std::fs::write(&out, svg).with_context(|| format!("cannot write {}", out.display()))?;
            println!("{}", out.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
