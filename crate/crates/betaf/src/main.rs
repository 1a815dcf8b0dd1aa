//! betaf: beta-element representatives, f-invariants into divided
//! congruences, Igusa-tower verification, and Chern-number Kervaire
//! criteria.

use anyhow::Result;
use betaf::commands::{self, InvalidInput};
use betaf::config::{OrientationChoice, OutputFormat, RunConfig};
use betaf::verify;
use clap::{Parser, Subcommand};
use modular_arith::Level;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "betaf",
    version,
    about = "Exact computations in the BP Hopf algebroid and divided congruences"
)]
struct Cli {
    /// Working prime: 2 (level 3) or >= 5 (level 1).
    #[arg(long, global = true, default_value_t = 2)]
    prime: u64,

    /// Congruence level: 3 (p = 2) or 1 (p >= 5).
    #[arg(long, global = true, default_value_t = 3)]
    level: u64,

    /// q-expansion precision for series verdicts (>= 50).
    #[arg(long, global = true, default_value_t = 200)]
    precision: usize,

    /// Seed for the randomized property suites.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Directory for the result cache (disabled when absent).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, default_value = "text", value_parser = ["text", "json"])]
    format: String,

    /// Orientation choice (eisenstein forces alpha(v1) = E_{p-1} at level 1).
    #[arg(long, global = true, default_value = "default", value_parser = ["default", "eisenstein"])]
    orientation: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the canonical representative of beta_{t,s,r}.
    BetaRep {
        #[arg(short, long)]
        t: u64,
        #[arg(short, long, default_value_t = 1)]
        s: u32,
        #[arg(short, long, default_value_t = 1)]
        r: u32,
    },
    /// Compute an f-invariant: `f-inv beta T [S]` or `f-inv alpha1*alpha T`.
    FInv {
        /// Generator family: beta | alpha1*alpha
        family: String,
        /// Leading index t.
        t: u64,
        /// Second index s (betas only; defaults to 1).
        s: Option<u32>,
    },
    /// The 2-line generator catalog in internal degree 2^n.
    Catalog {
        #[arg(short, long)]
        n: u32,
    },
    /// Emit a base-generator q-expansion bit-exactly.
    Qexp {
        /// Generator name: a1/a3 (level 3) or g2/g3 (level 1).
        generator: String,
    },
    /// Chern-number Kervaire criteria.
    Chern {
        #[command(subcommand)]
        action: ChernAction,
    },
    /// Run verification suites (one pass/fail line per criterion).
    Verify {
        /// Suite name: eta phi lattice beta level1 qexp igusa sigma
        /// pipeline laures kervaire chern properties all
        suite: String,
    },
}

#[derive(Subcommand)]
enum ChernAction {
    /// Print the parity polynomial for a dimension (4 or 8).
    Polynomial {
        #[arg(short, long)]
        dimension: u32,
    },
    /// Evaluate the criterion on Chern numbers given as a JSON object.
    Evaluate {
        #[arg(short, long)]
        dimension: u32,
        /// JSON object mapping monomial keys to integers.
        #[arg(long)]
        data: String,
    },
    /// Diagnostic report for dimensions beyond 8.
    Report {
        #[arg(short, long)]
        dimension: u32,
    },
}

fn run(cli: Cli) -> Result<i32> {
    let config = RunConfig {
        prime: cli.prime,
        level: match cli.level {
            1 => Level::One,
            3 => Level::Three,
            other => anyhow::bail!(InvalidInput(format!("level must be 1 or 3, got {other}"))),
        },
        precision: cli.precision,
        seed: cli.seed,
        cache_dir: cli.cache_dir,
        format: if cli.format == "json" { OutputFormat::Json } else { OutputFormat::Text },
        orientation: if cli.orientation == "eisenstein" {
            OrientationChoice::Eisenstein
        } else {
            OrientationChoice::Default
        },
    };
    config
        .validate()
        .map_err(|e| anyhow::anyhow!(InvalidInput(e.to_string())))?;
    match cli.command {
        Command::BetaRep { t, s, r } => {
            commands::cmd_beta_rep(&config, t, s, r)?;
            Ok(0)
        }
        Command::FInv { family, t, s } => {
            commands::cmd_f_inv(&config, &family, t, s)?;
            Ok(0)
        }
        Command::Catalog { n } => {
            commands::cmd_catalog(&config, n)?;
            Ok(0)
        }
        Command::Qexp { generator } => {
            commands::cmd_qexp(&config, &generator, config.precision)?;
            Ok(0)
        }
        Command::Chern { action } => {
            match action {
                ChernAction::Polynomial { dimension } => {
                    commands::cmd_chern_polynomial(&config, dimension)?
                }
                ChernAction::Evaluate { dimension, data } => {
                    commands::cmd_chern_evaluate(&config, dimension, &data)?
                }
                ChernAction::Report { dimension } => {
                    let report = chern_criterion::b_reduction_report(dimension)
                        .map_err(|e| anyhow::anyhow!(InvalidInput(e.to_string())))?;
                    betaf::output::emit(
                        &config,
                        format!(
                            "dimension {}: {} summands outside the B-span; {}",
                            report.dimension,
                            report.non_b_monomials.len(),
                            report.note
                        ),
                        serde_json::json!({
                            "dimension": report.dimension,
                            "non_b_monomials": report.non_b_monomials,
                            "available_corrections": report.available_corrections,
                            "completed": report.completed,
                            "note": report.note,
                        }),
                    );
                }
            }
            Ok(0)
        }
        Command::Verify { suite } => {
            let Some(ids) = verify::suite_criteria(&suite) else {
                anyhow::bail!(InvalidInput(format!("unknown suite '{suite}'")));
            };
            let ok = verify::run_and_print(&ids, config.seed);
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            let code = if err.downcast_ref::<InvalidInput>().is_some()
                || err
                    .chain()
                    .any(|c| c.downcast_ref::<InvalidInput>().is_some())
            {
                2
            } else {
                1
            };
            ExitCode::from(code)
        }
    }
}
