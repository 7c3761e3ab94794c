//! Thin command-line front end. All real work happens in the library's
//! `cli` module; this file only parses flags, applies overrides, writes
//! the rendered report, and maps verification results to the exit code.
//!
//! Timing is written to stderr so report bytes stay deterministic.

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ecs_cohomology::cli::{render, run, CommandKind};
use ecs_cohomology::config::{JobConfig, OutputSpec, ReportFormat};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "ecscoh",
    version,
    about = "Exact sector tables, stringy products, and identity verification \
             for torus actions with isolated fixed points"
)]
struct Args {
    /// Job configuration file (JSON). Omitted sections get defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for randomized verification, overriding the config.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest torus-element order to enumerate, overriding the config.
    #[arg(long, global = true)]
    max_order: Option<u64>,
    /// Report format, overriding the config.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Report destination, overriding the config; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate sectors with shifts, dimensions, and centralizer data.
    Sectors,
    /// Multiply the two configured classes and audit the result.
    Product,
    /// Run the identity verification suite.
    Verify,
    /// Emit one combined report: sectors, product when classes are
    /// configured, and verification.
    Report,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for ReportFormat {
    fn from(value: FormatArg) -> Self {
        match value {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Csv => ReportFormat::Csv,
        }
    }
}

fn main() -> ExitCode {
    match try_main() {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("ecscoh: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn try_main() -> Result<bool> {
    let args = Args::parse();
    let started = Instant::now();

    let mut config = match &args.config {
        Some(path) => JobConfig::from_path(path)?,
        None => JobConfig::default(),
    };
    if let Some(seed) = args.seed {
        config.seed = Some(seed);
    }
    if let Some(max_order) = args.max_order {
        config.max_order = Some(max_order);
    }
    // Output routing is transport, not job identity: pull it out of the
    // config before running so report bytes never depend on where they
    // are written.
    let output = config.output.take().unwrap_or_else(OutputSpec::default);
    let format = args.format.map(ReportFormat::from).unwrap_or(output.format);
    let out_path = args.out.map(|p| p.display().to_string()).or(output.path);

    let kind = match args.command {
        Command::Sectors => CommandKind::Sectors,
        Command::Product => CommandKind::Product,
        Command::Verify => CommandKind::Verify,
        Command::Report => CommandKind::Report,
    };
    let report = run(kind, &config)?;
    let rendered = render(&report, format);
    match &out_path {
        Some(path) => {
            std::fs::write(path, &rendered).with_context(|| format!("cannot write {path}"))?
        }
        None => print!("{rendered}"),
    }

    let all_passed = report.all_passed();
    if !all_passed {
        for line in failure_lines(&report) {
            eprintln!("ecscoh: {line}");
        }
    }
    eprintln!("ecscoh: finished in {} ms", started.elapsed().as_millis());
    Ok(all_passed)
}

/// Human-oriented failure summary for stderr: one line per failed check,
/// then its minimized counterexamples.
fn failure_lines(report: &ecs_cohomology::report::Report) -> Vec<String> {
    use ecs_cohomology::report::Payload;
    fn walk(payload: &Payload, out: &mut Vec<String>) {
        match payload {
            Payload::Verify(v) => {
                for check in &v.checks {
                    if check.failed > 0 {
                        out.push(format!(
                            "check {} failed {} of {} instances",
                            check.name, check.failed, check.attempted
                        ));
                        for c in &check.counterexamples {
                            out.push(format!("  counterexample: {c}"));
                        }
                    }
                }
            }
            Payload::Product(p) => {
                if !p.oracle_confirmed {
                    out.push("product disagrees with the localization oracle".to_string());
                }
                if !p.degree_identity {
                    out.push("product degrees violate the top-degree bound".to_string());
                }
            }
            Payload::Combined { parts } => {
                for part in parts {
                    walk(part, out);
                }
            }
            Payload::Sectors { .. } => {}
        }
    }
    let mut out = Vec::new();
    walk(&report.payload, &mut out);
    out
}
