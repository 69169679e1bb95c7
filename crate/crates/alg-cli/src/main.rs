//! `alg`: analyze antisymmetric line graph invariants, verify the
//! identity suite over instance sets, sweep graph6 files, and print
//! family tables.
//!
//! Exit codes: 0 success, 1 verification violations, 2 parse/usage error,
//! 3 resource limit, 4 numeric error.

use std::io::Read;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use alg_cli::report::{build_report, render_table, StageOptions};
use alg_cli::sweep::{sweep_file, SweepConfig};
use alg_cli::verify::{run_identity, VerifyConfig};
use alg_cli::{family, parse_graph_auto};
use alg_core::AlgError;

#[derive(Parser)]
#[command(name = "alg", version, about = "Antisymmetric line graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Md,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for one graph (graph6 or edge list; '-' reads stdin).
    Analyze {
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
        /// Comma-separated stages to skip: frustration, energy, maxcut, oct, vf.
        #[arg(long)]
        skip: Option<String>,
        /// Include wall-clock stage timings (breaks byte-identical re-runs).
        #[arg(long)]
        timings: bool,
    },
    /// Check a named identity over an instance set.
    Verify {
        identity: String,
        /// Catalog bound: connected graphs on up to this many vertices.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// graph6 file supplying the instance set instead of the catalog.
        #[arg(long)]
        graphs: Option<String>,
        /// Seed for identities that draw random samples.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Per-instance reports plus summary statistics over a graph6 file.
    Sweep {
        file: String,
        /// Per-stage cutoff in milliseconds.
        #[arg(long, default_value_t = 10_000)]
        cutoff_ms: u64,
        /// Write per-instance reports as JSON lines to this file.
        #[arg(long)]
        out: Option<String>,
        /// Include wall-clock stage timings in per-instance records.
        #[arg(long)]
        timings: bool,
    },
    /// Family tables: odd-cycle, multipartite, cubic-catalog.
    Family {
        name: String,
        /// Parameter range `a..b` (odd-cycle: k; cubic-catalog: max vertices).
        #[arg(long)]
        range: Option<String>,
        /// Part sizes for the multipartite family, e.g. `2,2,2`.
        #[arg(long)]
        parts: Option<String>,
        #[arg(long, value_enum, default_value = "md")]
        format: TableFormat,
    },
}

fn exit_code_for(e: &AlgError) -> u8 {
    match e {
        AlgError::Parse { .. } | AlgError::InvalidInput(_) => 2,
        AlgError::ResourceLimit { .. } => 3,
        AlgError::Numeric(_) => 4,
        AlgError::Timeout { .. } => 4,
    }
}

fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
    }
}

fn env_threads() -> Option<usize> {
    std::env::var("ALG_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
}

fn parse_range(text: &str) -> Result<(usize, usize), AlgError> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| AlgError::invalid(format!("range must look like a..b, got {text:?}")))?;
    let lo = a
        .trim()
        .parse()
        .map_err(|e| AlgError::invalid(format!("bad range start: {e}")))?;
    let hi = b
        .trim()
        .parse()
        .map_err(|e| AlgError::invalid(format!("bad range end: {e}")))?;
    Ok((lo, hi))
}

fn run(cli: Cli) -> Result<u8, AlgError> {
    match cli.command {
        Command::Analyze {
            input,
            format,
            skip,
            timings,
        } => {
            let text = read_input(&input)
                .map_err(|e| AlgError::invalid(format!("cannot read {input}: {e}")))?;
            let g = parse_graph_auto(&text)?;
            let mut options = StageOptions {
                include_timings: timings,
                ..StageOptions::default()
            };
            if let Some(list) = &skip {
                options.apply_skips(list)?;
            }
            let report = build_report(&g, &options)?;
            match format {
                ReportFormat::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report)
                        .map_err(|e| AlgError::Numeric(e.to_string()))?
                ),
                ReportFormat::Table => print!("{}", render_table(&report)),
            }
            Ok(0)
        }
        Command::Verify {
            identity,
            n_max,
            graphs,
            seed,
        } => {
            let instance_graphs = match graphs {
                Some(path) => {
                    let text = read_input(&path)
                        .map_err(|e| AlgError::invalid(format!("cannot read {path}: {e}")))?;
                    let mut parsed = Vec::new();
                    for line in text.lines().map(str::trim) {
                        if line.is_empty() || line.starts_with('#') {
                            continue;
                        }
                        parsed.push(alg_core::from_graph6(line)?);
                    }
                    Some(parsed)
                }
                None => None,
            };
            let config = VerifyConfig {
                n_max,
                graphs: instance_graphs,
                seed,
            };
            let outcome = run_identity(&identity, &config)?;
            println!(
                "{}: checked {} instances, {} violation(s)",
                outcome.identity,
                outcome.checked,
                outcome.violations.len()
            );
            for v in &outcome.violations {
                println!("VIOLATION {v}");
            }
            Ok(if outcome.violations.is_empty() { 0 } else { 1 })
        }
        Command::Sweep {
            file,
            cutoff_ms,
            out,
            timings,
        } => {
            let text = read_input(&file)
                .map_err(|e| AlgError::invalid(format!("cannot read {file}: {e}")))?;
            let config = SweepConfig {
                cutoff: Duration::from_millis(cutoff_ms),
                include_timings: timings,
                threads: env_threads(),
            };
            let output = sweep_file(&text, &config)?;
            for (lineno, err) in &output.malformed {
                eprintln!("skipped line {lineno}: {err}");
            }
            if let Some(path) = out {
                let mut body = String::new();
                for r in &output.reports {
                    body.push_str(
                        &serde_json::to_string(r).map_err(|e| AlgError::Numeric(e.to_string()))?,
                    );
                    body.push('\n');
                }
                std::fs::write(&path, body)
                    .map_err(|e| AlgError::invalid(format!("cannot write {path}: {e}")))?;
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&output.summary)
                    .map_err(|e| AlgError::Numeric(e.to_string()))?
            );
            Ok(0)
        }
        Command::Family {
            name,
            range,
            parts,
            format,
        } => {
            let table = match name.as_str() {
                "odd-cycle" => {
                    let (lo, hi) = match &range {
                        Some(r) => parse_range(r)?,
                        None => (1, 10),
                    };
                    family::odd_cycle_family(lo, hi)?
                }
                "multipartite" => {
                    let parsed: Option<Vec<usize>> = match &parts {
                        Some(p) => Some(
                            p.split(',')
                                .map(|tok| {
                                    tok.trim().parse::<usize>().map_err(|e| {
                                        AlgError::invalid(format!("bad part size {tok:?}: {e}"))
                                    })
                                })
                                .collect::<Result<_, _>>()?,
                        ),
                        None => None,
                    };
                    family::multipartite_family(parsed.as_deref())?
                }
                "cubic-catalog" => {
                    let n_max = match &range {
                        Some(r) => parse_range(r)?.1,
                        None => 12,
                    };
                    family::cubic_catalog_family(n_max)?
                }
                other => {
                    return Err(AlgError::invalid(format!(
                        "unknown family {other:?}; valid families: odd-cycle, multipartite, cubic-catalog"
                    )))
                }
            };
            match format {
                TableFormat::Md => print!("{}", table.to_markdown()),
                TableFormat::Csv => print!("{}", table.to_csv()),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
