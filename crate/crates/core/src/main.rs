use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use symsing::cli::{emit_report, run, ExperimentConfig};
use symsing::Result;

/// Exact experiments on the singularity of random symmetric ±1 matrices.
///
/// Exit status: 0 when every verdict holds, 1 when some verdict is false,
/// 2 on usage, parameter or budget errors.
#[derive(Parser)]
#[command(version)]
struct Args {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true)]
    n: Option<u64>,
    #[arg(long, global = true)]
    trials: Option<u64>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    p: Option<u64>,
    /// csv or json-lines
    #[arg(long, global = true)]
    format: Option<String>,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Flat `key = value` file; flags override its entries.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Extra `key=value` parameter (repeatable), e.g. `--set ell=2`.
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    set: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact or Monte Carlo estimate of q_n.
    Qn,
    /// Run one registered verifier.
    Verify { name: String },
    /// Bad-set census against the counting bounds (`mode` = global | window).
    Badset,
    /// Halász corpus with its envelope constant.
    Halasz,
    /// Parameter schedule and assembled bound.
    Schedule,
}

fn config(args: &Args) -> Result<ExperimentConfig> {
    let mut cfg = match &args.config {
        Some(path) => ExperimentConfig::from_file(path)?,
        None => ExperimentConfig::new(),
    };
    let mut flags = ExperimentConfig::new();
    let command = match &args.command {
        Command::Qn => "qn",
        Command::Verify { name } => {
            flags.set("name", name.clone())?;
            "verify"
        }
        Command::Badset => "badset",
        Command::Halasz => "halasz",
        Command::Schedule => "schedule",
    };
    flags.set("command", command)?;
    for (key, value) in [("n", args.n), ("trials", args.trials), ("seed", args.seed), ("p", args.p)] {
        if let Some(v) = value {
            flags.set(key, v.to_string())?;
        }
    }
    if let Some(f) = &args.format {
        flags.set("format", f.clone())?;
    }
    if let Some(o) = &args.out {
        flags.set("out", o.display().to_string())?;
    }
    for kv in &args.set {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| symsing::Error::Config(format!("--set expects KEY=VALUE, got '{kv}'")))?;
        flags.set(k.trim(), v.trim())?;
    }
    cfg.merge(&flags);
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = config(&args).and_then(|cfg| {
        let report = run(&cfg)?;
        emit_report(&report, cfg.format()?, cfg.out().as_deref())?;
        Ok(report.all_ok())
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
