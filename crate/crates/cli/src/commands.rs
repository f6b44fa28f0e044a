//! Argument definitions and command implementations.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use numrad_core::bounds::{BoundId, BoundParams, Evaluator};
use numrad_core::lab::{reproduce_examples, sweep, theta_scan_on, EnsembleKind, ExperimentConfig, SWEEP_RTOL};
use numrad_core::linop::{numerical_radius, DEFAULT_RTOL};

use crate::error::CliError;
use crate::matrix_file::read_matrix;
use crate::report::{write_examples_csv, write_scan_csv, write_sweep_csv};

#[derive(Debug, Parser)]
#[command(name = "numrad", version, about = "Numerical radius computation and inequality experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Numerical radius of a matrix file, with a certified upper bound.
    Radius(RadiusArgs),
    /// Evaluate one inequality on a matrix file.
    Eval(EvalArgs),
    /// Weighted-mean right-hand side over an evenly spaced θ grid.
    Scan(ScanArgs),
    /// Seeded random sweep over bounds, parameters and dimensions.
    Sweep(SweepArgs),
    /// Recompute the worked examples and flag disagreements.
    Examples(ExamplesArgs),
}

#[derive(Debug, Args)]
pub struct RadiusArgs {
    pub file: PathBuf,
    #[arg(long, default_value_t = DEFAULT_RTOL)]
    pub rtol: f64,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub bound: String,
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    #[arg(long, default_value_t = 0.5)]
    pub theta: f64,
    /// Second operand, required by block_thm41, block_spectral_thm43 and block_halfsum_cor45.
    #[arg(long)]
    pub file_b: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_RTOL)]
    pub rtol: f64,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    pub file: PathBuf,
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    #[arg(long, default_value_t = 101)]
    pub grid: usize,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_RTOL)]
    pub rtol: f64,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Comma-separated bound tags; defaults to the established bounds.
    #[arg(long, value_delimiter = ',')]
    pub bounds: Vec<String>,
    #[arg(long, default_value = "ginibre")]
    pub ensemble: String,
    #[arg(long, value_delimiter = ',', default_value = "2,3,4,5")]
    pub dims: Vec<usize>,
    /// Trials per dimension.
    #[arg(long, default_value_t = 2500)]
    pub trials: usize,
    #[arg(long, default_value_t = ExperimentConfig::baseline_default().base_seed)]
    pub seed: u64,
    /// Comma-separated r values, crossed with --theta.
    #[arg(long, value_delimiter = ',', default_value = "1,1.5,2")]
    pub r: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "0.5")]
    pub theta: Vec<f64>,
    #[arg(long, default_value_t = SWEEP_RTOL)]
    pub rtol: f64,
    /// CSV destination; only the summary is printed when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExamplesArgs {
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Radius(args) => radius(&args, stdout),
        Command::Eval(args) => eval(&args, stdout),
        Command::Scan(args) => scan(&args, stdout),
        Command::Sweep(args) => run_sweep(&args, stdout),
        Command::Examples(args) => examples(&args, stdout),
    }
}

fn radius(args: &RadiusArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let a = read_matrix(&args.file)?;
    let res = numerical_radius(&a, args.rtol)?;
    writeln!(out, "value={}", res.value)?;
    writeln!(out, "upper={}", res.upper)?;
    writeln!(out, "angle={}", res.argmax_angle)?;
    Ok(())
}

fn eval(args: &EvalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let bound: BoundId = args.bound.parse()?;
    let params = BoundParams::new(args.r, args.theta)?;
    match (&args.file_b, bound.needs_second_operand()) {
        (None, true) => return Err(CliError::Usage(format!("--bound {bound} requires --file-b"))),
        (Some(_), false) => {
            return Err(CliError::Usage(format!("--bound {bound} takes a single operand; drop --file-b")))
        }
        _ => {}
    }
    let a = read_matrix(&args.file)?;
    let b = args.file_b.as_deref().map(read_matrix).transpose()?;
    let e = Evaluator::new(a, b, args.rtol)?.evaluate(bound, params)?;
    writeln!(out, "bound={}", e.bound)?;
    writeln!(out, "r={}", e.params.r)?;
    writeln!(out, "theta={}", e.params.theta)?;
    writeln!(out, "lhs={}", e.lhs)?;
    writeln!(out, "rhs={}", e.rhs)?;
    writeln!(out, "margin={}", e.margin)?;
    writeln!(out, "satisfied={}", e.satisfied)?;
    writeln!(out, "tol_margin={}", e.tol_margin)?;
    writeln!(out, "inputs_digest={}", e.inputs_digest)?;
    Ok(())
}

fn scan(args: &ScanArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.grid < 2 {
        return Err(CliError::Usage(format!("--grid must be at least 2, got {}", args.grid)));
    }
    let a = read_matrix(&args.file)?;
    let ev = Evaluator::new(a, None, args.rtol)?;
    let s = theta_scan_on(&ev, args.r, args.grid)?;
    let lhs = ev.lhs(BoundId::WeightedMean, BoundParams::with_r(args.r)?)?;
    match &args.out {
        Some(path) => write_scan_csv(create(path)?, &s, lhs),
        None => write_scan_csv(out, &s, lhs),
    }
}

fn run_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let bounds = if args.bounds.is_empty() {
        BoundId::ESTABLISHED.to_vec()
    } else {
        args.bounds.iter().map(|t| t.trim().parse()).collect::<Result<_, _>>()?
    };
    let ensemble: EnsembleKind = args.ensemble.parse()?;
    let mut params = Vec::with_capacity(args.r.len() * args.theta.len());
    for &r in &args.r {
        for &theta in &args.theta {
            params.push(BoundParams::new(r, theta)?);
        }
    }
    let config = ExperimentConfig {
        bounds,
        params,
        ensemble,
        dims: args.dims.clone(),
        trials: args.trials,
        base_seed: args.seed,
        rtol: args.rtol,
    };
    let report = sweep(&config)?;
    if let Some(path) = &args.out {
        write_sweep_csv(create(path)?, &report.records)?;
    }
    for s in &report.summary {
        writeln!(
            out,
            "bound={} records={} min_margin={} mean_margin={} violations={}",
            s.bound, s.records, s.min_margin, s.mean_margin, s.violations
        )?;
    }
    Ok(())
}

fn examples(args: &ExamplesArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let report = reproduce_examples()?;
    match &args.out {
        Some(path) => {
            write_examples_csv(create(path)?, &report)?;
            writeln!(out, "rows={}", report.rows.len())?;
            for row in report.discrepancies() {
                writeln!(out, "discrepancy example=\"{}\" check=\"{}\"", row.example, row.check)?;
            }
            Ok(())
        }
        None => write_examples_csv(out, &report),
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    Ok(BufWriter::new(File::create(path)?))
}
