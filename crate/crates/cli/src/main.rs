mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser};
use crinv::ci::{total_iprime, validate_positivity, CIData, Degrees};
use crinv::invariant::{chern_expansion, einstein_transform, einstein_transform_symbolic, parse_phi, Mode};
use crinv::verify::{run_suite, Suite, SuiteReport};
use serde::{Deserialize, Serialize};

use config::{DegreesArg, NArg, Output, PartialConfig, RunConfig, Subcommand};

/// Highest generator index accepted in `--phi`.
const MAXGEN: u32 = 16;

#[derive(Parser, Debug)]
#[command(name = "crinv", version, about = "Exact total I'-curvatures and identity checks")]
struct Cli {
    /// JSON file whose keys mirror the long flags; flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    output: Option<Output>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(clap::Subcommand, Debug)]
enum Command {
    /// Total I'-curvature of the circle bundle over a complete intersection.
    CiInvariant(CiArgs),
    /// Einstein transform of an invariant polynomial.
    EinsteinTransform(EinsteinArgs),
    /// Coefficients of the expansion of c_(n+1) in powers of the Kähler form.
    ChernExpansion(ExpansionArgs),
    /// Run randomized identity checks.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct CiArgs {
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long, value_delimiter = ',', conflicts_with = "symbolic", allow_negative_numbers = true)]
    degrees: Option<Vec<i64>>,
    /// Keep the degrees as variables d1..dr.
    #[arg(long)]
    symbolic: bool,
    #[arg(long)]
    phi: Option<String>,
}

#[derive(Args, Debug)]
struct EinsteinArgs {
    #[arg(long, value_parser = parse_mode)]
    mode: Option<Mode>,
    #[arg(long, conflicts_with = "symbolic_n")]
    n: Option<u32>,
    /// Leave the dimension as a variable n.
    #[arg(long)]
    symbolic_n: bool,
    #[arg(long)]
    phi: Option<String>,
}

#[derive(Args, Debug)]
struct ExpansionArgs {
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(Suite))]
    suite: Option<Suite>,
    /// Comma-separated dimensions.
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<u32>>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    match s {
        "domain" => Ok(Mode::Domain),
        "base" => Ok(Mode::Base),
        other => Err(format!("unknown mode {other}; expected domain or base")),
    }
}

fn flag(b: bool) -> Option<bool> {
    b.then_some(true)
}

impl Cli {
    fn into_partial(self) -> PartialConfig {
        let mut p = PartialConfig { output: self.output, ..Default::default() };
        match self.command {
            None => {}
            Some(Command::CiInvariant(a)) => {
                p.subcommand = Some(Subcommand::CiInvariant);
                p.n = a.n.map(NArg::One);
                p.r = a.r;
                p.degrees = a.degrees.map(DegreesArg::Numeric);
                p.symbolic = flag(a.symbolic);
                p.phi = a.phi;
            }
            Some(Command::EinsteinTransform(a)) => {
                p.subcommand = Some(Subcommand::EinsteinTransform);
                p.mode = a.mode;
                p.n = a.n.map(NArg::One);
                p.symbolic_n = flag(a.symbolic_n);
                p.phi = a.phi;
            }
            Some(Command::ChernExpansion(a)) => {
                p.subcommand = Some(Subcommand::ChernExpansion);
                p.n = a.n.map(NArg::One);
            }
            Some(Command::Verify(a)) => {
                p.subcommand = Some(Subcommand::Verify);
                p.suite = a.suite;
                p.n = a.n.map(NArg::Many);
                p.trials = a.trials;
                p.seed = a.seed;
            }
        }
        p
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum RunResult {
    CiInvariant { value: String, positivity_checked: bool },
    EinsteinTransform { polynomial: String },
    ChernExpansion { phi: Vec<String>, omega_free: String },
    Verify(SuiteReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Document {
    config: RunConfig,
    result: RunResult,
    warnings: Vec<String>,
    version: String,
}

impl Document {
    fn success(&self) -> bool {
        match &self.result {
            RunResult::Verify(rep) => rep.all_passed(),
            _ => true,
        }
    }

    fn text(&self) -> String {
        match &self.result {
            RunResult::CiInvariant { value, .. } => value.clone(),
            RunResult::EinsteinTransform { polynomial } => polynomial.clone(),
            RunResult::ChernExpansion { phi, .. } => {
                phi.iter().enumerate().map(|(k, p)| format!("Phi_{k} = {p}")).collect::<Vec<_>>().join("; ")
            }
            RunResult::Verify(rep) => {
                let failed = rep.identities.iter().filter(|r| !r.ok()).count();
                let n: Vec<String> = rep.n.iter().map(u32::to_string).collect();
                let status = if failed == 0 {
                    "all identities passed".to_string()
                } else {
                    format!("{failed} of {} identities failed", rep.identities.len())
                };
                format!(
                    "suite {} (n = {}, trials = {}, seed = {})\n{}\n{status}",
                    rep.suite,
                    n.join(","),
                    rep.trials,
                    rep.seed,
                    rep.summary()
                )
            }
        }
    }
}

fn run(cfg: &RunConfig) -> Result<(RunResult, Vec<String>), String> {
    let err = |e: &dyn std::fmt::Display| e.to_string();
    match cfg.subcommand {
        Subcommand::CiInvariant => {
            let n = cfg.single_n();
            let degrees = match cfg.degrees.as_ref().expect("validated") {
                DegreesArg::Numeric(d) => Degrees::Numeric(d.clone()),
                DegreesArg::Named(_) => Degrees::Symbolic,
            };
            let ci = CIData::new(n, cfg.r.expect("validated"), degrees).map_err(|e| err(&e))?;
            let phi = parse_phi(cfg.phi.as_deref().expect("validated"), MAXGEN).map_err(|e| err(&e))?;
            let value = total_iprime(&phi, &ci).map_err(|e| err(&e))?;
            let report = validate_positivity(&ci);
            Ok((
                RunResult::CiInvariant { value: value.to_string(), positivity_checked: report.positivity_checked },
                report.warnings,
            ))
        }
        Subcommand::EinsteinTransform => {
            let phi = parse_phi(cfg.phi.as_deref().expect("validated"), MAXGEN).map_err(|e| err(&e))?;
            let mode = cfg.mode.expect("validated");
            let polynomial = match &cfg.n {
                Some(_) => einstein_transform(&phi, cfg.single_n() as i64, mode).map_err(|e| err(&e))?.to_string(),
                None => einstein_transform_symbolic(&phi, mode).to_string(),
            };
            Ok((RunResult::EinsteinTransform { polynomial }, Vec::new()))
        }
        Subcommand::ChernExpansion => {
            let e = chern_expansion(cfg.single_n() as i64).map_err(|e| err(&e))?;
            Ok((
                RunResult::ChernExpansion {
                    phi: e.phi.iter().map(ToString::to_string).collect(),
                    omega_free: e.omega_free.to_string(),
                },
                Vec::new(),
            ))
        }
        Subcommand::Verify => {
            let rep = run_suite(cfg.suite.expect("validated"), &cfg.n_list(), cfg.trials, cfg.seed);
            Ok((RunResult::Verify(rep), Vec::new()))
        }
    }
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let file = match &cli.config {
        Some(path) => match PartialConfig::load(path) {
            Ok(p) => p,
            Err(msg) => return usage_error(&msg),
        },
        None => PartialConfig::default(),
    };
    let cfg = match RunConfig::resolve(file.overlay(cli.into_partial())) {
        Ok(cfg) => cfg,
        Err(msg) => return usage_error(&msg),
    };
    let (result, warnings) = match run(&cfg) {
        Ok(r) => r,
        Err(msg) => return usage_error(&msg),
    };
    let doc = Document { config: cfg, result, warnings, version: env!("CARGO_PKG_VERSION").to_string() };
    match doc.config.output {
        Output::Text => {
            for w in &doc.warnings {
                eprintln!("warning: {w}");
            }
            emit(&doc.text());
        }
        Output::Json => emit(&serde_json::to_string_pretty(&doc).expect("document serializes")),
    }
    if doc.success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
