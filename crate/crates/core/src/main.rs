use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cointerval::cli::{exit_code, reproduce, run_suite, ContextKind, Report, SuiteConfig};
use cointerval::exactalg::Ring;
use cointerval::{Error, Result};

#[derive(Parser)]
#[command(
    name = "cointerval",
    version,
    about = "Check interval objects and their induced 2-categories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Output {
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Compare the report (without timing) byte for byte against this file.
    #[arg(long)]
    golden: Option<PathBuf>,
    /// Include wall-clock time per check in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks over a built-in interval or one read from a file.
    Verify {
        #[arg(long, default_value = "fincat")]
        context: String,
        /// Z, Q or Zmod:n (chaincat only).
        #[arg(long, default_value = "Z")]
        ring: String,
        /// two, iso, discrete, coproduct (fincat); I, discrete, coproduct (chaincat).
        #[arg(long, default_value = "two")]
        interval: String,
        /// Fincat text presentation or chaincat JSON; replaces --interval.
        #[arg(long)]
        input: Option<PathBuf>,
        /// A check to run; repeat for several. Defaults to the standard suite.
        #[arg(long = "check")]
        checks: Vec<String>,
        #[arg(long, default_value_t = 12)]
        depth_bound: usize,
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
        #[arg(long, default_value_t = 3)]
        coeff_box: i64,
        #[command(flatten)]
        output: Output,
    },
    /// Run one of the named example scenarios.
    Reproduce {
        name: String,
        #[command(flatten)]
        output: Output,
    },
}

fn verify_config(
    context: &str,
    ring: &str,
    interval: String,
    checks: Vec<String>,
    depth_bound: usize,
    cap: usize,
    coeff_box: i64,
) -> Result<SuiteConfig> {
    let mut config = SuiteConfig::new(context.parse::<ContextKind>()?, interval);
    config.ring = ring.parse::<Ring>()?;
    config.depth_bound = depth_bound;
    config.cap = cap;
    config.coeff_box = coeff_box;
    if !checks.is_empty() {
        config.checks = Some(checks.into_iter().filter(|c| !c.trim().is_empty()).collect());
    }
    Ok(config)
}

fn emit(report: &Report, output: &Output) -> Result<i32> {
    let text = report.render(output.timing);
    match &output.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    let mut code = exit_code(report.verdict());
    if let Some(path) = &output.golden {
        let expected = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        if expected != report.render(false) {
            eprintln!("report differs from golden file {}", path.display());
            code = code.max(1);
        }
    }
    Ok(code)
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Verify {
            context,
            ring,
            interval,
            input,
            checks,
            depth_bound,
            cap,
            coeff_box,
            output,
        } => {
            let mut config = verify_config(&context, &ring, interval, checks, depth_bound, cap, coeff_box)?;
            let text = match &input {
                Some(path) => {
                    config.input_name = path.file_name().map(|n| n.to_string_lossy().into_owned());
                    Some(std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?)
                }
                None => None,
            };
            let report = run_suite(config, text.as_deref())?;
            emit(&report, &output)
        }
        Command::Reproduce { name, output } => emit(&reproduce(&name)?, &output),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
