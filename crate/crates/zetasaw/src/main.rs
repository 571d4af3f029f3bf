use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use zetasaw::config::{parse_complex, Format, RunConfig};
use zetasaw::error::{CliResult, EXIT_CHECK_FAILED, EXIT_OK};
use zetasaw::scan::{RootKindArg, ScanOptions, ScanTarget};
use zetasaw::verify::Suite;
use zetasaw::{eval, scan, verify};

#[derive(Parser)]
#[command(
    name = "zetasaw",
    version,
    about = "Harmonic sawtooth map: evaluation, scans and verification"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Truncation order of the finite zeta sums
    #[arg(long = "N", global = true, default_value_t = 100)]
    n_trunc: u64,
    /// Complex argument as "re,im"
    #[arg(long, global = true, allow_hyphen_values = true, value_parser = parse_complex)]
    s: Option<Complex64>,
    /// Series terms before the tail estimate
    #[arg(long, global = true, default_value_t = 100_000)]
    terms: u64,
    /// Contour radius for residues
    #[arg(long, global = true, default_value_t = zetasaw_core::reflection::CONTOUR_RADIUS)]
    radius: f64,
    /// Contour samples, a power of two
    #[arg(long, global = true, default_value_t = zetasaw_core::reflection::CONTOUR_SAMPLES)]
    samples: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file; stdout when absent
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Default tolerance for checks
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one operation
    #[command(after_help = eval_help(), allow_negative_numbers = true)]
    Eval { op: String, args: Vec<String> },
    /// Tabulate a figure dataset
    Scan {
        #[arg(value_enum)]
        target: ScanTarget,
        /// Range "a..b"
        range: Option<String>,
        /// Linear step, or points per decade with --log
        #[arg(long)]
        step: Option<f64>,
        /// Logarithmic grid
        #[arg(long)]
        log: bool,
        #[arg(long, value_enum)]
        kind: Option<RootKindArg>,
        /// Component range for root tables
        #[arg(long = "n", allow_hyphen_values = true)]
        n_range: Option<String>,
        /// Branch range for root tables
        #[arg(long = "m", allow_hyphen_values = true)]
        m_range: Option<String>,
    },
    /// Run verification checks
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

fn eval_help() -> String {
    format!("Operations:\n{}", eval::operation_list())
}

fn run(cli: Cli) -> CliResult<i32> {
    let g = cli.global;
    let cfg = RunConfig {
        n: g.n_trunc,
        s: g.s,
        terms: g.terms,
        radius: g.radius,
        samples: g.samples,
        tol: g.tol,
        format: g.format,
        out: g.out,
    };
    cfg.validate()?;
    match cli.command {
        Command::Eval { op, args } => {
            eval::cmd_eval(&op, &args, &cfg)?.emit(&cfg)?;
            Ok(EXIT_OK)
        }
        Command::Scan {
            target,
            range,
            step,
            log,
            kind,
            n_range,
            m_range,
        } => {
            let opts = ScanOptions {
                range,
                step,
                log,
                kind,
                n: n_range,
                m: m_range,
            };
            scan::cmd_scan(target, &opts, &cfg)?.emit(&cfg)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite } => {
            let (table, failed) = verify::cmd_verify(suite, &cfg);
            table.emit(&cfg)?;
            Ok(if failed == 0 {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("zetasaw: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
