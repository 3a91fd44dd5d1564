//! `nearfree`: exact near-freeness analysis of conic-line arrangements.

mod enumerate;
mod input;
mod render;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use render::{Marker, Window};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("{0}")]
    Inconsistent(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Unsupported(_) => 2,
            CliError::Inconsistent(_) => 3,
            CliError::Invalid(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

#[derive(Parser)]
#[command(name = "nearfree", version, about = "Exact near-freeness analysis of conic-line arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify singular points and decide near-freeness.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List weak combinatorics of one degree.
    Enumerate(EnumerateArgs),
    /// Draw the real affine trace as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// x0,y0,x1,y1
        #[arg(long, allow_hyphen_values = true, default_value = "-10,-10,10,10")]
        window: Window,
    },
    /// Largest degree a nearly free arrangement can have.
    Bound,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    degree: usize,
    /// Rows compatible with some exponent pair (the default).
    #[arg(long, conflicts_with = "count_only")]
    nearly_free: bool,
    /// Every row satisfying the combinatorial count.
    #[arg(long)]
    count_only: bool,
    #[arg(long)]
    json: bool,
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { file, json } => {
            let arr = input::read_arrangement(&file).map_err(|e| CliError::Invalid(e.to_string()))?;
            let rep = report::analyze(arr)?;
            if json {
                print_json(&report::render_json(&rep));
            } else {
                print!("{}", report::render_text(&rep));
            }
            if !rep.consistent() {
                return Err(CliError::Inconsistent(format!(
                    "tau from local types is {}, tau from the Milnor algebra is {}",
                    rep.tau_local, rep.syzygy.tau
                )));
            }
        }
        Command::Enumerate(args) => {
            let m = args.degree;
            if args.count_only {
                enumerate::check_degree(m)?;
                let rows = enumerate::count_table(m);
                if args.json {
                    print_json(&enumerate::count_json(m, &rows));
                } else {
                    print!("{}", enumerate::count_text(m, &rows));
                }
            } else {
                let an = enumerate::analyze(m)?;
                if args.json {
                    print_json(&enumerate::nearly_free_json(&an));
                } else {
                    print!("{}", enumerate::nearly_free_text(&an));
                }
            }
        }
        Command::Render { file, output, window } => {
            let arr = input::read_arrangement(&file).map_err(|e| CliError::Invalid(e.to_string()))?;
            let out = render::render_svg(&arr, &window)?;
            std::fs::write(&output, &out.svg)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", output.display())))?;
            let drawn = out.markers.iter().filter(|m| matches!(m, Marker::Drawn { .. })).count();
            println!(
                "wrote {}: {} components, {drawn} marked points",
                output.display(),
                arr.num_components()
            );
            for m in &out.markers {
                if let Marker::Listed(p) = m {
                    println!("  not drawn: {p}");
                }
            }
        }
        Command::Bound => {
            let m = nearfree_core::combinat::degree_upper_bound();
            let (lo, hi) = nearfree_core::combinat::exponent_range(m + 1);
            println!("{m}");
            println!(
                "m = {}: ceil(2*{}/3 - 2) = {lo} > floor({}/2) = {hi}",
                m + 1,
                m + 1,
                m + 1
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
