//! `g2kr`: G2 characters and graded Kirillov–Reshetikhin characters.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use g2kr::kr::Family;
use g2kr::Weight;

#[derive(Debug, Parser)]
#[command(
    name = "g2kr",
    version,
    about = "Exact G2 and Kirillov-Reshetikhin characters"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Irrep,
    Weight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Conjecture,
    Classes,
    Chevalley,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Character of the irreducible module V(a·ω₁ + b·ω₂).
    #[command(allow_negative_numbers = true)]
    Char { a: i64, b: i64 },

    /// Decomposition of V(λ) ⊗ V(μ) with λ = (a1, b1), μ = (a2, b2).
    #[command(allow_negative_numbers = true)]
    Tensor { a1: i64, b1: i64, a2: i64, b2: i64 },

    /// Graded character of a Kirillov–Reshetikhin module.
    Kr {
        /// u1, u2, t1 or t2.
        #[arg(long)]
        family: String,
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value_t = Basis::Irrep)]
        basis: Basis,
        /// Use the generating-function form instead of the closed form.
        #[arg(long)]
        conjecture: bool,
    },

    /// Run verification sweeps.
    Verify {
        #[arg(value_enum)]
        target: Target,
        /// Restrict to one family (default: all applicable).
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 30)]
        max_m: u64,
    },
}

/// Rendered output plus the exit status it implies.
pub struct Output {
    pub text: String,
    pub success: bool,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

fn run(cli: &Cli) -> Result<Output, String> {
    let fmt = cli.format;
    match &cli.command {
        Command::Char { a, b } => render::character(Weight::new(*a, *b), fmt),
        Command::Tensor { a1, b1, a2, b2 } => {
            render::tensor(Weight::new(*a1, *b1), Weight::new(*a2, *b2), fmt)
        }
        Command::Kr {
            family,
            m,
            basis,
            conjecture,
        } => Ok(render::kr(
            parse_family(family)?,
            *m,
            *basis,
            *conjecture,
            fmt,
        )),
        Command::Verify {
            target,
            family,
            max_m,
        } => {
            let family = family.as_deref().map(parse_family).transpose()?;
            if *target == Target::Classes && family.is_some_and(|f| !f.is_quad_indexed()) {
                return Err(format!(
                    "class verification applies to u1 and t2, not {}",
                    family.unwrap()
                ));
            }
            Ok(render::verify(*target, family, *max_m, fmt))
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let output = match run(&cli) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &output.text),
        None => io::stdout().write_all(output.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if output.success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
