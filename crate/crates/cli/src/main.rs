//! `evenzeta`: exact even zeta values and the identity certifier.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage error.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use evenzeta_cli::commands::{self, Check, Output, VerifyOptions, ZetaMode};
use evenzeta_cli::report::RunReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(name = "evenzeta", version, about = "Exact zeta(2k), Bernoulli numbers and identity certification")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print B_0 ..= B_max as exact fractions
    Bernoulli {
        #[arg(long, value_parser = clap::value_parser!(u32))]
        max: u32,
    },
    /// zeta(2k) as an exact multiple of pi^(2k) and/or a bounded decimal
    Zeta {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ZetaMode,
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
        digits: u32,
    },
    /// Fourier coefficients a_n(k), b_n(k) of x^k on (-pi, pi]
    Fourier {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Parseval partial sum for x^k against its target and tail bound
    Parseval {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
    },
    /// Run verification sweeps for k = 1..=kmax
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        kmax: u32,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        which: Vec<Check>,
        /// Parseval terms per k
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
        /// Perturb B_2 before verifying, to exercise the failure path
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

fn run(command: &Command) -> evenzeta::Result<Output> {
    match *command {
        Command::Bernoulli { max } => Ok(commands::bernoulli(max as usize)),
        Command::Zeta { k, mode, digits } => commands::zeta(k, mode, digits),
        Command::Fourier { k, n } => commands::fourier(k, n),
        Command::Parseval { k, terms } => commands::parseval(k, terms),
        Command::Verify {
            kmax,
            ref which,
            terms,
            inject_fault,
        } => commands::verify(&VerifyOptions {
            k_max: kmax,
            which: which.clone(),
            terms,
            inject_fault,
        }),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let echo = std::iter::once("evenzeta".to_string())
        .chain(std::env::args().skip(1))
        .collect::<Vec<_>>()
        .join(" ");

    let start = Instant::now();
    let output = match run(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = RunReport::new(echo, output.results, start.elapsed().as_millis() as u64);

    match cli.format {
        Format::Text => {
            print!("{}", output.text);
            if matches!(cli.command, Command::Verify { .. }) {
                println!("passed: {}, failed: {}", report.summary.passed, report.summary.failed);
            }
        }
        Format::Json => print!("{}", report.to_json()),
        Format::Csv => print!("{}", report.to_csv()),
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
