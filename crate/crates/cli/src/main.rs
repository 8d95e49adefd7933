use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fiboper::commands::{self, Options, DEFAULT_MAX_N};
use fiboper::family::FamilySpec;
use fiboper::render::Format;
use fiboper::{CliError, CliResult};
use fiboper_core::{PsiKind, PsiSequence};

/// Polynomial sequences of ψ-binomial type for the Fibonacci sequence.
#[derive(Parser)]
#[command(name = "fiboper", version)]
struct Cli {
    /// Output format: json, latex or plain.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Operator truncation order (default: just enough for N).
    #[arg(long, global = true)]
    trunc: Option<usize>,
    /// Sequence ψ: fibonacci or natural.
    #[arg(long, global = true, env = "FIBOPER_PSI", default_value = "fibonacci")]
    psi: String,
    /// Largest N accepted by table, gram and spectral.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rows 0..=N of a family, e.g. `basic:abel:1/2` or `sheffer:bernoulli`.
    Table { family: String, n: usize, format: Option<String> },
    /// Recompute every transcribed reference coefficient.
    Verify { format: Option<String> },
    /// F_n, or the fibonomial (n k)_F when k is given.
    Fib {
        n: usize,
        k: Option<usize>,
        /// Print F_n! instead.
        #[arg(long)]
        factorial: bool,
    },
    /// Gram matrix of the inner product on s_0..s_N.
    Gram { family: String, n: usize, format: Option<String> },
    /// Coefficients of the number operator, with the closed formulas.
    Spectral { family: String, n: usize, format: Option<String> },
}

fn options(cli: &Cli, positional: Option<&String>) -> CliResult<Options> {
    let format = match positional.or(cli.format.as_ref()) {
        Some(f) => f.parse()?,
        None => Format::Plain,
    };
    let kind: PsiKind = cli
        .psi
        .parse()
        .map_err(|_| CliError::Usage(format!("unknown psi `{}`", cli.psi)))?;
    Ok(Options { format, psi: PsiSequence::new(kind), trunc: cli.trunc, max_n: cli.max_n })
}

fn run(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Table { family, n, format } => {
            let spec: FamilySpec = family.parse()?;
            commands::table(&spec, *n, &options(cli, format.as_ref())?)
        }
        Command::Verify { format } => commands::verify(&options(cli, format.as_ref())?),
        Command::Fib { n, k, factorial } => commands::fib(*n, *k, *factorial, &options(cli, None)?),
        Command::Gram { family, n, format } => {
            let spec: FamilySpec = family.parse()?;
            commands::gram(&spec, *n, &options(cli, format.as_ref())?)
        }
        Command::Spectral { family, n, format } => {
            let spec: FamilySpec = family.parse()?;
            commands::spectral(&spec, *n, &options(cli, format.as_ref())?)
        }
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
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            // a failed verify still reports on stdout
            if matches!((&e, &cli.command), (CliError::Failure(_), Command::Verify { .. })) {
                print!("{e}");
                eprintln!("fiboper: verification failed");
            } else {
                eprintln!("fiboper: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
