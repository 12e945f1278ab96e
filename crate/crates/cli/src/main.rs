use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod render;

use commands::{CmdError, Config};
use render::Format;

/// Exact and approximate multiplicities, mixed multiplicities, and
/// Minkowski-equality diagnostics for filtrations of m-primary ideals.
#[derive(Parser)]
#[command(name = "filtmult", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input file (JSON); "-" reads standard input.
    #[arg(long, global = true)]
    input: Option<String>,

    /// Comma-separated level schedule for limit estimators.
    #[arg(long, global = true, value_delimiter = ',')]
    schedule: Option<Vec<u64>>,

    /// Level horizon for bodies, gamma scans and levelwise comparisons.
    #[arg(long, global = true, default_value_t = 8)]
    m_max: u64,

    /// Levelwise comparison horizon for closure equality checks.
    #[arg(long, global = true, default_value_t = 20)]
    n_max: u64,

    /// Closure exponent cap.
    #[arg(long, global = true, default_value_t = 2)]
    r_max: u64,

    /// Denominator cap for rational-rescaling searches.
    #[arg(long, global = true, default_value_t = 1000)]
    q_cap: u64,

    /// Output format.
    #[arg(long, global = true, default_value = "table")]
    format: Format,

    /// Digits printed for floating values.
    #[arg(long, global = true, default_value_t = 12)]
    digits: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of a filtration: limit estimator and volume route.
    Mult,
    /// Mixed multiplicities of a pair (monomial or divisorial model).
    Mixed,
    /// Minkowski inequality report and equality verdict.
    Minkowski,
    /// Rescaling search certifying a Minkowski equality.
    Trsk,
    /// Asymptotic vanishing order along a valuation.
    Gamma,
    /// Truncated convex body of a filtration.
    Body,
    /// Level of the graded integral closure.
    Closure,
    /// Brunn-Minkowski comparison of two polytopes.
    Bm,
    /// Built-in threefold example with exact Q(sqrt 3) output.
    ExampleC7,
}

fn read_input(path: &Option<String>) -> Result<String, CmdError> {
    match path.as_deref() {
        None => Err(CmdError::Input("missing --input".into())),
        Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CmdError::Input(e.to_string()))?;
            Ok(buf)
        }
        Some(p) => std::fs::read_to_string(p).map_err(|e| CmdError::Input(format!("{p}: {e}"))),
    }
}

fn thread_cap() -> usize {
    std::env::var("FILTMULT_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = Config {
        schedule: cli.schedule.clone(),
        m_max: cli.m_max,
        n_max: cli.n_max,
        r_max: cli.r_max,
        q_cap: cli.q_cap,
        digits: cli.digits,
        threads: thread_cap(),
    };
    let result = match &cli.command {
        Command::ExampleC7 => commands::cmd_example_c7(&cfg),
        cmd => match read_input(&cli.input) {
            Err(e) => Err(e),
            Ok(input) => match cmd {
                Command::Mult => commands::cmd_mult(&input, &cfg),
                Command::Mixed => commands::cmd_mixed(&input, &cfg),
                Command::Minkowski => commands::cmd_minkowski(&input, &cfg),
                Command::Trsk => commands::cmd_trsk(&input, &cfg),
                Command::Gamma => commands::cmd_gamma(&input, &cfg),
                Command::Body => commands::cmd_body(&input, &cfg),
                Command::Closure => commands::cmd_closure(&input, &cfg),
                Command::Bm => commands::cmd_bm(&input, &cfg),
                Command::ExampleC7 => unreachable!(),
            },
        },
    };
    match result {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
