use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use scatter6::campaign::{self, CampaignConfig, OutputFormat, Output};

/// Scattered trinomial campaigns over GF(q^6), q = 2^e.
///
/// Exit status: 0 success, 2 a check failed on an admissible element, 1 error.
#[derive(Debug, Parser)]
#[command(name = "scatter6", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// q = 2^e
    #[arg(long, global = true, default_value_t = 2)]
    e: u32,

    /// Step of the trinomial, 1 or 5 (defaults to 1; `equiv` uses both when unset)
    #[arg(long, global = true)]
    s: Option<i64>,

    /// Defining polynomial of GF(2^6e) in hex
    #[arg(long, global = true, value_parser = campaign::parse_modulus)]
    modulus: Option<u64>,

    #[arg(long, global = true, env = campaign::THREADS_ENV, default_value_t = 1)]
    threads: usize,

    /// json or csv
    #[arg(long, global = true, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    /// Report file; standard output when absent
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = campaign::DEFAULT_SEED)]
    seed: u64,

    /// Comma-separated checks, or `all`
    #[arg(long, global = true, default_value = "all")]
    checks: String,

    /// Check a seeded sample of at most this many elements
    #[arg(long, global = true)]
    limit: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate the admissible set and check its elements
    Enumerate,
    /// Run the checks on one coefficient
    Check { c: String },
    /// Minimum distance and idealizers of the code of one coefficient
    CodeReport { c: String },
    /// Equivalence classes of the codes over the admissible set
    Equiv,
    /// Linear set of one coefficient
    Linset { c: String },
    /// Brute-force ΓL(2, 64) comparisons at q = 2
    OracleQ2,
}

fn run(cli: Cli) -> scatter6::Result<Output> {
    let config = CampaignConfig {
        e: cli.e,
        s: cli.s.unwrap_or(1),
        modulus_override: cli.modulus,
        threads: cli.threads,
        output_format: cli.format,
        output_path: cli.out,
        checks: campaign::parse_checks(&cli.checks)?,
        seed: cli.seed,
        limit: cli.limit,
    };
    let output = match &cli.command {
        Command::Enumerate => campaign::cmd_enumerate(&config)?,
        Command::Check { c } => campaign::cmd_check(&config, c)?,
        Command::CodeReport { c } => campaign::cmd_code_report(&config, c)?,
        Command::Equiv => campaign::cmd_equiv(&config, cli.s)?,
        Command::Linset { c } => campaign::cmd_linset(&config, c)?,
        Command::OracleQ2 => campaign::cmd_oracle_q2(&config)?,
    };
    output.emit(config.output_path.as_deref())?;
    Ok(output)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(output) => ExitCode::from(output.exit_code() as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
