use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use truncgb::buchberger::PairStrategy;
use truncgb::cli::{self, ConvertFlags, Outcome, EXIT_USAGE};
use truncgb::scenario::ScenarioId;
use truncgb::system::{parse_system, OrderSelector, SystemFile};
use truncgb::Error;

/// Groebner basis conversion by truncation, with an independent checker.
///
/// FILE is a system file path, or `@<scenario>` for a built-in system
/// (ex1, ex1-alt, ex4-f2, ex4-q).
#[derive(Parser)]
#[command(name = "truncgb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct ConvertArgs {
    /// minlcm | fifo | schedule:<i-j,...[,*]> | random:<seed>
    #[arg(long, default_value = "minlcm")]
    strategy: String,
    /// Print the line-oriented conversion trace.
    #[arg(long)]
    trace: bool,
    /// Replace the generators by their reduced basis for order1 first.
    #[arg(long)]
    autocomplete_source: bool,
    #[arg(long, default_value_t = 100)]
    max_iter: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the reduced Groebner basis.
    Gb {
        file: String,
        #[arg(long, default_value = "order2")]
        order: String,
        #[arg(long, default_value = "minlcm")]
        strategy: String,
    },
    /// Run the conversion from order1 to order2 and check the result.
    Convert {
        file: String,
        #[command(flatten)]
        args: ConvertArgs,
    },
    /// Check whether a basis is a Groebner basis.
    Verify {
        file: String,
        /// Polynomials separated by `,` or `;`.
        #[arg(long)]
        basis: String,
        #[arg(long, default_value = "order2")]
        order: String,
    },
    /// Run the conversion under min-lcm, FIFO and BUDGET random schedules.
    Sweep {
        file: String,
        #[arg(long, default_value_t = 50)]
        budget: usize,
        #[arg(long)]
        autocomplete_source: bool,
        #[arg(long, default_value_t = 100)]
        max_iter: usize,
    },
    /// Run a built-in scenario with its own strategy, or print its system.
    Scenario {
        id: String,
        #[arg(long)]
        trace: bool,
        /// Print the system file instead of running it.
        #[arg(long)]
        print: bool,
    },
}

fn load(file: &str) -> Result<SystemFile, String> {
    if let Some(id) = file.strip_prefix('@') {
        let id: ScenarioId = id.parse().map_err(|e: Error| e.to_string())?;
        return Ok(id.system());
    }
    let path = PathBuf::from(file);
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_system(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn strategy(s: &str) -> Result<PairStrategy, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn selector(s: &str) -> Result<OrderSelector, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn run(cli: Cli) -> Result<Outcome, String> {
    let err = |e: Error| e.to_string();
    match cli.command {
        Command::Gb {
            file,
            order,
            strategy: s,
        } => cli::cmd_gb(&load(&file)?, selector(&order)?, &strategy(&s)?).map_err(err),
        Command::Convert { file, args } => {
            let flags = ConvertFlags {
                strategy: strategy(&args.strategy)?,
                trace: args.trace,
                autocomplete_source: args.autocomplete_source,
                max_iter: args.max_iter,
            };
            cli::cmd_convert(&load(&file)?, &flags).map_err(err)
        }
        Command::Verify { file, basis, order } => {
            cli::cmd_verify(&load(&file)?, &basis, selector(&order)?).map_err(err)
        }
        Command::Sweep {
            file,
            budget,
            autocomplete_source,
            max_iter,
        } => {
            let flags = ConvertFlags {
                autocomplete_source,
                max_iter,
                ..ConvertFlags::default()
            };
            cli::cmd_sweep(&load(&file)?, budget, &flags).map_err(err)
        }
        Command::Scenario { id, trace, print } => {
            let id: ScenarioId = id.parse().map_err(err)?;
            if print {
                return Ok(Outcome {
                    stdout: id.system().to_string(),
                    code: cli::EXIT_OK,
                });
            }
            let flags = ConvertFlags {
                strategy: id.strategy(),
                trace,
                autocomplete_source: id.autocomplete_source(),
                ..ConvertFlags::default()
            };
            cli::cmd_convert(&id.system(), &flags).map_err(err)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
