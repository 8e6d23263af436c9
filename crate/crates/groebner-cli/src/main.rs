//! Command-line front end for the groebner kernel.
//!
//! Reads a plain-text system file (header lines `p`, `vars`, `order`, then
//! one polynomial per line) and runs one of: `gb` (reduced Gröbner basis),
//! `convert` (order conversion of a basis), `solve` (all F_p solutions of
//! a zero-dimensional system), or `stats` (matrix-algorithm round
//! statistics as JSON lines).
//!
//! Exit codes: 0 on success, 1 on any mathematical or input-format error,
//! 2 on usage errors (bad flags, unreadable files).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use groebner::f4::{f4_with, F4Config, SelectionStrategy};
use groebner::sysfile::{parse_system, poly_string, ParsedSystem};
use groebner::{buchberger, fglm, reduce_basis, solve, TermOrder};

#[derive(Parser)]
#[command(
    name = "groebner",
    version,
    about = "Gröbner bases, order conversion, and zero-dimensional solving over F_p"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Buchberger,
    F4,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    All,
    First,
    Normal,
}

impl From<StrategyArg> for SelectionStrategy {
    fn from(s: StrategyArg) -> SelectionStrategy {
        match s {
            StrategyArg::All => SelectionStrategy::All,
            StrategyArg::First => SelectionStrategy::FirstOnly,
            StrategyArg::Normal => SelectionStrategy::NormalDegree,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Deglex,
    Degrevlex,
}

impl From<OrderArg> for TermOrder {
    fn from(o: OrderArg) -> TermOrder {
        match o {
            OrderArg::Lex => TermOrder::Lex,
            OrderArg::Deglex => TermOrder::DegLex,
            OrderArg::Degrevlex => TermOrder::DegRevLex,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the reduced Gröbner basis of the system in its declared order
    Gb {
        /// System file
        file: PathBuf,
        /// Algorithm to run
        #[arg(long, value_enum, default_value_t = AlgoArg::F4)]
        algo: AlgoArg,
        /// Critical-pair selection strategy (matrix algorithm only)
        #[arg(long, value_enum, default_value_t = StrategyArg::Normal)]
        strategy: StrategyArg,
        /// Print balanced coefficient representatives instead of least
        /// non-negative residues
        #[arg(long)]
        signed: bool,
    },
    /// Convert the system's Gröbner basis to another term order
    Convert {
        /// System file (must contain a Gröbner basis in its declared order)
        file: PathBuf,
        /// Target order
        #[arg(long, value_enum)]
        to: OrderArg,
        /// Print balanced coefficient representatives
        #[arg(long)]
        signed: bool,
    },
    /// Enumerate all F_p solutions of a zero-dimensional system
    Solve {
        /// System file
        file: PathBuf,
        /// Print a JSON array of points instead of one line per point
        #[arg(long)]
        json: bool,
    },
    /// Run the matrix algorithm and print one JSON record per round
    Stats {
        /// System file
        file: PathBuf,
        /// Critical-pair selection strategy
        #[arg(long, value_enum, default_value_t = StrategyArg::Normal)]
        strategy: StrategyArg,
        /// Also dump each round's built matrix and its echelon form
        #[arg(long)]
        dump_matrices: bool,
    },
}

enum AppError {
    /// Bad invocation or unreadable input: exit code 2.
    Usage(String),
    /// Any kernel error (parsing, arithmetic, algorithmic): exit code 1.
    Math(groebner::Error),
}

impl From<groebner::Error> for AppError {
    fn from(e: groebner::Error) -> AppError {
        AppError::Math(e)
    }
}

fn load(path: &PathBuf) -> Result<ParsedSystem, AppError> {
    let text = fs::read_to_string(path)
        .map_err(|e| AppError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_system(&text)?)
}

fn print_basis(basis: &[groebner::Polynomial], names: &[String], signed: bool) {
    for f in basis {
        println!("{}", poly_string(f, names, signed));
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Gb {
            file,
            algo,
            strategy,
            signed,
        } => {
            let sys = load(&file)?;
            let basis = match algo {
                AlgoArg::Buchberger => reduce_basis(&buchberger(&sys.polys)?)?,
                AlgoArg::F4 => groebner::f4(&sys.polys, strategy.into())?.basis,
            };
            print_basis(&basis, &sys.names, signed);
        }
        Command::Convert { file, to, signed } => {
            let sys = load(&file)?;
            let reduced = reduce_basis(&sys.polys)?;
            let converted = fglm(&reduced, to.into())?;
            print_basis(&converted, &sys.names, signed);
        }
        Command::Solve { file, json } => {
            let sys = load(&file)?;
            let sol = solve(&sys.polys)?;
            if json {
                let body: Vec<String> = sol
                    .points
                    .iter()
                    .map(|pt| {
                        let coords: Vec<String> = pt.iter().map(u64::to_string).collect();
                        format!("[{}]", coords.join(","))
                    })
                    .collect();
                println!("[{}]", body.join(","));
            } else {
                for pt in &sol.points {
                    let coords: Vec<String> = pt.iter().map(u64::to_string).collect();
                    println!("{}", coords.join(","));
                }
            }
        }
        Command::Stats {
            file,
            strategy,
            dump_matrices,
        } => {
            let sys = load(&file)?;
            let run = f4_with(
                &sys.polys,
                &F4Config {
                    strategy: strategy.into(),
                    interreduce_input: true,
                    record_matrices: dump_matrices,
                },
            )?;
            print!("{}", run.stats.json_lines());
            if dump_matrices {
                for (i, round) in run.matrices.iter().enumerate() {
                    println!(
                        "# round {} matrix {}x{}",
                        i + 1,
                        round.built.nrows(),
                        round.built.ncols()
                    );
                    print!("{}", round.built.dump(&sys.names));
                    println!("# round {} echelon form", i + 1);
                    print!("{}", round.echelon.dump(&sys.names));
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Math(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
