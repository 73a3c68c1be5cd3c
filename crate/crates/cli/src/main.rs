use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use pacq_core::report::{run_text, Command, GraphChoice, RunOptions};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    /// Check the input and print it in canonical form.
    Validate,
    /// Decide admissibility, with a cycle witness when it fails.
    Admissible,
    /// Print the orthogonal ideal.
    Orthogonal,
    /// The center up to the degree bound.
    Center,
    /// Finite generation of the center.
    Fingen,
    /// The Koszul dual presentation.
    Dual,
    /// Finite generation of Hochschild cohomology modulo nilpotence.
    Hochschild,
    /// Cross-check every engine against exact linear algebra.
    OracleCheck,
    /// Graphviz output for one of the graphs.
    Dot,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Command {
        match c {
            Cmd::Validate => Command::Validate,
            Cmd::Admissible => Command::Admissible,
            Cmd::Orthogonal => Command::Orthogonal,
            Cmd::Center => Command::Center,
            Cmd::Fingen => Command::Fingen,
            Cmd::Dual => Command::Dual,
            Cmd::Hochschild => Command::Hochschild,
            Cmd::OracleCheck => Command::OracleCheck,
            Cmd::Dot => Command::Dot,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Graph {
    Gen,
    GenPerp,
    Rel,
}

/// Quiver algebras bound by quadratic (anti-)commutativity ideals.
#[derive(Debug, Parser)]
#[command(name = "pacq", version)]
struct Args {
    command: Cmd,
    /// Input file; `-` or absent reads standard input.
    file: Option<PathBuf>,
    /// Emit a JSON report.
    #[arg(long)]
    json: bool,
    /// Degree bound for enumeration and the oracle.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_degree: Option<u64>,
    /// Default degree bound when neither the flag nor the input sets one.
    #[arg(long = "default-max-degree", env = "PACQ_MAX_DEGREE", hide = true)]
    env_max_degree: Option<usize>,
    /// Graph for `dot`.
    #[arg(long, value_enum, default_value = "gen")]
    graph: Graph,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (name, text) = match &args.file {
        Some(p) if p.as_os_str() != "-" => match std::fs::read_to_string(p) {
            Ok(t) => (p.display().to_string(), t),
            Err(e) => {
                eprintln!("{}: {e}", p.display());
                return ExitCode::from(1);
            }
        },
        _ => {
            let mut t = String::new();
            if let Err(e) = io::stdin().read_to_string(&mut t) {
                eprintln!("<stdin>: {e}");
                return ExitCode::from(1);
            }
            ("<stdin>".to_string(), t)
        }
    };
    let opts = RunOptions {
        json: args.json,
        max_degree: args.max_degree.map(|d| d as usize),
        default_max_degree: args.env_max_degree,
        graph: match args.graph {
            Graph::Gen => GraphChoice::Gen,
            Graph::GenPerp => GraphChoice::GenPerp,
            Graph::Rel => GraphChoice::Rel,
        },
    };
    let out = run_text(args.command.into(), &name, &text, &opts);
    let _ = io::stdout().write_all(out.stdout.as_bytes());
    let _ = io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.exit_code as u8)
}
