//! `chipfas`: feedback arc sets and chip-firing on digraphs from the
//! command line.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use chipfas::acyclic::DEFAULT_EXACT_MAX_N;
use report::{Failure, RunReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "chipfas", version, about = "Feedback arc sets and chip-firing on digraphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest vertex count handed to the exact solver.
    #[arg(long, default_value_t = DEFAULT_EXACT_MAX_N, global = true)]
    max_exact_n: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum feedback arc set of a digraph.
    Minfas {
        graph: PathBuf,
        /// Exact subset dynamic programme (the default).
        #[arg(long, conflicts_with = "heuristic")]
        exact: bool,
        /// Upper bound from rooted greedy sets; non-Eulerian input goes
        /// through the Eulerian lift.
        #[arg(long)]
        heuristic: bool,
        /// Also print the feedback arc set.
        #[arg(long)]
        emit_witness: bool,
    },
    /// Degree-balancing lift to an Eulerian digraph.
    Eulerianize {
        graph: PathBuf,
        /// Also solve the lift exactly and convert the optimum back.
        #[arg(long)]
        solve: bool,
    },
    /// Minimum number of chips of a recurrent configuration.
    Minrec {
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        sink: usize,
        /// Through the maximum acyclic arc set (Eulerian input, the default).
        #[arg(long, conflicts_with = "brute")]
        exact: bool,
        /// Enumerate stable configurations; any digraph with a global sink.
        #[arg(long)]
        brute: bool,
        /// Also print a minimum recurrent configuration.
        #[arg(long)]
        emit_config: bool,
    },
    /// Recurrence and minimality verdict for a stable configuration.
    Check {
        graph: PathBuf,
        config: PathBuf,
        /// Sink vertex; JSON configurations carry their own.
        #[arg(long)]
        sink: Option<usize>,
    },
    /// Seeded random digraph in the edge-list format.
    Gen {
        #[arg(long)]
        n: usize,
        /// Arc count; defaults to 2n, clamped to n(n-1).
        #[arg(long)]
        arcs: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Strongly connected Eulerian output.
        #[arg(long)]
        eulerian: bool,
    },
    /// Exact against heuristic over every graph file in a directory; CSV.
    Bench { dir: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let ctx = commands::Context {
        max_exact_n: cli.max_exact_n,
    };
    let start = Instant::now();
    let mut digest = None;
    let outcome = match &cli.command {
        Command::Minfas {
            graph,
            heuristic,
            emit_witness,
            ..
        } => commands::minfas(&ctx, graph, *heuristic, *emit_witness, &mut digest),
        Command::Eulerianize { graph, solve } => {
            commands::eulerianize(&ctx, graph, *solve, &mut digest)
        }
        Command::Minrec {
            graph,
            sink,
            exact,
            brute,
            emit_config,
        } => commands::minrec(&ctx, graph, *sink, *exact, *brute, *emit_config, &mut digest),
        Command::Check {
            graph,
            config,
            sink,
        } => commands::check(graph, config, *sink, &mut digest),
        Command::Gen {
            n,
            arcs,
            seed,
            eulerian,
        } => commands::gen(*n, *arcs, *seed, *eulerian),
        Command::Bench { dir } => commands::bench(&ctx, dir, &mut digest),
    };
    let ms = commands::round_ms(start.elapsed().as_secs_f64() * 1e3);
    finish(cli.format, echo, digest, outcome, ms)
}

fn finish(
    format: Format,
    command: Vec<String>,
    input_digest: Option<String>,
    outcome: Result<report::Output, Failure>,
    ms: f64,
) -> ExitCode {
    let code = match &outcome {
        Ok(_) => 0,
        Err(f) => f.exit_code,
    };
    match format {
        Format::Text => match &outcome {
            Ok(out) => print!("{}", out.text),
            Err(f) => eprintln!("chipfas: {}", f.message),
        },
        Format::Json => {
            let (result, error, caps_hit) = match outcome {
                Ok(out) => (Some(out.json), None, out.caps_hit),
                Err(f) => {
                    eprintln!("chipfas: {}", f.message);
                    let caps = f.caps_hit.clone();
                    (None, Some(f), caps)
                }
            };
            let report = RunReport {
                command,
                input_digest,
                result,
                error,
                ms,
                caps_hit,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
        }
    }
    ExitCode::from(code)
}
