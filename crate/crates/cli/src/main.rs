use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use strongmax::universe::Construction;
use strongmax_cli::{self as cli, BruteTarget, CliError, CliResult, Render, DEFAULT_BOUND};

#[derive(Parser)]
#[command(name = "strongmax", version, about = "Strongly maximal matchings and minimal covers on infinite hypergraphs")]
struct Args {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Json)]
    emit: Emit,
    /// Window used by verification.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    bound: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// The constructions and their edges.
    Catalog {
        #[command(subcommand)]
        what: CatalogCmd,
    },
    /// The gadget simulating one edge.
    Gadget {
        #[command(subcommand)]
        what: GadgetCmd,
    },
    /// Verify a presentation up to the bound.
    Verify {
        #[arg(long, value_parser = parse_construction)]
        construction: Option<Construction>,
        #[arg(long)]
        input: PathBuf,
    },
    /// Apply the improvement oracle and print the witnesses and the result.
    Improve {
        #[arg(long, value_parser = parse_construction)]
        construction: Construction,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Iterate the oracle, verifying every step, and print a run report.
    Demo {
        #[arg(long, value_parser = parse_construction)]
        construction: Construction,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        steps: usize,
        /// Where to write the final presentation.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Include wall time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Exhaustive checks on finite hypergraphs.
    Lab {
        #[command(subcommand)]
        what: LabCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    /// The points of a Γ-edge.
    Edge {
        #[arg(long, value_parser = parse_construction)]
        construction: Construction,
        #[arg(long)]
        x: u64,
        #[arg(long)]
        y: u64,
    },
    /// Every edge inside the window of the global bound.
    Edges {
        #[arg(long, value_parser = parse_construction)]
        construction: Construction,
    },
}

#[derive(Subcommand)]
enum GadgetCmd {
    Build {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum LabCmd {
    GadgetLemmas {
        #[arg(long, default_value_t = 7)]
        k_max: usize,
    },
    Brute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        what: BruteTarget,
    },
    /// The finite hypergraph inside the window of the global bound.
    Truncate {
        #[arg(long, value_parser = parse_construction)]
        construction: Construction,
    },
}

fn parse_construction(s: &str) -> Result<Construction, String> {
    s.parse().map_err(|e: strongmax::Error| e.to_string())
}

fn emit<R: Render>(mode: Emit, report: &R) -> CliResult<String> {
    Ok(match mode {
        Emit::Json => serde_json::to_string_pretty(report).map_err(strongmax::Error::from)? + "\n",
        Emit::Text => report.text(),
    })
}

fn run(args: Args) -> CliResult<String> {
    let bound = args.bound;
    match args.command {
        Command::Catalog { what } => match what {
            CatalogCmd::List => emit(args.emit, &cli::catalog_list()),
            CatalogCmd::Edge { construction, x, y } => emit(args.emit, &cli::catalog_edge(construction, x, y)?),
            CatalogCmd::Edges { construction } => emit(args.emit, &cli::catalog_edges(construction, bound)?),
        },
        Command::Gadget { what: GadgetCmd::Build { k } } => emit(args.emit, &cli::gadget_build(k)?),
        Command::Verify { construction, input } => {
            let report = cli::verify(&input, construction, bound)?;
            let out = emit(args.emit, &report)?;
            if report.verified {
                Ok(out)
            } else {
                print!("{out}");
                Err(CliError::Usage(report.reason.unwrap_or_default()))
            }
        }
        Command::Improve { construction, input, steps } => {
            emit(args.emit, &cli::improve_cmd(&input, construction, steps, bound)?)
        }
        Command::Demo { construction, input, steps, output, timing } => {
            let (report, last) = cli::demo(&input, construction, steps, bound, timing)?;
            if let Some(path) = output {
                cli::write(&path, &(last.to_json_string()? + "\n"))?;
            }
            emit(args.emit, &report)
        }
        Command::Lab { what } => match what {
            LabCmd::GadgetLemmas { k_max } => emit(args.emit, &cli::lab_gadget_lemmas(k_max)?),
            LabCmd::Brute { input, what } => emit(args.emit, &cli::lab_brute(&input, what)?),
            LabCmd::Truncate { construction } => emit(args.emit, &cli::lab_truncate(construction, bound)?),
        },
    }
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
