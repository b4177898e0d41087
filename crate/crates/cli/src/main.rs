//! `polyclar`: matching theory of polyomino graphs from the command line.
//!
//! Exit status: 0 on success, 1 when a checked identity is violated, 2 on
//! usage or input errors.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polyclar::Connectivity;

#[derive(Parser, Debug)]
#[command(name = "polyclar", version, about = "Perfect matchings, Clar numbers and forcing numbers of polyominoes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Options {
    /// Input file, or `-` for stdin.
    #[arg(long, global = true, default_value = "-")]
    pub input: String,
    /// Input format; detected from the first character when omitted.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// How cells must touch to be connected.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Edge)]
    pub mode: Mode,
    /// Largest cell count for `verify`; most matchings listed by `matchings`.
    #[arg(long, global = true)]
    pub limit: Option<usize>,
    /// Backend for `clar` and `maxforce`.
    #[arg(long, global = true, value_enum, default_value_t = Method::Both)]
    pub method: Method,
    /// Human-readable output instead of compact JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Edge,
    Vertex,
}

impl From<Mode> for Connectivity {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Edge => Connectivity::Edge,
            Mode::Vertex => Connectivity::Vertex,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exhaustive,
    Ip,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Overlay {
    None,
    Matching,
    Clar,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sizes and cells of the graph.
    Info {
        /// Print only the canonical cell document.
        #[arg(long)]
        emit_json: bool,
    },
    /// Number of perfect matchings.
    Count,
    /// List perfect matchings.
    Matchings,
    /// Clar number with maximum resonant sets.
    Clar {
        /// Also print the integer program listing.
        #[arg(long)]
        listing: bool,
    },
    /// Forcing number and disjoint alternating cycles of every perfect matching.
    Forcing,
    /// Maximum forcing number.
    Maxforce,
    /// Allowed and forbidden edges, elementary components, nice cycles.
    Decompose,
    /// Run the verification battery over all small polyominoes.
    Verify {
        /// Also write a CSV summary to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Corrupt the matching enumeration to exercise the failure path.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Draw the graph as SVG.
    Render {
        #[arg(long, value_enum, default_value_t = Overlay::None)]
        overlay: Overlay,
        /// Pixels per lattice unit.
        #[arg(long, default_value_t = polyclar::render::DEFAULT_SCALE)]
        scale: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("polyclar: {e}");
            ExitCode::from(2)
        }
    }
}
