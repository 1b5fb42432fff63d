use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rootpoly_core::bracket::PriorityReading;
use rootpoly_core::grobner::{OverlapShape, Reading};
use rootpoly_core::verify::Suite;
use rootpoly_core::Strategy;

#[derive(Debug, Parser)]
#[command(
    name = "rootpoly",
    version,
    about = "Reductions, triangulations, volumes and Ehrhart polynomials of type C root polytopes"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Largest reduction tree to expand.
    #[arg(long, global = true, default_value_t = 2_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    #[value(name = "S")]
    S,
    #[value(name = "Bc")]
    Bc,
    #[value(name = "C")]
    C,
    #[value(name = "Cb")]
    Cb,
    #[value(name = "D")]
    D,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Graph file in text or JSON form, or `-` for stdin.
    #[arg(value_name = "GRAPH")]
    pub path: Option<PathBuf>,
    /// Same as the positional argument.
    #[arg(long = "graph", value_name = "GRAPH", conflicts_with = "path")]
    pub graph: Option<PathBuf>,
    /// Inline word such as "x12 x23 z3"; `-` reads it from stdin.
    #[arg(long, conflicts_with_all = ["path", "graph"])]
    pub word: Option<String>,
    /// Number of vertices for words (defaults to the largest index).
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced form of a monomial.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Algebra::C)]
        algebra: Algebra,
        /// `first`, `last`, or an integer seed.
        #[arg(long, default_value_t = Strategy::First)]
        strategy: Strategy,
        /// Reading of the noncommutative priority condition.
        #[arg(long, default_value = "as-written", value_parser = parse_priority)]
        priority: PriorityReading,
    },
    /// Reduction tree of a monomial.
    Tree {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Algebra::S)]
        algebra: Algebra,
        #[arg(long, default_value_t = Strategy::First)]
        strategy: Strategy,
    },
    /// Canonical triangulation of a well-structured graph.
    Triangulate {
        #[command(flatten)]
        input: Input,
    },
    /// Normalized volume of the root polytope of a graph.
    Volume {
        #[command(flatten)]
        input: Input,
    },
    /// Ehrhart polynomial of the full polytope, or of a graph's polytope.
    Ehrhart {
        #[arg(long)]
        n: Option<usize>,
        /// Graph file; fits the polynomial from lattice counts.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Also fit the polynomial from lattice counts.
        #[arg(long)]
        fit: bool,
        /// Count lattice points of the dilates 0..=t.
        #[arg(long)]
        t: Option<u64>,
    },
    /// Alternating well-structured or weakly-well-structured graphs.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Kind::WellStructured)]
        kind: Kind,
    },
    /// Runs a verification suite; exits nonzero on any failure.
    Check {
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Number of strategies per root.
        #[arg(long, default_value_t = 20)]
        seeds: usize,
        #[arg(long, default_value_t = 30)]
        roots: usize,
        #[arg(long, default_value_t = 50)]
        words: usize,
        /// Seed for the random roots and words.
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Gröbner basis checks for the ideals J and Y.
    Grobner {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Basis::All)]
        check: Basis,
        /// Reading direction of the Y order.
        #[arg(long, default_value = "rtl", value_parser = parse_reading)]
        reading: Reading,
        #[arg(long, value_enum, default_value_t = Shape::Separated)]
        shape: Shape,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    WellStructured,
    Weakly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    #[value(name = "J")]
    J,
    #[value(name = "Y")]
    Y,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    Separated,
    Adjacent,
}

impl From<Shape> for OverlapShape {
    fn from(s: Shape) -> Self {
        match s {
            Shape::Separated => OverlapShape::Separated,
            Shape::Adjacent => OverlapShape::Adjacent,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Conjecture1,
    Conjecture2,
    Volumes,
    Ehrhart,
    Grobner,
    All,
}

impl SuiteArg {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Conjecture1 => vec![Suite::Conjecture1],
            SuiteArg::Conjecture2 => vec![Suite::Conjecture2],
            SuiteArg::Volumes => vec![Suite::Volumes],
            SuiteArg::Ehrhart => vec![Suite::Ehrhart],
            SuiteArg::Grobner => vec![Suite::Grobner],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

fn parse_priority(s: &str) -> Result<PriorityReading, String> {
    s.parse()
}

fn parse_reading(s: &str) -> Result<Reading, String> {
    s.parse().map_err(|e| format!("{e}"))
}
