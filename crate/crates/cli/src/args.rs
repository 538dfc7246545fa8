use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sombor_core::extremal::{Direction, CATALOG_ENV};
use sombor_core::spectra::DEFAULT_TOL;

#[derive(Debug, Parser)]
#[command(name = "sombor", version, about = "Spectral radii of degree-weighted graph matrices")]
pub struct Cli {
    /// Worker threads for family evaluation (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectral radius and Perron vector of one graph.
    Spectrum(SpectrumArgs),
    /// Top or bottom k graphs of a family by spectral radius.
    Rank(RankArgs),
    /// List or count a family up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Check an extremal claim over orders and weightings.
    Verify(VerifyArgs),
    /// Apply a graph surgery and check that the radius rises.
    Kelmans(KelmansArgs),
    /// Coarsest equitable partition, quotient matrix and its polynomial.
    Quotient(QuotientArgs),
    /// Build a named graph.
    Named(NamedArgs),
    /// Write a graph as Graphviz DOT with weighted edge labels.
    Export(ExportArgs),
    /// Locate a figure-only family by ranking and record it in the catalog.
    Discover(DiscoverArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Trees,
    Unicyclic,
    Bicyclic,
    Graphs,
}

/// One graph, from exactly one source; graph6 on stdin when none is given.
#[derive(Debug, Args)]
pub struct GraphInput {
    #[arg(long, conflicts_with_all = ["json", "named"])]
    pub graph6: Option<String>,
    /// Edge-list JSON file: {"n": .., "edges": [[u, v], ..]}.
    #[arg(long, conflicts_with = "named")]
    pub json: Option<PathBuf>,
    /// Named family spec such as `double_star:3,4` or `b2:7`.
    #[arg(long)]
    pub named: Option<String>,
}

#[derive(Debug, Args)]
pub struct CatalogArg {
    #[arg(long, env = CATALOG_ENV)]
    pub catalog: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long, default_value = "psombor:2")]
    pub weighting: String,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[arg(long, value_enum)]
    pub family: FamilyKind,
    /// Order, a range `5..7` (inclusive) or a list `5,6,7`.
    #[arg(long)]
    pub n: String,
    /// Edge count, required for `graphs`.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value = "psombor:2")]
    pub weighting: String,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, default_value = "max", value_parser = parse_direction)]
    pub direction: Direction,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[command(flatten)]
    pub catalog: CatalogArg,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, value_enum)]
    pub family: FamilyKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: Option<usize>,
    /// Print only the number of graphs.
    #[arg(long)]
    pub count: bool,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    pub format: GraphFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Claim id such as `T4.2`, or `all`.
    #[arg(long)]
    pub theorem: String,
    /// Orders; defaults to the claim's own range.
    #[arg(long)]
    pub n: Option<String>,
    /// p-Sombor exponents, comma separated (`inf` allowed).
    #[arg(long, value_delimiter = ',')]
    pub p: Vec<String>,
    /// Extra weightings such as `adjacency` (repeatable).
    #[arg(long)]
    pub weighting: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[command(flatten)]
    pub catalog: CatalogArg,
}

#[derive(Debug, Args)]
pub struct KelmansArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long, requires = "v2", conflicts_with_all = ["op", "sweep"])]
    pub v1: Option<usize>,
    #[arg(long, requires = "v1")]
    pub v2: Option<usize>,
    /// Operation spec: `kelmans(1,2)`, `pendant_shift(0,1)` or `collapse(3)`.
    #[arg(long, conflicts_with = "sweep")]
    pub op: Option<String>,
    /// Random sweep over this many connected graphs instead of one input.
    #[arg(long)]
    pub sweep: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 5)]
    pub min_n: usize,
    #[arg(long, default_value_t = 9)]
    pub max_n: usize,
    /// Weightings to check; sweeps default to adjacency and p = 1, 2, 3.
    #[arg(long)]
    pub weighting: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct QuotientArgs {
    #[command(flatten)]
    pub input: GraphInput,
    #[arg(long, default_value = "psombor:2")]
    pub weighting: String,
    /// Blocks as `0,2|1|3|4,5`; defaults to the coarsest equitable partition.
    #[arg(long)]
    pub partition: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct NamedArgs {
    /// Family spec such as `star:7`, `double_star:3,4`, `theta:4,2,3`,
    /// or a catalog family id with its order, `U1:8`.
    pub spec: String,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    pub format: GraphFormat,
    #[command(flatten)]
    pub catalog: CatalogArg,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Label edges with these weights; omit for plain edges.
    #[arg(long)]
    pub weighting: Option<String>,
    #[arg(long, default_value = "G")]
    pub name: String,
    /// Output file; stdout when absent.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DiscoverArgs {
    /// U1, U2, U3, U4, B1, B2, B3, Bp1, Bp2 or Bp3.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: String,
    #[arg(long, value_delimiter = ',')]
    pub p: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[command(flatten)]
    pub catalog: CatalogArg,
}

fn parse_direction(s: &str) -> Result<Direction, String> {
    s.parse().map_err(|e| format!("{e}"))
}
