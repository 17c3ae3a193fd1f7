use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gvdkit::gvd::{OrderSearch, SearchOptions, UnmixedPolicy};

/// Geometric vertex decomposition, toric ideals of graphs and graded invariants.
#[derive(Debug, Parser)]
#[command(name = "gvdkit", version, about)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Seed for the generated corpora.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    /// Worker threads for batch work (0 picks the number of cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    /// Wall-clock limit for `verify`; criteria still running are reported as failures.
    #[arg(long, global = true)]
    pub timeout_secs: Option<u64>,

    /// Output format; JSON by default, except `verify` which prints a table.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of R/I read from the Hilbert series.
    Invariants {
        /// Ideal file: {"ring": [...], "generators": [...]}.
        ideal: PathBuf,
        /// Treat R/I as Cohen–Macaulay so regularity is reported.
        #[arg(long)]
        assume_cm: bool,
    },
    /// Decomposition search and invariants of ideals.
    #[command(subcommand)]
    Gvd(GvdCommand),
    /// Toric ideals of graphs.
    #[command(subcommand)]
    Toric(ToricCommand),
    /// Toric ideal of the Ferrers graph of a partition.
    Ferrers {
        /// Parts in weakly decreasing order, e.g. 3,3,3,2.
        #[arg(long)]
        partition: String,
        /// Also compute the invariants from the Hilbert series and compare.
        #[arg(long)]
        verify_direct: bool,
    },
    /// Glue an even cycle onto a graph along one edge.
    Glue {
        graph: PathBuf,
        #[arg(long)]
        edge: String,
        /// Length of the glued cycle (even, at least 4).
        #[arg(long)]
        cycle: usize,
        #[arg(long)]
        verify_direct: bool,
    },
    /// K_{2,d} with a path of length 2r-2 joining its two degree-d vertices.
    Grd {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        verify_direct: bool,
    },
    /// Stanley–Reisner ideals of simplicial complexes.
    #[command(subcommand)]
    Sr(SrCommand),
    /// Run the acceptance criteria and print one row per criterion.
    #[command(alias = "verify-paper")]
    Verify {
        /// Criterion numbers or names to run (default: all).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Shorthand for --format json.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct SearchFlags {
    /// Skip the unmixedness check where it cannot be decided structurally.
    #[arg(long)]
    pub assume_unmixed: bool,
    /// Which y-compatible orders to try at each variable.
    #[arg(long, value_enum, default_value_t = Orders::Yblock)]
    pub orders: Orders,
    /// Reject processes in which a contracted C is the irrelevant ideal.
    #[arg(long)]
    pub c_saturated: bool,
}

impl SearchFlags {
    pub fn options(&self) -> SearchOptions {
        SearchOptions {
            policy: if self.assume_unmixed {
                UnmixedPolicy::AssumeUnmixed
            } else {
                UnmixedPolicy::Structural
            },
            orders: match self.orders {
                Orders::Yblock => OrderSearch::YBlock,
                Orders::WithLex => OrderSearch::WithLex,
            },
            c_saturated: self.c_saturated,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Orders {
    Yblock,
    WithLex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Expect {
    Gvd,
    NotGvd,
}

#[derive(Debug, Subcommand)]
pub enum GvdCommand {
    /// Search for a decomposition and print the tree.
    Check {
        ideal: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
        /// Exit with status 1 unless the verdict matches.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Print the decomposition tree as an indented outline.
    Trace {
        ideal: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Invariants from the Hilbert series and from the decomposition.
    Invariants {
        ideal: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
        /// When no decomposition is found, combine C and N of the first
        /// nondegenerate split, treating the quotients as Cohen–Macaulay.
        #[arg(long)]
        assume_cm: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum ToricCommand {
    /// Toric ideal and invariants of a graph.
    Build {
        /// Graph file: {"vertices": [...], "edges": [{"label", "ends"}]}.
        graph: PathBuf,
        /// Longest closed even walk used for non-bipartite graphs.
        #[arg(long)]
        walk_bound: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum SrCommand {
    /// Stanley–Reisner ideal, direct invariants and the decomposition recursion.
    Invariants {
        /// Complex file: {"vertices": [...], "facets": [[...], ...]}.
        complex: PathBuf,
    },
    /// Search for a vertex decomposition of a pure complex.
    VdCheck {
        complex: PathBuf,
        /// Exit with status 1 unless the complex is vertex decomposable.
        #[arg(long)]
        expect_vd: bool,
    },
}
