use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact algebra for Clifford quantum cellular automata.
///
/// Arguments that take a document accept inline text, `@path` to read a
/// file, or `-` for stdin.
#[derive(Debug, Parser)]
#[command(name = "cqca", version, about)]
pub struct Cli {
    /// Field characteristic; must agree with any JSON input.
    #[arg(long, global = true)]
    pub p: Option<u32>,
    /// Lattice dimension; must agree with any JSON input.
    #[arg(long, global = true)]
    pub s: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest torus (number of sites) for dense linear algebra.
    #[arg(long, global = true, default_value_t = cqca_core::torus::DEFAULT_SITE_LIMIT)]
    pub site_limit: usize,
    /// Largest Hilbert space dimension for the dense oracle.
    #[arg(long, global = true, default_value_t = cqca_core::oracle::DEFAULT_DIM_LIMIT)]
    pub dim_limit: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the symplectic conditions of an automaton.
    Validate { automaton: String },
    /// Report the center a and the centered automaton u^-a t.
    Center { automaton: String },
    /// Composition: apply SECOND first, then FIRST.
    Compose { first: String, second: String },
    /// Inverse automaton, with phases.
    Invert { automaton: String },
    /// Apply an automaton to a Pauli product.
    Evolve {
        automaton: String,
        pauli: String,
        /// Number of time steps; negative values use the inverse.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        steps: i64,
    },
    /// Write a centered 1D automaton as shears and Fourier transforms.
    Factorize { automaton: String },
    /// Decide whether the translates of a vector or Pauli product fix a unique state.
    Stabilizer {
        /// A phase space vector `(plus, minus)` or a Pauli product such as `Z_-1 X_0 Z_1`.
        input: String,
        #[command(flatten)]
        torus: TorusArgs,
        /// Also print an automaton whose second column is the input.
        #[arg(long)]
        complete: bool,
        /// Cross-check with the dense eigenspace dimension (torus only).
        #[arg(long)]
        oracle: bool,
    },
    /// Invert a polynomial in the torus group algebra.
    TorusInvert {
        poly: String,
        #[command(flatten)]
        torus: TorusArgs,
    },
    /// Build the automaton preparing a translation invariant graph state.
    GraphState {
        /// Adjacency matrix rows of 0/1, indexed by canonical site.
        #[arg(long, conflicts_with = "gamma", required_unless_present = "gamma")]
        adjacency: Option<String>,
        /// The polynomial γ̂ directly.
        #[arg(long)]
        gamma: Option<String>,
        #[command(flatten)]
        torus: TorusArgs,
        #[arg(long)]
        oracle: bool,
    },
    /// Dimension of the joint +1 eigenspace of commuting Pauli products.
    OracleEigdim {
        /// Pauli products on sites 0..n-1.
        #[arg(conflicts_with = "vector")]
        generators: Vec<String>,
        #[arg(long, conflicts_with = "vector")]
        sites: Option<usize>,
        /// Use the translates of this vector on the torus instead.
        #[arg(long)]
        vector: Option<String>,
        #[command(flatten)]
        torus: TorusArgs,
    },
}

#[derive(Debug, Args)]
pub struct TorusArgs {
    /// Ring Z_N.
    #[arg(long, conflicts_with = "basis")]
    pub torus: Option<i64>,
    /// Torus description as JSON, e.g. `{"s":2,"basis":[[1,3],[5,1]]}`.
    #[arg(long)]
    pub basis: Option<String>,
}
